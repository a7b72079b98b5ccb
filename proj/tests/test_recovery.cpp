#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ceqss/recovery.hpp"
#include "helpers.hpp"

using namespace ceqss;
using ceqss_test::all_subsets;
using ceqss_test::degenerate_pin_levels;

TEST_CASE("rationals reduce on construction") {
    CHECK(make_rational(12, 6) == Rational{2, 1});
    CHECK(make_rational(10, 4) == Rational{5, 2});
    CHECK(make_rational(5, 3) == Rational{5, 3});
    CHECK(make_rational(0, 7) == Rational{0, 1});
    CHECK_THROWS_AS(make_rational(1, 0), OutOfRange);
}

TEST_CASE("full-access plan: one inverse per secret column") {
    SchemeParams p = derive_params(3);
    RecoveryPlan plan = plan_recovery(p, {1, 2, 3, 4, 5});
    CHECK(plan.level == 1);
    CHECK(plan.parties == std::vector<unsigned>{1, 2, 3, 4, 5});
    REQUIRE(plan.steps.size() == 2);
    CHECK(plan.steps[0].tag == "VD_inv block 1 col 1");
    CHECK(plan.steps[1].tag == "VD_inv block 1 col 2");
    CHECK(plan.steps[0].qudits == std::vector<std::size_t>{0, 6, 12, 18, 24});
    CHECK(plan.steps[1].qudits == std::vector<std::size_t>{1, 7, 13, 19, 25});
    CHECK(plan.steps[0].gate == mat_inverse(p.v));
    CHECK(plan.secret_register == std::vector<std::size_t>{0, 6, 12, 1, 7, 13});
    CHECK(plan.accessed.size() == 10);
}

TEST_CASE("partial-access plan: extraction cascade then re-entangling") {
    SchemeParams p = derive_params(3);
    RecoveryPlan plan = plan_recovery(p, {1, 2, 3, 4});
    CHECK(plan.level == 2);
    REQUIRE(plan.steps.size() == 6);
    CHECK(plan.steps[0].tag == "VD_inv block 2 col 3");
    CHECK(plan.steps[1].tag == "W1_inv col 1");
    CHECK(plan.steps[2].tag == "W1_inv col 2");
    CHECK(plan.steps[3].tag == "G1 block 2 col 3");
    CHECK(plan.steps[4].tag == "G2 block 1 col 1");
    CHECK(plan.steps[5].tag == "G2 block 1 col 2");

    // Step 1 inverts the power-window map on the third-position qudits.
    CHECK(plan.steps[0].qudits == std::vector<std::size_t>{2, 8, 14, 20});
    FqMatrix window(4, 4, 7);
    for (unsigned u = 1; u <= 4; ++u)
        for (unsigned e = 1; e <= 4; ++e) window.set(u - 1, e - 1, mod_pow(u, e, 7));
    CHECK(plan.steps[0].gate == mat_inverse(window));

    // The cascade widens the accessed columns with the extracted r1 and r3
    // holders (parties' first/second columns plus one third-position qudit).
    CHECK(plan.steps[1].qudits == std::vector<std::size_t>{0, 6, 12, 18, 2});
    CHECK(plan.steps[2].qudits == std::vector<std::size_t>{1, 7, 13, 19, 8});
    FqMatrix w(5, 5, 7);
    for (unsigned u = 1; u <= 4; ++u)
        for (unsigned e = 0; e <= 4; ++e) w.set(u - 1, e, mod_pow(u, e, 7));
    w.set(4, 3, 1); // pinned row: the r1 coordinate is already known
    CHECK(plan.steps[1].gate == mat_inverse(w));
    CHECK(plan.steps[2].gate == mat_inverse(w));

    // Re-entangling acts on the extracted randomness holders only.
    CHECK(plan.steps[3].qudits == std::vector<std::size_t>{18, 19, 14, 20});
    CHECK(plan.steps[4].qudits == std::vector<std::size_t>{0, 6, 12, 18, 2});
    CHECK(plan.steps[5].qudits == std::vector<std::size_t>{1, 7, 13, 19, 8});

    CHECK(plan.secret_register == std::vector<std::size_t>{0, 6, 12, 1, 7, 13});
    CHECK(plan.accessed.size() == 12);
}

TEST_CASE("plan steps stay inside the accessed set") {
    for (unsigned k : {2u, 3u, 4u}) {
        SchemeParams p = derive_params(k);
        for (unsigned d = k; d <= p.n; ++d) {
            for (const auto& parties : all_subsets(p.n, d)) {
                RecoveryPlan plan;
                try {
                    plan = plan_recovery(p, parties);
                } catch (const InvariantViolation&) {
                    continue;
                }
                for (const auto& step : plan.steps)
                    for (std::size_t idx : step.qudits)
                        CHECK(std::count(plan.accessed.begin(), plan.accessed.end(), idx) == 1);
            }
        }
    }
}

TEST_CASE("single-party scheme recovers trivially") {
    SchemeParams p = derive_params(1);
    RecoveryResult res = recover(p, {1});
    CHECK(res.report.ok());
    CHECK(res.downloaded == 1);
    CHECK(res.cost_per_secret == Rational{1, 1});
}

TEST_CASE("recovery catalogue for k = 3 at the default field size") {
    SchemeParams p = derive_params(3);
    std::size_t recovered = 0;
    std::size_t degenerate = 0;
    for (unsigned d = 3; d <= 5; ++d) {
        for (const auto& parties : all_subsets(5, d)) {
            CAPTURE(parties);
            try {
                RecoveryResult res = recover(p, parties);
                CHECK(res.report.secret_exact);
                CHECK(res.report.residual_factorizes);
                CHECK(res.downloaded == std::size_t(p.a[2 * 3 - d - 1]) * d);
                CHECK(res.cost_per_secret == make_rational(d, d - 3 + 1));
                ++recovered;
            } catch (const InvariantViolation& e) {
                // Exactly one access set degenerates over F_7: the pinned
                // cascade block loses rank because 2+3+4+5 = 0 mod 7.
                CHECK(parties == std::vector<unsigned>{2, 3, 4, 5});
                CHECK(std::string(e.what()).find("W_1") != std::string::npos);
                ++degenerate;
            }
        }
    }
    CHECK(recovered == 15);
    CHECK(degenerate == 1);
}

TEST_CASE("per-level download and cost figures for k = 3") {
    SchemeParams p = derive_params(3);
    RecoveryResult r5 = recover(p, {1, 2, 3, 4, 5});
    CHECK(r5.downloaded == 10);
    CHECK(r5.cost_per_secret == Rational{5, 3});
    RecoveryResult r4 = recover(p, {1, 2, 3, 4});
    CHECK(r4.downloaded == 12);
    CHECK(r4.cost_per_secret == Rational{2, 1});
    RecoveryResult r3 = recover(p, {1, 2, 3});
    CHECK(r3.downloaded == 18);
    CHECK(r3.cost_per_secret == Rational{3, 1});
}

TEST_CASE("planner failures coincide with the pinned-minor oracle") {
    for (unsigned k = 1; k <= 6; ++k) {
        SchemeParams p = derive_params(k);
        for (unsigned d = k; d <= p.n; ++d) {
            for (const auto& parties : all_subsets(p.n, d)) {
                CAPTURE(k);
                CAPTURE(parties);
                std::vector<unsigned> bad = degenerate_pin_levels(p, parties);
                bool threw = false;
                std::string what;
                try {
                    plan_recovery(p, parties);
                } catch (const InvariantViolation& e) {
                    threw = true;
                    what = e.what();
                }
                CHECK(threw == !bad.empty());
                if (threw && !bad.empty()) {
                    // The planner works down from the highest level, so it
                    // trips on the largest degenerate l first.
                    CHECK(what.find("W_" + std::to_string(bad.back())) != std::string::npos);
                }
            }
        }
    }
}

TEST_CASE("sampled executions succeed whenever the planner accepts") {
    auto rng = ceqss_test::test_rng(131);
    for (unsigned k : {5u, 6u}) {
        SchemeParams p = derive_params(k);
        std::size_t cap = k == 5 ? 24 : 12;
        for (unsigned d = k; d <= p.n; ++d) {
            auto subsets = all_subsets(p.n, d);
            std::shuffle(subsets.begin(), subsets.end(), rng);
            if (subsets.size() > cap) subsets.resize(cap);
            for (const auto& parties : subsets) {
                CAPTURE(k);
                CAPTURE(parties);
                try {
                    RecoveryResult res = recover(p, parties);
                    CHECK(res.report.ok());
                    CHECK(res.downloaded == std::size_t(p.a[2 * k - d - 1]) * d);
                    CHECK(res.cost_per_secret == make_rational(d, d - k + 1));
                } catch (const InvariantViolation&) {
                    CHECK_FALSE(degenerate_pin_levels(p, parties).empty());
                }
            }
        }
    }
}

TEST_CASE("every subset recovers for k = 4 at the default field size except three") {
    SchemeParams p = derive_params(4);
    std::vector<std::vector<unsigned>> degenerate;
    for (unsigned d = 4; d <= 7; ++d) {
        for (const auto& parties : all_subsets(7, d)) {
            try {
                RecoveryResult res = recover(p, parties);
                CHECK(res.report.ok());
            } catch (const InvariantViolation&) {
                degenerate.push_back(parties);
            }
        }
    }
    REQUIRE(degenerate.size() == 3);
    CHECK(degenerate[0] == std::vector<unsigned>{1, 2, 4, 6, 7});
    CHECK(degenerate[1] == std::vector<unsigned>{1, 3, 5, 6, 7});
    CHECK(degenerate[2] == std::vector<unsigned>{2, 3, 4, 6, 7});
}

TEST_CASE("soundness sweep pinpoints the degenerate access sets") {
    SchemeParams p3 = derive_params(3);
    SoundnessReport r3 = check_soundness(p3);
    CHECK(r3.subsets_checked == 16);
    CHECK_FALSE(r3.sound());
    REQUIRE(r3.obstructions.size() == 1);
    CHECK(r3.obstructions[0].d == 4);
    CHECK(r3.obstructions[0].parties == std::vector<unsigned>{2, 3, 4, 5});
    CHECK(r3.obstructions[0].detail.find("W_1") != std::string::npos);

    SoundnessReport r4 = check_soundness(derive_params(4));
    CHECK(r4.subsets_checked == 64);
    CHECK(r4.obstructions.size() == 3);

    SoundnessReport r2 = check_soundness(derive_params(2));
    CHECK(r2.sound());
    CHECK(r2.subsets_checked == 4);

    SoundnessReport sampled = check_soundness(p3, 4, 99);
    CHECK(sampled.subsets_checked <= 12);
}

TEST_CASE("smallest sound primes for low thresholds") {
    CHECK(smallest_sound_q(1) == 2);
    CHECK(smallest_sound_q(2) == 5);
    CHECK(smallest_sound_q(3) == 17);
    CHECK(smallest_sound_q(4) == 31);
    CHECK_FALSE(smallest_sound_q(3, 11).has_value());
}

TEST_CASE("the full catalogue clears at a sound field size") {
    SchemeParams p = derive_params(3, 17);
    CHECK(check_soundness(p).sound());
    for (unsigned d = 3; d <= 5; ++d) {
        for (const auto& parties : all_subsets(5, d)) {
            CAPTURE(parties);
            RecoveryResult res = recover(p, parties);
            CHECK(res.report.ok());
            CHECK(res.cost_per_secret == make_rational(d, d - 3 + 1));
        }
    }
}

TEST_CASE("execute validates the state against the plan") {
    RecoveryPlan plan = plan_recovery(derive_params(3), {1, 2, 3});
    SymbolicState wrong = encode_symbolic(derive_params(2));
    CHECK_THROWS_AS(execute(plan, wrong), DimensionMismatch);
}

TEST_CASE("execute refuses steps outside the accessed set") {
    SchemeParams p = derive_params(3);
    RecoveryPlan plan = plan_recovery(p, {1, 2, 3, 4, 5});
    plan.steps[0].qudits[0] = p.qudit_index(1, 6); // never downloaded at d = 5
    CHECK_THROWS_AS(execute(plan, encode_symbolic(p)), InvariantViolation);
}

TEST_CASE("cost tables list levels from cheapest to full download") {
    std::vector<CostRow> t1 = cost_table(derive_params(1));
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].d == 1);
    CHECK(t1[0].downloaded == 1);
    CHECK(t1[0].per_secret == Rational{1, 1});
    CHECK(t1[0].baseline == 1);

    std::vector<CostRow> t3 = cost_table(derive_params(3));
    REQUIRE(t3.size() == 3);
    CHECK(t3[0].d == 5);
    CHECK(t3[0].downloaded == 10);
    CHECK(t3[0].per_secret == Rational{5, 3});
    CHECK(t3[0].baseline == 3);
    CHECK(t3[1].d == 4);
    CHECK(t3[1].downloaded == 12);
    CHECK(t3[1].per_secret == Rational{2, 1});
    CHECK(t3[2].d == 3);
    CHECK(t3[2].downloaded == 18);
    CHECK(t3[2].per_secret == Rational{3, 1});

    std::vector<CostRow> t4 = cost_table(derive_params(4));
    REQUIRE(t4.size() == 4);
    CHECK(t4[0].d == 7);
    CHECK(t4[0].downloaded == 21);
    CHECK(t4[0].per_secret == Rational{7, 4});
    CHECK(t4[1].d == 6);
    CHECK(t4[1].downloaded == 24);
    CHECK(t4[2].d == 5);
    CHECK(t4[2].downloaded == 30);
    CHECK(t4[2].per_secret == Rational{5, 2});
    CHECK(t4[3].d == 4);
    CHECK(t4[3].downloaded == 48);
    CHECK(t4[3].per_secret == Rational{4, 1});
}

TEST_CASE("per-secret cost falls as more parties are contacted") {
    for (unsigned k = 1; k <= 8; ++k) {
        std::vector<CostRow> table = cost_table(derive_params(k));
        REQUIRE(table.size() == k);
        for (std::size_t row = 0; row + 1 < table.size(); ++row) {
            CHECK(table[row].d == table[row + 1].d + 1);
            // Rows are d-descending, so per-secret cost must not decrease.
            double hi = double(table[row].per_secret.num) / table[row].per_secret.den;
            double lo = double(table[row + 1].per_secret.num) / table[row + 1].per_secret.den;
            CHECK(hi <= lo + 1e-12);
            if (k >= 2) CHECK(hi < lo);
        }
        CHECK(table.back().per_secret == Rational{k, 1});
        for (const CostRow& row : table) {
            CHECK(row.baseline == k);
            CHECK(row.per_secret.num * 1.0 / row.per_secret.den <= k + 1e-12);
        }
    }
}
