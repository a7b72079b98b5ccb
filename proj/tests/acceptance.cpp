// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 1 on any
// failure. Criteria 3 and 4 run at the mandated default field sizes; the
// known degenerate access sets make them fail, and the informational lines
// show the smallest field sizes where the same sweeps go green.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ceqss/compiler.hpp"
#include "ceqss/dense.hpp"
#include "ceqss/encoder.hpp"
#include "ceqss/recovery.hpp"
#include "ceqss/secrecy.hpp"
#include "ceqss/serialize.hpp"
#include "cli.hpp"

using namespace ceqss;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<unsigned>> all_subsets(unsigned n, unsigned size) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (unsigned u = next; u + (size - cur.size()) <= n + 1; ++u) {
            cur.push_back(u);
            self(self, u + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::string join(const std::vector<unsigned>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> info;

    void fail(const std::string& why) {
        pass = false;
        info.push_back(why);
    }
    void note(const std::string& line) { info.push_back(line); }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// ---------------------------------------------------------------- criterion 1

void criterion_params(Outcome& out) {
    SchemeParams p = derive_params(3);
    out.require(p.n == 5 && p.q == 7 && p.m == 6, "k=3 headline parameters wrong");
    out.require(p.d == std::vector<unsigned>{5, 4, 3}, "d vector wrong");
    out.require(p.m_vec == std::vector<unsigned>{3, 2, 1}, "m_vec wrong");
    out.require(p.a == std::vector<unsigned>{2, 3, 6}, "a vector wrong");
    out.require(p.b == std::vector<unsigned>{2, 1, 3}, "b vector wrong");

    std::ostringstream text, err;
    int rc = cli::run_cli({"params", "--k", "3"}, text, err);
    out.require(rc == 0, "params --k 3 exited with " + std::to_string(rc));
    out.require(text.str().find("k=3  n=5  q=7  m=6") != std::string::npos,
                "params --k 3 text output missing the headline line");
}

// ---------------------------------------------------------------- criterion 2

void criterion_encoding(Outcome& out) {
    SchemeParams p = derive_params(3);
    SymbolicState st = encode_symbolic(p);

    auto expect_label = [&](unsigned party, unsigned pos,
                            std::vector<std::pair<std::size_t, u64>> s,
                            std::vector<std::pair<std::size_t, u64>> r, const std::string& name) {
        AffineLabel want;
        want.s.assign(p.m, 0);
        want.r.assign(p.num_rand(), 0);
        for (auto [i, c] : s) want.s[i] = c;
        for (auto [i, c] : r) want.r[i] = c;
        bool same = st.label(p.qudit_index(party, pos)) == want;
        out.require(same, name + " does not match at party " + std::to_string(party) + " pos " +
                              std::to_string(pos));
    };

    // The six headline share expressions. The first two evaluate at x = 1 and
    // so they sit on the first party's secret columns; the last four are the
    // third party's randomness tail.
    expect_label(1, 1, {{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 1}}, "s1+s2+s3+r1+r2");
    expect_label(1, 2, {{3, 1}, {4, 1}, {5, 1}}, {{2, 1}, {3, 1}}, "s4+s5+s6+r3+r4");
    expect_label(3, 3, {}, {{0, 3}, {2, 2}, {4, 6}, {5, 4}}, "3r1+2r3+6r5+4r6");
    expect_label(3, 4, {}, {{1, 2}, {6, 6}, {7, 4}}, "2r2+6r7+4r8");
    expect_label(3, 5, {}, {{3, 2}, {8, 6}, {9, 4}}, "2r4+6r9+4r10");
    expect_label(3, 6, {}, {{5, 2}, {10, 6}, {11, 4}}, "2r6+6r11+4r12");

    // Full 30-label check against the hand-spelled encoding grid: qudit
    // (u, j) must carry row u of V applied to column j of M.
    enum Sym { Z = 0, S = 1, R = 2 };
    struct Cell {
        Sym kind;
        std::size_t idx;
    };
    const Cell grid[5][6] = {
        {{S, 0}, {S, 3}, {Z, 0}, {Z, 0}, {Z, 0}, {Z, 0}},
        {{S, 1}, {S, 4}, {R, 0}, {Z, 0}, {Z, 0}, {Z, 0}},
        {{S, 2}, {S, 5}, {R, 2}, {R, 1}, {R, 3}, {R, 5}},
        {{R, 0}, {R, 2}, {R, 4}, {R, 6}, {R, 8}, {R, 10}},
        {{R, 1}, {R, 3}, {R, 5}, {R, 7}, {R, 9}, {R, 11}},
    };
    std::size_t matched = 0;
    for (unsigned u = 1; u <= 5; ++u) {
        for (unsigned j = 1; j <= 6; ++j) {
            AffineLabel want;
            want.s.assign(p.m, 0);
            want.r.assign(p.num_rand(), 0);
            for (unsigned row = 0; row < 5; ++row) {
                const Cell& cell = grid[row][j - 1];
                if (cell.kind == Z) continue;
                u64 coef = p.v.at(u - 1, row);
                auto& slot = cell.kind == S ? want.s[cell.idx] : want.r[cell.idx];
                slot = mod_add(slot, coef, 7);
            }
            if (st.label(p.qudit_index(u, j)) == want) {
                ++matched;
            } else {
                out.fail("label mismatch at party " + std::to_string(u) + " pos " +
                         std::to_string(j));
            }
        }
    }
    out.require(matched == 30, "only " + std::to_string(matched) + "/30 labels match");
    out.note("all 30 share labels match the hand-spelled grid exactly");
}

// ---------------------------------------------------------------- criterion 3

void criterion_recovery_k3(Outcome& out) {
    SchemeParams p = derive_params(3);
    const std::size_t want_download[3] = {18, 12, 10}; // d = 3, 4, 5
    const Rational want_cost[3] = {{3, 1}, {2, 1}, {5, 3}};

    std::size_t ok_count = 0, total = 0;
    for (unsigned d = 3; d <= 5; ++d) {
        for (const auto& parties : all_subsets(5, d)) {
            ++total;
            try {
                RecoveryResult res = recover(p, parties);
                bool good = res.report.secret_exact && res.report.residual_factorizes &&
                            res.downloaded == want_download[d - 3] &&
                            res.cost_per_secret == want_cost[d - 3];
                if (good) {
                    ++ok_count;
                } else {
                    out.fail("D={" + join(parties) + "}: wrong download/cost or report");
                }
            } catch (const Error& e) {
                out.fail("D={" + join(parties) + "}: " + e.what());
            }
        }
    }
    out.note(std::to_string(ok_count) + "/" + std::to_string(total) +
             " subsets recover at the default q=7");
    out.require(ok_count == total, "recovery is not universal over F_7");
    if (ok_count != total) {
        out.note("root cause: evaluation points {2,3,4,5} sum to 0 mod 7, so the");
        out.note("pinned cascade block W_1 loses rank; no gate sequence on those");
        out.note("12 downloaded qudits can recover the secret (information-");
        out.note("theoretic obstruction, not an implementation artifact)");
    }

    // Informational: the same sweep at the smallest sound field size.
    SchemeParams p17 = derive_params(3, 17);
    std::size_t ok17 = 0;
    for (unsigned d = 3; d <= 5; ++d) {
        for (const auto& parties : all_subsets(5, d)) {
            try {
                if (recover(p17, parties).report.ok()) ++ok17;
            } catch (const Error&) {
            }
        }
    }
    out.note("informational: at q=17 the same sweep recovers " + std::to_string(ok17) +
             "/16 subsets");
}

// ---------------------------------------------------------------- criterion 4

void criterion_scaling_sweep(Outcome& out) {
    std::mt19937_64 rng(cli::kDefaultSeed);
    for (unsigned k : {4u, 5u}) {
        SchemeParams p = derive_params(k);
        std::size_t ok_count = 0, total = 0;
        std::vector<std::string> failures;
        for (unsigned d = k; d <= p.n; ++d) {
            auto subsets = all_subsets(p.n, d);
            std::shuffle(subsets.begin(), subsets.end(), rng);
            if (subsets.size() > 20) subsets.resize(20);
            for (const auto& parties : subsets) {
                ++total;
                try {
                    RecoveryResult res = recover(p, parties);
                    if (res.report.ok()) {
                        ++ok_count;
                    } else {
                        failures.push_back("k=" + std::to_string(k) + " D={" + join(parties) +
                                           "}: " + res.report.detail);
                    }
                } catch (const Error& e) {
                    failures.push_back("k=" + std::to_string(k) + " D={" + join(parties) +
                                       "}: " + e.what());
                }
            }
        }
        out.note("k=" + std::to_string(k) + ": " + std::to_string(ok_count) + "/" +
                 std::to_string(total) + " sampled subsets recover at the default q=" +
                 std::to_string(p.q));
        if (!failures.empty()) {
            out.pass = false;
            for (std::size_t i = 0; i < failures.size() && i < 3; ++i) out.note(failures[i]);
            if (failures.size() > 3) {
                out.note("(" + std::to_string(failures.size() - 3) + " more like these)");
            }
        }
    }

    // Informational: the smallest field sizes where every access set works,
    // and the same sampled sweeps there.
    for (unsigned k : {4u, 5u}) {
        auto sound = smallest_sound_q(k);
        if (!sound) {
            out.note("informational: no sound prime below 1000 for k=" + std::to_string(k));
            continue;
        }
        SchemeParams p = derive_params(k, *sound);
        std::mt19937_64 rng2(cli::kDefaultSeed);
        std::size_t ok_count = 0, total = 0;
        for (unsigned d = k; d <= p.n; ++d) {
            auto subsets = all_subsets(p.n, d);
            std::shuffle(subsets.begin(), subsets.end(), rng2);
            if (subsets.size() > 20) subsets.resize(20);
            for (const auto& parties : subsets) {
                ++total;
                try {
                    if (recover(p, parties).report.ok()) ++ok_count;
                } catch (const Error&) {
                }
            }
        }
        out.note("informational: at q=" + std::to_string(*sound) + " (smallest sound prime) k=" +
                 std::to_string(k) + " passes " + std::to_string(ok_count) + "/" +
                 std::to_string(total) + " sampled subsets");
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_dense_superpositions(Outcome& out) {
    SchemeParams p = derive_params(2);
    const std::vector<std::vector<unsigned>> subsets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    std::mt19937_64 rng(cli::kDefaultSeed);
    double min_fid = 1.0, min_pur = 1.0;

    std::vector<RecoveryPlan> plans;
    std::vector<GateProgram> netlists;
    for (const auto& parties : subsets) {
        plans.push_back(plan_recovery(p, parties));
        netlists.push_back(compile_plan(plans.back()));
    }

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::complex<double>> amps(25);
        double norm = 0;
        for (auto& a : amps) {
            double re = double(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0;
            double im = double(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0;
            a = {re, im};
            norm += std::norm(a);
        }
        std::vector<std::complex<double>> psi(25);
        for (std::size_t i = 0; i < 25; ++i) psi[i] = amps[i] / std::sqrt(norm);

        for (std::size_t sidx = 0; sidx < subsets.size(); ++sidx) {
            DenseState st = encode_dense(p, SuperpositionSecret{amps});
            dense_apply_program(st, netlists[sidx]);
            DensityMatrix rho = reduced_density(st, plans[sidx].secret_register);
            min_fid = std::min(min_fid, fidelity_with_pure(rho, psi));
            min_pur = std::min(min_pur, purity(rho));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "20 secrets x 4 subsets: fidelity >= 1 - %.2e, purity >= 1 - %.2e",
                  1.0 - min_fid, 1.0 - min_pur);
    out.note(buf);
    out.require(min_fid >= 1.0 - 1e-9, "secret-register fidelity below 1 - 1e-9");
    out.require(min_pur >= 1.0 - 1e-9, "secret-register purity below 1 - 1e-9");
}

// ---------------------------------------------------------------- criterion 6

void criterion_symbolic_dense_agreement(Outcome& out) {
    SchemeParams p = derive_params(2);
    const std::vector<std::vector<unsigned>> subsets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    double worst = 0;
    for (const auto& parties : subsets) {
        RecoveryPlan plan = plan_recovery(p, parties);
        GateProgram netlist = compile_plan(plan);
        SymbolicState sym = encode_symbolic(p);
        for (const auto& step : plan.steps) sym.apply_uk(step.gate, step.qudits);

        for (u64 s0 = 0; s0 < 5; ++s0) {
            for (u64 s1 = 0; s1 < 5; ++s1) {
                DenseState dense = encode_dense(p, BasisSecret{{s0, s1}});
                dense_apply_program(dense, netlist);
                DenseState expect = expand_dense(sym, {s0, s1});
                worst = std::max(worst, max_amp_deviation(dense, expect));
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "25 basis secrets x 4 subsets: max amplitude deviation %.2e",
                  worst);
    out.note(buf);
    out.require(worst < 1e-9, "symbolic and dense final states disagree");
}

// ---------------------------------------------------------------- criterion 7

void criterion_secrecy(Outcome& out) {
    SchemeParams p = derive_params(2);
    std::vector<SecretSpec> probes = secrecy_probe_batch(p, 25, 10, cli::kDefaultSeed);
    double worst = 0;
    for (unsigned party : {1u, 2u, 3u}) {
        worst = std::max(worst, secrecy_dense(p, {party}, probes));
    }
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "35 probe secrets, 3 one-party subsets: max trace distance %.2e", worst);
    out.note(buf);
    out.require(worst < 1e-9, "a single share distinguishes some pair of secrets");

    for (unsigned k = 1; k <= 6; ++k) {
        StructuralReport rep = secrecy_structural(derive_params(k));
        out.require(rep.ok(), "structural secrecy failed for k=" + std::to_string(k) + ": " +
                                  rep.detail);
    }
    out.note("structural secrecy holds for k in [1, 6]");
}

// ---------------------------------------------------------------- criterion 8

void criterion_compiler(Outcome& out) {
    std::mt19937_64 rng(cli::kDefaultSeed);
    const u64 qs[3] = {5, 7, 11};
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t g = 2 + trial % 5;
        u64 q = qs[trial % 3];
        FqMatrix kmat(g, g, q);
        do {
            for (std::size_t r = 0; r < g; ++r)
                for (std::size_t c = 0; c < g; ++c) kmat.set(r, c, rng() % q);
        } while (mat_rank(kmat) < g);
        std::vector<std::size_t> qudits(g);
        std::iota(qudits.begin(), qudits.end(), 0);
        GateProgram prog = compile_uk(kmat, qudits, g);
        if (program_matrix(prog) != kmat) {
            out.fail("netlist action differs from K at trial " + std::to_string(trial));
            return;
        }
    }
    out.note("200 seeded kernels compile to exact netlists");

    double worst = 0;
    for (u64 q : {2ull, 5ull, 7ull}) {
        for (std::size_t g = 1; g <= 3; ++g) {
            FqMatrix kmat(g, g, q);
            do {
                for (std::size_t r = 0; r < g; ++r)
                    for (std::size_t c = 0; c < g; ++c) kmat.set(r, c, rng() % q);
            } while (mat_rank(kmat) < g);
            std::vector<std::size_t> qudits(g);
            std::iota(qudits.begin(), qudits.end(), 0);
            GateProgram prog = compile_uk(kmat, qudits, g);
            std::size_t dim = 1;
            for (std::size_t t = 0; t < g; ++t) dim *= q;
            for (std::size_t basis = 0; basis < dim; ++basis) {
                DenseState a(q, g), b(q, g);
                a.amp(basis) = 1.0;
                b.amp(basis) = 1.0;
                dense_apply_program(a, prog);
                dense_apply_uk(b, kmat, qudits);
                worst = std::max(worst, max_amp_deviation(a, b));
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "dense cross-check max deviation %.2e", worst);
    out.note(buf);
    out.require(worst < 1e-12, "compiled netlists diverge from U_K on amplitudes");
}

// ---------------------------------------------------------------- criterion 9

void criterion_properties(Outcome& out) {
    // Parameter identities.
    for (unsigned k = 1; k <= 8; ++k) {
        SchemeParams p = derive_params(k);
        unsigned bsum = std::accumulate(p.b.begin(), p.b.end(), 0u);
        out.require(bsum == p.m, "sum of b != m at k=" + std::to_string(k));
        out.require(p.a[k - 1] == p.m, "a_k != m at k=" + std::to_string(k));
        for (unsigned i = 1; i < k; ++i) {
            out.require((k - i) * p.b[i] == p.a[i - 1],
                        "(k-i)*b_{i+1} != a_i at k=" + std::to_string(k));
        }
        if (!out.pass) return;
    }

    // Gate invertibility round-trips on the real encoded state of every k.
    std::mt19937_64 rng(cli::kDefaultSeed);
    for (unsigned k = 1; k <= 8; ++k) {
        SchemeParams p = derive_params(k);
        SymbolicState st = encode_symbolic(p);
        std::size_t nq = p.num_qudits();

        std::size_t x = rng() % nq;
        std::size_t y = (x + 1 + rng() % (nq > 1 ? nq - 1 : 1)) % nq;
        if (nq > 1) {
            AffineLabel snap_x = st.label(x), snap_y = st.label(y);
            u64 alpha = 1 + rng() % (p.q - 1);
            st.apply_l(alpha, x, y);
            st.apply_l(p.q - alpha, x, y);
            out.require(st.label(y) == snap_y, "L round-trip failed at k=" + std::to_string(k));

            st.apply_swap(x, y);
            st.apply_swap(x, y);
            out.require(st.label(x) == snap_x && st.label(y) == snap_y,
                        "swap round-trip failed at k=" + std::to_string(k));
        }
        u64 beta = 1 + rng() % (p.q - 1);
        AffineLabel snap = st.label(x);
        st.apply_scale(beta, x);
        st.apply_scale(mod_inverse(beta, p.q), x);
        out.require(st.label(x) == snap, "scale round-trip failed at k=" + std::to_string(k));

        if (nq >= 3) {
            std::vector<std::size_t> group = {0, nq / 2, nq - 1};
            FqMatrix kmat(3, 3, p.q);
            do {
                for (std::size_t r = 0; r < 3; ++r)
                    for (std::size_t c = 0; c < 3; ++c) kmat.set(r, c, rng() % p.q);
            } while (mat_rank(kmat) < 3);
            std::vector<AffineLabel> snaps = {st.label(group[0]), st.label(group[1]),
                                              st.label(group[2])};
            st.apply_uk(kmat, group);
            st.apply_uk(mat_inverse(kmat), group);
            for (std::size_t t = 0; t < 3; ++t) {
                out.require(st.label(group[t]) == snaps[t],
                            "U_K round-trip failed at k=" + std::to_string(k));
            }
        }
        if (!out.pass) return;
    }
    out.note("gate round-trips hold on the full encoded state up to k=8 (12600 qudits)");

    // Zero-constant labels after every recovery step, plus an exact register.
    for (unsigned k = 1; k <= 8; ++k) {
        SchemeParams p = derive_params(k);
        std::vector<std::vector<unsigned>> picks;
        std::vector<unsigned> full(p.n);
        std::iota(full.begin(), full.end(), 1);
        picks.push_back(full); // d = n
        if (k <= 6) {
            // First plannable subset at every other access level.
            for (unsigned d = k; d < p.n; ++d) {
                for (const auto& parties : all_subsets(p.n, d)) {
                    try {
                        plan_recovery(p, parties);
                        picks.push_back(parties);
                        break;
                    } catch (const InvariantViolation&) {
                    }
                }
            }
        }
        for (const auto& parties : picks) {
            RecoveryPlan plan = plan_recovery(p, parties);
            SymbolicState st = encode_symbolic(p);
            for (const auto& step : plan.steps) {
                st.apply_uk(step.gate, step.qudits);
                if (!st.consts_all_zero()) {
                    out.fail("nonzero constant after " + step.tag + " at k=" + std::to_string(k));
                    return;
                }
            }
            for (std::size_t t = 0; t < plan.secret_register.size(); ++t) {
                const AffineLabel& l = st.label(plan.secret_register[t]);
                bool unit = l.c == 0;
                for (std::size_t j = 0; unit && j < l.s.size(); ++j) {
                    if (l.s[j] != (j == t ? 1u : 0u)) unit = false;
                }
                for (std::size_t j = 0; unit && j < l.r.size(); ++j) {
                    if (l.r[j] != 0) unit = false;
                }
                if (!unit) {
                    out.fail("register symbol " + std::to_string(t + 1) + " inexact at k=" +
                             std::to_string(k) + " D={" + join(parties) + "}");
                    return;
                }
            }
        }
    }
    out.note("constants stay zero through every plan step up to k=8");

    // Per-secret cost is monotone in d.
    for (unsigned k = 1; k <= 8; ++k) {
        std::vector<CostRow> table = cost_table(derive_params(k));
        for (std::size_t row = 0; row + 1 < table.size(); ++row) {
            double hi = double(table[row].per_secret.num) / table[row].per_secret.den;
            double lo = double(table[row + 1].per_secret.num) / table[row + 1].per_secret.den;
            out.require(hi < lo + 1e-12, "cost not monotone in d at k=" + std::to_string(k));
        }
    }
}

struct Criterion {
    int num;
    std::string what;
    double time_limit;
    std::function<void(Outcome&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> gates = {
        {1, "parameter reproduction for k=3", 1.0, criterion_params},
        {2, "encoding labels for k=3 match the reference expressions", 0, criterion_encoding},
        {3, "universal recovery across all 16 subsets, k=3, default q", 10.0,
         criterion_recovery_k3},
        {4, "scaling sweep k=4,5: 20 sampled subsets per level, default q", 300.0,
         criterion_scaling_sweep},
        {5, "dense recovery of 20 superposed secrets, k=2", 60.0, criterion_dense_superpositions},
        {6, "symbolic and dense final states agree, k=2", 0, criterion_symbolic_dense_agreement},
        {7, "single shares reveal nothing; structural secrecy to k=6", 0, criterion_secrecy},
        {8, "gate compiler exactness on 200 seeded kernels", 30.0, criterion_compiler},
        {9, "parameter, gate, constant and cost properties to k=8", 0, criterion_properties},
    };

    int failures = 0;
    for (const auto& gate : gates) {
        Outcome out;
        auto t0 = Clock::now();
        try {
            gate.body(out);
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        double elapsed = seconds_since(t0);
        if (gate.time_limit > 0 && elapsed > gate.time_limit) {
            out.fail("exceeded the " + std::to_string(gate.time_limit) + "s budget");
        }
        char line[200];
        std::snprintf(line, sizeof line, "[%s] %d. %s (%.2fs)", out.pass ? "PASS" : "FAIL",
                      gate.num, gate.what.c_str(), elapsed);
        std::cout << line << "\n";
        for (const auto& info : out.info) std::cout << "       " << info << "\n";
        if (!out.pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
