#include "ceqss/recovery.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ceqss {

Rational make_rational(u64 num, u64 den) {
    if (den == 0) throw OutOfRange("zero denominator");
    u64 g = std::gcd(num, den);
    return {num / g, den / g};
}

namespace {

// V rows for the listed parties (1-based), power columns col_lo..col_lo+width-1 (0-based).
FqMatrix v_submatrix(const SchemeParams& p, const std::vector<unsigned>& parties,
                     std::size_t col_lo, std::size_t width) {
    FqMatrix out(parties.size(), width, p.q);
    for (std::size_t r = 0; r < parties.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            out.set(r, c, p.v.at(parties[r] - 1, col_lo + c));
        }
    }
    return out;
}

FqMatrix invert_or_fail(const FqMatrix& mat, const std::string& what) {
    try {
        return mat_inverse(mat);
    } catch (const Singular&) {
        throw InvariantViolation(what + " block is singular; scheme parameters are inconsistent");
    }
}

// Bookkeeping of which qudit currently holds which symbol. Symbols are
// indexed 0..m-1 for secrets, m..m+m(k-1)-1 for randomness.
struct HolderMap {
    std::size_t m;
    std::vector<std::size_t> at;

    explicit HolderMap(const SchemeParams& p)
        : m(p.m), at(p.m + p.num_rand(), SIZE_MAX) {}

    std::size_t var_of(const MCell& cell) const {
        return cell.kind == MCell::Kind::Secret ? cell.index : m + cell.index;
    }

    std::size_t get(std::size_t var) const {
        if (var >= at.size() || at[var] == SIZE_MAX) {
            throw InvariantViolation("symbol has no extracted holder yet");
        }
        return at[var];
    }

    void put(std::size_t var, std::size_t qudit) { at[var] = qudit; }
};

} // namespace

RecoveryPlan plan_recovery(const SchemeParams& p, const std::vector<unsigned>& parties) {
    RecoveryPlan plan;
    plan.params = p;
    plan.parties = validate_subset(p, parties);
    const unsigned d = static_cast<unsigned>(plan.parties.size());
    const unsigned i = 2 * p.k - d;
    plan.level = i;
    plan.accessed = accessed_qudits(p, plan.parties);

    const MLayout layout = build_m_layout(p);
    HolderMap holder(p);

    auto accessed_column = [&](std::size_t col0) {
        std::vector<std::size_t> group;
        group.reserve(d);
        for (unsigned u : plan.parties) group.push_back(p.qudit_index(u, col0 + 1));
        return group;
    };

    // After a step that rebuilds M rows row_lo..n-1 (0-based) of column col0
    // onto the group, record where every symbol of that column now sits.
    auto record_column = [&](const std::vector<std::size_t>& group, std::size_t row_lo,
                             std::size_t col0) {
        for (std::size_t pidx = 0; pidx < group.size(); ++pidx) {
            holder.put(holder.var_of(layout.cell(row_lo + pidx, col0)), group[pidx]);
        }
    };

    // Stage 1: per column of block i, undo the generalized Vandermonde map on
    // the d accessed qudits; they become M rows i..n of that column.
    {
        FqMatrix vd_inv = invert_or_fail(v_submatrix(p, plan.parties, i - 1, d), "V_D");
        for (std::size_t col0 = layout.block_begin(i); col0 < layout.block_end(i); ++col0) {
            std::vector<std::size_t> group = accessed_column(col0);
            plan.steps.push_back({vd_inv, group, "VD_inv block " + std::to_string(i) + " col " +
                                                     std::to_string(col0 + 1)});
            record_column(group, i - 1, col0);
        }
    }

    // Stage 2: for l = i-1 down to 1, widen the inversion with the randomness
    // rows k+l..k+i-1 already extracted from later blocks.
    for (unsigned l = i - 1; l >= 1 && i >= 2; --l) {
        const std::size_t width = 2 * static_cast<std::size_t>(p.k) - l;
        FqMatrix w = v_submatrix(p, plan.parties, l - 1, width);
        for (unsigned t = l; t <= i - 1; ++t) {
            FqMatrix unit(1, width, p.q);
            unit.set(0, p.k + t - l, 1); // reduced position of M row k+t
            w = w.vstack(unit);
        }
        FqMatrix w_inv = invert_or_fail(w, "W_" + std::to_string(l));

        for (std::size_t col0 = layout.block_begin(l); col0 < layout.block_end(l); ++col0) {
            std::vector<std::size_t> group = accessed_column(col0);
            for (unsigned t = l; t <= i - 1; ++t) {
                group.push_back(holder.get(holder.m + col0 * (p.k - 1) + (t - 1)));
            }
            plan.steps.push_back({w_inv, group, "W" + std::to_string(l) + "_inv col " +
                                                    std::to_string(col0 + 1)});
            record_column(group, l - 1, col0);
        }
    }

    for (std::size_t s = 0; s < p.m; ++s) plan.secret_register.push_back(holder.get(s));

    // Stage 3: re-entangle the extracted randomness with the untouched
    // parties E so the residual no longer pins any symbol. Skipped when E is
    // empty (d = n), where every G_l is the identity.
    if (i >= 2) {
        std::vector<unsigned> absent;
        for (unsigned u = 1; u <= p.n; ++u) {
            if (!std::count(plan.parties.begin(), plan.parties.end(), u)) absent.push_back(u);
        }
        for (unsigned l = 1; l <= i; ++l) {
            const unsigned beta = i - l + 1;
            const std::size_t gsz = 2 * static_cast<std::size_t>(p.k) - beta;
            const std::size_t top = p.k - beta + 1;
            FqMatrix g(gsz, gsz, p.q);
            for (std::size_t t = 0; t < top; ++t) g.set(t, t, 1);
            FqMatrix ve = v_submatrix(p, absent, beta - 1, gsz);
            for (std::size_t t = 0; t < ve.rows(); ++t) {
                for (std::size_t c = 0; c < gsz; ++c) g.set(top + t, c, ve.at(t, c));
            }
            for (std::size_t t = top + ve.rows(); t < gsz; ++t) g.set(t, t, 1);
            if (mat_rank(g) != gsz) {
                throw InvariantViolation("G_" + std::to_string(l) + " block is singular");
            }

            for (std::size_t col0 = layout.block_begin(beta); col0 < layout.block_end(beta);
                 ++col0) {
                std::vector<std::size_t> group;
                group.reserve(gsz);
                for (std::size_t row0 = beta - 1; row0 < p.k; ++row0) {
                    group.push_back(holder.get(holder.var_of(layout.cell(row0, col0))));
                }
                for (unsigned t = 1; t <= p.k - 1; ++t) {
                    group.push_back(holder.get(holder.m + col0 * (p.k - 1) + (t - 1)));
                }
                plan.steps.push_back({g, group, "G" + std::to_string(l) + " block " +
                                                    std::to_string(beta) + " col " +
                                                    std::to_string(col0 + 1)});
            }
        }
    }
    return plan;
}

RecoveryResult execute(const RecoveryPlan& plan, SymbolicState state) {
    const SchemeParams& p = plan.params;
    if (state.params().q != p.q || state.size() != p.num_qudits()) {
        throw DimensionMismatch("state does not match plan parameters");
    }
    std::unordered_set<std::size_t> accessed(plan.accessed.begin(), plan.accessed.end());
    for (const PlanStep& step : plan.steps) {
        for (std::size_t idx : step.qudits) {
            if (!accessed.count(idx)) {
                throw InvariantViolation("plan step touches qudit " + std::to_string(idx) +
                                         " outside the accessed set");
            }
        }
        state.apply_uk(step.gate, step.qudits);
        if (!state.consts_all_zero()) {
            throw InvariantViolation("nonzero constant label after step: " + step.tag);
        }
    }

    DisentanglementReport report = check_disentanglement(state, plan.secret_register);
    const unsigned d = static_cast<unsigned>(plan.parties.size());
    RecoveryResult result{std::move(state), report, plan.accessed.size(),
                          make_rational(d, d - p.k + 1)};
    if (!report.ok()) {
        throw VerificationFailed("recovery check failed for subset of size " + std::to_string(d) +
                                 ": " + report.detail);
    }
    return result;
}

RecoveryResult recover(const SchemeParams& p, const std::vector<unsigned>& parties) {
    RecoveryPlan plan = plan_recovery(p, parties);
    return execute(plan, encode_symbolic(p));
}

SoundnessReport check_soundness(const SchemeParams& p, std::size_t sample_cap, u64 seed) {
    SoundnessReport report;
    std::vector<unsigned> cur;
    std::vector<std::vector<unsigned>> subsets;
    auto rec = [&](auto&& self, unsigned next, unsigned size) -> void {
        if (cur.size() == size) {
            subsets.push_back(cur);
            return;
        }
        if (next > p.n || cur.size() + (p.n - next + 1) < size) return;
        for (unsigned u = next; u <= p.n; ++u) {
            cur.push_back(u);
            self(self, u + 1, size);
            cur.pop_back();
        }
    };
    for (unsigned d = p.k; d <= p.n; ++d) {
        subsets.clear();
        rec(rec, 1, d);
        if (sample_cap > 0 && subsets.size() > sample_cap) {
            std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * d));
            for (std::size_t i = 0; i < sample_cap; ++i) {
                std::size_t j = i + static_cast<std::size_t>(rng() % (subsets.size() - i));
                std::swap(subsets[i], subsets[j]);
            }
            subsets.resize(sample_cap);
        }
        for (const auto& parties : subsets) {
            ++report.subsets_checked;
            try {
                plan_recovery(p, parties);
            } catch (const InvariantViolation& e) {
                report.obstructions.push_back({d, parties, e.what()});
            }
        }
    }
    return report;
}

std::optional<u64> smallest_sound_q(unsigned k, u64 q_cap) {
    const unsigned n = 2 * k - 1;
    for (u64 q = next_prime_above(n); q <= q_cap; q = next_prime_above(q)) {
        SchemeParams p = derive_params(k, q);
        if (check_soundness(p).sound()) return q;
    }
    return std::nullopt;
}

std::vector<CostRow> cost_table(const SchemeParams& p) {
    std::vector<CostRow> rows;
    for (unsigned i = 1; i <= p.k; ++i) {
        CostRow row;
        row.d = p.d[i - 1];
        row.downloaded = static_cast<std::size_t>(p.a[i - 1]) * p.d[i - 1];
        row.per_secret = make_rational(row.d, row.d - p.k + 1);
        row.baseline = p.k;
        rows.push_back(row);
    }
    return rows;
}

} // namespace ceqss
