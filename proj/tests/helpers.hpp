#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ceqss/matrix.hpp"
#include "ceqss/params.hpp"
#include "ceqss/state.hpp"

namespace ceqss_test {

using ceqss::u64;

inline std::mt19937_64 test_rng(u64 seed) { return std::mt19937_64(seed); }

inline ceqss::FqMatrix random_matrix(std::size_t rows, std::size_t cols, u64 q,
                                     std::mt19937_64& rng) {
    ceqss::FqMatrix m(rows, cols, q);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() % q);
    return m;
}

inline ceqss::FqMatrix random_invertible(std::size_t n, u64 q, std::mt19937_64& rng) {
    for (;;) {
        ceqss::FqMatrix m = random_matrix(n, n, q, rng);
        if (ceqss::mat_rank(m) == n) return m;
    }
}

// Independent schoolbook product, kept free of FqMatrix internals.
inline std::vector<std::vector<u64>> schoolbook_mul(const std::vector<std::vector<u64>>& a,
                                                    const std::vector<std::vector<u64>>& b,
                                                    u64 q) {
    std::size_t rows = a.size();
    std::size_t inner = b.size();
    std::size_t cols = b[0].size();
    std::vector<std::vector<u64>> out(rows, std::vector<u64>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            u64 acc = 0;
            for (std::size_t t = 0; t < inner; ++t) acc = (acc + a[r][t] * b[t][c]) % q;
            out[r][c] = acc;
        }
    return out;
}

inline std::vector<std::vector<unsigned>> all_subsets(unsigned n, unsigned size) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        if (next > n) return;
        for (unsigned u = next; u + (size - cur.size()) <= n + 1; ++u) {
            cur.push_back(u);
            self(self, u + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Independent oracle for the stage-2 degeneracy: the pinned block for level
// l keeps exponents {l-1..n-1} minus the pinned run {k+l-1..k+i-2}, and is
// invertible iff the d x d power matrix on those exponents is nonsingular.
// Returns the levels l whose block degenerates (empty = plan must succeed).
inline std::vector<unsigned> degenerate_pin_levels(const ceqss::SchemeParams& p,
                                                   const std::vector<unsigned>& parties) {
    unsigned d = static_cast<unsigned>(parties.size());
    unsigned i = 2 * p.k - d;
    std::vector<unsigned> bad;
    if (i < 2) return bad;
    for (unsigned l = 1; l + 1 <= i; ++l) {
        std::vector<unsigned> exps;
        for (unsigned e = l - 1; e <= p.n - 1; ++e) {
            if (e >= p.k + l - 1 && e <= p.k + i - 2) continue;
            exps.push_back(e);
        }
        ceqss::FqMatrix a(d, exps.size(), p.q);
        for (unsigned r = 0; r < d; ++r)
            for (std::size_t c = 0; c < exps.size(); ++c)
                a.set(r, c, ceqss::mod_pow(p.points[parties[r] - 1], exps[c], p.q));
        if (ceqss::mat_rank(a) < d) bad.push_back(l);
    }
    return bad;
}

// Sparse spelling of an expected label: (0-based index, coefficient) pairs.
struct SparseLabel {
    std::vector<std::pair<std::size_t, u64>> s;
    std::vector<std::pair<std::size_t, u64>> r;
};

inline ceqss::AffineLabel make_label(const ceqss::SchemeParams& p, const SparseLabel& sl) {
    ceqss::AffineLabel lab;
    lab.s.assign(p.m, 0);
    lab.r.assign(p.num_rand(), 0);
    for (auto [idx, coeff] : sl.s) lab.s[idx] = coeff;
    for (auto [idx, coeff] : sl.r) lab.r[idx] = coeff;
    return lab;
}

} // namespace ceqss_test
