#include "ceqss/params.hpp"

#include <numeric>
#include <string>

namespace ceqss {

std::size_t SchemeParams::qudit_index(unsigned party, unsigned pos) const {
    if (party < 1 || party > n) throw IndexOutOfRange("party " + std::to_string(party));
    if (pos < 1 || pos > m) throw IndexOutOfRange("position " + std::to_string(pos));
    return static_cast<std::size_t>(party - 1) * m + (pos - 1);
}

SchemeParams derive_params(unsigned k, std::optional<u64> q_opt, std::vector<u64> points) {
    if (k < 1) throw OutOfRange("threshold k must be at least 1");
    SchemeParams p;
    p.k = k;
    p.n = 2 * k - 1;
    p.q = q_opt ? *q_opt : next_prime_above(p.n);
    if (!is_prime(p.q)) throw InvalidPrime("q = " + std::to_string(p.q) + " is not prime");
    if (p.q <= p.n) {
        throw FieldTooSmall("q = " + std::to_string(p.q) + " must exceed n = " +
                            std::to_string(p.n));
    }

    unsigned m = 1;
    for (unsigned i = 1; i <= k; ++i) {
        p.d.push_back(p.n - i + 1);
        p.m_vec.push_back(p.d.back() - k + 1);
        m = std::lcm(m, p.m_vec.back());
    }
    p.m = m;
    for (unsigned i = 1; i <= k; ++i) {
        p.a.push_back(m / p.m_vec[i - 1]);
        p.b.push_back(i == 1 ? p.a[0] : p.a[i - 1] - p.a[i - 2]);
    }

    p.points = points; // vandermonde() validates and defaults them
    p.v = vandermonde(p.n, p.q, points);
    if (p.points.empty()) {
        p.points.resize(p.n);
        for (unsigned u = 0; u < p.n; ++u) p.points[u] = u + 1;
    }
    return p;
}

const MCell& MLayout::cell(std::size_t row, std::size_t col) const {
    if (row >= n || col >= m) throw OutOfRange("M cell outside grid");
    return cells[row * m + col];
}

std::size_t MLayout::block_of_col(std::size_t col) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (col < a[i]) return i + 1;
    }
    throw OutOfRange("column " + std::to_string(col));
}

std::size_t MLayout::block_begin(std::size_t block) const {
    if (block < 1 || block > a.size()) throw OutOfRange("block " + std::to_string(block));
    return block == 1 ? 0 : a[block - 2];
}

std::size_t MLayout::block_end(std::size_t block) const {
    if (block < 1 || block > a.size()) throw OutOfRange("block " + std::to_string(block));
    return a[block - 1];
}

std::size_t index_of_d_entry(const SchemeParams& p, unsigned i, std::size_t t, std::size_t c) {
    if (i < 1 || i > p.k - 1) throw OutOfRange("D block " + std::to_string(i));
    if (t >= p.k - i || c >= p.b[i]) throw OutOfRange("D_" + std::to_string(i) + " cell");
    // row i of [R_1 .. R_i] has one entry per source column; entry g (0-based)
    // is randomness symbol g*(k-1) + (i-1). D_i reads that row left to right
    // and fills its k-i rows column-major.
    std::size_t g = c * (p.k - i) + t;
    return g * (p.k - 1) + (i - 1);
}

MLayout build_m_layout(const SchemeParams& p) {
    MLayout layout;
    layout.k = p.k;
    layout.n = p.n;
    layout.m = p.m;
    layout.a = p.a;
    layout.cells.assign(static_cast<std::size_t>(p.n) * p.m, MCell{});

    auto put = [&](std::size_t row, std::size_t col, MCell cell) {
        layout.cells[row * p.m + col] = cell;
    };

    // Block 1: the k x b_1 secret grid S, column-major.
    for (std::size_t c = 0; c < p.b[0]; ++c) {
        for (std::size_t t = 0; t < p.k; ++t) {
            put(t, c, {MCell::Kind::Secret, c * p.k + t});
        }
    }
    // Blocks 2..k: zeros on rows 0..i-1, then D_i on rows i..k-1.
    for (unsigned i = 1; i + 1 <= p.k; ++i) {
        std::size_t base = p.a[i - 1];
        for (std::size_t c = 0; c < p.b[i]; ++c) {
            for (std::size_t t = 0; t < p.k - i; ++t) {
                put(i + t, base + c, {MCell::Kind::Rand, index_of_d_entry(p, i, t, c)});
            }
        }
    }
    // Bottom k-1 rows: [R_1 .. R_k] filled column-major across the full width.
    for (std::size_t c = 0; c < p.m; ++c) {
        for (std::size_t t = 0; t < p.k - 1u; ++t) {
            put(p.k + t, c, {MCell::Kind::Rand, c * (p.k - 1) + t});
        }
    }
    return layout;
}

} // namespace ceqss
