#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ceqss/matrix.hpp"

namespace ceqss {

// Parameters of the (k, 2k-1) universal threshold scheme over F_q.
// All index vectors are in access-level order i = 1..k (stored 0-based).
struct SchemeParams {
    unsigned k = 0;
    unsigned n = 0;
    u64 q = 0;
    std::vector<unsigned> d;     // d[i-1] = n - i + 1, shares contacted at level i
    std::vector<unsigned> m_vec; // m_vec[i-1] = d_i - k + 1
    unsigned m = 0;              // lcm of m_vec, secret qudits per encoding
    std::vector<unsigned> a;     // a[i-1] = m / m_vec[i-1], per-share download at level i
    std::vector<unsigned> b;     // column block widths, b_1 = a_1, b_i = a_i - a_{i-1}
    std::vector<u64> points;     // Vandermonde evaluation points, one per share
    FqMatrix v{1, 1, 2};         // n x n Vandermonde over F_q

    std::size_t num_qudits() const { return static_cast<std::size_t>(n) * m; }
    std::size_t num_rand() const { return static_cast<std::size_t>(m) * (k - 1); }

    // Qudit position j of party u (both 1-based) -> global 0-based index.
    std::size_t qudit_index(unsigned party, unsigned pos) const;
};

// Derives all parameters for threshold k. q defaults to the smallest prime
// greater than n = 2k-1; points default to 1..n.
SchemeParams derive_params(unsigned k, std::optional<u64> q = std::nullopt,
                           std::vector<u64> points = {});

// One cell of the encoding matrix M: zero, a secret symbol, or a randomness
// symbol (0-based variable index).
struct MCell {
    enum class Kind { Zero, Secret, Rand } kind = Kind::Zero;
    std::size_t index = 0;
};

// Symbolic layout of the n x m matrix M. Column blocks: block 1 (width b_1)
// carries the secret grid S stacked over randomness rows; block i+1 (width
// b_{i+1}) carries zeros, then the repacked grid D_i, then more randomness.
struct MLayout {
    unsigned k = 0;
    unsigned n = 0;
    unsigned m = 0;
    std::vector<MCell> cells; // row-major n x m

    const MCell& cell(std::size_t row, std::size_t col) const; // 0-based
    std::size_t block_of_col(std::size_t col) const;           // 1-based block id

    // first/last 0-based column of block (1-based), end exclusive
    std::size_t block_begin(std::size_t block) const;
    std::size_t block_end(std::size_t block) const;

    std::vector<unsigned> a; // copy of cumulative widths for block lookup
};

MLayout build_m_layout(const SchemeParams& p);

// 0-based randomness index at cell (t, c) of D_i (all 0-based, i in 1..k-1).
// D_i repacks row i of [R_1 .. R_i] column-major into k-i rows.
std::size_t index_of_d_entry(const SchemeParams& p, unsigned i, std::size_t t, std::size_t c);

} // namespace ceqss
