#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ceqss/gf.hpp"

namespace ceqss {

// Row-major matrix over F_q. Every matrix carries its modulus; operations on
// matrices with different moduli are rejected.
class FqMatrix {
public:
    FqMatrix(std::size_t rows, std::size_t cols, u64 q);

    static FqMatrix identity(std::size_t n, u64 q);
    static FqMatrix from_rows(const std::vector<std::vector<u64>>& rows, u64 q);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u64 modulus() const { return q_; }

    u64 at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, u64 value);
    FieldElement elem(std::size_t r, std::size_t c) const;

    std::vector<u64> row(std::size_t r) const;

    // Submatrix with the given rows/columns, kept in the given order.
    FqMatrix select_rows(const std::vector<std::size_t>& rows) const;
    FqMatrix select_cols(const std::vector<std::size_t>& cols) const;

    // Stacks other below this matrix.
    FqMatrix vstack(const FqMatrix& other) const;

    bool operator==(const FqMatrix& other) const;
    bool operator!=(const FqMatrix& other) const { return !(*this == other); }

    const std::vector<u64>& data() const { return data_; }
    std::vector<u64>& data() { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    u64 q_;
    std::vector<u64> data_;
};

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);
std::vector<u64> mat_vec(const FqMatrix& a, const std::vector<u64>& x);

// Gauss-Jordan inverse. Pivot choice: first nonzero entry scanning downward.
FqMatrix mat_inverse(const FqMatrix& a);

std::size_t mat_rank(FqMatrix a);

// n x n Vandermonde: entry (u, j) = points[u]^j for j = 0..n-1.
// Default points are 1..n.
FqMatrix vandermonde(std::size_t n, u64 q, std::vector<u64> points = {});

// Solves A * X = B. Returns nullopt when some column of B lies outside the
// column space of A.
std::optional<FqMatrix> solve_columnspace(const FqMatrix& a, const FqMatrix& b);

// P*A = L*U with L unit lower triangular and U upper triangular.
// perm[i] gives the source row of A placed at row i of P*A.
struct PluDecomposition {
    std::vector<std::size_t> perm;
    FqMatrix l;
    FqMatrix u;
};

PluDecomposition plu_decompose(const FqMatrix& a);

} // namespace ceqss
