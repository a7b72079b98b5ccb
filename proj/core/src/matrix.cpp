#include "ceqss/matrix.hpp"

#include <string>
#include <unordered_set>

namespace ceqss {

namespace {

void require_same_field(const FqMatrix& a, const FqMatrix& b) {
    if (a.modulus() != b.modulus()) {
        throw DimensionMismatch("matrix moduli differ: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
    }
}

} // namespace

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, u64 q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
    if (q < 2 || q >= (1ull << 63) || !is_prime(q)) {
        throw InvalidPrime("modulus " + std::to_string(q) + " is not an odd-word prime");
    }
}

FqMatrix FqMatrix::identity(std::size_t n, u64 q) {
    FqMatrix m(n, n, q);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<u64>>& rows, u64 q) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    FqMatrix m(r, c, q);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

u64 FqMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw OutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return data_[r * cols_ + c];
}

void FqMatrix::set(std::size_t r, std::size_t c, u64 value) {
    if (r >= rows_ || c >= cols_) {
        throw OutOfRange("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    data_[r * cols_ + c] = value % q_;
}

FieldElement FqMatrix::elem(std::size_t r, std::size_t c) const { return {at(r, c), q_}; }

std::vector<u64> FqMatrix::row(std::size_t r) const {
    if (r >= rows_) throw OutOfRange("row " + std::to_string(r));
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

FqMatrix FqMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    FqMatrix out(rows.size(), cols_, q_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw OutOfRange("row " + std::to_string(rows[i]));
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = at(rows[i], j);
    }
    return out;
}

FqMatrix FqMatrix::select_cols(const std::vector<std::size_t>& cols) const {
    FqMatrix out(rows_, cols.size(), q_);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw OutOfRange("col " + std::to_string(cols[j]));
        for (std::size_t i = 0; i < rows_; ++i) out.data_[i * cols.size() + j] = at(i, cols[j]);
    }
    return out;
}

FqMatrix FqMatrix::vstack(const FqMatrix& other) const {
    require_same_field(*this, other);
    if (cols_ != other.cols_) throw DimensionMismatch("vstack width mismatch");
    FqMatrix out(rows_ + other.rows_, cols_, q_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && q_ == other.q_ &&
           data_ == other.data_;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    }
    const u64 q = a.modulus();
    FqMatrix out(a.rows(), b.cols(), q);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            u64 av = a.at(i, l);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                u64 cur = out.at(i, j);
                out.set(i, j, mod_add(cur, mod_mul(av, b.at(l, j), q), q));
            }
        }
    }
    return out;
}

std::vector<u64> mat_vec(const FqMatrix& a, const std::vector<u64>& x) {
    if (x.size() != a.cols()) throw DimensionMismatch("mat_vec length mismatch");
    const u64 q = a.modulus();
    std::vector<u64> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc = mod_add(acc, mod_mul(a.at(i, j), x[j], q), q);
        }
        out[i] = acc;
    }
    return out;
}

FqMatrix mat_inverse(const FqMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    const u64 q = a.modulus();
    FqMatrix work = a;
    FqMatrix inv = FqMatrix::identity(n, q);
    auto& w = work.data();
    auto& v = inv.data();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w[pivot * n + col] == 0) ++pivot;
        if (pivot == n) throw Singular("matrix is singular over F_" + std::to_string(q));
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w[pivot * n + j], w[col * n + j]);
                std::swap(v[pivot * n + j], v[col * n + j]);
            }
        }
        u64 pinv = mod_inverse(w[col * n + col], q);
        for (std::size_t j = 0; j < n; ++j) {
            w[col * n + j] = mod_mul(w[col * n + j], pinv, q);
            v[col * n + j] = mod_mul(v[col * n + j], pinv, q);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            u64 f = w[r * n + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w[r * n + j] = mod_sub(w[r * n + j], mod_mul(f, w[col * n + j], q), q);
                v[r * n + j] = mod_sub(v[r * n + j], mod_mul(f, v[col * n + j], q), q);
            }
        }
    }
    return inv;
}

std::size_t mat_rank(FqMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const u64 q = a.modulus();
    auto& w = a.data();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(w[pivot * cols + j], w[rank * cols + j]);
        }
        u64 pinv = mod_inverse(w[rank * cols + col], q);
        for (std::size_t j = col; j < cols; ++j) w[rank * cols + j] = mod_mul(w[rank * cols + j], pinv, q);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            u64 f = w[r * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                w[r * cols + j] = mod_sub(w[r * cols + j], mod_mul(f, w[rank * cols + j], q), q);
            }
        }
        ++rank;
    }
    return rank;
}

FqMatrix vandermonde(std::size_t n, u64 q, std::vector<u64> points) {
    if (points.empty()) {
        points.resize(n);
        for (std::size_t u = 0; u < n; ++u) points[u] = u + 1;
    }
    if (points.size() != n) throw DimensionMismatch("need n evaluation points");
    if (n > q - 1) {
        throw FieldTooSmall("need " + std::to_string(n) + " distinct nonzero points in F_" +
                            std::to_string(q));
    }
    std::unordered_set<u64> seen;
    for (auto& p : points) {
        p %= q;
        if (p == 0) throw OutOfRange("evaluation points must be nonzero");
        if (!seen.insert(p).second) throw DuplicatePoints("repeated evaluation point");
    }
    FqMatrix v(n, n, q);
    for (std::size_t u = 0; u < n; ++u) {
        u64 acc = 1;
        for (std::size_t j = 0; j < n; ++j) {
            v.set(u, j, acc);
            acc = mod_mul(acc, points[u], q);
        }
    }
    return v;
}

std::optional<FqMatrix> solve_columnspace(const FqMatrix& a, const FqMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_columnspace row mismatch");
    const std::size_t rows = a.rows(), an = a.cols(), bn = b.cols();
    const std::size_t cols = an + bn;
    const u64 q = a.modulus();

    std::vector<u64> w(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < an; ++j) w[i * cols + j] = a.at(i, j);
        for (std::size_t j = 0; j < bn; ++j) w[i * cols + an + j] = b.at(i, j);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < an && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && w[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(w[pivot * cols + j], w[rank * cols + j]);
        }
        u64 pinv = mod_inverse(w[rank * cols + col], q);
        for (std::size_t j = col; j < cols; ++j) w[rank * cols + j] = mod_mul(w[rank * cols + j], pinv, q);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            u64 f = w[r * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                w[r * cols + j] = mod_sub(w[r * cols + j], mod_mul(f, w[rank * cols + j], q), q);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // Any nonzero right-hand entry in a row with zero left part means B
    // escapes the column space.
    for (std::size_t r = rank; r < rows; ++r) {
        for (std::size_t j = 0; j < bn; ++j) {
            if (w[r * cols + an + j] != 0) return std::nullopt;
        }
    }

    FqMatrix x(an, bn, q);
    for (std::size_t p = 0; p < rank; ++p) {
        for (std::size_t j = 0; j < bn; ++j) x.set(pivot_col[p], j, w[p * cols + an + j]);
    }
    return x;
}

PluDecomposition plu_decompose(const FqMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const u64 q = a.modulus();
    FqMatrix u = a;
    FqMatrix l = FqMatrix::identity(rows, q);
    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && u.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) {
                u64 tmp = u.at(pivot, j);
                u.set(pivot, j, u.at(rank, j));
                u.set(rank, j, tmp);
            }
            // swap the already-filled strict lower part of L as well
            for (std::size_t j = 0; j < rank; ++j) {
                u64 tmp = l.at(pivot, j);
                l.set(pivot, j, l.at(rank, j));
                l.set(rank, j, tmp);
            }
            std::swap(perm[pivot], perm[rank]);
        }
        u64 pinv = mod_inverse(u.at(rank, col), q);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            u64 f = mod_mul(u.at(r, col), pinv, q);
            if (f == 0) continue;
            l.set(r, rank, f);
            for (std::size_t j = col; j < cols; ++j) {
                u.set(r, j, mod_sub(u.at(r, j), mod_mul(f, u.at(rank, j), q), q));
            }
        }
        ++rank;
    }
    return {perm, l, u};
}

} // namespace ceqss
