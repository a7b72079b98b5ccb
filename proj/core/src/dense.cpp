#include "ceqss/dense.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace ceqss {

std::size_t dense_budget() {
    static const std::size_t budget = [] {
        if (const char* env = std::getenv("CEQSS_DENSE_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 26;
    }();
    return budget;
}

namespace {

std::size_t checked_dim(u64 q, std::size_t num_qudits, std::size_t budget) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < num_qudits; ++i) {
        if (q != 0 && dim > budget / q) {
            throw TooLarge("dense state q^" + std::to_string(num_qudits) +
                           " exceeds the amplitude budget of " + std::to_string(budget));
        }
        dim *= q;
    }
    if (dim > budget) {
        throw TooLarge("dense state exceeds the amplitude budget of " + std::to_string(budget));
    }
    return dim;
}

} // namespace

DenseState::DenseState(u64 q, std::size_t num_qudits, std::size_t budget)
    : q_(q), num_qudits_(num_qudits) {
    if (q < 2 || !is_prime(q)) throw InvalidPrime("modulus " + std::to_string(q));
    amps_.assign(checked_dim(q, num_qudits, budget), {0.0, 0.0});
}

std::size_t DenseState::index_of(const std::vector<u64>& digits) const {
    if (digits.size() != num_qudits_) throw LengthMismatch("digit count mismatch");
    std::size_t idx = 0;
    for (u64 d : digits) {
        if (d >= q_) throw OutOfRange("digit outside F_q");
        idx = idx * q_ + static_cast<std::size_t>(d);
    }
    return idx;
}

std::vector<u64> DenseState::digits_of(std::size_t idx) const {
    std::vector<u64> digits(num_qudits_, 0);
    for (std::size_t t = num_qudits_; t-- > 0;) {
        digits[t] = idx % q_;
        idx /= q_;
    }
    return digits;
}

double DenseState::norm_sq() const {
    double acc = 0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

namespace {

void check_qudit(const DenseState& st, std::size_t idx) {
    if (idx >= st.num_qudits()) throw IndexOutOfRange("qudit " + std::to_string(idx));
}

// stride of qudit t: q^(N-1-t)
std::size_t stride_of(const DenseState& st, std::size_t t) {
    std::size_t s = 1;
    for (std::size_t i = st.num_qudits() - 1; i > t; --i) s *= st.modulus();
    return s;
}

} // namespace

void dense_apply_l(DenseState& st, u64 alpha, std::size_t control, std::size_t target) {
    check_qudit(st, control);
    check_qudit(st, target);
    if (control == target) throw SameQudit("L gate needs distinct qudits");
    const u64 q = st.modulus();
    alpha %= q;
    if (alpha == 0) return;
    const std::size_t cs = stride_of(st, control);
    const std::size_t ts = stride_of(st, target);
    std::vector<std::complex<double>> out(st.dim(), {0.0, 0.0});
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        u64 ci = (idx / cs) % q;
        u64 ti = (idx / ts) % q;
        u64 tnew = mod_add(ti, mod_mul(alpha, ci, q), q);
        std::size_t jdx = idx + (static_cast<std::size_t>(tnew) - ti) * ts;
        out[jdx] = st.amp(idx);
    }
    st.amps() = std::move(out);
}

void dense_apply_uk(DenseState& st, const FqMatrix& kmat, const std::vector<std::size_t>& qudits) {
    if (kmat.rows() != kmat.cols()) throw DimensionMismatch("U_K matrix must be square");
    if (kmat.modulus() != st.modulus()) throw DimensionMismatch("U_K modulus mismatch");
    if (kmat.rows() != qudits.size()) throw DimensionMismatch("U_K group size mismatch");
    std::unordered_set<std::size_t> seen;
    for (std::size_t t : qudits) {
        check_qudit(st, t);
        if (!seen.insert(t).second) throw DuplicateIndex("qudit repeated in U_K group");
    }
    if (mat_rank(kmat) != kmat.rows()) throw Singular("U_K matrix not invertible");

    const u64 q = st.modulus();
    const std::size_t g = qudits.size();
    std::vector<std::size_t> strides(g);
    for (std::size_t p = 0; p < g; ++p) strides[p] = stride_of(st, qudits[p]);

    std::vector<u64> x(g), y(g);
    std::vector<std::complex<double>> out(st.dim(), {0.0, 0.0});
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        for (std::size_t p = 0; p < g; ++p) x[p] = (idx / strides[p]) % q;
        std::size_t jdx = idx;
        for (std::size_t p = 0; p < g; ++p) {
            u64 acc = 0;
            for (std::size_t j = 0; j < g; ++j) {
                acc = mod_add(acc, mod_mul(kmat.at(p, j), x[j], q), q);
            }
            y[p] = acc;
            jdx += (static_cast<std::size_t>(acc) - x[p]) * strides[p];
        }
        out[jdx] = st.amp(idx);
    }
    st.amps() = std::move(out);
}

void dense_apply_scale(DenseState& st, u64 beta, std::size_t qudit) {
    check_qudit(st, qudit);
    const u64 q = st.modulus();
    beta %= q;
    if (beta == 0) throw ZeroInverse("scale factor must be nonzero");
    if (beta == 1) return;
    const std::size_t s = stride_of(st, qudit);
    std::vector<std::complex<double>> out(st.dim(), {0.0, 0.0});
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        u64 v = (idx / s) % q;
        u64 vnew = mod_mul(beta, v, q);
        std::size_t jdx = idx + (static_cast<std::size_t>(vnew) - v) * s;
        out[jdx] = st.amp(idx);
    }
    st.amps() = std::move(out);
}

void dense_apply_swap(DenseState& st, std::size_t a, std::size_t b) {
    check_qudit(st, a);
    check_qudit(st, b);
    if (a == b) throw SameQudit("swap needs distinct qudits");
    const u64 q = st.modulus();
    const std::size_t sa = stride_of(st, a);
    const std::size_t sb = stride_of(st, b);
    std::vector<std::complex<double>> out(st.dim(), {0.0, 0.0});
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        u64 va = (idx / sa) % q;
        u64 vb = (idx / sb) % q;
        std::size_t jdx = idx + (static_cast<std::size_t>(vb) - va) * sa +
                          (static_cast<std::size_t>(va) - vb) * sb;
        out[jdx] = st.amp(idx);
    }
    st.amps() = std::move(out);
}

void dense_apply_program(DenseState& st, const GateProgram& prog) {
    if (prog.q != st.modulus()) throw DimensionMismatch("program modulus mismatch");
    if (prog.num_qudits > st.num_qudits()) throw DimensionMismatch("program qudit count mismatch");
    for (const auto& gate : prog.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    dense_apply_l(st, g.alpha, g.control, g.target);
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    dense_apply_scale(st, g.beta, g.qudit);
                } else {
                    dense_apply_swap(st, g.a, g.b);
                }
            },
            gate);
    }
}

std::complex<double> inner_product(const DenseState& a, const DenseState& b) {
    if (a.modulus() != b.modulus() || a.dim() != b.dim()) {
        throw DimensionMismatch("inner product of unequal state spaces");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
    return acc;
}

double fidelity(const DenseState& a, const DenseState& b) {
    return std::norm(inner_product(a, b));
}

double max_amp_deviation(const DenseState& a, const DenseState& b) {
    if (a.modulus() != b.modulus() || a.dim() != b.dim()) {
        throw DimensionMismatch("comparing unequal state spaces");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amp(i) - b.amp(i)));
    }
    return worst;
}

DensityMatrix reduced_density(const DenseState& st, const std::vector<std::size_t>& qudits) {
    std::unordered_set<std::size_t> keep;
    for (std::size_t t : qudits) {
        check_qudit(st, t);
        if (!keep.insert(t).second) throw DuplicateIndex("qudit repeated in subsystem");
    }
    const u64 q = st.modulus();
    const std::size_t g = qudits.size();
    std::size_t dim = 1;
    for (std::size_t i = 0; i < g; ++i) dim *= q;

    DensityMatrix rho;
    rho.q = q;
    rho.num_qudits = g;
    rho.dim = dim;
    rho.data.assign(dim * dim, {0.0, 0.0});

    std::vector<std::size_t> strides(g);
    for (std::size_t p = 0; p < g; ++p) strides[p] = stride_of(st, qudits[p]);

    // Group amplitudes by environment assignment: for a fixed environment the
    // subsystem vector v contributes v v^dagger.
    std::vector<std::size_t> sub_index(st.dim());
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        std::size_t s = 0;
        for (std::size_t p = 0; p < g; ++p) s = s * q + (idx / strides[p]) % q;
        sub_index[idx] = s;
    }
    // env key: strip subsystem digits by zeroing them in the index
    std::vector<std::size_t> env_key(st.dim());
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        std::size_t key = idx;
        for (std::size_t p = 0; p < g; ++p) {
            key -= ((idx / strides[p]) % q) * strides[p];
        }
        env_key[idx] = key;
    }
    // bucket indices by env key, then accumulate outer products per bucket
    std::vector<std::vector<std::complex<double>>> buckets;
    std::unordered_map<std::size_t, std::size_t> env_to_bucket;
    for (std::size_t idx = 0; idx < st.dim(); ++idx) {
        if (st.amp(idx) == std::complex<double>{0.0, 0.0}) continue;
        auto [it, inserted] = env_to_bucket.try_emplace(env_key[idx], buckets.size());
        if (inserted) buckets.emplace_back(dim, std::complex<double>{0.0, 0.0});
        buckets[it->second][sub_index[idx]] += st.amp(idx);
    }
    for (const auto& v : buckets) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (v[i] == std::complex<double>{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                rho.at(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    return rho;
}

double purity(const DensityMatrix& rho) {
    double acc = 0;
    for (const auto& x : rho.data) acc += std::norm(x);
    return acc;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim != b.dim || a.q != b.q) throw DimensionMismatch("density matrix shape mismatch");
    const std::size_t d = a.dim;
    Eigen::MatrixXcd diff(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) diff(i, j) = a.at(i, j) - b.at(i, j);
    }
    // symmetrize away float noise before the Hermitian eigensolve
    Eigen::MatrixXcd herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity_with_pure(const DensityMatrix& rho, const std::vector<std::complex<double>>& psi) {
    if (psi.size() != rho.dim) throw DimensionMismatch("pure state dimension mismatch");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim; ++i) {
        for (std::size_t j = 0; j < rho.dim; ++j) {
            acc += std::conj(psi[i]) * rho.at(i, j) * psi[j];
        }
    }
    return acc.real();
}

DenseState expand_dense(const SymbolicState& st, const std::vector<u64>& secret,
                        std::size_t budget) {
    const SchemeParams& p = st.params();
    if (secret.size() != p.m) throw LengthMismatch("need m secret values");
    for (u64 v : secret) {
        if (v >= p.q) throw OutOfRange("secret digit outside F_q");
    }
    DenseState out(p.q, st.size(), budget);
    const std::size_t rand_count = p.num_rand();
    std::size_t r_space = 1;
    for (std::size_t i = 0; i < rand_count; ++i) r_space *= p.q;
    const double weight = 1.0 / std::sqrt(static_cast<double>(r_space));

    std::vector<u64> r_vals(rand_count, 0);
    for (std::size_t ridx = 0; ridx < r_space; ++ridx) {
        std::size_t rest = ridx;
        for (std::size_t t = rand_count; t-- > 0;) {
            r_vals[t] = rest % p.q;
            rest /= p.q;
        }
        out.amp(out.index_of(evaluate(st, secret, r_vals))) += weight;
    }
    return out;
}

} // namespace ceqss
