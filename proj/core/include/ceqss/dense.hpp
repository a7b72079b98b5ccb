#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ceqss/gates.hpp"
#include "ceqss/matrix.hpp"
#include "ceqss/state.hpp"

namespace ceqss {

// Amplitude cap for dense vectors; CEQSS_DENSE_BUDGET overrides the default
// of 2^26 amplitudes.
std::size_t dense_budget();

// Full amplitude vector over (F_q)^num_qudits. Basis index is big-endian in
// the qudit order: qudit 0 is the most significant digit.
class DenseState {
public:
    DenseState(u64 q, std::size_t num_qudits, std::size_t budget = dense_budget());

    u64 modulus() const { return q_; }
    std::size_t num_qudits() const { return num_qudits_; }
    std::size_t dim() const { return amps_.size(); }

    std::complex<double>& amp(std::size_t idx) { return amps_[idx]; }
    const std::complex<double>& amp(std::size_t idx) const { return amps_[idx]; }
    std::vector<std::complex<double>>& amps() { return amps_; }
    const std::vector<std::complex<double>>& amps() const { return amps_; }

    std::size_t index_of(const std::vector<u64>& digits) const;
    std::vector<u64> digits_of(std::size_t idx) const;

    double norm_sq() const;

private:
    u64 q_;
    std::size_t num_qudits_;
    std::vector<std::complex<double>> amps_;
};

void dense_apply_l(DenseState& st, u64 alpha, std::size_t control, std::size_t target);
void dense_apply_uk(DenseState& st, const FqMatrix& kmat, const std::vector<std::size_t>& qudits);
void dense_apply_scale(DenseState& st, u64 beta, std::size_t qudit);
void dense_apply_swap(DenseState& st, std::size_t a, std::size_t b);
void dense_apply_program(DenseState& st, const GateProgram& prog);

std::complex<double> inner_product(const DenseState& a, const DenseState& b);
double fidelity(const DenseState& a, const DenseState& b);
double max_amp_deviation(const DenseState& a, const DenseState& b);

struct DensityMatrix {
    u64 q = 0;
    std::size_t num_qudits = 0;
    std::size_t dim = 0;
    std::vector<std::complex<double>> data; // row-major dim x dim

    std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

// Partial trace onto the listed qudits (kept in the given order).
DensityMatrix reduced_density(const DenseState& st, const std::vector<std::size_t>& qudits);

double purity(const DensityMatrix& rho);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// <psi| rho |psi> for a pure comparison state on the same subsystem.
double fidelity_with_pure(const DensityMatrix& rho, const std::vector<std::complex<double>>& psi);

// Expands the label-form state at a concrete basis secret into amplitudes:
// an equal superposition over all randomness assignments.
DenseState expand_dense(const SymbolicState& st, const std::vector<u64>& secret,
                        std::size_t budget = dense_budget());

} // namespace ceqss
