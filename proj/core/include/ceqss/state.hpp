#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ceqss/gates.hpp"
#include "ceqss/params.hpp"

namespace ceqss {

// Basis label of one qudit as an affine form over the secret symbols and the
// randomness symbols: s_coeffs . s + r_coeffs . r + constant.
struct AffineLabel {
    std::vector<u64> s;
    std::vector<u64> r;
    u64 c = 0;

    bool operator==(const AffineLabel& other) const = default;
};

// The encoded n*m-qudit state in label form: an equal-amplitude sum over all
// randomness assignments of a product basis state whose per-qudit values are
// the labels below. Gates act as invertible linear maps on the labels.
class SymbolicState {
public:
    explicit SymbolicState(SchemeParams params);

    const SchemeParams& params() const { return params_; }
    std::size_t size() const { return labels_.size(); }

    const AffineLabel& label(std::size_t idx) const;
    AffineLabel& label(std::size_t idx);

    // |i>|j> -> |i>|j + alpha*i>
    void apply_l(u64 alpha, std::size_t control, std::size_t target);

    // |x> -> |Kx> on the ordered qudit group; K must be invertible.
    void apply_uk(const FqMatrix& kmat, const std::vector<std::size_t>& qudits);

    void apply_scale(u64 beta, std::size_t qudit);
    void apply_swap(std::size_t a, std::size_t b);

    bool consts_all_zero() const;

private:
    SchemeParams params_;
    std::vector<AffineLabel> labels_;

    void check_index(std::size_t idx) const;
};

void apply_program(SymbolicState& st, const GateProgram& prog);

struct DisentanglementReport {
    bool secret_exact = false;
    bool residual_factorizes = false;
    // X with A_r * X = A_s over the residual labels, when it exists.
    std::optional<FqMatrix> witness;
    std::string detail;

    bool ok() const { return secret_exact && residual_factorizes; }
};

// Decides whether the state is |s1..sm> (exactly, on the given register, in
// order) tensored with a secret-independent residual. For equal-amplitude
// affine-label states the residual is the coset A_s*s + col(A_r), which is
// s-independent iff col(A_s) is contained in col(A_r).
DisentanglementReport check_disentanglement(const SymbolicState& st,
                                            const std::vector<std::size_t>& secret_register);

// Numeric per-qudit basis values at a concrete assignment.
std::vector<u64> evaluate(const SymbolicState& st, const std::vector<u64>& s_vals,
                          const std::vector<u64>& r_vals);

} // namespace ceqss
