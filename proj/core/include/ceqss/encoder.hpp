#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "ceqss/dense.hpp"
#include "ceqss/state.hpp"

namespace ceqss {

// |s1 .. sm> with digits in F_q.
struct BasisSecret {
    std::vector<u64> digits;
};

// Arbitrary m-qudit secret as q^m amplitudes (big-endian digit order).
struct SuperpositionSecret {
    std::vector<std::complex<double>> amps;
};

using SecretSpec = std::variant<BasisSecret, SuperpositionSecret>;

// The encoded state in label form: qudit (u, j) carries sum_l V[u][l] * M[l][j].
SymbolicState encode_symbolic(const SchemeParams& p);

// Amplitude-level encoding of a concrete secret.
DenseState encode_dense(const SchemeParams& p, const SecretSpec& secret,
                        std::size_t budget = dense_budget());

// Checks a 1-based party subset: distinct, within [1, n], k <= |D| <= n.
// Returns the subset sorted ascending.
std::vector<unsigned> validate_subset(const SchemeParams& p, std::vector<unsigned> parties);

// Global qudit indices the dealer must download for subset D: the first a_i
// positions of each party in D (party-major), where i = 2k - |D|.
std::vector<std::size_t> accessed_qudits(const SchemeParams& p,
                                         const std::vector<unsigned>& parties);

} // namespace ceqss
