#pragma once

#include "ceqss/gates.hpp"
#include "ceqss/matrix.hpp"
#include "ceqss/recovery.hpp"

namespace ceqss {

// Decomposes U_K on the given qudit group into addmul/scale/swap gates by
// Gaussian elimination: forward pass with first-nonzero pivoting and swaps,
// clearing below; back-substitution above; diagonal scaling. The recorded
// row operations, inverted and reversed, reproduce K exactly. O(g^2) gates,
// deterministic.
GateProgram compile_uk(const FqMatrix& kmat, const std::vector<std::size_t>& qudits,
                       std::size_t num_qudits);

// Concatenation of compile_uk over every plan step.
GateProgram compile_plan(const RecoveryPlan& plan);

// Combined action of a program on the per-qudit labels, as a matrix: applying
// the program maps the label stack L to program_matrix(prog) * L.
FqMatrix program_matrix(const GateProgram& prog);

} // namespace ceqss
