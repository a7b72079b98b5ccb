#pragma once

#include <string>

#include "ceqss/gates.hpp"
#include "ceqss/matrix.hpp"
#include "ceqss/state.hpp"

namespace ceqss {

// {"q": q, "rows": R, "cols": C, "data": [row-major entries]}
std::string matrix_to_json(const FqMatrix& m);
FqMatrix matrix_from_json(const std::string& text);

// {"k":..,"n":..,"q":..,"m":..,"qudits":[{"party":u,"pos":j,"s_coeffs":[..],"r_coeffs":[..]},..]}
// Qudits in global order. Only zero-constant (protocol) states serialize.
std::string state_to_json(const SymbolicState& st);
SymbolicState state_from_json(const std::string& text);

// [{"op":"addmul","alpha":a,"control":c,"target":t},
//  {"op":"scale","beta":b,"qudit":t},
//  {"op":"swap","a":x,"b":y}, ...]
std::string netlist_to_json(const GateProgram& prog);
GateProgram netlist_from_json(const std::string& text, u64 q, std::size_t num_qudits);

} // namespace ceqss
