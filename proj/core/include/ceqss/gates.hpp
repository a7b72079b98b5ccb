#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ceqss/gf.hpp"

namespace ceqss {

// target += alpha * control (mod q), the two-qudit primitive.
struct AddMulGate {
    u64 alpha;
    std::size_t control;
    std::size_t target;
};

// qudit *= beta (mod q), beta != 0.
struct ScaleGate {
    u64 beta;
    std::size_t qudit;
};

struct SwapGate {
    std::size_t a;
    std::size_t b;
};

using ElementaryGate = std::variant<AddMulGate, ScaleGate, SwapGate>;

struct GateProgram {
    u64 q = 0;
    std::size_t num_qudits = 0;
    std::vector<ElementaryGate> gates;
};

struct CostSummary {
    std::size_t gate_count = 0;
    std::size_t two_qudit_count = 0;
    std::size_t depth = 0;
};

CostSummary program_cost(const GateProgram& prog);

} // namespace ceqss
