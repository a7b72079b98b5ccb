#include "ceqss/gates.hpp"

#include <algorithm>

namespace ceqss {

CostSummary program_cost(const GateProgram& prog) {
    CostSummary cs;
    cs.gate_count = prog.gates.size();
    std::vector<std::size_t> layer(prog.num_qudits, 0);
    auto place = [&](std::size_t a, std::size_t b) {
        std::size_t next = std::max(layer[a], layer[b]) + 1;
        layer[a] = layer[b] = next;
        cs.depth = std::max(cs.depth, next);
    };
    for (const auto& gate : prog.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    ++cs.two_qudit_count;
                    place(g.control, g.target);
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    std::size_t next = layer[g.qudit] + 1;
                    layer[g.qudit] = next;
                    cs.depth = std::max(cs.depth, next);
                } else {
                    ++cs.two_qudit_count;
                    place(g.a, g.b);
                }
            },
            gate);
    }
    return cs;
}

} // namespace ceqss
