#include "ceqss/compiler.hpp"

#include <algorithm>
#include <unordered_set>

namespace ceqss {

GateProgram compile_uk(const FqMatrix& kmat, const std::vector<std::size_t>& qudits,
                       std::size_t num_qudits) {
    if (kmat.rows() != kmat.cols()) throw DimensionMismatch("U_K matrix must be square");
    if (kmat.rows() != qudits.size()) throw DimensionMismatch("U_K group size mismatch");
    std::unordered_set<std::size_t> seen;
    for (std::size_t idx : qudits) {
        if (idx >= num_qudits) throw IndexOutOfRange("qudit " + std::to_string(idx));
        if (!seen.insert(idx).second) throw DuplicateIndex("qudit repeated in U_K group");
    }

    const u64 q = kmat.modulus();
    const std::size_t g = kmat.rows();
    FqMatrix w = kmat;

    // Row operations that reduce K to the identity, in application order.
    std::vector<ElementaryGate> reduction;
    auto row_addmul = [&](u64 alpha, std::size_t src, std::size_t dst) {
        for (std::size_t j = 0; j < g; ++j) {
            w.set(dst, j, mod_add(w.at(dst, j), mod_mul(alpha, w.at(src, j), q), q));
        }
        reduction.push_back(AddMulGate{alpha, src, dst});
    };
    auto row_swap = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < g; ++j) {
            u64 tmp = w.at(r1, j);
            w.set(r1, j, w.at(r2, j));
            w.set(r2, j, tmp);
        }
        reduction.push_back(SwapGate{r1, r2});
    };
    auto row_scale = [&](u64 beta, std::size_t r) {
        for (std::size_t j = 0; j < g; ++j) w.set(r, j, mod_mul(beta, w.at(r, j), q));
        reduction.push_back(ScaleGate{beta, r});
    };

    for (std::size_t col = 0; col < g; ++col) {
        std::size_t pivot = col;
        while (pivot < g && w.at(pivot, col) == 0) ++pivot;
        if (pivot == g) throw Singular("matrix is singular over F_" + std::to_string(q));
        if (pivot != col) row_swap(pivot, col);
        u64 pinv = mod_inverse(w.at(col, col), q);
        for (std::size_t r = col + 1; r < g; ++r) {
            u64 f = w.at(r, col);
            if (f == 0) continue;
            row_addmul(mod_neg(mod_mul(f, pinv, q), q), col, r);
        }
    }
    for (std::size_t col = g; col-- > 1;) {
        u64 pinv = mod_inverse(w.at(col, col), q);
        for (std::size_t r = col; r-- > 0;) {
            u64 f = w.at(r, col);
            if (f == 0) continue;
            row_addmul(mod_neg(mod_mul(f, pinv, q), q), col, r);
        }
    }
    for (std::size_t r = 0; r < g; ++r) {
        u64 v = w.at(r, r);
        if (v != 1) row_scale(mod_inverse(v, q), r);
    }

    // K equals the product of the inverted operations in reverse order.
    GateProgram prog;
    prog.q = q;
    prog.num_qudits = num_qudits;
    prog.gates.reserve(reduction.size());
    for (auto it = reduction.rbegin(); it != reduction.rend(); ++it) {
        std::visit(
            [&](const auto& op) {
                using G = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    prog.gates.push_back(
                        AddMulGate{mod_neg(op.alpha, q), qudits[op.control], qudits[op.target]});
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    prog.gates.push_back(ScaleGate{mod_inverse(op.beta, q), qudits[op.qudit]});
                } else {
                    prog.gates.push_back(SwapGate{qudits[op.a], qudits[op.b]});
                }
            },
            *it);
    }
    return prog;
}

GateProgram compile_plan(const RecoveryPlan& plan) {
    GateProgram prog;
    prog.q = plan.params.q;
    prog.num_qudits = plan.params.num_qudits();
    for (const PlanStep& step : plan.steps) {
        GateProgram part = compile_uk(step.gate, step.qudits, prog.num_qudits);
        prog.gates.insert(prog.gates.end(), part.gates.begin(), part.gates.end());
    }
    return prog;
}

FqMatrix program_matrix(const GateProgram& prog) {
    FqMatrix lab = FqMatrix::identity(prog.num_qudits, prog.q);
    const u64 q = prog.q;
    const std::size_t n = prog.num_qudits;
    for (const auto& gate : prog.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    for (std::size_t j = 0; j < n; ++j) {
                        lab.set(g.target, j,
                                mod_add(lab.at(g.target, j),
                                        mod_mul(g.alpha, lab.at(g.control, j), q), q));
                    }
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    for (std::size_t j = 0; j < n; ++j) {
                        lab.set(g.qudit, j, mod_mul(g.beta, lab.at(g.qudit, j), q));
                    }
                } else {
                    for (std::size_t j = 0; j < n; ++j) {
                        u64 tmp = lab.at(g.a, j);
                        lab.set(g.a, j, lab.at(g.b, j));
                        lab.set(g.b, j, tmp);
                    }
                }
            },
            gate);
    }
    return lab;
}

} // namespace ceqss
