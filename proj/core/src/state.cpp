#include "ceqss/state.hpp"

#include <algorithm>
#include <unordered_set>

namespace ceqss {

SymbolicState::SymbolicState(SchemeParams params) : params_(std::move(params)) {
    AffineLabel zero;
    zero.s.assign(params_.m, 0);
    zero.r.assign(params_.num_rand(), 0);
    labels_.assign(params_.num_qudits(), zero);
}

void SymbolicState::check_index(std::size_t idx) const {
    if (idx >= labels_.size()) {
        throw IndexOutOfRange("qudit " + std::to_string(idx) + " of " +
                              std::to_string(labels_.size()));
    }
}

const AffineLabel& SymbolicState::label(std::size_t idx) const {
    check_index(idx);
    return labels_[idx];
}

AffineLabel& SymbolicState::label(std::size_t idx) {
    check_index(idx);
    return labels_[idx];
}

void SymbolicState::apply_l(u64 alpha, std::size_t control, std::size_t target) {
    check_index(control);
    check_index(target);
    if (control == target) throw SameQudit("L gate needs distinct qudits");
    const u64 q = params_.q;
    alpha %= q;
    const AffineLabel& src = labels_[control];
    AffineLabel& dst = labels_[target];
    for (std::size_t i = 0; i < dst.s.size(); ++i) {
        dst.s[i] = mod_add(dst.s[i], mod_mul(alpha, src.s[i], q), q);
    }
    for (std::size_t i = 0; i < dst.r.size(); ++i) {
        dst.r[i] = mod_add(dst.r[i], mod_mul(alpha, src.r[i], q), q);
    }
    dst.c = mod_add(dst.c, mod_mul(alpha, src.c, q), q);
}

void SymbolicState::apply_uk(const FqMatrix& kmat, const std::vector<std::size_t>& qudits) {
    if (kmat.rows() != kmat.cols()) throw DimensionMismatch("U_K matrix must be square");
    if (kmat.modulus() != params_.q) {
        throw DimensionMismatch("U_K modulus " + std::to_string(kmat.modulus()) +
                                " differs from scheme modulus " + std::to_string(params_.q));
    }
    if (kmat.rows() != qudits.size()) throw DimensionMismatch("U_K group size mismatch");
    std::unordered_set<std::size_t> seen;
    for (std::size_t idx : qudits) {
        check_index(idx);
        if (!seen.insert(idx).second) throw DuplicateIndex("qudit repeated in U_K group");
    }
    if (mat_rank(kmat) != kmat.rows()) throw Singular("U_K matrix not invertible");

    const u64 q = params_.q;
    const std::size_t g = qudits.size();
    std::vector<AffineLabel> fresh(g);
    for (std::size_t p = 0; p < g; ++p) {
        AffineLabel acc;
        acc.s.assign(params_.m, 0);
        acc.r.assign(params_.num_rand(), 0);
        for (std::size_t j = 0; j < g; ++j) {
            u64 coef = kmat.at(p, j);
            if (coef == 0) continue;
            const AffineLabel& src = labels_[qudits[j]];
            for (std::size_t t = 0; t < acc.s.size(); ++t) {
                acc.s[t] = mod_add(acc.s[t], mod_mul(coef, src.s[t], q), q);
            }
            for (std::size_t t = 0; t < acc.r.size(); ++t) {
                acc.r[t] = mod_add(acc.r[t], mod_mul(coef, src.r[t], q), q);
            }
            acc.c = mod_add(acc.c, mod_mul(coef, src.c, q), q);
        }
        fresh[p] = std::move(acc);
    }
    for (std::size_t p = 0; p < g; ++p) labels_[qudits[p]] = std::move(fresh[p]);
}

void SymbolicState::apply_scale(u64 beta, std::size_t qudit) {
    check_index(qudit);
    const u64 q = params_.q;
    beta %= q;
    if (beta == 0) throw ZeroInverse("scale factor must be nonzero");
    AffineLabel& l = labels_[qudit];
    for (auto& v : l.s) v = mod_mul(v, beta, q);
    for (auto& v : l.r) v = mod_mul(v, beta, q);
    l.c = mod_mul(l.c, beta, q);
}

void SymbolicState::apply_swap(std::size_t a, std::size_t b) {
    check_index(a);
    check_index(b);
    if (a == b) throw SameQudit("swap needs distinct qudits");
    std::swap(labels_[a], labels_[b]);
}

bool SymbolicState::consts_all_zero() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const AffineLabel& l) { return l.c == 0; });
}

void apply_program(SymbolicState& st, const GateProgram& prog) {
    if (prog.q != st.params().q) throw DimensionMismatch("program modulus mismatch");
    for (const auto& gate : prog.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    st.apply_l(g.alpha, g.control, g.target);
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    st.apply_scale(g.beta, g.qudit);
                } else {
                    st.apply_swap(g.a, g.b);
                }
            },
            gate);
    }
}

DisentanglementReport check_disentanglement(const SymbolicState& st,
                                            const std::vector<std::size_t>& secret_register) {
    const SchemeParams& p = st.params();
    if (secret_register.size() != p.m) {
        throw LengthMismatch("secret register must list m = " + std::to_string(p.m) + " qudits");
    }
    DisentanglementReport report;

    std::unordered_set<std::size_t> in_register;
    for (std::size_t idx : secret_register) {
        st.label(idx);
        if (!in_register.insert(idx).second) throw DuplicateIndex("secret register repeats a qudit");
    }

    report.secret_exact = true;
    for (std::size_t t = 0; t < secret_register.size(); ++t) {
        std::size_t idx = secret_register[t];
        const AffineLabel& l = st.label(idx);
        bool unit = l.c == 0;
        for (std::size_t j = 0; unit && j < l.s.size(); ++j) {
            if (l.s[j] != (j == t ? 1u : 0u)) unit = false;
        }
        for (std::size_t j = 0; unit && j < l.r.size(); ++j) {
            if (l.r[j] != 0) unit = false;
        }
        if (!unit) {
            report.secret_exact = false;
            report.detail = "register qudit " + std::to_string(idx) +
                            " does not carry secret symbol " + std::to_string(t + 1);
            break;
        }
    }

    const std::size_t residual_count = st.size() - secret_register.size();
    FqMatrix a_s(residual_count, p.m, p.q);
    FqMatrix a_r(residual_count, p.num_rand(), p.q);
    std::size_t row = 0;
    for (std::size_t idx = 0; idx < st.size(); ++idx) {
        if (in_register.count(idx)) continue;
        const AffineLabel& l = st.label(idx);
        for (std::size_t j = 0; j < p.m; ++j) a_s.set(row, j, l.s[j]);
        for (std::size_t j = 0; j < p.num_rand(); ++j) a_r.set(row, j, l.r[j]);
        ++row;
    }

    auto witness = solve_columnspace(a_r, a_s);
    report.residual_factorizes = witness.has_value();
    report.witness = std::move(witness);
    if (!report.residual_factorizes && report.detail.empty()) {
        report.detail = "residual labels depend on the secret outside col(A_r)";
    }
    return report;
}

std::vector<u64> evaluate(const SymbolicState& st, const std::vector<u64>& s_vals,
                          const std::vector<u64>& r_vals) {
    const SchemeParams& p = st.params();
    if (s_vals.size() != p.m) throw LengthMismatch("need m secret values");
    if (r_vals.size() != p.num_rand()) throw LengthMismatch("need m(k-1) randomness values");
    std::vector<u64> out(st.size());
    for (std::size_t idx = 0; idx < st.size(); ++idx) {
        const AffineLabel& l = st.label(idx);
        u64 acc = l.c;
        for (std::size_t j = 0; j < s_vals.size(); ++j) {
            acc = mod_add(acc, mod_mul(l.s[j], s_vals[j], p.q), p.q);
        }
        for (std::size_t j = 0; j < r_vals.size(); ++j) {
            acc = mod_add(acc, mod_mul(l.r[j], r_vals[j], p.q), p.q);
        }
        out[idx] = acc;
    }
    return out;
}

} // namespace ceqss
