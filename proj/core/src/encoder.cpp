#include "ceqss/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace ceqss {

SymbolicState encode_symbolic(const SchemeParams& p) {
    MLayout layout = build_m_layout(p);
    SymbolicState st(p);
    for (unsigned u = 1; u <= p.n; ++u) {
        for (unsigned j = 1; j <= p.m; ++j) {
            AffineLabel& label = st.label(p.qudit_index(u, j));
            for (unsigned row = 0; row < p.n; ++row) {
                const MCell& cell = layout.cell(row, j - 1);
                if (cell.kind == MCell::Kind::Zero) continue;
                u64 coef = p.v.at(u - 1, row);
                if (coef == 0) continue;
                if (cell.kind == MCell::Kind::Secret) {
                    label.s[cell.index] = mod_add(label.s[cell.index], coef, p.q);
                } else {
                    label.r[cell.index] = mod_add(label.r[cell.index], coef, p.q);
                }
            }
        }
    }
    return st;
}

DenseState encode_dense(const SchemeParams& p, const SecretSpec& secret, std::size_t budget) {
    SymbolicState st = encode_symbolic(p);
    DenseState out(p.q, st.size(), budget);

    const std::size_t rand_count = p.num_rand();
    std::size_t r_space = 1;
    for (std::size_t i = 0; i < rand_count; ++i) r_space *= p.q;
    const double weight = 1.0 / std::sqrt(static_cast<double>(r_space));

    auto add_basis_secret = [&](const std::vector<u64>& digits, std::complex<double> amp) {
        std::vector<u64> r_vals(rand_count, 0);
        for (std::size_t ridx = 0; ridx < r_space; ++ridx) {
            std::size_t rest = ridx;
            for (std::size_t t = rand_count; t-- > 0;) {
                r_vals[t] = rest % p.q;
                rest /= p.q;
            }
            out.amp(out.index_of(evaluate(st, digits, r_vals))) += amp * weight;
        }
    };

    if (const auto* basis = std::get_if<BasisSecret>(&secret)) {
        if (basis->digits.size() != p.m) throw LengthMismatch("secret needs m digits");
        for (u64 v : basis->digits) {
            if (v >= p.q) throw OutOfRange("secret digit outside F_q");
        }
        add_basis_secret(basis->digits, {1.0, 0.0});
        return out;
    }

    const auto& sup = std::get<SuperpositionSecret>(secret);
    std::size_t s_space = 1;
    for (unsigned i = 0; i < p.m; ++i) s_space *= p.q;
    if (sup.amps.size() != s_space) {
        throw LengthMismatch("superposition secret needs q^m amplitudes");
    }
    double nrm = 0;
    for (const auto& a : sup.amps) nrm += std::norm(a);
    if (nrm <= 0) throw OutOfRange("superposition secret has zero norm");
    const double scale = 1.0 / std::sqrt(nrm);

    std::vector<u64> digits(p.m, 0);
    for (std::size_t sidx = 0; sidx < s_space; ++sidx) {
        if (sup.amps[sidx] == std::complex<double>{0.0, 0.0}) continue;
        std::size_t rest = sidx;
        for (std::size_t t = p.m; t-- > 0;) {
            digits[t] = rest % p.q;
            rest /= p.q;
        }
        add_basis_secret(digits, sup.amps[sidx] * scale);
    }
    return out;
}

std::vector<unsigned> validate_subset(const SchemeParams& p, std::vector<unsigned> parties) {
    if (parties.size() < p.k || parties.size() > p.n) {
        throw BadSubsetSize("subset size " + std::to_string(parties.size()) +
                            " outside [k, n] = [" + std::to_string(p.k) + ", " +
                            std::to_string(p.n) + "]");
    }
    std::set<unsigned> seen;
    for (unsigned u : parties) {
        if (u < 1 || u > p.n) throw IndexOutOfRange("party " + std::to_string(u));
        if (!seen.insert(u).second) throw DuplicateIndex("party " + std::to_string(u) + " repeated");
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::size_t> accessed_qudits(const SchemeParams& p,
                                         const std::vector<unsigned>& parties) {
    std::vector<unsigned> d_sorted = validate_subset(p, parties);
    unsigned i = 2 * p.k - static_cast<unsigned>(d_sorted.size());
    unsigned ai = p.a[i - 1];
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(ai) * d_sorted.size());
    for (unsigned u : d_sorted) {
        for (unsigned j = 1; j <= ai; ++j) out.push_back(p.qudit_index(u, j));
    }
    return out;
}

} // namespace ceqss
