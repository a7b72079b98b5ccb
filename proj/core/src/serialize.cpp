#include "ceqss/serialize.hpp"

#include <nlohmann/json.hpp>

namespace ceqss {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON");
    return j;
}

u64 get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw SchemaError(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<u64>();
}

} // namespace

std::string matrix_to_json(const FqMatrix& m) {
    json j;
    j["q"] = m.modulus();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.data();
    return j.dump();
}

FqMatrix matrix_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    u64 q = get_u64(j, "q");
    std::size_t rows = get_u64(j, "rows");
    std::size_t cols = get_u64(j, "cols");
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows * cols) {
        throw SchemaError("\"data\" must hold rows*cols entries");
    }
    FqMatrix m(rows, cols, q);
    std::size_t idx = 0;
    for (const auto& v : j["data"]) {
        if (!v.is_number_unsigned()) throw SchemaError("matrix entries must be unsigned integers");
        m.set(idx / cols, idx % cols, v.get<u64>());
        ++idx;
    }
    return m;
}

std::string state_to_json(const SymbolicState& st) {
    const SchemeParams& p = st.params();
    if (!st.consts_all_zero()) {
        throw InvariantViolation("state with nonzero constant labels does not serialize");
    }
    json j;
    j["k"] = p.k;
    j["n"] = p.n;
    j["q"] = p.q;
    j["m"] = p.m;
    j["qudits"] = json::array();
    for (unsigned u = 1; u <= p.n; ++u) {
        for (unsigned pos = 1; pos <= p.m; ++pos) {
            const AffineLabel& l = st.label(p.qudit_index(u, pos));
            json rec;
            rec["party"] = u;
            rec["pos"] = pos;
            rec["s_coeffs"] = l.s;
            rec["r_coeffs"] = l.r;
            j["qudits"].push_back(std::move(rec));
        }
    }
    return j.dump();
}

SymbolicState state_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    unsigned k = static_cast<unsigned>(get_u64(j, "k"));
    u64 q = get_u64(j, "q");
    SchemeParams p = derive_params(k, q);
    if (get_u64(j, "n") != p.n || get_u64(j, "m") != p.m) {
        throw SchemaError("n/m fields do not match the scheme for k");
    }
    if (!j.contains("qudits") || !j["qudits"].is_array() ||
        j["qudits"].size() != p.num_qudits()) {
        throw SchemaError("\"qudits\" must hold n*m records");
    }
    SymbolicState st(p);
    std::vector<bool> filled(p.num_qudits(), false);
    for (const auto& rec : j["qudits"]) {
        unsigned u = static_cast<unsigned>(get_u64(rec, "party"));
        unsigned pos = static_cast<unsigned>(get_u64(rec, "pos"));
        std::size_t idx = p.qudit_index(u, pos);
        if (filled[idx]) throw SchemaError("duplicate qudit record");
        filled[idx] = true;
        AffineLabel& l = st.label(idx);
        const auto& sc = rec["s_coeffs"];
        const auto& rc = rec["r_coeffs"];
        if (!sc.is_array() || sc.size() != p.m || !rc.is_array() || rc.size() != p.num_rand()) {
            throw SchemaError("coefficient arrays must have sizes m and m(k-1)");
        }
        for (std::size_t t = 0; t < l.s.size(); ++t) {
            if (!sc[t].is_number_unsigned()) throw SchemaError("s_coeffs entries must be unsigned");
            l.s[t] = sc[t].get<u64>() % q;
        }
        for (std::size_t t = 0; t < l.r.size(); ++t) {
            if (!rc[t].is_number_unsigned()) throw SchemaError("r_coeffs entries must be unsigned");
            l.r[t] = rc[t].get<u64>() % q;
        }
    }
    return st;
}

std::string netlist_to_json(const GateProgram& prog) {
    json arr = json::array();
    for (const auto& gate : prog.gates) {
        std::visit(
            [&](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                json rec;
                if constexpr (std::is_same_v<G, AddMulGate>) {
                    rec["op"] = "addmul";
                    rec["alpha"] = g.alpha;
                    rec["control"] = g.control;
                    rec["target"] = g.target;
                } else if constexpr (std::is_same_v<G, ScaleGate>) {
                    rec["op"] = "scale";
                    rec["beta"] = g.beta;
                    rec["qudit"] = g.qudit;
                } else {
                    rec["op"] = "swap";
                    rec["a"] = g.a;
                    rec["b"] = g.b;
                }
                arr.push_back(std::move(rec));
            },
            gate);
    }
    return arr.dump();
}

GateProgram netlist_from_json(const std::string& text, u64 q, std::size_t num_qudits) {
    json arr = parse_or_throw(text);
    if (!arr.is_array()) throw SchemaError("netlist must be a JSON array");
    GateProgram prog;
    prog.q = q;
    prog.num_qudits = num_qudits;
    auto check_qudit = [&](std::size_t idx) {
        if (idx >= num_qudits) throw SchemaError("qudit index " + std::to_string(idx) +
                                                 " outside program width");
        return idx;
    };
    for (const auto& rec : arr) {
        if (!rec.contains("op") || !rec["op"].is_string()) throw SchemaError("gate without op");
        const std::string op = rec["op"].get<std::string>();
        if (op == "addmul") {
            prog.gates.push_back(AddMulGate{get_u64(rec, "alpha") % q,
                                            check_qudit(get_u64(rec, "control")),
                                            check_qudit(get_u64(rec, "target"))});
        } else if (op == "scale") {
            u64 beta = get_u64(rec, "beta") % q;
            if (beta == 0) throw SchemaError("scale gate with zero factor");
            prog.gates.push_back(ScaleGate{beta, check_qudit(get_u64(rec, "qudit"))});
        } else if (op == "swap") {
            prog.gates.push_back(
                SwapGate{check_qudit(get_u64(rec, "a")), check_qudit(get_u64(rec, "b"))});
        } else {
            throw SchemaError("unknown op \"" + op + "\"");
        }
    }
    return prog;
}

} // namespace ceqss
