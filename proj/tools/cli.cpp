#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ceqss/compiler.hpp"
#include "ceqss/dense.hpp"
#include "ceqss/encoder.hpp"
#include "ceqss/errors.hpp"
#include "ceqss/parallel.hpp"
#include "ceqss/params.hpp"
#include "ceqss/recovery.hpp"
#include "ceqss/secrecy.hpp"
#include "ceqss/serialize.hpp"
#include "ceqss/state.hpp"

namespace ceqss::cli {
namespace {

using json = nlohmann::ordered_json;

struct GlobalOpts {
    std::optional<u64> q;
    u64 seed = kDefaultSeed;
    bool json_out = false;
    unsigned jobs = 1;
    std::string trace_path;
};

std::vector<u64> parse_u64_csv(const std::string& text, const std::string& what) {
    if (text.empty()) throw SchemaError(what + ": empty list");
    std::vector<u64> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        std::size_t lo = pos, hi = end;
        while (lo < hi && text[lo] == ' ') ++lo;
        while (hi > lo && text[hi - 1] == ' ') --hi;
        u64 v = 0;
        auto res = std::from_chars(text.data() + lo, text.data() + hi, v);
        if (lo == hi || res.ec != std::errc{} || res.ptr != text.data() + hi)
            throw SchemaError(what + ": expected comma-separated nonnegative integers");
        vals.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vals;
}

std::vector<unsigned> to_unsigned_list(const std::vector<u64>& vals, const std::string& what) {
    std::vector<unsigned> r;
    r.reserve(vals.size());
    for (u64 v : vals) {
        if (v > 0xFFFFFFFFull) throw IndexOutOfRange(what + ": value out of range");
        r.push_back(static_cast<unsigned>(v));
    }
    return r;
}

template <typename T>
std::string join_csv(const std::vector<T>& vals) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ",";
        os << vals[i];
    }
    return os.str();
}

std::string rational_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw SchemaError("cannot read file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SchemaError("cannot open output file: " + path);
    f << text << "\n";
}

std::vector<std::vector<unsigned>> all_subsets_of_size(unsigned n, unsigned size) {
    std::vector<std::vector<unsigned>> subsets;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == size) {
            subsets.push_back(cur);
            return;
        }
        if (next > n || cur.size() + (n - next + 1) < size) return;
        for (unsigned u = next; u <= n; ++u) {
            cur.push_back(u);
            self(self, u + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return subsets;
}

std::vector<std::vector<unsigned>> sample_subsets(std::vector<std::vector<unsigned>> all,
                                                  std::size_t want, u64 seed) {
    if (all.size() <= want) return all;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < want; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
        std::swap(all[i], all[j]);
    }
    all.resize(want);
    return all;
}

bool dense_feasible(const SchemeParams& p, std::size_t budget) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < p.num_qudits(); ++i) {
        if (dim > budget / p.q) return false;
        dim *= p.q;
    }
    return dim <= budget;
}

// Label-form states hold m*k coefficients per qudit; refuse thresholds whose
// encoding would not fit in memory anyway.
void guard_symbolic_size(const SchemeParams& p) {
    long double bytes = static_cast<long double>(p.num_qudits()) * p.m * p.k * 8.0L;
    if (bytes > 8e9L)
        throw TooLarge("label-form state for k=" + std::to_string(p.k) + " exceeds 8 GB");
}

double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
}

std::vector<u64> digits_of_index(std::size_t idx, u64 q, unsigned m) {
    std::vector<u64> digits(m, 0);
    for (unsigned j = m; j-- > 0;) {
        digits[j] = idx % q;
        idx /= q;
    }
    return digits;
}

int do_params(unsigned k, const GlobalOpts& g, std::ostream& out) {
    SchemeParams p = derive_params(k, g.q);
    if (g.json_out) {
        json j;
        j["k"] = p.k;
        j["n"] = p.n;
        j["q"] = p.q;
        j["m"] = p.m;
        json levels = json::array();
        for (unsigned i = 1; i <= p.k; ++i)
            levels.push_back(json{{"i", i},
                                  {"d", p.d[i - 1]},
                                  {"m_i", p.m_vec[i - 1]},
                                  {"a", p.a[i - 1]},
                                  {"b", p.b[i - 1]}});
        j["levels"] = std::move(levels);
        j["points"] = p.points;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "k=" << p.k << "  n=" << p.n << "  q=" << p.q << "  m=" << p.m << "\n";
    out << std::setw(3) << "i" << std::setw(5) << "d" << std::setw(5) << "m_i" << std::setw(5)
        << "a" << std::setw(5) << "b" << "\n";
    for (unsigned i = 1; i <= p.k; ++i)
        out << std::setw(3) << i << std::setw(5) << p.d[i - 1] << std::setw(5) << p.m_vec[i - 1]
            << std::setw(5) << p.a[i - 1] << std::setw(5) << p.b[i - 1] << "\n";
    out << "points: " << join_csv(p.points) << "\n";
    return 0;
}

int do_cost(unsigned k, const GlobalOpts& g, std::ostream& out) {
    SchemeParams p = derive_params(k, g.q);
    std::vector<CostRow> rows = cost_table(p);
    if (g.json_out) {
        json j = json::array();
        for (const CostRow& r : rows)
            j.push_back(json{{"d", r.d},
                             {"downloaded", r.downloaded},
                             {"per_secret", {{"num", r.per_secret.num}, {"den", r.per_secret.den}}},
                             {"baseline", r.baseline}});
        out << j.dump(2) << "\n";
        return 0;
    }
    out << std::setw(3) << "d" << std::setw(12) << "downloaded" << std::setw(12) << "per-secret"
        << std::setw(10) << "baseline" << "\n";
    for (const CostRow& r : rows)
        out << std::setw(3) << r.d << std::setw(12) << r.downloaded << std::setw(12)
            << rational_str(r.per_secret) << std::setw(10) << r.baseline << "\n";
    return 0;
}

int do_encode(unsigned k, const GlobalOpts& g, const std::string& secret_csv,
              const std::string& out_path, std::ostream& out) {
    SchemeParams p = derive_params(k, g.q);
    guard_symbolic_size(p);
    if (secret_csv.empty()) {
        write_output(out_path, state_to_json(encode_symbolic(p)), out);
        return 0;
    }
    std::vector<u64> digits = parse_u64_csv(secret_csv, "--secret");
    DenseState st = encode_dense(p, BasisSecret{digits});
    json j;
    j["q"] = st.modulus();
    j["num_qudits"] = st.num_qudits();
    json amps = json::array();
    for (const auto& a : st.amps()) amps.push_back(json::array({a.real(), a.imag()}));
    j["amplitudes"] = std::move(amps);
    write_output(out_path, j.dump(), out);
    return 0;
}

int do_recover(unsigned k, const GlobalOpts& g, const std::string& parties_csv,
               const std::string& netlist_path, std::ostream& out, std::ostream& err) {
    SchemeParams p = derive_params(k, g.q);
    guard_symbolic_size(p);
    std::vector<unsigned> parties = to_unsigned_list(parse_u64_csv(parties_csv, "--parties"), "--parties");
    RecoveryPlan plan = plan_recovery(p, parties);
    SymbolicState st = encode_symbolic(p);

    const bool tracing = !g.trace_path.empty();
    json trace = json::array();
    auto snap = [&](std::size_t stepno, const std::string& tag, const std::vector<std::size_t>& qudits,
                    const FqMatrix* gate) {
        if (!tracing) return;
        json e;
        e["step"] = stepno;
        e["tag"] = tag;
        e["qudits"] = qudits;
        if (gate) e["gate"] = json::parse(matrix_to_json(*gate));
        e["state"] = json::parse(state_to_json(st));
        trace.push_back(std::move(e));
    };
    snap(0, "initial", {}, nullptr);
    try {
        for (std::size_t idx = 0; idx < plan.steps.size(); ++idx) {
            const PlanStep& stp = plan.steps[idx];
            st.apply_uk(stp.gate, stp.qudits);
            if (!st.consts_all_zero())
                throw InvariantViolation("nonzero constant after step: " + stp.tag);
            snap(idx + 1, stp.tag, stp.qudits, &stp.gate);
        }
    } catch (...) {
        if (tracing) write_output(g.trace_path, trace.dump(2), out);
        throw;
    }
    if (tracing) write_output(g.trace_path, trace.dump(2), out);

    DisentanglementReport report = check_disentanglement(st, plan.secret_register);
    GateProgram prog = compile_plan(plan);
    CostSummary cs = program_cost(prog);
    if (!netlist_path.empty()) write_output(netlist_path, netlist_to_json(prog), out);

    unsigned d = static_cast<unsigned>(plan.parties.size());
    Rational cost = make_rational(d, d - p.k + 1);
    if (g.json_out) {
        json j;
        j["parties"] = plan.parties;
        j["d"] = d;
        j["level"] = plan.level;
        j["downloaded"] = plan.accessed.size();
        j["total_qudits"] = p.num_qudits();
        j["cost_per_secret"] = {{"num", cost.num}, {"den", cost.den}};
        j["baseline"] = p.k;
        j["netlist_gates"] = cs.gate_count;
        j["two_qudit_gates"] = cs.two_qudit_count;
        j["depth"] = cs.depth;
        json reg = json::array();
        for (std::size_t gq : plan.secret_register)
            reg.push_back(json{{"party", gq / p.m + 1}, {"pos", gq % p.m + 1}});
        j["secret_register"] = std::move(reg);
        j["secret_exact"] = report.secret_exact;
        j["residual_factorizes"] = report.residual_factorizes;
        if (!report.ok()) j["detail"] = report.detail;
        out << j.dump(2) << "\n";
    } else {
        out << "parties: " << join_csv(plan.parties) << "  (d=" << d << ", level " << plan.level
            << ")\n";
        out << "downloaded: " << plan.accessed.size() << " of " << p.num_qudits() << " qudits\n";
        out << "cost per secret: " << rational_str(cost) << " (baseline " << p.k << ")\n";
        out << "netlist: " << cs.gate_count << " gates, " << cs.two_qudit_count
            << " two-qudit, depth " << cs.depth << "\n";
        out << "secret register:";
        for (std::size_t gq : plan.secret_register)
            out << " (" << gq / p.m + 1 << "," << gq % p.m + 1 << ")";
        out << "\n";
        out << "secret exact: " << (report.secret_exact ? "yes" : "no") << "\n";
        out << "residual disentangled: " << (report.residual_factorizes ? "yes" : "no") << "\n";
    }
    if (!report.ok()) {
        err << "verification failed: " << report.detail << "\n";
        return 1;
    }
    return 0;
}

int do_verify(unsigned k, const GlobalOpts& g, bool all_subsets, unsigned samples, bool dense_flag,
              std::ostream& out, std::ostream& err) {
    SchemeParams p = derive_params(k, g.q);
    guard_symbolic_size(p);
    if (dense_flag && !dense_feasible(p, dense_budget()))
        throw TooLarge("dense verification needs q^(n*m) amplitudes beyond the budget");

    struct Task {
        unsigned d;
        std::vector<unsigned> parties;
    };
    std::vector<Task> tasks;
    for (unsigned d = p.n; d >= p.k; --d) {
        auto subs = all_subsets_of_size(p.n, d);
        if (!all_subsets && subs.size() > samples)
            subs = sample_subsets(std::move(subs), samples, g.seed ^ (0x9E3779B97F4A7C15ull * d));
        for (auto& s : subs) tasks.push_back(Task{d, std::move(s)});
    }

    struct Outcome {
        std::string error;
        std::size_t downloaded = 0;
        Rational cost;
        double fid_min = 1.0;
        double pur_min = 1.0;
        double dev_max = 0.0;
    };
    std::vector<Outcome> outs(tasks.size());

    std::size_t basis_count = 0;
    std::size_t dim_qm = 0;
    if (dense_flag) {
        dim_qm = 1;
        for (unsigned j = 0; j < p.m; ++j) dim_qm *= p.q;
        basis_count = dim_qm <= 32 ? dim_qm : 8;
    }

    const SymbolicState base = encode_symbolic(p);
    parallel_for_index(tasks.size(), g.jobs, [&](std::size_t ti) {
        Outcome& oc = outs[ti];
        try {
            RecoveryPlan plan = plan_recovery(p, tasks[ti].parties);
            RecoveryResult res = execute(plan, base);
            oc.downloaded = res.downloaded;
            oc.cost = res.cost_per_secret;

            GateProgram prog = compile_plan(plan);
            SymbolicState replay = base;
            apply_program(replay, prog);
            for (std::size_t qi = 0; qi < replay.size(); ++qi)
                if (!(replay.label(qi) == res.state.label(qi)))
                    throw VerificationFailed("netlist action deviates from plan at qudit " +
                                             std::to_string(qi));

            if (dense_flag) {
                std::mt19937_64 rng(g.seed ^ (tasks[ti].d * 1000003ull) ^ ti);
                std::vector<std::vector<u64>> basis;
                if (dim_qm <= 32) {
                    for (std::size_t idx = 0; idx < dim_qm; ++idx)
                        basis.push_back(digits_of_index(idx, p.q, p.m));
                } else {
                    for (std::size_t c = 0; c < basis_count; ++c) {
                        std::vector<u64> digits(p.m);
                        for (auto& dg : digits) dg = rng() % p.q;
                        basis.push_back(std::move(digits));
                    }
                }
                for (const auto& digits : basis) {
                    DenseState d0 = encode_dense(p, BasisSecret{digits});
                    dense_apply_program(d0, prog);
                    DensityMatrix rho = reduced_density(d0, plan.secret_register);
                    std::vector<std::complex<double>> psi(dim_qm, 0.0);
                    std::size_t pidx = 0;
                    for (u64 dg : digits) pidx = pidx * p.q + static_cast<std::size_t>(dg);
                    psi[pidx] = 1.0;
                    oc.fid_min = std::min(oc.fid_min, fidelity_with_pure(rho, psi));
                    oc.pur_min = std::min(oc.pur_min, purity(rho));
                    DenseState expanded = expand_dense(res.state, digits);
                    oc.dev_max = std::max(oc.dev_max, max_amp_deviation(expanded, d0));
                }
                for (int sx = 0; sx < 2; ++sx) {
                    std::vector<std::complex<double>> amps(dim_qm);
                    double norm = 0.0;
                    for (auto& a : amps) {
                        a = {unit_interval(rng), unit_interval(rng)};
                        norm += std::norm(a);
                    }
                    norm = std::sqrt(norm);
                    for (auto& a : amps) a /= norm;
                    DenseState d0 = encode_dense(p, SuperpositionSecret{amps});
                    dense_apply_program(d0, prog);
                    DensityMatrix rho = reduced_density(d0, plan.secret_register);
                    oc.fid_min = std::min(oc.fid_min, fidelity_with_pure(rho, amps));
                    oc.pur_min = std::min(oc.pur_min, purity(rho));
                }
            }
        } catch (const std::exception& e) {
            oc.error = e.what();
        }
    });

    std::vector<std::string> failures;
    json jlevels = json::array();
    std::ostringstream body;
    for (unsigned d = p.n; d >= p.k; --d) {
        std::size_t total = 0, okc = 0;
        std::size_t dl = 0;
        Rational cost;
        bool have = false;
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
            if (tasks[ti].d != d) continue;
            ++total;
            const Outcome& oc = outs[ti];
            if (!oc.error.empty()) {
                failures.push_back("d=" + std::to_string(d) + " parties=" +
                                   join_csv(tasks[ti].parties) + ": " + oc.error);
                continue;
            }
            if (!have) {
                dl = oc.downloaded;
                cost = oc.cost;
                have = true;
            } else if (oc.downloaded != dl) {
                failures.push_back("d=" + std::to_string(d) + ": inconsistent download counts");
            }
            ++okc;
        }
        body << "d=" << d << ": " << okc << "/" << total << " subsets ok";
        if (have) body << "  downloaded=" << dl << "  cost=" << rational_str(cost);
        body << "\n";
        jlevels.push_back(json{{"d", d},
                               {"subsets", total},
                               {"ok", okc},
                               {"downloaded", dl},
                               {"cost", {{"num", cost.num}, {"den", cost.den}}}});
    }

    double fid_min = 1.0, pur_min = 1.0, dev_max = 0.0;
    if (dense_flag) {
        for (const Outcome& oc : outs) {
            if (!oc.error.empty()) continue;
            fid_min = std::min(fid_min, oc.fid_min);
            pur_min = std::min(pur_min, oc.pur_min);
            dev_max = std::max(dev_max, oc.dev_max);
        }
        if (fid_min < 1.0 - 1e-9)
            failures.push_back("register fidelity " + std::to_string(fid_min) + " below 1 - 1e-9");
        if (pur_min < 1.0 - 1e-9)
            failures.push_back("register purity " + std::to_string(pur_min) + " below 1 - 1e-9");
        if (dev_max >= 1e-9)
            failures.push_back("amplitude deviation " + std::to_string(dev_max) + " reached 1e-9");
        body << "dense: fidelity deficit <= " << std::scientific << std::setprecision(2)
             << (1.0 - fid_min) << ", purity deficit <= " << (1.0 - pur_min)
             << ", amplitude deviation <= " << dev_max << std::defaultfloat << "  (" << basis_count
             << " basis + 2 superpositions per subset)\n";
    }

    if (g.json_out) {
        json j;
        j["k"] = p.k;
        j["n"] = p.n;
        j["q"] = p.q;
        j["levels"] = std::move(jlevels);
        if (dense_flag)
            j["dense"] = json{{"min_fidelity", fid_min},
                              {"min_purity", pur_min},
                              {"max_deviation", dev_max},
                              {"basis_per_subset", basis_count},
                              {"superpositions_per_subset", 2}};
        j["failures"] = failures;
        j["ok"] = failures.empty();
        out << j.dump(2) << "\n";
    } else {
        out << body.str();
        if (failures.empty()) {
            out << "verified " << tasks.size() << "/" << tasks.size() << " recoveries\n";
        }
    }
    if (!failures.empty()) {
        for (const std::string& f : failures) err << "FAIL " << f << "\n";
        return 1;
    }
    return 0;
}

int do_secrecy(unsigned k, const GlobalOpts& g, const std::string& subsets_mode, std::ostream& out,
               std::ostream& err) {
    SchemeParams p = derive_params(k, g.q);
    guard_symbolic_size(p);
    StructuralReport sr = secrecy_structural(p, g.jobs);

    bool dense_ran = false;
    double overall_max = 0.0;
    std::size_t probe_count = 0;
    std::vector<std::pair<unsigned, std::pair<std::size_t, double>>> size_rows;
    if (p.k >= 2 && dense_feasible(p, dense_budget())) {
        std::vector<SecretSpec> probes = secrecy_probe_batch(p, 25, 10, g.seed);
        probe_count = probes.size();
        std::vector<unsigned> sizes;
        if (subsets_mode == "all")
            for (unsigned s = 1; s < p.k; ++s) sizes.push_back(s);
        else
            sizes.push_back(p.k - 1);
        for (unsigned s : sizes) {
            auto subsets = all_subsets_of_size(p.n, s);
            double worst = 0.0;
            for (const auto& subset : subsets)
                worst = std::max(worst, secrecy_dense(p, subset, probes));
            size_rows.emplace_back(s, std::make_pair(subsets.size(), worst));
            overall_max = std::max(overall_max, worst);
        }
        dense_ran = true;
    }

    bool pass = sr.ok() && (!dense_ran || overall_max < 1e-9);
    if (g.json_out) {
        json j;
        j["k"] = p.k;
        j["n"] = p.n;
        j["q"] = p.q;
        j["structural"] = json{{"complement_sizes_ok", sr.complement_sizes_ok},
                               {"all_k_subsets_recover", sr.all_k_subsets_recover},
                               {"subsets_checked", sr.subsets_checked}};
        if (!sr.detail.empty()) j["structural"]["detail"] = sr.detail;
        if (dense_ran) {
            json sizes = json::array();
            for (const auto& [s, row] : size_rows)
                sizes.push_back(json{{"size", s},
                                     {"subsets", row.first},
                                     {"max_trace_distance", row.second}});
            j["dense"] = json{{"probes", probe_count},
                              {"sizes", std::move(sizes)},
                              {"max_trace_distance", overall_max}};
        }
        j["ok"] = pass;
        out << j.dump(2) << "\n";
    } else {
        out << "structural: complement sizes " << (sr.complement_sizes_ok ? "ok" : "BROKEN")
            << "; minimal subsets recovering: "
            << (sr.all_k_subsets_recover ? "all" : "NOT all") << " (" << sr.subsets_checked
            << " checked)\n";
        if (dense_ran) {
            out << "dense: " << probe_count << " probe secrets\n";
            for (const auto& [s, row] : size_rows)
                out << "  size " << s << ": max trace distance over " << row.first
                    << " subsets = " << std::scientific << std::setprecision(2) << row.second
                    << std::defaultfloat << "\n";
        } else if (p.k >= 2) {
            out << "dense: skipped, q^(n*m) exceeds the amplitude budget\n";
        }
        out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    if (!pass) {
        if (!sr.ok()) err << "structural secrecy failed: " << sr.detail << "\n";
        if (dense_ran && overall_max >= 1e-9)
            err << "trace distance " << overall_max << " reached 1e-9\n";
        return 1;
    }
    return 0;
}

int do_compile(const GlobalOpts& g, const std::string& matrix_path, const std::string& out_path,
               std::ostream& out) {
    FqMatrix kmat = matrix_from_json(read_file(matrix_path));
    std::vector<std::size_t> qudits(kmat.rows());
    std::iota(qudits.begin(), qudits.end(), 0);
    GateProgram prog = compile_uk(kmat, qudits, kmat.rows());
    if (program_matrix(prog) != kmat)
        throw InvariantViolation("compiled program does not reproduce the matrix");
    CostSummary cs = program_cost(prog);
    std::string net = netlist_to_json(prog);
    if (out_path.empty()) {
        out << net << "\n";
        return 0;
    }
    write_output(out_path, net, out);
    if (g.json_out) {
        json j{{"rows", kmat.rows()},
               {"gates", cs.gate_count},
               {"two_qudit", cs.two_qudit_count},
               {"depth", cs.depth},
               {"out", out_path}};
        out << j.dump(2) << "\n";
    } else {
        out << "compiled " << kmat.rows() << "x" << kmat.cols() << " matrix: " << cs.gate_count
            << " gates (" << cs.two_qudit_count << " two-qudit), depth " << cs.depth << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"universal threshold secret sharing over qudits"};
    app.name("ceqss");

    GlobalOpts g;
    u64 q_val = 0;
    CLI::Option* qopt = app.add_option("--q", q_val, "prime field modulus > n (default: smallest)");
    app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--trace", g.trace_path, "per-step label trace file (recover)");
    app.require_subcommand(1);

    unsigned k = 0;
    unsigned samples = 20;
    bool all_subsets = false;
    bool dense_flag = false;
    std::string secret_csv, parties_csv, out_path, netlist_path, matrix_path;
    std::string subsets_mode = "max";

    auto add_k = [&k](CLI::App* sub) {
        sub->add_option("--k", k, "threshold (parties n = 2k-1)")
            ->required()
            ->check(CLI::Range(1u, 16u));
    };

    CLI::App* c_params = app.add_subcommand("params", "derived scheme parameters");
    c_params->fallthrough();
    add_k(c_params);

    CLI::App* c_encode = app.add_subcommand("encode", "encoded share state");
    c_encode->fallthrough();
    add_k(c_encode);
    c_encode->add_option("--secret", secret_csv,
                         "m comma-separated digits; switches to amplitude output");
    c_encode->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* c_recover = app.add_subcommand("recover", "run recovery for one subset");
    c_recover->fallthrough();
    add_k(c_recover);
    c_recover->add_option("--parties", parties_csv, "comma-separated party ids (1-based)")
        ->required();
    c_recover->add_option("--netlist", netlist_path, "write the compiled gate netlist here");

    CLI::App* c_verify = app.add_subcommand("verify", "machine-check recovery across subsets");
    c_verify->fallthrough();
    add_k(c_verify);
    c_verify->add_flag("--all-subsets", all_subsets, "check every subset of every size");
    c_verify->add_option("--samples", samples, "subsets sampled per size")
        ->check(CLI::Range(1u, 1000000u))
        ->capture_default_str();
    c_verify->add_flag("--dense", dense_flag, "also execute netlists on amplitude vectors");

    CLI::App* c_secrecy = app.add_subcommand("secrecy", "structural and density-matrix secrecy");
    c_secrecy->fallthrough();
    add_k(c_secrecy);
    c_secrecy->add_option("--subsets", subsets_mode, "max: size k-1 only; all: sizes 1..k-1")
        ->check(CLI::IsMember({"max", "all"}))
        ->capture_default_str();

    CLI::App* c_cost = app.add_subcommand("cost", "communication cost per access level");
    c_cost->fallthrough();
    add_k(c_cost);

    CLI::App* c_compile = app.add_subcommand("compile", "compile an invertible matrix to gates");
    c_compile->fallthrough();
    c_compile->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    c_compile->add_option("--out", out_path, "netlist file (default stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    if (qopt->count() > 0) g.q = q_val;

    try {
        if (c_params->parsed()) return do_params(k, g, out);
        if (c_encode->parsed()) return do_encode(k, g, secret_csv, out_path, out);
        if (c_recover->parsed()) return do_recover(k, g, parties_csv, netlist_path, out, err);
        if (c_verify->parsed()) return do_verify(k, g, all_subsets, samples, dense_flag, out, err);
        if (c_secrecy->parsed()) return do_secrecy(k, g, subsets_mode, out, err);
        if (c_cost->parsed()) return do_cost(k, g, out);
        if (c_compile->parsed()) return do_compile(g, matrix_path, out_path, out);
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const Singular& e) {
        err << "singular: " << e.what() << "\n";
        return 1;
    } catch (const TooLarge& e) {
        err << "too large: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ceqss::cli
