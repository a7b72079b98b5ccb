#include "ceqss/secrecy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>

#include "ceqss/parallel.hpp"

namespace ceqss {

double secrecy_dense(const SchemeParams& p, const std::vector<unsigned>& subset_parties,
                     const std::vector<SecretSpec>& secrets, std::size_t budget) {
    if (subset_parties.size() >= p.k) {
        throw BadSubsetSize("secrecy applies to fewer than k = " + std::to_string(p.k) +
                            " parties");
    }
    std::set<unsigned> seen;
    for (unsigned u : subset_parties) {
        if (u < 1 || u > p.n) throw IndexOutOfRange("party " + std::to_string(u));
        if (!seen.insert(u).second) throw DuplicateIndex("party repeated");
    }
    if (secrets.size() < 2) throw LengthMismatch("need at least two secrets to compare");

    std::vector<std::size_t> qudits;
    for (unsigned u : seen) {
        for (unsigned j = 1; j <= p.m; ++j) qudits.push_back(p.qudit_index(u, j));
    }

    std::vector<DensityMatrix> rhos;
    rhos.reserve(secrets.size());
    for (const SecretSpec& s : secrets) {
        rhos.push_back(reduced_density(encode_dense(p, s, budget), qudits));
    }
    double worst = 0;
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        for (std::size_t j = i + 1; j < rhos.size(); ++j) {
            worst = std::max(worst, trace_distance(rhos[i], rhos[j]));
        }
    }
    return worst;
}

std::vector<SecretSpec> secrecy_probe_batch(const SchemeParams& p, std::size_t basis_cap,
                                            std::size_t superpositions, u64 seed) {
    std::vector<SecretSpec> batch;
    std::size_t s_space = 1;
    bool overflow = false;
    for (unsigned i = 0; i < p.m; ++i) {
        if (s_space > basis_cap) {
            overflow = true;
            break;
        }
        s_space *= p.q;
    }
    std::mt19937_64 rng(seed);
    if (!overflow && s_space <= basis_cap) {
        for (std::size_t idx = 0; idx < s_space; ++idx) {
            std::vector<u64> digits(p.m);
            std::size_t rest = idx;
            for (std::size_t t = p.m; t-- > 0;) {
                digits[t] = rest % p.q;
                rest /= p.q;
            }
            batch.push_back(BasisSecret{digits});
        }
    } else {
        for (std::size_t c = 0; c < basis_cap; ++c) {
            std::vector<u64> digits(p.m);
            for (auto& d : digits) d = rng() % p.q;
            batch.push_back(BasisSecret{digits});
        }
    }
    std::size_t amp_count = 1;
    for (unsigned i = 0; i < p.m; ++i) amp_count *= p.q;
    for (std::size_t c = 0; c < superpositions; ++c) {
        std::vector<std::complex<double>> amps(amp_count);
        for (auto& a : amps) {
            double re = static_cast<double>(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0;
            double im = static_cast<double>(rng() >> 11) / 9007199254740992.0 * 2.0 - 1.0;
            a = {re, im};
        }
        batch.push_back(SuperpositionSecret{std::move(amps)});
    }
    return batch;
}

StructuralReport secrecy_structural(const SchemeParams& p, unsigned jobs) {
    StructuralReport report;

    report.complement_sizes_ok = true;
    for (unsigned t = 0; t < p.k; ++t) {
        if (p.n - t < p.k) {
            report.complement_sizes_ok = false;
            report.detail = "subset of size " + std::to_string(t) + " leaves only " +
                            std::to_string(p.n - t) + " parties";
            break;
        }
    }

    // Every minimal (size-k) subset must reconstruct exactly; larger subsets
    // reuse the same machinery with smaller download.
    std::vector<std::vector<unsigned>> subsets;
    std::vector<unsigned> current;
    std::function<void(unsigned)> build = [&](unsigned next) {
        if (current.size() == p.k) {
            subsets.push_back(current);
            return;
        }
        for (unsigned u = next; u <= p.n; ++u) {
            if (p.n - u + 1 < p.k - current.size()) break;
            current.push_back(u);
            build(u + 1);
            current.pop_back();
        }
    };
    build(1);

    const SymbolicState base = encode_symbolic(p);
    std::vector<std::string> failures(subsets.size());
    std::atomic<bool> any_failed{false};
    parallel_for_index(subsets.size(), jobs, [&](std::size_t idx) {
        try {
            RecoveryPlan plan = plan_recovery(p, subsets[idx]);
            execute(plan, base);
        } catch (const std::exception& ex) {
            failures[idx] = ex.what();
            any_failed = true;
        }
    });

    report.subsets_checked = subsets.size();
    report.all_k_subsets_recover = !any_failed;
    if (any_failed && report.detail.empty()) {
        for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
            if (!failures[idx].empty()) {
                report.detail = "subset #" + std::to_string(idx) + ": " + failures[idx];
                break;
            }
        }
    }
    return report;
}

} // namespace ceqss
