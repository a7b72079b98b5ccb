#pragma once

#include <random>
#include <vector>

#include "ceqss/encoder.hpp"
#include "ceqss/recovery.hpp"

namespace ceqss {

// Reduced density of the listed parties' shares must be the same for every
// secret. Returns the largest pairwise trace distance over the batch.
double secrecy_dense(const SchemeParams& p, const std::vector<unsigned>& subset_parties,
                     const std::vector<SecretSpec>& secrets,
                     std::size_t budget = dense_budget());

// Standard probe batch: every basis secret when q^m <= basis_cap (otherwise
// basis_cap seeded ones), plus the given number of seeded superpositions.
std::vector<SecretSpec> secrecy_probe_batch(const SchemeParams& p, std::size_t basis_cap,
                                            std::size_t superpositions, u64 seed);

struct StructuralReport {
    bool complement_sizes_ok = false; // every subset of size < k leaves >= k parties
    bool all_k_subsets_recover = false;
    std::size_t subsets_checked = 0;
    std::string detail;

    bool ok() const { return complement_sizes_ok && all_k_subsets_recover; }
};

// Field-size-independent secrecy evidence: complement counting plus exact
// recovery on every minimal subset.
StructuralReport secrecy_structural(const SchemeParams& p, unsigned jobs = 1);

} // namespace ceqss
