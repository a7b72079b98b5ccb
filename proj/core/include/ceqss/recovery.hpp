#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ceqss/encoder.hpp"
#include "ceqss/state.hpp"

namespace ceqss {

struct PlanStep {
    FqMatrix gate;
    std::vector<std::size_t> qudits; // global indices, group order = matrix row order
    std::string tag;
};

// Gate schedule that rebuilds |s1..sm> on secret_register from the accessed
// qudits of subset D and disentangles it from the rest.
struct RecoveryPlan {
    SchemeParams params;
    std::vector<unsigned> parties; // D, ascending
    unsigned level = 0;            // i = 2k - |D|
    std::vector<std::size_t> accessed;
    std::vector<PlanStep> steps;
    std::vector<std::size_t> secret_register; // m qudits, secret-symbol order
};

struct Rational {
    u64 num = 0;
    u64 den = 1;

    bool operator==(const Rational& other) const = default;
};

Rational make_rational(u64 num, u64 den);

struct RecoveryResult {
    SymbolicState state;
    DisentanglementReport report;
    std::size_t downloaded = 0;
    Rational cost_per_secret; // d / (d - k + 1)
};

RecoveryPlan plan_recovery(const SchemeParams& p, const std::vector<unsigned>& parties);

// Applies the plan to a state in label form and machine-checks the outcome.
// Throws VerificationFailed (carrying the report detail) if the final state
// does not hold the exact secret disentangled from the residual.
RecoveryResult execute(const RecoveryPlan& plan, SymbolicState state);

// encode_symbolic + plan_recovery + execute.
RecoveryResult recover(const SchemeParams& p, const std::vector<unsigned>& parties);

// Where the planner can run at all. Stage-2 blocks pin already-known
// coordinates of a Vandermonde window; the pinned minor degenerates for
// specific (q, D) combinations, and then no protocol on the downloaded
// qudits can recover the secret. This sweeps every access level and
// reports the degenerate subsets.
struct SoundnessReport {
    struct Obstruction {
        unsigned d = 0;
        std::vector<unsigned> parties;
        std::string detail;
    };

    std::vector<Obstruction> obstructions;
    std::size_t subsets_checked = 0;

    bool sound() const { return obstructions.empty(); }
};

// sample_cap = 0 checks every subset; otherwise at most sample_cap seeded
// subsets per level.
SoundnessReport check_soundness(const SchemeParams& p, std::size_t sample_cap = 0, u64 seed = 0);

// Smallest prime q > n (points 1..n) whose scheme has no degenerate subset
// at any level, scanning primes up to q_cap. nullopt if none in range.
std::optional<u64> smallest_sound_q(unsigned k, u64 q_cap = 1000);

struct CostRow {
    unsigned d = 0;          // shares contacted
    std::size_t downloaded = 0; // qudits read in total, a_i * d
    Rational per_secret;     // downloaded / m = d / (d - k + 1)
    unsigned baseline = 0;   // per-secret cost k of the non-universal scheme
};

// One row per access level, d = n down to k.
std::vector<CostRow> cost_table(const SchemeParams& p);

} // namespace ceqss
