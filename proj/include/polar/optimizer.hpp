#pragma once

#include "polar/construction.hpp"
#include "polar/perm_decoder.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polar {

// Raised when a selection constraint cannot be met; carries how many
// permutations were actually selected.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& message, std::size_t achieved)
        : std::runtime_error(message), achieved_(achieved) {}
    std::size_t achieved() const { return achieved_; }

private:
    std::size_t achieved_;
};

// Block error estimate for SC decoding under a permutation:
// 1 - prod_{i in I} (1 - P_hat[pi(i)]), evaluated in the log domain.
double perm_bler_estimate(const ReliabilityProfile& profile, const PolarCode& code,
                          const BitPermutation& perm);

// Product lower bound over the per-permutation estimates.
double list_bler_lower_bound(const std::vector<double>& estimates);

struct CandidateScope {
    enum class Kind { Full, FixedLayers, RandomSample };
    Kind kind = Kind::Full;
    std::vector<std::size_t> fixed_layers;   // FixedLayers
    std::size_t sample_count = 0;            // RandomSample
    std::uint64_t sample_seed = 1;

    static CandidateScope full();
    static CandidateScope fixed(std::vector<std::size_t> layers);
    static CandidateScope random(std::size_t count, std::uint64_t seed = 1);
};

struct PermSetOptions {
    std::size_t list_size = 1;
    std::size_t min_dist = 0;
    bool seed_identity = true;
};

// Scores candidates with the block error estimate, sorts ascending
// (ties lexicographic) and greedily keeps candidates whose pairwise
// layer Hamming distance stays >= min_dist. When every candidate ties
// (permutation-invariant codes) the selection instead maximizes the
// minimum pairwise distance greedily after the identity.
PermutationSet optimize_perm_set(const ReliabilityProfile& profile,
                                 const PolarCode& code, const PermSetOptions& options,
                                 const CandidateScope& scope);

// Disjoint index groups closed under every layers permutation fixing
// fixed_layers pointwise: two indices share a group iff they agree on
// the fixed digits and have equal free-digit weight. Groups are ordered
// by smallest member.
struct OrbitSplit {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> fixed_layers;
};

OrbitSplit compute_orbits(std::size_t m, const std::vector<std::size_t>& fixed_layers);

// All layers permutations fixing fixed_layers pointwise; enumeration is
// guarded to at most 8 free layers.
std::vector<LayerPermutation> enumerate_available_perms(
    std::size_t m, const std::vector<std::size_t>& fixed_layers);

// Frozen set built from whole orbit groups (knapsack with weight = group
// size, value = worst error probability in the group). If the target
// size cannot be hit exactly, the last frozen group is partially
// unfrozen, keeping its worst indices frozen; the result is then not
// invariant under all available permutations.
struct JointConstruction {
    PolarCode code;
    OrbitSplit orbits;
    bool orbit_exact = false;
};

JointConstruction build_frozen_joint(std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& fixed_layers,
                                     const ReliabilityProfile& profile);

} // namespace polar
