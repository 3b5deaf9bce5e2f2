#include "polar/optimizer.hpp"

#include "polar/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace polar {

double perm_bler_estimate(const ReliabilityProfile& profile, const PolarCode& code,
                          const BitPermutation& perm) {
    if (profile.p_hat.size() != code.length() || perm.size() != code.length()) {
        throw std::invalid_argument("perm_bler_estimate: size mismatch");
    }
    double log_success = 0.0;
    for (std::size_t i : code.info_indices()) {
        log_success += std::log1p(-profile.p_hat[perm(i)]);
    }
    return -std::expm1(log_success);
}

double list_bler_lower_bound(const std::vector<double>& estimates) {
    double product = 1.0;
    for (double p : estimates) {
        product *= p;
    }
    return product;
}

CandidateScope CandidateScope::full() {
    return CandidateScope{Kind::Full, {}, 0, 1};
}

CandidateScope CandidateScope::fixed(std::vector<std::size_t> layers) {
    return CandidateScope{Kind::FixedLayers, std::move(layers), 0, 1};
}

CandidateScope CandidateScope::random(std::size_t count, std::uint64_t seed) {
    return CandidateScope{Kind::RandomSample, {}, count, seed};
}

namespace {

std::vector<LayerPermutation> all_layer_perms(std::size_t m) {
    if (m > 10) {
        throw std::invalid_argument("full candidate scope is limited to m <= 10");
    }
    std::vector<std::size_t> map(m);
    std::iota(map.begin(), map.end(), std::size_t{0});
    std::vector<LayerPermutation> out;
    do {
        out.emplace_back(map);
    } while (std::next_permutation(map.begin(), map.end()));
    return out;
}

std::vector<LayerPermutation> sample_layer_perms(std::size_t m, std::size_t count,
                                                 std::uint64_t seed) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<LayerPermutation> out;
    const std::vector<std::size_t> identity = [&] {
        std::vector<std::size_t> v(m);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return v;
    }();
    std::uint64_t draw = 0;
    while (out.size() < count) {
        FrameRng rng(seed, 0, draw++);
        std::vector<std::size_t> map = identity;
        for (std::size_t t = m; t > 1; --t) {
            const auto j = static_cast<std::size_t>(rng.next_uniform() * t);
            std::swap(map[t - 1], map[std::min(j, t - 1)]);
        }
        if (map == identity || !seen.insert(map).second) {
            continue;
        }
        out.emplace_back(std::move(map));
    }
    return out;
}

std::vector<LayerPermutation> candidates_for(const CandidateScope& scope,
                                             std::size_t m) {
    switch (scope.kind) {
    case CandidateScope::Kind::Full:
        return all_layer_perms(m);
    case CandidateScope::Kind::FixedLayers:
        return enumerate_available_perms(m, scope.fixed_layers);
    case CandidateScope::Kind::RandomSample:
        return sample_layer_perms(m, scope.sample_count, scope.sample_seed);
    }
    throw std::invalid_argument("unknown candidate scope");
}

bool far_enough(const LayerPermutation& candidate,
                const std::vector<LayerPermutation>& picked, std::size_t min_dist) {
    return std::all_of(picked.begin(), picked.end(), [&](const LayerPermutation& p) {
        return layer_hamming_distance(candidate, p) >= min_dist;
    });
}

PermutationSet select_maximin(const std::vector<LayerPermutation>& sorted,
                              std::size_t m, const PermSetOptions& options) {
    std::vector<LayerPermutation> picked{LayerPermutation::identity(m)};
    while (picked.size() < options.list_size) {
        const LayerPermutation* best = nullptr;
        std::size_t best_dist = 0;
        for (const auto& candidate : sorted) {
            if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) {
                continue;
            }
            std::size_t dist = m + 1;
            for (const auto& p : picked) {
                dist = std::min(dist, layer_hamming_distance(candidate, p));
            }
            if (best == nullptr || dist > best_dist) {
                best = &candidate;
                best_dist = dist;
            }
        }
        if (best == nullptr || best_dist < options.min_dist) {
            throw InfeasibleError(
                "optimize_perm_set: only " + std::to_string(picked.size())
                    + " permutations satisfy the distance constraint",
                picked.size());
        }
        picked.push_back(*best);
    }
    return PermutationSet(std::move(picked));
}

} // namespace

PermutationSet optimize_perm_set(const ReliabilityProfile& profile,
                                 const PolarCode& code, const PermSetOptions& options,
                                 const CandidateScope& scope) {
    if (options.list_size == 0) {
        throw std::invalid_argument("optimize_perm_set: list size must be positive");
    }
    const std::size_t m = code.layer_count();
    std::vector<LayerPermutation> candidates = candidates_for(scope, m);

    std::vector<double> scores(candidates.size());
    const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        scores[static_cast<std::size_t>(i)] = perm_bler_estimate(
            profile, code, layer_to_bit_permutation(candidates[static_cast<std::size_t>(i)]));
    }

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) {
            return scores[a] < scores[b];
        }
        return candidates[a] < candidates[b];
    });
    std::vector<LayerPermutation> sorted;
    sorted.reserve(candidates.size());
    for (std::size_t i : order) {
        sorted.push_back(candidates[i]);
    }

    const auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
    const bool all_tie = !scores.empty() && (*max_it - *min_it) <= 1e-12;
    if (all_tie && options.seed_identity) {
        return select_maximin(sorted, m, options);
    }

    std::vector<LayerPermutation> picked;
    if (options.seed_identity) {
        picked.push_back(LayerPermutation::identity(m));
    }
    for (const auto& candidate : sorted) {
        if (picked.size() >= options.list_size) {
            break;
        }
        if (std::find(picked.begin(), picked.end(), candidate) != picked.end()) {
            continue;
        }
        if (far_enough(candidate, picked, options.min_dist)) {
            picked.push_back(candidate);
        }
    }
    if (picked.size() < options.list_size) {
        throw InfeasibleError(
            "optimize_perm_set: only " + std::to_string(picked.size())
                + " permutations satisfy the distance constraint",
            picked.size());
    }
    return PermutationSet(std::move(picked));
}

OrbitSplit compute_orbits(std::size_t m, const std::vector<std::size_t>& fixed_layers) {
    for (std::size_t t : fixed_layers) {
        if (t >= m) {
            throw std::invalid_argument("compute_orbits: fixed layer out of range");
        }
    }
    std::size_t fixed_mask = 0;
    for (std::size_t t : fixed_layers) {
        fixed_mask |= std::size_t{1} << t;
    }
    const std::size_t n = std::size_t{1} << m;
    // key = (digits at fixed layers, popcount of free digits)
    std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t fixed_digits = i & fixed_mask;
        const int free_weight = std::popcount(i & ~fixed_mask);
        buckets[{fixed_digits, free_weight}].push_back(i);
    }
    OrbitSplit split;
    split.fixed_layers = fixed_layers;
    std::sort(split.fixed_layers.begin(), split.fixed_layers.end());
    for (auto& [key, group] : buckets) {
        split.groups.push_back(std::move(group));
    }
    std::sort(split.groups.begin(), split.groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return split;
}

std::vector<LayerPermutation> enumerate_available_perms(
    std::size_t m, const std::vector<std::size_t>& fixed_layers) {
    std::vector<bool> fixed(m, false);
    for (std::size_t t : fixed_layers) {
        if (t >= m) {
            throw std::invalid_argument("enumerate_available_perms: fixed layer out of range");
        }
        fixed[t] = true;
    }
    std::vector<std::size_t> free_layers;
    for (std::size_t t = 0; t < m; ++t) {
        if (!fixed[t]) {
            free_layers.push_back(t);
        }
    }
    if (free_layers.size() > 8) {
        throw std::invalid_argument("enumerate_available_perms: more than 8 free layers");
    }
    std::vector<std::size_t> arrangement = free_layers;
    std::vector<LayerPermutation> out;
    do {
        std::vector<std::size_t> map(m);
        std::iota(map.begin(), map.end(), std::size_t{0});
        for (std::size_t i = 0; i < free_layers.size(); ++i) {
            map[free_layers[i]] = arrangement[i];
        }
        out.emplace_back(std::move(map));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::sort(out.begin(), out.end());
    return out;
}

JointConstruction build_frozen_joint(std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& fixed_layers,
                                     const ReliabilityProfile& profile) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("build_frozen_joint: length must be a power of two");
    }
    if (k == 0 || k > n) {
        throw std::invalid_argument("build_frozen_joint: dimension must satisfy 0 < k <= n");
    }
    if (profile.p_hat.size() != n) {
        throw std::invalid_argument("build_frozen_joint: profile length mismatch");
    }
    const auto m = static_cast<std::size_t>(std::countr_zero(n));
    OrbitSplit split = compute_orbits(m, fixed_layers);

    std::vector<std::size_t> order(split.groups.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto group_value = [&](std::size_t g) {
        double worst = 0.0;
        for (std::size_t i : split.groups[g]) {
            worst = std::max(worst, profile.p_hat[i]);
        }
        return worst;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = group_value(a);
        const double vb = group_value(b);
        if (va != vb) {
            return va > vb;
        }
        return split.groups[a].front() < split.groups[b].front();
    });

    const std::size_t target = n - k;
    std::vector<std::size_t> frozen;
    std::size_t weight = 0;
    std::size_t last_group = split.groups.size();
    for (std::size_t g : order) {
        if (weight >= target) {
            break;
        }
        frozen.insert(frozen.end(), split.groups[g].begin(), split.groups[g].end());
        weight += split.groups[g].size();
        last_group = g;
    }
    bool exact = (weight == target);
    if (!exact) {
        // partially unfreeze the best-value frozen group: keep only its
        // worst indices so the dimension comes out exactly k
        const auto& group = split.groups[last_group];
        frozen.erase(std::remove_if(frozen.begin(), frozen.end(),
                                    [&](std::size_t i) {
                                        return std::find(group.begin(), group.end(), i)
                                            != group.end();
                                    }),
                     frozen.end());
        const std::size_t refreeze = target - frozen.size();
        std::vector<std::size_t> members = group;
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            if (profile.p_hat[a] != profile.p_hat[b]) {
                return profile.p_hat[a] > profile.p_hat[b];
            }
            return a < b;
        });
        frozen.insert(frozen.end(), members.begin(),
                      members.begin() + static_cast<std::ptrdiff_t>(refreeze));
    }
    return JointConstruction{PolarCode(n, k, std::move(frozen)), std::move(split), exact};
}

} // namespace polar
