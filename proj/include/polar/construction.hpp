#pragma once

#include "polar/channel.hpp"
#include "polar/code.hpp"

#include <cstddef>
#include <vector>

namespace polar {

// Per-subchannel bit error probabilities from Gaussian-approximation
// density evolution for the BI-AWGN channel.
struct ReliabilityProfile {
    std::vector<double> p_hat;   // each in [0, 0.5]
    double design_sigma = 0.0;
};

ReliabilityProfile ga_density_evolution(std::size_t m, double sigma);

// Freezes the n-k indices with the largest estimated error probability;
// ties freeze the lower index first. The design SNR is converted to a
// noise level with the simulator's convention at rate k/n.
PolarCode build_frozen_ga(std::size_t n, std::size_t k, double design_snr_db,
                          SnrConvention convention = SnrConvention::EbN0);

// seq lists all n indices in ascending reliability; F = first n-k entries.
PolarCode build_frozen_from_sequence(std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& seq);

// Subchannel indices of ascending reliability under the GA profile,
// usable as a sequence file's contents.
std::vector<std::size_t> ga_reliability_order(const ReliabilityProfile& profile);

} // namespace polar
