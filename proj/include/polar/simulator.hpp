#pragma once

#include "polar/channel.hpp"
#include "polar/code.hpp"
#include "polar/perm_decoder.hpp"
#include "polar/scl_decoder.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polar {

struct BlerPoint {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
};

struct StopRule {
    std::uint64_t max_frames = 1;
    std::uint64_t target_errors = 0;   // 0 disables the error target
};

struct DecoderConfig {
    enum class Kind { Sc, Scl, Perm };
    Kind kind = Kind::Sc;
    std::size_t list_size = 1;                  // Scl
    std::optional<PermutationSet> perms;        // Perm

    static DecoderConfig sc();
    static DecoderConfig scl(std::size_t list_size);
    static DecoderConfig perm(PermutationSet pset);
};

// One Monte Carlo point. Frames are keyed by (seed, point_index, frame)
// through the counter-based stream, and stopping is resolved on frame
// index order, so any worker count produces the identical result.
BlerPoint run_bler_point(const PolarCode& code, const DecoderConfig& decoder,
                         const ChannelConfig& channel, const StopRule& stop,
                         std::uint64_t seed, std::uint32_t point_index = 0,
                         int threads = 1);

// Plain sequential reference for the OpenMP path above; kept for testing
// and benchmarks.
BlerPoint run_bler_point_serial(const PolarCode& code, const DecoderConfig& decoder,
                                const ChannelConfig& channel, const StopRule& stop,
                                std::uint64_t seed, std::uint32_t point_index = 0);

std::vector<BlerPoint> run_sweep(const PolarCode& code, const DecoderConfig& decoder,
                                 double snr_start, double snr_stop, double snr_step,
                                 SnrConvention convention, const StopRule& stop,
                                 std::uint64_t seed, int threads = 1);

// Exact header: snr_db,frames,block_errors,bler
std::string to_csv(const std::vector<BlerPoint>& points);

} // namespace polar
