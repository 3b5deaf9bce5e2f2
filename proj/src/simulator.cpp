#include "polar/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace polar {

DecoderConfig DecoderConfig::sc() {
    return DecoderConfig{Kind::Sc, 1, std::nullopt};
}

DecoderConfig DecoderConfig::scl(std::size_t list_size) {
    return DecoderConfig{Kind::Scl, list_size, std::nullopt};
}

DecoderConfig DecoderConfig::perm(PermutationSet pset) {
    return DecoderConfig{Kind::Perm, pset.size(), std::move(pset)};
}

namespace {

// Per-worker decoding state, reused across frames.
class FrameWorker {
public:
    FrameWorker(const PolarCode& code, const DecoderConfig& config)
        : code_(code), config_(config) {
        switch (config.kind) {
        case DecoderConfig::Kind::Sc:
            sc_ = std::make_unique<ScDecoder>(code.length());
            break;
        case DecoderConfig::Kind::Scl:
            scl_ = std::make_unique<SclDecoder>(code.length(), config.list_size);
            break;
        case DecoderConfig::Kind::Perm:
            perm_ = std::make_unique<PermDecoder>(code.length(), *config.perms);
            break;
        }
    }

    // true iff the decoded information bits differ from the transmitted ones
    bool frame_errored(const ChannelConfig& channel, std::uint64_t seed,
                       std::uint32_t point_index, std::uint64_t frame) {
        FrameRng rng(seed, point_index, frame);
        Bits info(code_.dimension());
        for (auto& bit : info) {
            bit = static_cast<std::uint8_t>(rng.next_bit());
        }
        const Bits codeword = encode(info, code_);
        const LlrVector llrs = modulate_and_transmit(codeword, channel.sigma, rng);
        DecodeResult result;
        switch (config_.kind) {
        case DecoderConfig::Kind::Sc:
            result = sc_->decode(llrs, code_);
            break;
        case DecoderConfig::Kind::Scl:
            result = scl_->decode(llrs, code_);
            break;
        case DecoderConfig::Kind::Perm:
            result = perm_->decode(llrs, code_);
            break;
        }
        return extract_info_bits(result.u_bits, code_) != info;
    }

private:
    const PolarCode& code_;
    const DecoderConfig& config_;
    std::unique_ptr<ScDecoder> sc_;
    std::unique_ptr<SclDecoder> scl_;
    std::unique_ptr<PermDecoder> perm_;
};

void validate(const PolarCode& code, const DecoderConfig& decoder,
              const StopRule& stop) {
    if (stop.max_frames == 0) {
        throw std::invalid_argument("run_bler_point: max_frames must be positive");
    }
    if (decoder.kind == DecoderConfig::Kind::Scl && decoder.list_size == 0) {
        throw std::invalid_argument("run_bler_point: list size must be positive");
    }
    if (decoder.kind == DecoderConfig::Kind::Perm) {
        if (!decoder.perms) {
            throw std::invalid_argument("run_bler_point: permutation set missing");
        }
        if ((std::size_t{1} << decoder.perms->layer_count()) != code.length()) {
            throw std::invalid_argument(
                "run_bler_point: permutation set does not match the code length");
        }
    }
}

BlerPoint finish(double snr_db, std::uint64_t frames, std::uint64_t errors) {
    BlerPoint point;
    point.snr_db = snr_db;
    point.frames = frames;
    point.block_errors = errors;
    point.bler = static_cast<double>(errors) / static_cast<double>(frames);
    return point;
}

} // namespace

BlerPoint run_bler_point_serial(const PolarCode& code, const DecoderConfig& decoder,
                                const ChannelConfig& channel, const StopRule& stop,
                                std::uint64_t seed, std::uint32_t point_index) {
    validate(code, decoder, stop);
    FrameWorker worker(code, decoder);
    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    while (frames < stop.max_frames) {
        errors += worker.frame_errored(channel, seed, point_index, frames) ? 1 : 0;
        ++frames;
        if (stop.target_errors > 0 && errors >= stop.target_errors) {
            break;
        }
    }
    return finish(channel.snr_db, frames, errors);
}

BlerPoint run_bler_point(const PolarCode& code, const DecoderConfig& decoder,
                         const ChannelConfig& channel, const StopRule& stop,
                         std::uint64_t seed, std::uint32_t point_index, int threads) {
    validate(code, decoder, stop);
    const int workers = threads > 0 ? threads : 1;
    const std::uint64_t batch =
        std::min<std::uint64_t>(stop.max_frames, 256 * static_cast<std::uint64_t>(workers));
    std::vector<std::uint8_t> flags(batch);

    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    std::uint64_t start = 0;
    while (start < stop.max_frames) {
        const std::uint64_t count = std::min(batch, stop.max_frames - start);
#pragma omp parallel num_threads(workers)
        {
            FrameWorker worker(code, decoder);
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
                flags[static_cast<std::size_t>(i)] = worker.frame_errored(
                    channel, seed, point_index, start + static_cast<std::uint64_t>(i));
            }
        }
        // stopping is resolved by scanning in frame order, so the result
        // matches the serial reference for every worker count
        bool done = false;
        for (std::uint64_t i = 0; i < count; ++i) {
            errors += flags[i];
            ++frames;
            if (stop.target_errors > 0 && errors >= stop.target_errors) {
                done = true;
                break;
            }
        }
        if (done) {
            break;
        }
        start += count;
    }
    return finish(channel.snr_db, frames, errors);
}

std::vector<BlerPoint> run_sweep(const PolarCode& code, const DecoderConfig& decoder,
                                 double snr_start, double snr_stop, double snr_step,
                                 SnrConvention convention, const StopRule& stop,
                                 std::uint64_t seed, int threads) {
    if (snr_step <= 0.0) {
        throw std::invalid_argument("run_sweep: snr_step must be positive");
    }
    if (snr_stop < snr_start) {
        throw std::invalid_argument("run_sweep: empty SNR range");
    }
    const double rate =
        static_cast<double>(code.dimension()) / static_cast<double>(code.length());
    std::vector<BlerPoint> points;
    std::uint32_t index = 0;
    for (double snr = snr_start; snr <= snr_stop + 1e-9; snr += snr_step) {
        const auto channel = ChannelConfig::make(snr, convention, rate);
        points.push_back(
            run_bler_point(code, decoder, channel, stop, seed, index, threads));
        ++index;
    }
    return points;
}

std::string to_csv(const std::vector<BlerPoint>& points) {
    std::string out = "snr_db,frames,block_errors,bler\n";
    char line[128];
    for (const auto& p : points) {
        std::snprintf(line, sizeof(line), "%.6f,%llu,%llu,%.9g\n", p.snr_db,
                      static_cast<unsigned long long>(p.frames),
                      static_cast<unsigned long long>(p.block_errors), p.bler);
        out += line;
    }
    return out;
}

} // namespace polar
