// Throughput comparison of the serial reference against the OpenMP
// paths: Monte Carlo points and batched permutation decoding.

#include "polar/construction.hpp"
#include "polar/optimizer.hpp"
#include "polar/simulator.hpp"

#include <omp.h>

#include <cstdio>

using namespace polar;

namespace {

double time_point(const PolarCode& code, const DecoderConfig& decoder,
                  const ChannelConfig& channel, const StopRule& stop, int threads,
                  std::uint64_t* frames) {
    const double start = omp_get_wtime();
    const auto point = (threads == 0)
        ? run_bler_point_serial(code, decoder, channel, stop, 1, 0)
        : run_bler_point(code, decoder, channel, stop, 1, 0, threads);
    *frames = point.frames;
    return omp_get_wtime() - start;
}

void bench_decoder(const char* name, const PolarCode& code,
                   const DecoderConfig& decoder, std::uint64_t frames) {
    const auto channel = ChannelConfig::make(2.0, SnrConvention::EbN0, 0.5);
    const StopRule stop{frames, 0};
    std::uint64_t done = 0;
    const double serial = time_point(code, decoder, channel, stop, 0, &done);
    std::printf("%-28s serial      %8.2f kframe/s\n", name,
                static_cast<double>(done) / serial / 1e3);
    for (int threads : {1, 2, 4}) {
        const double t = time_point(code, decoder, channel, stop, threads, &done);
        std::printf("%-28s %d thread%s   %8.2f kframe/s (x%.2f)\n", name, threads,
                    threads == 1 ? " " : "s", static_cast<double>(done) / t / 1e3,
                    serial / t);
    }
}

} // namespace

int main() {
    std::printf("max OpenMP threads: %d\n\n", omp_get_max_threads());

    const auto code256 = build_frozen_ga(256, 128, 2.0);
    const auto profile256 = ga_density_evolution(8, snr_to_sigma(2.0, SnrConvention::EbN0, 0.5));
    PermSetOptions options{16, 5, true};
    const auto pset = optimize_perm_set(profile256, code256, options, CandidateScope::full());

    bench_decoder("sc n=256", code256, DecoderConfig::sc(), 40000);
    bench_decoder("scl-16 n=256", code256, DecoderConfig::scl(16), 4000);
    bench_decoder("perm-16 n=256", code256, DecoderConfig::perm(pset), 4000);

    const auto code512 = build_frozen_ga(512, 256, 2.0);
    bench_decoder("scl-16 n=512", code512, DecoderConfig::scl(16), 2000);

    return 0;
}
