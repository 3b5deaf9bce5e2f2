// Acceptance suite: each criterion prints one PASS/FAIL line; the exit
// code is nonzero when the requested criterion fails. Run as
//   polar_acceptance <criterion 1..8>   or without arguments for all.

#include "polar/construction.hpp"
#include "polar/io.hpp"
#include "polar/optimizer.hpp"
#include "polar/perm_decoder.hpp"
#include "polar/scl_decoder.hpp"
#include "polar/simulator.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>

using namespace polar;

namespace {

// Calibrated reproduction setup: Eb/N0 axis, GA construction at 2.0 dB
// design SNR (the design sweep {1,2,3} dB is documented in the README;
// 2.0 dB matches the reference list decoder curve best).
constexpr double kDesignSnrDb = 2.0;
constexpr SnrConvention kConvention = SnrConvention::EbN0;
constexpr std::uint64_t kSeed = 20240901;
constexpr int kThreads = 2;

bool g_all_pass = true;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d %s: %s\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    g_all_pass = g_all_pass && pass;
}

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

// Ascending sweep that stops once the curve drops below floor_bler or a
// point cannot reach the error target within its frame budget.
std::vector<BlerPoint> sweep_down_to(const PolarCode& code,
                                     const DecoderConfig& decoder, double snr_start,
                                     double snr_step, double floor_bler,
                                     const StopRule& stop, std::uint64_t seed) {
    std::vector<BlerPoint> points;
    std::uint32_t index = 0;
    const double rate =
        static_cast<double>(code.dimension()) / static_cast<double>(code.length());
    for (double snr = snr_start; snr < snr_start + 12.0; snr += snr_step, ++index) {
        const auto channel = ChannelConfig::make(snr, kConvention, rate);
        const auto point =
            run_bler_point(code, decoder, channel, stop, seed, index, kThreads);
        if (stop.target_errors > 0 && point.block_errors < stop.target_errors) {
            break;   // budget exhausted; the point is below the resolvable range
        }
        points.push_back(point);
        std::printf("    snr=%.2f frames=%llu errors=%llu bler=%.3e\n", point.snr_db,
                    static_cast<unsigned long long>(point.frames),
                    static_cast<unsigned long long>(point.block_errors), point.bler);
        std::fflush(stdout);
        if (point.bler < floor_bler) {
            break;
        }
    }
    return points;
}

// SNR at which the curve crosses the target, log-linear between the
// bracketing measurements.
double snr_at_bler(const std::vector<BlerPoint>& points, double target) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1].bler >= target && points[i].bler <= target) {
            const double x1 = points[i - 1].snr_db;
            const double x2 = points[i].snr_db;
            const double l1 = std::log(points[i - 1].bler);
            const double l2 = std::log(points[i].bler);
            return x1 + (x2 - x1) * (std::log(target) - l1) / (l2 - l1);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

const LlrVector kFig3Llrs{-3.42, 2.97, 3.16, 1.45, 1.01, 0.32, 2.00, -6.12};

bool criterion1() {
    const PolarCode code(8, 4, {0, 1, 2, 4});
    ScDecoder sc(8);
    const auto plain = sc.decode(kFig3Llrs, code);
    const double first_info_llr = sc.decision_llrs()[3];
    const bool llr_ok = std::fabs(first_info_llr - (-0.14)) <= 0.005;
    const bool errs = plain.u_bits[3] == 1;

    const PermutationSet pset({LayerPermutation::identity(3), LayerPermutation({0, 2, 1})});
    const auto decoded = perm_decode(kFig3Llrs, code, pset);
    const bool corrected = decoded.codeword == encode({0, 1, 1, 1}, code);

    const bool pass = llr_ok && errs && corrected;
    report(1, pass,
           fmt("first info decision LLR %.4f (want -0.14 +/- 0.005), plain SC errs=%d, "
               "permutation decode recovers encode([0,1,1,1])=%d",
               first_info_llr, errs ? 1 : 0, corrected ? 1 : 0));
    return pass;
}

bool criterion2() {
    const auto split = compute_orbits(5, {0, 1});
    const std::set<std::set<std::size_t>> expected{
        {31}, {15, 23, 27}, {29}, {30}, {7, 11, 19}, {28}, {13, 21, 25},
        {14, 22, 26}, {3}, {12, 20, 24}, {5, 9, 17}, {6, 10, 18}, {4, 8, 16},
        {1}, {2}, {0}};
    std::set<std::set<std::size_t>> got;
    for (const auto& group : split.groups) {
        got.insert(std::set<std::size_t>(group.begin(), group.end()));
    }
    const bool pass = (got == expected) && split.groups.size() == 16;
    report(2, pass, fmt("splitting of the 32 indices gives %zu groups, match=%d",
                        split.groups.size(), got == expected ? 1 : 0));
    return pass;
}

bool criterion3() {
    const auto perms = enumerate_available_perms(9, {0, 1, 2, 3});
    const bool count_ok = perms.size() == 120;

    const double sigma = snr_to_sigma(kDesignSnrDb, kConvention, 0.5);
    const auto joint = build_frozen_joint(512, 256, {0, 1, 2, 3},
                                          ga_density_evolution(9, sigma));
    bool preserved = joint.orbit_exact;
    const std::set<std::size_t> frozen(joint.code.frozen_indices().begin(),
                                       joint.code.frozen_indices().end());
    for (const auto& pl : perms) {
        const auto pi = layer_to_bit_permutation(pl);
        std::set<std::size_t> mapped;
        for (std::size_t i : frozen) {
            mapped.insert(pi(i));
        }
        preserved = preserved && (mapped == frozen);
    }
    const bool pass = count_ok && preserved;
    report(3, pass,
           fmt("%zu available permutations (want 120); joint (512,256) orbit-exact "
               "and frozen set preserved by all=%d",
               perms.size(), preserved ? 1 : 0));
    return pass;
}

bool criterion4() {
    const std::size_t n = 256, k = 128;
    const auto code = build_frozen_ga(n, k, kDesignSnrDb, kConvention);
    const double sigma = snr_to_sigma(kDesignSnrDb, kConvention, 0.5);
    const auto profile = ga_density_evolution(8, sigma);

    PermSetOptions dist5{16, 5, true};
    PermSetOptions dist0{16, 0, true};
    const auto set5 = optimize_perm_set(profile, code, dist5, CandidateScope::full());
    const auto set0 = optimize_perm_set(profile, code, dist0, CandidateScope::full());
    const auto random_set =
        optimize_perm_set(profile, code, dist0, CandidateScope::random(15, 1));

    const StopRule stop{600000, 200};
    const double floor = 8e-4;   // the deepest crossing measured is 1e-3
    std::puts("  [SCL-16]");
    const auto scl = sweep_down_to(code, DecoderConfig::scl(16), 1.0, 0.25, floor,
                                   stop, kSeed + 1);
    std::puts("  [perm dist>=5]");
    const auto perm5 = sweep_down_to(code, DecoderConfig::perm(set5), 1.0, 0.25,
                                     floor, stop, kSeed + 2);
    std::puts("  [perm dist=0]");
    const auto perm0 = sweep_down_to(code, DecoderConfig::perm(set0), 1.0, 0.25,
                                     floor, stop, kSeed + 3);
    std::puts("  [perm random]");
    const auto permr = sweep_down_to(code, DecoderConfig::perm(random_set), 1.0,
                                     0.25, floor, stop, kSeed + 4);

    const double scl2 = snr_at_bler(scl, 1e-2);
    const double scl3 = snr_at_bler(scl, 1e-3);
    const double p5_2 = snr_at_bler(perm5, 1e-2);
    const double p5_3 = snr_at_bler(perm5, 1e-3);
    const double p0_3 = snr_at_bler(perm0, 1e-3);
    const double pr_3 = snr_at_bler(permr, 1e-3);

    const double gap2 = p5_2 - scl2;
    const double gap3 = p5_3 - scl3;
    const double adv0 = p0_3 - p5_3;
    const double advr = pr_3 - p5_3;
    const bool pass = (gap2 <= 0.35) && (gap3 <= 0.35) && (adv0 >= 0.3) && (advr >= 0.3);
    report(4, pass,
           fmt("dist5 vs SCL gap %.3f dB @1e-2 and %.3f dB @1e-3 (limit 0.35); dist0 "
               "worse by %.3f dB and random by %.3f dB @1e-3 (need >= 0.3)",
               gap2, gap3, adv0, advr));
    return pass;
}

bool criterion5() {
    const double sigma = snr_to_sigma(kDesignSnrDb, kConvention, 0.5);
    const auto profile = ga_density_evolution(9, sigma);
    const auto joint = build_frozen_joint(512, 256, {0, 1, 2, 3}, profile);
    if (!joint.orbit_exact) {
        report(5, false, "joint construction is not orbit-exact");
        return false;
    }

    PermSetOptions options{16, 0, true};
    const auto pset = optimize_perm_set(profile, joint.code, options,
                                        CandidateScope::fixed({0, 1, 2, 3}));

    const StopRule stop{120000, 200};
    const double floor = 4e-3;
    std::puts("  [joint SCL-16]");
    const auto scl = sweep_down_to(joint.code, DecoderConfig::scl(16), 1.0, 0.25,
                                   floor, stop, kSeed + 5);
    std::puts("  [joint perm-16]");
    const auto perm = sweep_down_to(joint.code, DecoderConfig::perm(pset), 1.0,
                                    0.25, floor, stop, kSeed + 6);

    const double scl2 = snr_at_bler(scl, 1e-2);
    const double perm2 = snr_at_bler(perm, 1e-2);
    const double gap = std::fabs(perm2 - scl2);
    const bool pass = gap <= 0.15;
    report(5, pass,
           fmt("joint (512,256): |perm - SCL| gap %.3f dB @1e-2 (limit 0.15; SCL %.3f, "
               "perm %.3f)",
               gap, scl2, perm2));
    return pass;
}

bool criterion6() {
    testutil::Rng rng(60001);
    bool pass = true;

    // list size 1 degenerates to SC, identity permutation set degenerates to SC
    {
        ScDecoder sc(16);
        SclDecoder scl(16, 1);
        PermDecoder perm(16, PermutationSet({LayerPermutation::identity(4)}));
        for (int i = 0; i < 1000 && pass; ++i) {
            const PolarCode code = rng.code(16, 9);
            const auto llrs = rng.llrs(16);
            const auto a = sc.decode(llrs, code);
            const auto b = scl.decode(llrs, code);
            const auto c = perm.decode(llrs, code);
            pass = pass && a.u_bits == b.u_bits && a.metric == b.metric
                && a.u_bits == c.u_bits && a.metric == c.metric
                && a.codeword == b.codeword && a.codeword == c.codeword;
        }
    }
    const bool equivalences = pass;

    // full-list decoding is exhaustive maximum-metric decoding for n <= 16
    bool brute_ok = true;
    {
        SclDecoder scl8(8, 16);
        for (int i = 0; i < 150 && brute_ok; ++i) {
            const PolarCode code = rng.code(8, 4);
            const auto llrs = rng.llrs(8);
            const auto got = scl8.decode(llrs, code);
            const auto best = oracle::brute_force_max_metric(llrs, code);
            brute_ok = got.u_bits == best.u_bits
                && std::fabs(got.metric - best.metric) < 1e-12;
        }
        SclDecoder scl16(16, 32);
        for (int i = 0; i < 30 && brute_ok; ++i) {
            const PolarCode code = rng.code(16, 5);
            const auto llrs = rng.llrs(16);
            const auto got = scl16.decode(llrs, code);
            const auto best = oracle::brute_force_max_metric(llrs, code);
            brute_ok = got.u_bits == best.u_bits
                && std::fabs(got.metric - best.metric) < 1e-12;
        }
    }

    // encoder against the dense generator matrix up to n = 32
    bool encoder_ok = true;
    for (std::size_t m = 1; m <= 5 && encoder_ok; ++m) {
        const std::size_t n = std::size_t{1} << m;
        const auto matrix = oracle::dense_generator_matrix(m);
        for (int i = 0; i < 40 && encoder_ok; ++i) {
            const Bits u = rng.bits(n);
            encoder_ok = kronecker_transform(u) == oracle::matrix_encode(u, matrix);
        }
    }

    // encode/permute commutation
    bool commute_ok = true;
    int commute_cases = 0;
    for (std::size_t m = 2; m <= 6; ++m) {
        const std::size_t n = std::size_t{1} << m;
        for (int i = 0; i < 200; ++i, ++commute_cases) {
            const auto pi = layer_to_bit_permutation(LayerPermutation(rng.permutation(m)));
            const Bits u = rng.bits(n);
            commute_ok = commute_ok
                && kronecker_transform(apply_permutation(pi, u))
                    == apply_permutation(pi, kronecker_transform(u));
        }
    }

    pass = equivalences && brute_ok && encoder_ok && commute_ok && commute_cases >= 1000;
    report(6, pass,
           fmt("decoder equivalences=%d, brute-force list parity=%d, matrix encoder "
               "parity=%d, encode/permute commutation (%d cases)=%d",
               equivalences ? 1 : 0, brute_ok ? 1 : 0, encoder_ok ? 1 : 0,
               commute_cases, commute_ok ? 1 : 0));
    return pass;
}

bool criterion7() {
    const auto profile = ga_density_evolution(4, 0.8);
    const auto mc = oracle::mc_density_evolution(4, 0.8, 10000000, kSeed, kThreads);
    double worst = 0.0;
    bool within = true;
    for (std::size_t i = 0; i < 16; ++i) {
        if (mc[i] < 1e-6) {
            continue;
        }
        const double rel = std::fabs(profile.p_hat[i] - mc[i]) / mc[i];
        worst = std::max(worst, rel);
        within = within && rel <= 0.10;
    }

    bool order_ok = true;
    for (std::size_t m = 1; m <= 6 && order_ok; ++m) {
        const std::size_t size = std::size_t{1} << m;
        const auto p = ga_density_evolution(m, 0.8);
        for (std::size_t i = 0; i < size && order_ok; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                if ((i & j) == i && p.p_hat[j] > p.p_hat[i] + 1e-12) {
                    order_ok = false;
                    break;
                }
            }
        }
    }
    const bool pass = within && order_ok;
    report(7, pass,
           fmt("GA vs 1e7-sample min-sum Monte Carlo: worst relative error %.3f "
               "(limit 0.10); polarization partial order m<=6 holds=%d",
               worst, order_ok ? 1 : 0));
    return pass;
}

bool criterion8() {
    const auto code = build_frozen_ga(64, 32, kDesignSnrDb, kConvention);
    std::vector<LayerPermutation> perms{
        LayerPermutation::identity(6), LayerPermutation({5, 4, 3, 2, 1, 0}),
        LayerPermutation({1, 0, 3, 2, 5, 4}), LayerPermutation({2, 3, 4, 5, 0, 1})};
    bool pass = true;
    std::string detail;
    for (const auto& decoder :
         {DecoderConfig::sc(), DecoderConfig::scl(4),
          DecoderConfig::perm(PermutationSet(perms))}) {
        std::string reference;
        for (int threads : {1, 4, 16}) {
            const auto points = run_sweep(code, decoder, 1.0, 2.0, 0.5, kConvention,
                                          StopRule{20000, 100}, kSeed, threads);
            const std::string csv = to_csv(points);
            if (reference.empty()) {
                reference = csv;
            }
            pass = pass && (csv == reference);
        }
    }
    report(8, pass, "CSV output byte-identical under 1, 4 and 16 worker threads");
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    const int which = (argc > 1) ? std::atoi(argv[1]) : 0;
    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    if (which < 0 || which > 8) {
        std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
        return 2;
    }
    if (which == 0) {
        for (auto* criterion : criteria) {
            criterion();
        }
    } else {
        criteria[which - 1]();
    }
    return g_all_pass ? 0 : 1;
}
