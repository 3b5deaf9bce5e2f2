// Command line front end: code construction, permutation set
// optimization, single-shot decoding and BLER sweeps.
//
// Exit codes: 0 success, 2 usage error, 3 infeasible constraint,
// 4 file I/O error, 1 anything else.

#include "polar/construction.hpp"
#include "polar/io.hpp"
#include "polar/optimizer.hpp"
#include "polar/perm_decoder.hpp"
#include "polar/scl_decoder.hpp"
#include "polar/simulator.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace polar;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

SnrConvention parse_convention(const std::string& name) {
    if (name == "ebno") {
        return SnrConvention::EbN0;
    }
    if (name == "esno") {
        return SnrConvention::EsN0;
    }
    throw CLI::ValidationError("--snr-convention must be ebno or esno");
}

std::vector<std::size_t> parse_layer_list(const std::string& text) {
    std::vector<std::size_t> layers;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        layers.push_back(std::stoul(item));
    }
    return layers;
}

CandidateScope parse_scope(const std::string& text, std::uint64_t seed) {
    if (text == "full") {
        return CandidateScope::full();
    }
    if (text.rfind("fixed:", 0) == 0) {
        return CandidateScope::fixed(parse_layer_list(text.substr(6)));
    }
    if (text.rfind("random:", 0) == 0) {
        return CandidateScope::random(std::stoul(text.substr(7)), seed);
    }
    throw CLI::ValidationError("--scope must be full, fixed:<layers> or random:<count>");
}

void print_bits(const char* label, const Bits& bits) {
    std::printf("%s", label);
    for (auto b : bits) {
        std::printf("%d", static_cast<int>(b));
    }
    std::printf("\n");
}

struct CommonArgs {
    std::string code_file;
    std::string decoder = "sc";
    std::size_t list_size = 1;
    std::string perms_file;
    int threads = 1;
};

DecoderConfig make_decoder_config(const CommonArgs& args) {
    if (args.decoder == "sc") {
        return DecoderConfig::sc();
    }
    if (args.decoder == "scl") {
        return DecoderConfig::scl(args.list_size);
    }
    if (args.decoder == "perm") {
        if (args.perms_file.empty()) {
            throw CLI::ValidationError("--perms is required for the perm decoder");
        }
        return DecoderConfig::perm(PermutationSet(io::load_permutations(args.perms_file)));
    }
    throw CLI::ValidationError("--decoder must be sc, scl or perm");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar code toolkit: permutation decoding, SCL baseline, "
                 "construction and BI-AWGN Monte Carlo"};
    app.require_subcommand(1);

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build a code specification file");
    construct->require_subcommand(1);

    struct {
        std::size_t n = 0, k = 0;
        double design_snr = 2.0;
        std::string convention = "ebno";
        std::string output = "code.json";
        std::string sequence_file;
        std::string fixed_layers = "0,1,2,3";
        std::string orbit_report;
    } cons;

    auto add_common_construct = [&](CLI::App* cmd) {
        cmd->add_option("--n", cons.n, "code length (power of two)")->required();
        cmd->add_option("--k", cons.k, "code dimension")->required();
        cmd->add_option("-o,--output", cons.output, "output code file");
    };

    auto* cons_ga = construct->add_subcommand("ga", "Gaussian-approximation construction");
    add_common_construct(cons_ga);
    cons_ga->add_option("--design-snr", cons.design_snr, "design SNR in dB");
    cons_ga->add_option("--snr-convention", cons.convention, "ebno|esno");

    auto* cons_seq = construct->add_subcommand("sequence", "reliability sequence construction");
    add_common_construct(cons_seq);
    cons_seq->add_option("--file", cons.sequence_file, "sequence file, ascending reliability")
        ->required();

    auto* cons_joint = construct->add_subcommand("joint", "orbit knapsack construction");
    add_common_construct(cons_joint);
    cons_joint->add_option("--design-snr", cons.design_snr, "design SNR in dB");
    cons_joint->add_option("--snr-convention", cons.convention, "ebno|esno");
    cons_joint->add_option("--fixed-layers", cons.fixed_layers, "comma-separated fixed layers");
    cons_joint->add_option("--orbit-report", cons.orbit_report, "orbit split report file");

    // ---- optimize-perms ----
    struct {
        std::string code_file;
        std::size_t list_size = 16;
        std::size_t min_dist = 0;
        double design_snr = 2.0;
        std::string convention = "ebno";
        std::string scope = "full";
        bool no_seed_identity = false;
        std::uint64_t seed = 1;
        std::string output = "perms.json";
    } opt;

    auto* optimize = app.add_subcommand("optimize-perms", "select a permutation set");
    optimize->add_option("--code", opt.code_file, "code specification file")->required();
    optimize->add_option("--list-size", opt.list_size, "number of permutations");
    optimize->add_option("--min-dist", opt.min_dist, "minimum pairwise layer Hamming distance");
    optimize->add_option("--design-snr", opt.design_snr, "design SNR for the reliability profile");
    optimize->add_option("--snr-convention", opt.convention, "ebno|esno");
    optimize->add_option("--scope", opt.scope, "full | fixed:<layers> | random:<count>");
    optimize->add_flag("--no-seed-identity", opt.no_seed_identity,
                       "do not force the identity permutation into the set");
    optimize->add_option("--seed", opt.seed, "sampling seed for random scope");
    optimize->add_option("-o,--output", opt.output, "output permutation file");

    // ---- decode ----
    CommonArgs dec;
    std::string llr_file;
    auto* decode = app.add_subcommand("decode", "decode one LLR vector from a file");
    decode->add_option("--code", dec.code_file, "code specification file")->required();
    decode->add_option("--decoder", dec.decoder, "sc | scl | perm");
    decode->add_option("--list-size", dec.list_size, "list size for scl");
    decode->add_option("--perms", dec.perms_file, "permutation file for perm");
    decode->add_option("--llr-file", llr_file, "whitespace-separated LLRs")->required();
    decode->add_option("--threads", dec.threads, "worker threads");

    // ---- simulate ----
    CommonArgs sim;
    struct {
        double snr_start = 0.0, snr_stop = 3.0, snr_step = 0.25;
        std::uint64_t max_frames = 100000, target_errors = 200, seed = 1;
        std::string convention = "ebno";
        std::string output = "bler.csv";
    } sweep;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BLER sweep, CSV output");
    simulate->add_option("--code", sim.code_file, "code specification file")->required();
    simulate->add_option("--decoder", sim.decoder, "sc | scl | perm");
    simulate->add_option("--list-size", sim.list_size, "list size for scl");
    simulate->add_option("--perms", sim.perms_file, "permutation file for perm");
    simulate->add_option("--snr-start", sweep.snr_start, "first SNR in dB");
    simulate->add_option("--snr-stop", sweep.snr_stop, "last SNR in dB");
    simulate->add_option("--snr-step", sweep.snr_step, "SNR step in dB");
    simulate->add_option("--max-frames", sweep.max_frames, "frame budget per point");
    simulate->add_option("--target-errors", sweep.target_errors,
                         "stop a point after this many block errors (0 = never)");
    simulate->add_option("--seed", sweep.seed, "simulation seed");
    simulate->add_option("--snr-convention", sweep.convention, "ebno|esno");
    simulate->add_option("--threads", sim.threads, "worker threads");
    simulate->add_option("-o,--output", sweep.output, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            io::RunManifest manifest;
            manifest.command = "construct";
            if (cons_ga->parsed()) {
                const auto convention = parse_convention(cons.convention);
                const auto code = build_frozen_ga(cons.n, cons.k, cons.design_snr, convention);
                io::save_code(cons.output, code);
                manifest.parameters = {{"mode", "ga"},
                                       {"n", std::to_string(cons.n)},
                                       {"k", std::to_string(cons.k)},
                                       {"design_snr_db", std::to_string(cons.design_snr)},
                                       {"snr_convention", cons.convention},
                                       {"output", cons.output}};
            } else if (cons_seq->parsed()) {
                const auto seq = io::load_sequence(cons.sequence_file);
                const auto code = build_frozen_from_sequence(cons.n, cons.k, seq);
                io::save_code(cons.output, code);
                manifest.parameters = {{"mode", "sequence"},
                                       {"n", std::to_string(cons.n)},
                                       {"k", std::to_string(cons.k)},
                                       {"sequence_file", cons.sequence_file},
                                       {"output", cons.output}};
            } else {
                const auto convention = parse_convention(cons.convention);
                const auto layers = parse_layer_list(cons.fixed_layers);
                const double rate = static_cast<double>(cons.k) / static_cast<double>(cons.n);
                const auto m = static_cast<std::size_t>(std::countr_zero(cons.n));
                const auto profile =
                    ga_density_evolution(m, snr_to_sigma(cons.design_snr, convention, rate));
                const auto joint = build_frozen_joint(cons.n, cons.k, layers, profile);
                io::save_code(cons.output, joint.code);
                if (!cons.orbit_report.empty()) {
                    io::save_orbit_report(cons.orbit_report, joint, profile);
                }
                std::printf("joint construction: %s\n",
                            joint.orbit_exact ? "orbit-exact" : "relaxed");
                manifest.parameters = {{"mode", "joint"},
                                       {"n", std::to_string(cons.n)},
                                       {"k", std::to_string(cons.k)},
                                       {"design_snr_db", std::to_string(cons.design_snr)},
                                       {"snr_convention", cons.convention},
                                       {"fixed_layers", cons.fixed_layers},
                                       {"orbit_exact", joint.orbit_exact ? "true" : "false"},
                                       {"output", cons.output}};
            }
            io::save_manifest(cons.output, manifest);
        } else if (optimize->parsed()) {
            const auto code = io::load_code(opt.code_file);
            const auto convention = parse_convention(opt.convention);
            const double rate = static_cast<double>(code.dimension())
                / static_cast<double>(code.length());
            const auto profile = ga_density_evolution(
                code.layer_count(), snr_to_sigma(opt.design_snr, convention, rate));
            PermSetOptions options;
            options.list_size = opt.list_size;
            options.min_dist = opt.min_dist;
            options.seed_identity = !opt.no_seed_identity;
            const auto pset = optimize_perm_set(profile, code, options,
                                                parse_scope(opt.scope, opt.seed));
            io::save_permutations(opt.output, pset.layers());

            io::RunManifest manifest;
            manifest.command = "optimize-perms";
            manifest.parameters = {{"code", opt.code_file},
                                   {"list_size", std::to_string(opt.list_size)},
                                   {"min_dist", std::to_string(opt.min_dist)},
                                   {"design_snr_db", std::to_string(opt.design_snr)},
                                   {"snr_convention", opt.convention},
                                   {"scope", opt.scope},
                                   {"seed_identity", options.seed_identity ? "true" : "false"},
                                   {"seed", std::to_string(opt.seed)},
                                   {"output", opt.output}};
            io::save_manifest(opt.output, manifest);
        } else if (decode->parsed()) {
            const auto code = io::load_code(dec.code_file);
            const auto llrs = io::load_llrs(llr_file);
            DecodeResult result;
            if (dec.decoder == "sc") {
                ScDecoder decoder(code.length());
                result = decoder.decode(llrs, code);
            } else if (dec.decoder == "scl") {
                result = scl_decode(llrs, code, dec.list_size);
            } else {
                const auto config = make_decoder_config(dec);
                result = perm_decode(llrs, code, *config.perms, dec.threads);
            }
            print_bits("info_bits ", extract_info_bits(result.u_bits, code));
            print_bits("codeword  ", result.codeword);
            std::printf("metric    %.9g\n", result.metric);
        } else if (simulate->parsed()) {
            const auto code = io::load_code(sim.code_file);
            const auto decoder_config = make_decoder_config(sim);
            const auto convention = parse_convention(sweep.convention);
            const StopRule stop{sweep.max_frames, sweep.target_errors};
            const auto points =
                run_sweep(code, decoder_config, sweep.snr_start, sweep.snr_stop,
                          sweep.snr_step, convention, stop, sweep.seed, sim.threads);
            io::save_csv(sweep.output, points);
            std::fputs(to_csv(points).c_str(), stdout);

            io::RunManifest manifest;
            manifest.command = "simulate";
            manifest.parameters = {{"code", sim.code_file},
                                   {"decoder", sim.decoder},
                                   {"list_size", std::to_string(sim.list_size)},
                                   {"perms", sim.perms_file},
                                   {"snr_start", std::to_string(sweep.snr_start)},
                                   {"snr_stop", std::to_string(sweep.snr_stop)},
                                   {"snr_step", std::to_string(sweep.snr_step)},
                                   {"max_frames", std::to_string(sweep.max_frames)},
                                   {"target_errors", std::to_string(sweep.target_errors)},
                                   {"seed", std::to_string(sweep.seed)},
                                   {"snr_convention", sweep.convention},
                                   {"threads", std::to_string(sim.threads)},
                                   {"output", sweep.output}};
            io::save_manifest(sweep.output, manifest);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const io::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
