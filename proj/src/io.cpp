#include "polar/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polar::io {

const char* const kToolVersion = "1.0.0";

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

} // namespace

PolarCode load_code(const std::filesystem::path& path) {
    const json j = read_json(path);
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto k = j.at("k").get<std::size_t>();
        auto frozen = j.at("frozen").get<std::vector<std::size_t>>();
        return PolarCode(n, k, std::move(frozen));
    } catch (const json::exception& e) {
        throw IoError("bad code file " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError("bad code file " + path.string() + ": " + e.what());
    }
}

void save_code(const std::filesystem::path& path, const PolarCode& code) {
    json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["frozen"] = code.frozen_indices();
    write_text(path, j.dump(2) + "\n");
}

std::vector<LayerPermutation> load_permutations(const std::filesystem::path& path) {
    const json j = read_json(path);
    if (!j.is_array() || j.empty()) {
        throw IoError("permutation file " + path.string() + " must be a non-empty list");
    }
    std::vector<LayerPermutation> perms;
    try {
        for (const auto& entry : j) {
            perms.emplace_back(entry.get<std::vector<std::size_t>>());
        }
    } catch (const json::exception& e) {
        throw IoError("bad permutation file " + path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError("bad permutation file " + path.string() + ": " + e.what());
    }
    return perms;
}

void save_permutations(const std::filesystem::path& path,
                       const std::vector<LayerPermutation>& perms) {
    json j = json::array();
    for (const auto& p : perms) {
        j.push_back(p.map());
    }
    write_text(path, j.dump() + "\n");
}

LlrVector load_llrs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    LlrVector llrs;
    double value = 0.0;
    while (in >> value) {
        llrs.push_back(value);
    }
    if (!in.eof()) {
        throw IoError("malformed LLR file " + path.string());
    }
    if (llrs.empty()) {
        throw IoError("empty LLR file " + path.string());
    }
    return llrs;
}

std::vector<std::size_t> load_sequence(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::size_t> seq;
    long long value = 0;
    while (in >> value) {
        if (value < 0) {
            throw IoError("negative index in sequence file " + path.string());
        }
        seq.push_back(static_cast<std::size_t>(value));
    }
    if (!in.eof()) {
        throw IoError("malformed sequence file " + path.string());
    }
    if (seq.empty()) {
        throw IoError("empty sequence file " + path.string());
    }
    return seq;
}

void save_sequence(const std::filesystem::path& path,
                   const std::vector<std::size_t>& seq) {
    std::ostringstream out;
    for (std::size_t i : seq) {
        out << i << '\n';
    }
    write_text(path, out.str());
}

void save_orbit_report(const std::filesystem::path& path,
                       const JointConstruction& joint,
                       const ReliabilityProfile& profile) {
    json groups = json::array();
    for (const auto& group : joint.orbits.groups) {
        double worst = 0.0;
        for (std::size_t i : group) {
            worst = std::max(worst, profile.p_hat[i]);
        }
        json g;
        g["indices"] = group;
        g["weight"] = group.size();
        g["value"] = worst;
        groups.push_back(std::move(g));
    }
    json j;
    j["fixed_layers"] = joint.orbits.fixed_layers;
    j["orbit_exact"] = joint.orbit_exact;
    j["groups"] = std::move(groups);
    write_text(path, j.dump(2) + "\n");
}

void save_csv(const std::filesystem::path& path, const std::vector<BlerPoint>& points) {
    write_text(path, to_csv(points));
}

void save_manifest(const std::filesystem::path& output_path,
                   const RunManifest& manifest) {
    json params = json::object();
    for (const auto& [key, value] : manifest.parameters) {
        params[key] = value;
    }
    json j;
    j["command"] = manifest.command;
    j["parameters"] = std::move(params);
    j["version"] = manifest.version.empty() ? kToolVersion : manifest.version;
    std::filesystem::path path = output_path;
    path += ".manifest.json";
    write_text(path, j.dump(2) + "\n");
}

} // namespace polar::io
