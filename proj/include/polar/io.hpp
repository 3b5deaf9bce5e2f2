#pragma once

#include "polar/code.hpp"
#include "polar/optimizer.hpp"
#include "polar/permutation.hpp"
#include "polar/simulator.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace polar::io {

// Raised for unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Code specification: JSON object with fields n, k, frozen (ascending).
PolarCode load_code(const std::filesystem::path& path);
void save_code(const std::filesystem::path& path, const PolarCode& code);

// Permutation file: JSON list of layers permutations, each a list of m
// integers.
std::vector<LayerPermutation> load_permutations(const std::filesystem::path& path);
void save_permutations(const std::filesystem::path& path,
                       const std::vector<LayerPermutation>& perms);

// Whitespace-separated decimal LLRs.
LlrVector load_llrs(const std::filesystem::path& path);

// One integer index per line, ascending reliability.
std::vector<std::size_t> load_sequence(const std::filesystem::path& path);
void save_sequence(const std::filesystem::path& path,
                   const std::vector<std::size_t>& seq);

void save_orbit_report(const std::filesystem::path& path,
                       const JointConstruction& joint,
                       const ReliabilityProfile& profile);

void save_csv(const std::filesystem::path& path, const std::vector<BlerPoint>& points);

// Every command writes a manifest next to its output so the run can be
// reproduced from the recorded parameters alone.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string version;
};

void save_manifest(const std::filesystem::path& output_path, const RunManifest& manifest);

extern const char* const kToolVersion;

} // namespace polar::io
