#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaoa/gm_engine.hpp"
#include "qaoa/hypergraph.hpp"
#include "qaoa/pm_engine.hpp"

namespace qaoa::cli {

// Input file or schema violation, reported with exit code 2.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Problem {
    std::string type;    // maxcut | mis | qubo | ising | hypergraph
    std::string digest;  // FNV-1a 64 of the file bytes
    // Ising form (absent for hypergraph problems).
    std::optional<WeightedHypergraph> graph;
    IsingWeights ising;
    // Cost/phase hypergraph for the Grover mixer engine.
    WeightedHypergraph hyper;
};

struct PmSettings {
    PmParams params;
    MixerAxes axes;
};

struct GmSettings {
    GmParams params;
    ProductStateParams state;
};

std::string fnv1a64_hex(const std::string& bytes);
std::string read_file(const std::string& path);
nlohmann::json parse_json(const std::string& text, const std::string& what);

Problem load_problem(const std::string& path);
Problem problem_from_json(const nlohmann::json& j, const std::string& digest);

PmSettings pm_settings_from_json(const nlohmann::json& j, const Problem& problem);
// state_mode: "s" ignores lambda/omega, "omega" requires them.
GmSettings gm_settings_from_json(const nlohmann::json& j, const Problem& problem,
                                 const std::string& state_mode);

// Per-edge gamma for the hypergraph; a trailing ∅ edge may be omitted (it only adds a
// global phase) and then receives 0.
std::vector<double> expand_gm_gamma(const nlohmann::json& j, const WeightedHypergraph& g,
                                    const std::string& field);

}  // namespace qaoa::cli
