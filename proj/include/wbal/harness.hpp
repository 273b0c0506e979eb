#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"
#include "wbal/trace.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wbal {

struct ExperimentConfig {
    std::string algorithm;
    nlohmann::json graph;            // {"file"} | {"generate": {n, p[, seed]}} | {n, edges}
    nlohmann::json bounds;           // {"file"} | {"generate": {kind, slack[, seed]}} | {bounds}; null if absent
    nlohmann::json link;             // {tau_max, drop_prob, seed}
    nlohmann::json orders;           // optional explicit orders
    nlohmann::json initial_weights;  // optional [[from, to, w], ...]
    nlohmann::json scripted_delays;  // optional
    std::vector<std::uint64_t> seeds{0};
    std::optional<std::int64_t> max_rounds;
    std::optional<Weight> init_weight;
    std::vector<Weight> targets;
    std::vector<NodeId> script;
    bool trace_weights = false;
    std::filesystem::path base_dir;  // relative file paths resolve here
};

const std::vector<std::string>& algorithm_ids();
bool is_cap_algorithm(const std::string& id);

// Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

struct RunSummary {
    std::uint64_t seed = 0;
    bool converged = false;
    std::int64_t rounds = 0;
    Weight final_epsilon = 0;
    std::uint64_t weights_digest = 0;
    std::uint64_t messages_sent = 0;
    std::uint64_t clamp_engaged = 0;
    std::optional<bool> feasible; // cap-* only
};

struct RunOutput {
    Digraph graph;
    std::optional<CapacityBounds> bounds;
    Trace trace;
    std::vector<WeightRow> weights;
    RunSummary summary;
};

// FNV-1a over "from:to:w\n" for every edge in canonical order.
std::uint64_t weights_digest(const Digraph& g, const WeightAssignment& w);

RunOutput run_single(const ExperimentConfig& cfg, std::uint64_t seed);

// Writes trace_<seed>.csv, weights_<seed>.csv (if enabled), summary.json, mean_epsilon.csv.
std::vector<RunSummary> run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

nlohmann::json summary_to_json(const RunSummary& s);

} // namespace wbal
