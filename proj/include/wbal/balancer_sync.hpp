#pragma once

#include "wbal/digraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wbal {

// Weights summing to in_sum split as evenly as possible over `out_degree` slots;
// slot priority[i] is the i-th to receive the remainder. Result is indexed by slot.
std::vector<Weight> allocate_weights(Weight in_sum, std::size_t out_degree,
                                     const std::vector<std::size_t>& priority);

struct SyncState {
    WeightAssignment weights;
    // Per node: its out-edge ids in priority order.
    std::vector<std::vector<EdgeId>> orderings;
    std::int64_t round = 0;
};

// Seeded uniform permutation of each node's out-edges.
std::vector<std::vector<EdgeId>> random_out_orderings(const Digraph& g, std::uint64_t seed);

SyncState init_sync(const Digraph& g, Weight init_weight, std::uint64_t ordering_seed);

SyncState step_sync(const Digraph& g, const SyncState& s);
SyncState step_async(const Digraph& g, const SyncState& s, NodeId active);

struct SyncRunResult {
    WeightAssignment weights;
    std::int64_t rounds = 0;
    bool converged = false;
    std::vector<Weight> epsilon;                 // before each round, plus the final state
    std::vector<std::vector<Weight>> imbalance;  // filled when record_trace
    std::vector<WeightAssignment> weight_trace;  // filled when record_trace
};

// m^2 * eps / 2.
std::int64_t sync_round_budget(const Digraph& g, Weight eps0);

// Default budget is sync_round_budget of the initial state. Throws Diverged when hit,
// unless throw_on_budget is false.
SyncRunResult run_sync(const Digraph& g, SyncState s, std::optional<std::int64_t> max_rounds = std::nullopt,
                       bool record_trace = false, bool throw_on_budget = true);

} // namespace wbal
