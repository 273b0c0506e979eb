#pragma once

#include "wbal/balancer_capacity.hpp"
#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"
#include "wbal/netsim.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wbal {

enum class UnreliableAlgorithm { Alg6, Alg7, Alg8 };

// weights[e] is held by the tail (the assigner), perceived[e] by the head.
struct PercState {
    WeightAssignment weights;
    WeightAssignment perceived;
    std::vector<IncidentOrder> orders;
    std::vector<std::size_t> cursor;
    std::int64_t round = 0;
    std::uint64_t clamp_engaged = 0;
    // Alg. 7: nodes that received a change during the current round's receive step.
    std::vector<bool> triggered;
};

PercState init_unreliable(const Digraph& g, const CapacityBounds& b, std::vector<IncidentOrder> orders,
                          std::optional<WeightAssignment> initial = std::nullopt);
PercState init_unreliable(const Digraph& g, const CapacityBounds& b, std::uint64_t ordering_seed);

// Sum of change amounts. Throws WrongKind.
Weight aggregate_delayed_changes(const std::vector<Message>& arrivals);

// x^(p): perceived in-weights minus own out-weights.
std::vector<Weight> perceived_imbalances(const Digraph& g, const PercState& s);

void step_alg6(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric);

// Alg. 7 split at its receive step so traces can observe the post-receive state.
void alg7_receive(const Digraph& g, PercState& s, Fabric& fabric);
void alg7_act(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric);
void step_alg7(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric);

// Fabric sub-rounds 2k (desired weights, head to tail) and 2k+1 (new weights, tail to head).
void step_alg8(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric);

struct UnreliableRunOptions {
    std::int64_t max_rounds = 100000;
    bool record_imbalance = false;
    bool record_weights = false;
};

struct UnreliableRunResult {
    WeightAssignment weights;
    WeightAssignment perceived;
    std::int64_t rounds = 0;
    bool converged = false;
    std::vector<Weight> epsilon;
    std::vector<Weight> epsilon_perceived;
    std::vector<std::vector<Weight>> imbalance;
    std::vector<WeightAssignment> weight_trace;
    std::vector<WeightAssignment> perceived_trace;
    std::uint64_t messages_sent = 0;
    std::uint64_t clamp_engaged = 0;
};

// Converged: eps = 0, perceived equals owned everywhere, fabric empty.
// Stops unconverged at max_rounds.
UnreliableRunResult run_unreliable(const Digraph& g, const CapacityBounds& b, PercState s, Fabric& fabric,
                                   UnreliableAlgorithm alg, const UnreliableRunOptions& opt);

} // namespace wbal
