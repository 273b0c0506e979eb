#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wbal {

struct IncidentEdge {
    EdgeId edge;
    bool outgoing; // the node is the edge's tail

    bool operator==(const IncidentEdge&) const = default;
};

using IncidentOrder = std::vector<IncidentEdge>;

// One seeded permutation over each node's in- and out-edges together.
std::vector<IncidentOrder> random_incident_orders(const Digraph& g, std::uint64_t seed);

// Builds orders from per-node edge-id lists; each must list every incident edge once.
std::vector<IncidentOrder> incident_orders_from_edges(const Digraph& g,
                                                      const std::vector<std::vector<EdgeId>>& lists);

struct WalkResult {
    std::vector<Weight> change; // per order position
    bool saturated = false;     // stopped after a full sweep without an applicable edge
};

// Unit steps along `order` from `cursor`. amount > 0 lowers the node's imbalance by
// amount (out +1 / in -1), amount < 0 raises it. Out-edges are read from out_view,
// in-edges from in_view; every step keeps the value inside [lo, hi].
WalkResult round_robin_walk(const IncidentOrder& order, std::size_t& cursor, Weight amount,
                            std::span<const Weight> out_view, std::span<const Weight> in_view,
                            const CapacityBounds& b);

enum class CapMode { Standard, Enhanced, Naive, Targeted };

struct CapState {
    WeightAssignment weights;
    std::vector<IncidentOrder> orders;
    std::vector<std::size_t> cursor;
    std::int64_t round = 0;
    std::uint64_t clamp_engaged = 0;
};

// Weights start at ceil(l) unless `initial` is given. Throws InfeasibleEdgeInterval.
CapState init_cap(const Digraph& g, const CapacityBounds& b, std::vector<IncidentOrder> orders,
                  std::optional<WeightAssignment> initial = std::nullopt);
CapState init_cap(const Digraph& g, const CapacityBounds& b, std::uint64_t ordering_seed);

// Signed amount node j walks for imbalance x under `mode`; 0 means idle.
Weight walk_amount(Weight x, CapMode mode, Weight target = 0);

WalkResult propose_changes(const Digraph& g, const CapacityBounds& b, CapState& s, NodeId j, Weight x_j,
                           CapMode mode, Weight target = 0);

// Sums both endpoints' changes onto every edge and clamps; counts clamps that bit.
void exchange_and_apply(const Digraph& g, const CapacityBounds& b, CapState& s,
                        const std::vector<WalkResult>& proposals);

// One synchronous round: every node proposes against F[k], then exchange.
void step_cap(const Digraph& g, const CapacityBounds& b, CapState& s, CapMode mode,
              const std::vector<Weight>& targets = {});

struct CapRunResult {
    WeightAssignment weights;
    std::int64_t rounds = 0;
    bool converged = false;
    std::vector<Weight> epsilon;
    std::vector<std::vector<Weight>> imbalance;
    std::vector<WeightAssignment> weight_trace;
    std::uint64_t clamp_engaged = 0;
};

struct CapRunOptions {
    CapMode mode = CapMode::Standard;
    std::vector<Weight> targets; // Targeted mode only
    std::int64_t max_rounds = 10000;
    bool record_imbalance = false;
    bool record_weights = false;
};

// Converged means eps = 0, or x = targets in Targeted mode. Stops at the budget otherwise.
CapRunResult run_cap(const Digraph& g, const CapacityBounds& b, CapState s, const CapRunOptions& opt);

} // namespace wbal
