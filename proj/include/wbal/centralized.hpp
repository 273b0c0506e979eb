#pragma once

#include "wbal/digraph.hpp"

#include <cstdint>
#include <vector>

namespace wbal {

struct CentralizedResult {
    WeightAssignment final_weights;
    std::int64_t iterations = 0;
    std::vector<Weight> epsilon;              // epsilon[k] before iteration k; size iterations+1
    std::vector<std::vector<Weight>> imbalance; // x[k], same indexing
    std::vector<WeightAssignment> weights;      // F[k], same indexing
};

// Algorithm 1 from all-ones weights.
CentralizedResult run_centralized(const Digraph& g, std::int64_t max_iter);

// Same loop from an arbitrary positive starting assignment.
CentralizedResult balance_from(const Digraph& g, WeightAssignment start, std::int64_t max_iter);

// Shortest path src -> dst as edge ids; BFS visits out-edges by ascending head.
std::vector<EdgeId> shortest_path(const Digraph& g, NodeId src, NodeId dst);

} // namespace wbal
