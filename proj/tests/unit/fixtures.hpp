#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"

#include <vector>

namespace fx {

using namespace wbal;

// Paper's 1-based nodes shifted to 0-based throughout.

// Ring v1->v2->v3->v4->v1.
inline Digraph ring4() { return build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Edges v1->v2, v2->v3, v3->v1, v1->v3.
inline Digraph three_node() { return build_digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}); }

// Four cycles C1..C4 plus the closing edge v8->v1.
inline Digraph example2() {
    return build_digraph(8, {{0, 1}, {1, 2}, {2, 0},           // C1
                             {1, 3}, {3, 4}, {4, 2}, {2, 1},   // C2
                             {3, 5}, {5, 6}, {6, 4}, {4, 3},   // C3
                             {5, 7}, {7, 6}, {6, 5},           // C4
                             {7, 0}});
}

// Out-neighbor priorities from the narrated execution.
inline std::vector<std::vector<NodeId>> example2_priorities() {
    return {{1}, {2, 3}, {0, 1}, {4, 5}, {2, 3}, {6, 7}, {4, 5}, {6, 0}};
}

inline std::vector<NodeId> example2_activations() {
    return {0, 1, 2,
            0, 1, 3, 4, 2, 1, 2,
            0, 1, 3, 5, 6, 4, 3, 4, 2, 1, 2,
            0, 1, 3, 5};
}

// Six-node delay example: v1->3; v2->3; v3->1,2,4; v4->5,6; v5->1,3,4; v6->2,4.
inline Digraph six_node() {
    return build_digraph(6, {{0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 3}, {3, 4}, {3, 5},
                             {4, 0}, {4, 2}, {4, 3}, {5, 1}, {5, 3}});
}

inline std::vector<std::vector<NodeId>> six_node_priorities() {
    return {{2}, {2}, {0, 1, 3}, {4, 5}, {0, 2, 3}, {1, 3}};
}

inline Digraph two_cycle() { return build_digraph(2, {{0, 1}, {1, 0}}); }

// 0->1 pinned at 2, 1->0 pinned at 1: node 1 gets 2 in and can send at most 1.
inline CapacityBounds infeasible_two_cycle(const Digraph& g) {
    std::vector<Interval> iv(2);
    iv[g.edge_id(0, 1)] = {2, 2};
    iv[g.edge_id(1, 0)] = {1, 1};
    return CapacityBounds(g, iv);
}

inline CapacityBounds uniform_bounds(const Digraph& g, double l, double u) {
    return CapacityBounds(g, std::vector<Interval>(g.edge_count(), Interval{l, u}));
}

// Transitive closure by Floyd-Warshall; independent of the library's DFS.
inline bool strongly_connected_oracle(const Digraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (const auto& e : g.edges()) r[e.from][e.to] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!r[i][j]) return false;
    return true;
}

// x_j straight from the edge list.
inline std::vector<Weight> imbalance_oracle(const Digraph& g, const WeightAssignment& w) {
    std::vector<Weight> x(g.node_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        x[g.edges()[e].to] += w[e];
        x[g.edges()[e].from] -= w[e];
    }
    return x;
}

} // namespace fx
