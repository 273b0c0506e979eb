#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wbal {

using NodeId = std::size_t;
using EdgeId = std::size_t;
using Weight = std::int64_t;

struct Edge {
    NodeId from;
    NodeId to;

    auto operator<=>(const Edge&) const = default;
};

// Edges are kept sorted by (from, to); an EdgeId is a position in that list.
class Digraph {
public:
    Digraph() = default;

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    // Edge ids incident to j, sorted by the other endpoint.
    const std::vector<EdgeId>& out_edges(NodeId j) const { return out_.at(j); }
    const std::vector<EdgeId>& in_edges(NodeId j) const { return in_.at(j); }

    std::vector<NodeId> out_neighbors(NodeId j) const;
    std::vector<NodeId> in_neighbors(NodeId j) const;

    std::size_t out_degree(NodeId j) const { return out_.at(j).size(); }
    std::size_t in_degree(NodeId j) const { return in_.at(j).size(); }

    // Throws IndexOutOfRange when (from, to) is not an edge.
    EdgeId edge_id(NodeId from, NodeId to) const;
    bool has_edge(NodeId from, NodeId to) const noexcept;

private:
    friend Digraph build_digraph(std::size_t, const std::vector<std::pair<NodeId, NodeId>>&);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// One weight per EdgeId.
using WeightAssignment = std::vector<Weight>;

Digraph build_digraph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edge_pairs);

bool is_strongly_connected(const Digraph& g);

Weight node_imbalance(const Digraph& g, std::span<const Weight> w, NodeId j);
std::vector<Weight> imbalances(const Digraph& g, std::span<const Weight> w);
Weight total_imbalance(const Digraph& g, std::span<const Weight> w);
Weight total_imbalance(std::span<const Weight> x);

// Imbalance where in-edges are read from `in_view` and out-edges from `out_view`.
std::vector<Weight> imbalances_split(const Digraph& g, std::span<const Weight> in_view,
                                     std::span<const Weight> out_view);

// Hamiltonian cycle over a seeded permutation plus Bernoulli(p) extra edges.
Digraph random_strongly_connected(std::size_t n, double extra_edge_prob, std::uint64_t seed);

} // namespace wbal
