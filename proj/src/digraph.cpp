#include "wbal/digraph.hpp"

#include "wbal/errors.hpp"
#include "wbal/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace wbal {

namespace {

std::string pair_str(NodeId a, NodeId b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_weights(const Digraph& g, std::span<const Weight> w) {
    if (w.size() != g.edge_count())
        throw Error(ErrorCode::MissingWeight, "expected " + std::to_string(g.edge_count()) +
                                                  " weights, got " + std::to_string(w.size()));
}

// Nodes reachable from 0 following edges forward (or backward).
std::vector<bool> reach(const Digraph& g, bool forward) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        const auto& inc = forward ? g.out_edges(v) : g.in_edges(v);
        for (EdgeId e : inc) {
            NodeId u = forward ? g.edge(e).to : g.edge(e).from;
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return seen;
}

} // namespace

std::vector<NodeId> Digraph::out_neighbors(NodeId j) const {
    std::vector<NodeId> r;
    for (EdgeId e : out_.at(j)) r.push_back(edges_[e].to);
    return r;
}

std::vector<NodeId> Digraph::in_neighbors(NodeId j) const {
    std::vector<NodeId> r;
    for (EdgeId e : in_.at(j)) r.push_back(edges_[e].from);
    return r;
}

bool Digraph::has_edge(NodeId from, NodeId to) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

EdgeId Digraph::edge_id(NodeId from, NodeId to) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{from, to});
    if (it == edges_.end() || *it != Edge{from, to})
        throw Error(ErrorCode::IndexOutOfRange, "no edge " + pair_str(from, to));
    return static_cast<EdgeId>(it - edges_.begin());
}

Digraph build_digraph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edge_pairs) {
    if (n < 2) throw Error(ErrorCode::TooFewNodes, "n=" + std::to_string(n));
    Digraph g;
    g.n_ = n;
    g.edges_.reserve(edge_pairs.size());
    for (auto [a, b] : edge_pairs) {
        if (a >= n || b >= n) throw Error(ErrorCode::IndexOutOfRange, pair_str(a, b));
        if (a == b) throw Error(ErrorCode::SelfLoop, pair_str(a, b));
        g.edges_.push_back({a, b});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) throw Error(ErrorCode::DuplicateEdge, pair_str(dup->from, dup->to));

    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        g.out_[g.edges_[e].from].push_back(e);
        g.in_[g.edges_[e].to].push_back(e);
    }
    // out_ is already sorted by head; in_ is sorted by tail because edges_ is.
    return g;
}

bool is_strongly_connected(const Digraph& g) {
    auto fw = reach(g, true);
    auto bw = reach(g, false);
    return std::all_of(fw.begin(), fw.end(), [](bool b) { return b; }) &&
           std::all_of(bw.begin(), bw.end(), [](bool b) { return b; });
}

Weight node_imbalance(const Digraph& g, std::span<const Weight> w, NodeId j) {
    check_weights(g, w);
    if (j >= g.node_count()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(j));
    Weight x = 0;
    for (EdgeId e : g.in_edges(j)) x += w[e];
    for (EdgeId e : g.out_edges(j)) x -= w[e];
    return x;
}

std::vector<Weight> imbalances_split(const Digraph& g, std::span<const Weight> in_view,
                                     std::span<const Weight> out_view) {
    check_weights(g, in_view);
    check_weights(g, out_view);
    std::vector<Weight> x(g.node_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        x[g.edge(e).to] += in_view[e];
        x[g.edge(e).from] -= out_view[e];
    }
    return x;
}

std::vector<Weight> imbalances(const Digraph& g, std::span<const Weight> w) {
    return imbalances_split(g, w, w);
}

Weight total_imbalance(std::span<const Weight> x) {
    Weight eps = 0;
    for (Weight v : x) eps += v < 0 ? -v : v;
    return eps;
}

Weight total_imbalance(const Digraph& g, std::span<const Weight> w) {
    auto x = imbalances(g, w);
    return total_imbalance(x);
}

Digraph random_strongly_connected(std::size_t n, double extra_edge_prob, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::TooFewNodes, "n=" + std::to_string(n));
    auto rng = make_rng(seed, {0x6772617068ULL});
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        NodeId a = perm[i], b = perm[(i + 1) % n];
        if (!used[a][b]) {
            used[a][b] = true;
            pairs.emplace_back(a, b);
        }
    }
    std::bernoulli_distribution extra(extra_edge_prob);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = 0; b < n; ++b) {
            if (a == b || used[a][b]) continue;
            if (extra(rng)) pairs.emplace_back(a, b);
        }
    return build_digraph(n, pairs);
}

} // namespace wbal
