#include "wbal/centralized.hpp"

#include "wbal/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace wbal {

std::vector<EdgeId> shortest_path(const Digraph& g, NodeId src, NodeId dst) {
    constexpr EdgeId none = std::numeric_limits<EdgeId>::max();
    std::vector<EdgeId> via(g.node_count(), none);
    std::vector<bool> seen(g.node_count(), false);
    std::queue<NodeId> q;
    q.push(src);
    seen[src] = true;
    while (!q.empty() && !seen[dst]) {
        NodeId v = q.front();
        q.pop();
        for (EdgeId e : g.out_edges(v)) {
            NodeId u = g.edge(e).to;
            if (!seen[u]) {
                seen[u] = true;
                via[u] = e;
                q.push(u);
            }
        }
    }
    if (!seen[dst]) throw Error(ErrorCode::NotStronglyConnected, "no path " + std::to_string(src) +
                                                                     " -> " + std::to_string(dst));
    std::vector<EdgeId> path;
    for (NodeId v = dst; v != src; v = g.edge(via[v]).from) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

CentralizedResult balance_from(const Digraph& g, WeightAssignment start, std::int64_t max_iter) {
    if (!is_strongly_connected(g)) throw Error(ErrorCode::NotStronglyConnected, "input digraph");
    CentralizedResult r;
    r.final_weights = std::move(start);
    auto& w = r.final_weights;
    for (;;) {
        auto x = imbalances(g, w);
        Weight eps = total_imbalance(x);
        r.epsilon.push_back(eps);
        r.imbalance.push_back(x);
        r.weights.push_back(w);
        if (eps == 0) break;
        if (r.iterations >= max_iter)
            throw Error(ErrorCode::IterationBudgetExceeded, std::to_string(max_iter) + " iterations");

        // max_element / min_element return the first (lowest id) among ties.
        NodeId vp = static_cast<NodeId>(std::max_element(x.begin(), x.end()) - x.begin());
        NodeId vm = static_cast<NodeId>(std::min_element(x.begin(), x.end()) - x.begin());
        Weight br = x[vp];
        for (EdgeId e : shortest_path(g, vp, vm)) w[e] += br;
        ++r.iterations;
    }
    return r;
}

CentralizedResult run_centralized(const Digraph& g, std::int64_t max_iter) {
    return balance_from(g, WeightAssignment(g.edge_count(), 1), max_iter);
}

} // namespace wbal
