#include "wbal/balancer_sync.hpp"

#include "wbal/errors.hpp"
#include "wbal/rng.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace wbal {

namespace {

// Rule of node j against frozen weights `cur`, written into `next`.
void apply_rule(const Digraph& g, const SyncState& s, const WeightAssignment& cur,
                WeightAssignment& next, NodeId j) {
    const auto& order = s.orderings[j];
    const std::size_t d = order.size();
    Weight in_sum = 0, out_sum = 0;
    for (EdgeId e : g.in_edges(j)) in_sum += cur[e];
    for (EdgeId e : g.out_edges(j)) out_sum += cur[e];
    const Weight x = in_sum - out_sum;
    if (x >= -1 && x <= 0) return;
    if (x < -1 && in_sum / static_cast<Weight>(d) == 0) {
        for (EdgeId e : order) next[e] = 1;
        return;
    }
    // x > 0 hands out S-; x < -1 hands out S- + 1 (floor plus 1 + S - D*floor extra units).
    Weight total = x > 0 ? in_sum : in_sum + 1;
    Weight base = total / static_cast<Weight>(d);
    auto extra = static_cast<std::size_t>(total % static_cast<Weight>(d));
    for (std::size_t i = 0; i < d; ++i) next[order[i]] = base + (i < extra ? 1 : 0);
}

} // namespace

std::vector<Weight> allocate_weights(Weight in_sum, std::size_t out_degree,
                                     const std::vector<std::size_t>& priority) {
    if (out_degree == 0) throw Error(ErrorCode::ZeroOutDegree, "allocate_weights");
    if (priority.size() != out_degree)
        throw Error(ErrorCode::IndexOutOfRange, "priority length differs from out-degree");
    const auto d = static_cast<Weight>(out_degree);
    Weight base = in_sum / d;
    auto extra = static_cast<std::size_t>(in_sum % d);
    std::vector<Weight> w(out_degree, base);
    for (std::size_t i = 0; i < extra; ++i) w.at(priority[i]) += 1;
    return w;
}

std::vector<std::vector<EdgeId>> random_out_orderings(const Digraph& g, std::uint64_t seed) {
    std::vector<std::vector<EdgeId>> ord(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j) {
        ord[j] = g.out_edges(j);
        auto rng = make_rng(seed, {0x6f7574ULL, j});
        std::shuffle(ord[j].begin(), ord[j].end(), rng);
    }
    return ord;
}

SyncState init_sync(const Digraph& g, Weight init_weight, std::uint64_t ordering_seed) {
    if (init_weight < 1) throw Error(ErrorCode::BadInitWeight, std::to_string(init_weight));
    if (!is_strongly_connected(g)) throw Error(ErrorCode::NotStronglyConnected, "input digraph");
    SyncState s;
    s.weights.assign(g.edge_count(), init_weight);
    s.orderings = random_out_orderings(g, ordering_seed);
    // |x_j| <= w (n - 2) for uniform weights w.
    [[maybe_unused]] const auto n = static_cast<Weight>(g.node_count());
    assert(total_imbalance(g, s.weights) <= n * init_weight * (n - 2) || n == 2);
    return s;
}

SyncState step_sync(const Digraph& g, const SyncState& s) {
    SyncState next = s;
    for (NodeId j = 0; j < g.node_count(); ++j) apply_rule(g, s, s.weights, next.weights, j);
    ++next.round;
    return next;
}

SyncState step_async(const Digraph& g, const SyncState& s, NodeId active) {
    if (active >= g.node_count()) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(active));
    SyncState next = s;
    apply_rule(g, s, s.weights, next.weights, active);
    ++next.round;
    return next;
}

std::int64_t sync_round_budget(const Digraph& g, Weight eps0) {
    const auto m = static_cast<std::int64_t>(g.edge_count());
    return m * m * eps0 / 2;
}

SyncRunResult run_sync(const Digraph& g, SyncState s, std::optional<std::int64_t> max_rounds,
                       bool record_trace, bool throw_on_budget) {
    SyncRunResult r;
    auto x = imbalances(g, s.weights);
    const std::int64_t budget = max_rounds.value_or(sync_round_budget(g, total_imbalance(x)));
    for (;;) {
        Weight eps = total_imbalance(x);
        r.epsilon.push_back(eps);
        if (record_trace) {
            r.imbalance.push_back(x);
            r.weight_trace.push_back(s.weights);
        }
        if (eps == 0) {
            r.converged = true;
            break;
        }
        if (r.rounds >= budget) {
            if (throw_on_budget) throw Error(ErrorCode::Diverged, std::to_string(budget) + " rounds");
            break;
        }
        s = step_sync(g, s);
        ++r.rounds;
        x = imbalances(g, s.weights);
    }
    r.weights = std::move(s.weights);
    return r;
}

} // namespace wbal
