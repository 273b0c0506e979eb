#include "wbal/balancer_capacity.hpp"

#include "wbal/errors.hpp"
#include "wbal/rng.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wbal {

namespace {

IncidentOrder natural_order(const Digraph& g, NodeId j) {
    IncidentOrder o;
    for (EdgeId e : g.out_edges(j)) o.push_back({e, true});
    for (EdgeId e : g.in_edges(j)) o.push_back({e, false});
    return o;
}

bool targets_met(std::span<const Weight> x, const std::vector<Weight>& targets) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != (targets.empty() ? 0 : targets[j])) return false;
    return true;
}

} // namespace

std::vector<IncidentOrder> random_incident_orders(const Digraph& g, std::uint64_t seed) {
    std::vector<IncidentOrder> orders(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j) {
        orders[j] = natural_order(g, j);
        auto rng = make_rng(seed, {0x696e63ULL, j});
        std::shuffle(orders[j].begin(), orders[j].end(), rng);
    }
    return orders;
}

std::vector<IncidentOrder> incident_orders_from_edges(const Digraph& g,
                                                      const std::vector<std::vector<EdgeId>>& lists) {
    if (lists.size() != g.node_count()) throw Error(ErrorCode::ConfigError, "one order per node");
    std::vector<IncidentOrder> orders(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j) {
        for (EdgeId e : lists[j]) {
            const auto& ed = g.edge(e);
            if (ed.from != j && ed.to != j)
                throw Error(ErrorCode::ConfigError, "edge " + std::to_string(e) + " not incident to node " + std::to_string(j));
            orders[j].push_back({e, ed.from == j});
        }
        auto have = lists[j];
        std::sort(have.begin(), have.end());
        std::vector<EdgeId> want;
        for (const auto& ie : natural_order(g, j)) want.push_back(ie.edge);
        std::sort(want.begin(), want.end());
        if (have != want)
            throw Error(ErrorCode::ConfigError, "order of node " + std::to_string(j) + " is not a permutation of its incident edges");
    }
    return orders;
}

WalkResult round_robin_walk(const IncidentOrder& order, std::size_t& cursor, Weight amount,
                            std::span<const Weight> out_view, std::span<const Weight> in_view,
                            const CapacityBounds& b) {
    WalkResult r;
    const std::size_t d = order.size();
    r.change.assign(d, 0);
    if (amount == 0 || d == 0) return r;
    const bool lower = amount > 0;
    Weight remaining = lower ? amount : -amount;
    std::size_t idle = 0;
    while (remaining > 0) {
        const auto& ie = order[cursor];
        Weight now = (ie.outgoing ? out_view[ie.edge] : in_view[ie.edge]) + r.change[cursor];
        // Lowering the imbalance raises out-edges and lowers in-edges.
        int step = (ie.outgoing == lower) ? +1 : -1;
        bool ok = step > 0 ? now < b.hi(ie.edge) : now > b.lo(ie.edge);
        if (ok) {
            r.change[cursor] += step;
            --remaining;
            idle = 0;
        } else {
            ++idle;
        }
        cursor = (cursor + 1) % d;
        if (idle == d) {
            r.saturated = true;
            break;
        }
    }
    return r;
}

CapState init_cap(const Digraph& g, const CapacityBounds& b, std::vector<IncidentOrder> orders,
                  std::optional<WeightAssignment> initial) {
    if (!is_strongly_connected(g)) throw Error(ErrorCode::NotStronglyConnected, "input digraph");
    for (const auto& [ed, ok] : check_edge_intervals(g, b))
        if (!ok)
            throw Error(ErrorCode::InfeasibleEdgeInterval,
                        "edge (" + std::to_string(ed.from) + "," + std::to_string(ed.to) + ")");
    if (orders.size() != g.node_count()) throw Error(ErrorCode::ConfigError, "one order per node");
    CapState s;
    if (initial) {
        if (initial->size() != g.edge_count()) throw Error(ErrorCode::MissingWeight, "initial weights");
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if ((*initial)[e] < b.lo(e) || (*initial)[e] > b.hi(e))
                throw Error(ErrorCode::ConfigError, "initial weight outside bounds on edge " + std::to_string(e));
        s.weights = std::move(*initial);
    } else {
        s.weights.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) s.weights[e] = b.lo(e);
    }
    s.orders = std::move(orders);
    s.cursor.assign(g.node_count(), 0);
    return s;
}

CapState init_cap(const Digraph& g, const CapacityBounds& b, std::uint64_t ordering_seed) {
    return init_cap(g, b, random_incident_orders(g, ordering_seed));
}

Weight walk_amount(Weight x, CapMode mode, Weight target) {
    switch (mode) {
    case CapMode::Standard: return x > 0 ? x : 0;
    case CapMode::Enhanced: return x > 0 ? x : (x < -1 ? x + 1 : 0);
    case CapMode::Naive: return x;
    case CapMode::Targeted: {
        Weight y = x - target;
        return y > 0 ? y : (y < -1 ? y + 1 : 0);
    }
    }
    return 0;
}

WalkResult propose_changes(const Digraph& g, const CapacityBounds& b, CapState& s, NodeId j, Weight x_j,
                           CapMode mode, Weight target) {
    (void)g;
    return round_robin_walk(s.orders[j], s.cursor[j], walk_amount(x_j, mode, target), s.weights, s.weights, b);
}

void exchange_and_apply(const Digraph& g, const CapacityBounds& b, CapState& s,
                        const std::vector<WalkResult>& proposals) {
    std::vector<Weight> delta(g.edge_count(), 0);
    for (NodeId j = 0; j < g.node_count(); ++j) {
        const auto& order = s.orders[j];
        for (std::size_t i = 0; i < order.size(); ++i) delta[order[i].edge] += proposals[j].change[i];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Weight v = s.weights[e] + delta[e];
        Weight c = std::clamp(v, b.lo(e), b.hi(e));
        if (c != v) ++s.clamp_engaged;
        s.weights[e] = c;
    }
    ++s.round;
}

void step_cap(const Digraph& g, const CapacityBounds& b, CapState& s, CapMode mode,
              const std::vector<Weight>& targets) {
    auto x = imbalances(g, s.weights);
    std::vector<WalkResult> proposals(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j)
        proposals[j] = propose_changes(g, b, s, j, x[j], mode, targets.empty() ? 0 : targets[j]);
    exchange_and_apply(g, b, s, proposals);
}

CapRunResult run_cap(const Digraph& g, const CapacityBounds& b, CapState s, const CapRunOptions& opt) {
    if (opt.mode == CapMode::Targeted) {
        if (opt.targets.size() != g.node_count()) throw Error(ErrorCode::ConfigError, "one target per node");
        if (std::accumulate(opt.targets.begin(), opt.targets.end(), Weight{0}) != 0)
            throw Error(ErrorCode::ConfigError, "targets must sum to zero");
    }
    const std::vector<Weight> no_targets;
    const auto& targets = opt.mode == CapMode::Targeted ? opt.targets : no_targets;
    CapRunResult r;
    for (;;) {
        auto x = imbalances(g, s.weights);
        r.epsilon.push_back(total_imbalance(x));
        if (opt.record_imbalance) r.imbalance.push_back(x);
        if (opt.record_weights) r.weight_trace.push_back(s.weights);
        if (targets_met(x, targets)) {
            r.converged = true;
            break;
        }
        if (s.round >= opt.max_rounds) break;
        step_cap(g, b, s, opt.mode, targets);
    }
    r.rounds = s.round;
    r.clamp_engaged = s.clamp_engaged;
    r.weights = std::move(s.weights);
    return r;
}

} // namespace wbal
