#include "wbal/balancer_capacity_unreliable.hpp"

#include "wbal/errors.hpp"

#include <algorithm>
#include <string>

namespace wbal {

namespace {

Weight clamp_count(Weight v, Weight lo, Weight hi, std::uint64_t& counter) {
    Weight c = std::clamp(v, lo, hi);
    if (c != v) ++counter;
    return c;
}

Weight node_perceived_imbalance(const Digraph& g, const PercState& s, NodeId j) {
    Weight x = 0;
    for (EdgeId e : g.in_edges(j)) x += s.perceived[e];
    for (EdgeId e : g.out_edges(j)) x -= s.weights[e];
    return x;
}

// Own walk of node j, sending every nonzero change. Returns the walk.
WalkResult propose_and_send(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric, NodeId j) {
    Weight x = node_perceived_imbalance(g, s, j);
    auto walk = round_robin_walk(s.orders[j], s.cursor[j], x > 0 ? x : 0, s.weights, s.perceived, b);
    const auto& order = s.orders[j];
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (walk.change[i] == 0) continue;
        const auto& ie = order[i];
        const auto& ed = g.edge(ie.edge);
        if (ie.outgoing)
            fabric.send({{ie.edge, Direction::Forward}, ed.to, PayloadKind::ChangeAmount, walk.change[i], s.round});
        else
            fabric.send({{ie.edge, Direction::Reverse}, ed.from, PayloadKind::ChangeAmount, walk.change[i], s.round});
    }
    return walk;
}

// Changes arriving for each edge, split by which side receives them.
struct Arrivals {
    std::vector<Weight> at_tail; // from the head, on Reverse channels
    std::vector<Weight> at_head; // from the tail, on Forward channels
    std::vector<bool> touched;   // per node
};

Arrivals collect(const Digraph& g, const std::map<NodeId, std::vector<Message>>& delivered) {
    Arrivals a{std::vector<Weight>(g.edge_count(), 0), std::vector<Weight>(g.edge_count(), 0),
               std::vector<bool>(g.node_count(), false)};
    for (const auto& [node, msgs] : delivered) {
        a.touched[node] = !msgs.empty();
        for (const auto& m : msgs) {
            Weight c = aggregate_delayed_changes({m});
            (m.channel.dir == Direction::Reverse ? a.at_tail : a.at_head)[m.channel.edge] += c;
        }
    }
    return a;
}

void act_alg7_node(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric, NodeId j) {
    auto walk = propose_and_send(g, b, s, fabric, j);
    const auto& order = s.orders[j];
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& ie = order[i];
        Weight& v = ie.outgoing ? s.weights[ie.edge] : s.perceived[ie.edge];
        v = clamp_count(v + walk.change[i], b.lo(ie.edge), b.hi(ie.edge), s.clamp_engaged);
    }
}

} // namespace

PercState init_unreliable(const Digraph& g, const CapacityBounds& b, std::vector<IncidentOrder> orders,
                          std::optional<WeightAssignment> initial) {
    CapState c = init_cap(g, b, std::move(orders), std::move(initial));
    PercState s;
    s.weights = c.weights;
    s.perceived = std::move(c.weights);
    s.orders = std::move(c.orders);
    s.cursor = std::move(c.cursor);
    s.triggered.assign(g.node_count(), false);
    return s;
}

PercState init_unreliable(const Digraph& g, const CapacityBounds& b, std::uint64_t ordering_seed) {
    return init_unreliable(g, b, random_incident_orders(g, ordering_seed));
}

Weight aggregate_delayed_changes(const std::vector<Message>& arrivals) {
    Weight sum = 0;
    for (const auto& m : arrivals) {
        if (m.kind != PayloadKind::ChangeAmount) throw Error(ErrorCode::WrongKind, "expected change-amount message");
        sum += m.value;
    }
    return sum;
}

std::vector<Weight> perceived_imbalances(const Digraph& g, const PercState& s) {
    return imbalances_split(g, s.perceived, s.weights);
}

void step_alg6(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric) {
    std::vector<Weight> own_tail(g.edge_count(), 0), own_head(g.edge_count(), 0);
    std::vector<WalkResult> walks(g.node_count());
    // All proposals read the round-k state before anything is applied.
    for (NodeId j = 0; j < g.node_count(); ++j) walks[j] = propose_and_send(g, b, s, fabric, j);
    for (NodeId j = 0; j < g.node_count(); ++j) {
        const auto& order = s.orders[j];
        for (std::size_t i = 0; i < order.size(); ++i)
            (order[i].outgoing ? own_tail : own_head)[order[i].edge] += walks[j].change[i];
    }
    auto in = collect(g, fabric.deliver(s.round + 1));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        s.weights[e] = clamp_count(s.weights[e] + in.at_tail[e] + own_tail[e], b.lo(e), b.hi(e), s.clamp_engaged);
        s.perceived[e] = clamp_count(s.perceived[e] + in.at_head[e] + own_head[e], b.lo(e), b.hi(e), s.clamp_engaged);
    }
    ++s.round;
}

void alg7_receive(const Digraph& g, PercState& s, Fabric& fabric) {
    auto in = collect(g, fabric.deliver(s.round));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        s.weights[e] += in.at_tail[e];
        s.perceived[e] += in.at_head[e];
    }
    s.triggered = std::move(in.touched);
}

void alg7_act(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric) {
    for (NodeId j = 0; j < g.node_count(); ++j)
        if (s.round == 0 || s.triggered[j]) act_alg7_node(g, b, s, fabric, j);
    ++s.round;
}

void step_alg7(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric) {
    alg7_receive(g, s, fabric);
    alg7_act(g, b, s, fabric);
}

void step_alg8(const Digraph& g, const CapacityBounds& b, PercState& s, Fabric& fabric) {
    const std::int64_t phase_a = 2 * s.round, phase_b = 2 * s.round + 1;
    // Desired values; non-positive nodes echo what they hold.
    WeightAssignment want_tail = s.weights, want_head = s.perceived;
    std::vector<WalkResult> walks(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j) {
        Weight x = node_perceived_imbalance(g, s, j);
        if (x <= 0) continue;
        auto walk = round_robin_walk(s.orders[j], s.cursor[j], x, s.weights, s.perceived, b);
        const auto& order = s.orders[j];
        for (std::size_t i = 0; i < order.size(); ++i)
            (order[i].outgoing ? want_tail : want_head)[order[i].edge] += walk.change[i];
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e)
        fabric.send({{e, Direction::Reverse}, g.edge(e).from, PayloadKind::DesiredWeight, want_head[e], phase_a});
    WeightAssignment head_says = s.weights; // a dropped desire reads as "no change"
    for (const auto& [node, msgs] : fabric.deliver(phase_a + 1))
        for (const auto& m : msgs) {
            if (m.kind != PayloadKind::DesiredWeight) throw Error(ErrorCode::WrongKind, "expected desired-weight message");
            head_says[m.channel.edge] = m.value;
        }

    WeightAssignment next(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        next[e] = clamp_count(head_says[e] + want_tail[e] - s.weights[e], b.lo(e), b.hi(e), s.clamp_engaged);
        fabric.send({{e, Direction::Forward}, g.edge(e).to, PayloadKind::FullWeight, next[e], phase_b});
    }
    WeightAssignment seen = want_head; // a dropped update leaves the head with its own desire
    for (const auto& [node, msgs] : fabric.deliver(phase_b + 1))
        for (const auto& m : msgs) {
            if (m.kind != PayloadKind::FullWeight) throw Error(ErrorCode::WrongKind, "expected full-weight message");
            seen[m.channel.edge] = m.value;
        }
    s.weights = std::move(next);
    s.perceived = std::move(seen);
    ++s.round;
}

UnreliableRunResult run_unreliable(const Digraph& g, const CapacityBounds& b, PercState s, Fabric& fabric,
                                   UnreliableAlgorithm alg, const UnreliableRunOptions& opt) {
    if (alg == UnreliableAlgorithm::Alg8 && fabric.links().max_delay_overall() > 0)
        throw Error(ErrorCode::ConfigError, "Algorithm 8 runs over drops only; max delay must be 0");
    UnreliableRunResult r;
    const std::uint64_t sent_before = fabric.sent();
    for (;;) {
        if (alg == UnreliableAlgorithm::Alg7) alg7_receive(g, s, fabric);
        auto x = imbalances(g, s.weights);
        Weight eps = total_imbalance(x);
        r.epsilon.push_back(eps);
        r.epsilon_perceived.push_back(total_imbalance(perceived_imbalances(g, s)));
        if (opt.record_imbalance) r.imbalance.push_back(x);
        if (opt.record_weights) {
            r.weight_trace.push_back(s.weights);
            r.perceived_trace.push_back(s.perceived);
        }
        if (eps == 0 && s.perceived == s.weights && fabric.in_flight() == 0) {
            r.converged = true;
            break;
        }
        if (s.round >= opt.max_rounds) break;
        switch (alg) {
        case UnreliableAlgorithm::Alg6: step_alg6(g, b, s, fabric); break;
        case UnreliableAlgorithm::Alg7: alg7_act(g, b, s, fabric); break;
        case UnreliableAlgorithm::Alg8: step_alg8(g, b, s, fabric); break;
        }
    }
    r.rounds = s.round;
    r.messages_sent = fabric.sent() - sent_before;
    r.clamp_engaged = s.clamp_engaged;
    r.weights = std::move(s.weights);
    r.perceived = std::move(s.perceived);
    return r;
}

} // namespace wbal
