#include "wbal/balancer_delay.hpp"

#include "wbal/balancer_sync.hpp"
#include "wbal/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wbal {

namespace {

void send_out_weights(const Digraph& g, const DelayState& s, Fabric& fabric, NodeId j) {
    for (EdgeId e : g.out_edges(j))
        fabric.send({{e, Direction::Forward}, g.edge(e).to, PayloadKind::FullWeight, s.weights[e], s.round});
}

bool settled(const DelayState& s, Weight eps) { return eps == 0 && s.perceived == s.weights; }

} // namespace

DelayState init_delay(const Digraph& g, std::vector<std::vector<EdgeId>> priority) {
    if (!is_strongly_connected(g)) throw Error(ErrorCode::NotStronglyConnected, "input digraph");
    if (priority.size() != g.node_count()) throw Error(ErrorCode::ConfigError, "one priority list per node");
    for (NodeId j = 0; j < g.node_count(); ++j) {
        auto sorted = priority[j];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.out_edges(j))
            throw Error(ErrorCode::ConfigError, "priority of node " + std::to_string(j) + " is not a permutation of its out-edges");
    }
    DelayState s;
    s.weights.assign(g.edge_count(), 1);
    s.perceived.assign(g.edge_count(), 1);
    s.priority = std::move(priority);
    return s;
}

DelayState init_delay(const Digraph& g, std::uint64_t ordering_seed) {
    return init_delay(g, random_out_orderings(g, ordering_seed));
}

bool receive_updates(WeightAssignment& perceived, const std::vector<Message>& msgs) {
    bool rose = false;
    for (const auto& m : msgs) {
        if (m.kind != PayloadKind::FullWeight) throw Error(ErrorCode::WrongKind, "expected full-weight message");
        Weight& p = perceived.at(m.channel.edge);
        if (m.value > p) {
            p = m.value;
            rose = true;
        }
    }
    return rose;
}

std::vector<bool> receive_phase(const Digraph& g, DelayState& s, Fabric& fabric) {
    std::vector<bool> changed(g.node_count(), false);
    for (auto& [node, msgs] : fabric.deliver(s.round)) changed.at(node) = receive_updates(s.perceived, msgs);
    return changed;
}

void act_phase(const Digraph& g, DelayState& s, Fabric& fabric, DelayVariant variant,
               const std::vector<bool>& changed) {
    const bool bootstrap = s.round == 0;
    for (NodeId j = 0; j < g.node_count(); ++j) {
        if (variant == DelayVariant::EventTriggered && !bootstrap && !changed[j]) continue;
        Weight in_sum = 0, out_sum = 0;
        for (EdgeId e : g.in_edges(j)) in_sum += s.perceived[e];
        for (EdgeId e : g.out_edges(j)) out_sum += s.weights[e];
        if (in_sum - out_sum > 0) {
            const auto& order = s.priority[j];
            std::vector<std::size_t> slots(order.size());
            std::iota(slots.begin(), slots.end(), std::size_t{0});
            auto w = allocate_weights(in_sum, order.size(), slots);
            for (std::size_t i = 0; i < order.size(); ++i) s.weights[order[i]] = w[i];
        }
        send_out_weights(g, s, fabric, j);
    }
    ++s.round;
}

void step_delay_round(const Digraph& g, DelayState& s, Fabric& fabric, DelayVariant variant) {
    auto changed = receive_phase(g, s, fabric);
    act_phase(g, s, fabric, variant, changed);
}

DelayRunResult run_delay(const Digraph& g, DelayState s, Fabric& fabric, const DelayRunOptions& opt) {
    DelayRunResult r;
    const std::uint64_t sent_before = fabric.sent();
    for (;;) {
        auto x = imbalances(g, s.weights);
        Weight eps = total_imbalance(x);
        bool quiet = opt.variant == DelayVariant::AlwaysTransmit || fabric.in_flight() == 0;
        if (settled(s, eps) && quiet) {
            r.epsilon.push_back(eps);
            r.epsilon_delayed.push_back(eps);
            if (opt.record_imbalance) r.imbalance.push_back(x);
            if (opt.record_perceived) {
                r.perceived.push_back(s.perceived);
                r.weights.push_back(s.weights);
            }
            r.converged = true;
            break;
        }
        if (s.round >= opt.max_rounds) {
            if (opt.throw_on_budget) throw Error(ErrorCode::Diverged, std::to_string(opt.max_rounds) + " rounds");
            r.epsilon.push_back(eps);
            r.epsilon_delayed.push_back(total_imbalance(imbalances_split(g, s.perceived, s.weights)));
            if (opt.record_imbalance) r.imbalance.push_back(x);
            break;
        }

        auto changed = receive_phase(g, s, fabric);
        r.epsilon.push_back(eps);
        r.epsilon_delayed.push_back(total_imbalance(imbalances_split(g, s.perceived, s.weights)));
        if (opt.record_imbalance) r.imbalance.push_back(x);
        if (opt.record_perceived) {
            r.perceived.push_back(s.perceived);
            r.weights.push_back(s.weights);
        }
        act_phase(g, s, fabric, opt.variant, changed);
    }
    r.rounds = s.round;
    r.final_weights = s.weights;
    r.messages_sent = fabric.sent() - sent_before;
    return r;
}

} // namespace wbal
