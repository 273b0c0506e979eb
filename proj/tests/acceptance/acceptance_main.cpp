// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.
#include "fixtures.hpp"

#include "wbal/balancer_capacity.hpp"
#include "wbal/balancer_capacity_unreliable.hpp"
#include "wbal/balancer_delay.hpp"
#include "wbal/balancer_sync.hpp"
#include "wbal/centralized.hpp"
#include "wbal/feasibility.hpp"
#include "wbal/instances.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace wbal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

bool sums_to_zero(const std::vector<Weight>& x) { return std::accumulate(x.begin(), x.end(), Weight{0}) == 0; }

bool nonincreasing(const std::vector<Weight>& eps) {
    for (std::size_t k = 1; k < eps.size(); ++k)
        if (eps[k] > eps[k - 1]) return false;
    return true;
}

bool leq(const WeightAssignment& a, const WeightAssignment& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool in_bounds(const CapacityBounds& b, const WeightAssignment& w) {
    for (EdgeId e = 0; e < w.size(); ++e)
        if (w[e] < b.lo(e) || w[e] > b.hi(e)) return false;
    return true;
}

std::string tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

DelayRunResult delay_run(const Digraph& g, std::uint64_t order_seed, int tau, double q, std::uint64_t link_seed,
                         DelayVariant v, bool record) {
    Fabric f(LinkModel(g.edge_count(), tau, q), link_seed);
    DelayRunOptions opt;
    opt.variant = v;
    opt.record_imbalance = record;
    opt.record_perceived = record;
    opt.throw_on_budget = false;
    return run_delay(g, init_delay(g, order_seed), f, opt);
}

UnreliableRunResult unreliable_run(const Digraph& g, const CapacityBounds& b, std::uint64_t seed, int tau, double q,
                                   UnreliableAlgorithm alg, bool record) {
    Fabric f(LinkModel(g.edge_count(), tau, q), seed ^ 0x5a5aULL);
    UnreliableRunOptions opt;
    opt.record_imbalance = record;
    opt.record_weights = record;
    return run_unreliable(g, b, init_unreliable(g, b, seed), f, alg, opt);
}

CapRunResult cap_run(const Digraph& g, const CapacityBounds& b, std::uint64_t seed, CapMode mode,
                     std::vector<Weight> targets = {}, std::int64_t max_rounds = 10000) {
    CapRunOptions opt;
    opt.mode = mode;
    opt.targets = std::move(targets);
    opt.max_rounds = max_rounds;
    opt.record_imbalance = true;
    opt.record_weights = true;
    return run_cap(g, b, init_cap(g, b, seed), opt);
}

// Imbalances realized by some in-bounds assignment; valid targets for the targeted mode.
std::vector<Weight> reachable_targets(const Digraph& g, const CapacityBounds& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    WeightAssignment w(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = b.lo(e) + static_cast<Weight>(rng() % (b.hi(e) - b.lo(e) + 1));
    return imbalances(g, w);
}

Outcome conservation() {
    Outcome o;
    auto check_rows = [&](const std::vector<std::vector<Weight>>& rows, const std::string& what) {
        if (rows.empty()) o.fail(what + ": empty trace");
        for (const auto& x : rows)
            if (!sums_to_zero(x)) o.fail(what + ": nonzero sum");
    };
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 3 + seed % 48;
        double p = 3.0 / static_cast<double>(n);
        auto g = random_strongly_connected(n, p, seed);
        auto b = random_feasible_bounds(g, seed);

        check_rows(run_centralized(g, static_cast<std::int64_t>(n)).imbalance, tag("centralized", seed));
        check_rows(run_sync(g, init_sync(g, 1, seed), std::nullopt, true).imbalance, tag("sync", seed));
        check_rows(delay_run(g, seed, 3, 0.2, seed, DelayVariant::AlwaysTransmit, true).imbalance, tag("delay", seed));
        check_rows(delay_run(g, seed, 3, 0.2, seed, DelayVariant::EventTriggered, true).imbalance,
                   tag("delay-event", seed));
        for (CapMode m : {CapMode::Standard, CapMode::Enhanced, CapMode::Naive})
            check_rows(cap_run(g, b, seed, m, {}, 2000).imbalance, tag("cap", seed));
        check_rows(cap_run(g, b, seed, CapMode::Targeted, reachable_targets(g, b, seed), 2000).imbalance,
                   tag("cap-targeted", seed));
        check_rows(unreliable_run(g, b, seed, 3, 0.0, UnreliableAlgorithm::Alg6, true).imbalance, tag("alg6", seed));
        check_rows(unreliable_run(g, b, seed, 3, 0.0, UnreliableAlgorithm::Alg7, true).imbalance, tag("alg7", seed));
        check_rows(unreliable_run(g, b, seed, 0, 0.3, UnreliableAlgorithm::Alg8, true).imbalance, tag("alg8", seed));
    }
    return o;
}

Outcome monotone_epsilon() {
    Outcome o;
    const char* names[5] = {"Alg. 2", "Alg. 5", "Alg. 6 (tau=5)", "Alg. 7 (tau=5)", "Alg. 8 (q=0.5)"};
    int bad[5] = {0, 0, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 5 + seed % 26;
        auto g = random_strongly_connected(n, 3.0 / static_cast<double>(n), seed);
        auto b = random_feasible_bounds(g, seed);
        auto sync = run_sync(g, init_sync(g, 1, seed));
        auto cap = cap_run(g, b, seed, CapMode::Standard);
        auto a6 = unreliable_run(g, b, seed, 5, 0.0, UnreliableAlgorithm::Alg6, false);
        auto a7 = unreliable_run(g, b, seed, 5, 0.0, UnreliableAlgorithm::Alg7, false);
        auto a8 = unreliable_run(g, b, seed, 0, 0.5, UnreliableAlgorithm::Alg8, false);
        const std::vector<Weight>* eps[5] = {&sync.epsilon, &cap.epsilon, &a6.epsilon, &a7.epsilon, &a8.epsilon};
        for (int a = 0; a < 5; ++a)
            if (!nonincreasing(*eps[a])) ++bad[a];
        if (!(sync.converged && cap.converged && a6.converged && a7.converged && a8.converged))
            o.fail(tag("unconverged run", seed));
    }
    std::string tally;
    for (int a = 0; a < 5; ++a) {
        if (bad[a] > 0) o.pass = false;
        tally += std::string(a ? ", " : "") + names[a] + " " + std::to_string(100 - bad[a]) + "/100";
    }
    o.detail = (o.detail.empty() ? "" : o.detail + "; ") + "monotone runs: " + tally;
    return o;
}

Outcome centralized_bound() {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t n = 3 + seed % 28;
        auto g = random_strongly_connected(n, 0.2, seed);
        auto r = run_centralized(g, static_cast<std::int64_t>(n));
        Weight eps0 = r.epsilon.front();
        std::int64_t bound = std::min<std::int64_t>(static_cast<std::int64_t>(n) - 1, eps0 / 2);
        if (r.epsilon.back() != 0 || r.iterations > bound)
            o.fail(tag("centralized", seed) + ": " + std::to_string(r.iterations) + " > " + std::to_string(bound));
    }
    return o;
}

Outcome sync_budget() {
    Outcome o;
    std::int64_t worst = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_strongly_connected(20, 0.15, seed);
        for (Weight init : {Weight{1}, Weight{20}}) {
            auto s = init_sync(g, init, seed);
            std::int64_t budget = sync_round_budget(g, total_imbalance(g, s.weights));
            auto r = run_sync(g, std::move(s), budget, false, false);
            if (!r.converged) o.fail(tag("Alg. 2", seed) + " init " + std::to_string(init));
            worst = std::max(worst, r.rounds);
        }
    }
    if (o.pass) o.detail = "max rounds " + std::to_string(worst);
    return o;
}

Outcome delay_invariance() {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_strongly_connected(20, 0.15, seed);
        auto ref = delay_run(g, seed, 0, 0.0, 0, DelayVariant::AlwaysTransmit, false);
        if (!ref.converged) o.fail(tag("zero-delay run", seed));
        for (std::uint64_t sched = 1; sched <= 50; ++sched) {
            auto d = delay_run(g, seed, 10, 0.0, sched * 1000 + seed, DelayVariant::AlwaysTransmit, false);
            if (!d.converged || d.final_weights != ref.final_weights)
                o.fail(tag("graph", seed) + " schedule " + std::to_string(sched));
        }
    }
    return o;
}

Outcome sandwich() {
    Outcome o;
    const int tau = 5;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_strongly_connected(15, 0.2, seed);
        auto star = delay_run(g, seed, 0, 0.0, 0, DelayVariant::AlwaysTransmit, true);
        auto d = delay_run(g, seed, tau, 0.0, seed + 11, DelayVariant::AlwaysTransmit, true);
        // Past the end of a run its state is frozen at the converged values.
        auto at = [](const std::vector<WeightAssignment>& v, std::size_t k) { return v[std::min(k, v.size() - 1)]; };
        std::size_t horizon = std::max(star.perceived.size(), d.perceived.size());
        for (std::size_t k = 0; k < horizon; ++k) {
            if (!leq(at(d.perceived, k), at(star.perceived, k))) o.fail(tag("lower side", seed));
            if (!leq(at(star.perceived, k), at(d.perceived, (k + 1) * (tau + 1)))) o.fail(tag("upper side", seed));
        }
    }
    return o;
}

// Steps until the event-triggered state is settled, then keeps stepping and counts sends.
template <class Settled, class Step>
std::pair<bool, std::uint64_t> quiet_after_convergence(Fabric& f, Settled settled, Step step, std::int64_t budget) {
    std::int64_t k = 0;
    while (!settled() && k++ < budget) step();
    if (!settled()) return {false, 0};
    std::uint64_t before = f.sent();
    for (int i = 0; i < 200; ++i) step();
    return {true, f.sent() - before};
}

Outcome event_equivalence() {
    Outcome o;
    std::uint64_t saved4 = 0, saved7 = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_strongly_connected(15, 0.2, seed);
        auto b = random_feasible_bounds(g, seed);

        auto a3 = delay_run(g, seed, 4, 0.0, seed, DelayVariant::AlwaysTransmit, false);
        Fabric f4(LinkModel(g.edge_count(), 4, 0.0), seed);
        auto s4 = init_delay(g, seed);
        auto [ok4, extra4] = quiet_after_convergence(
            f4,
            [&] { return total_imbalance(g, s4.weights) == 0 && s4.perceived == s4.weights && f4.in_flight() == 0; },
            [&] { step_delay_round(g, s4, f4, DelayVariant::EventTriggered); }, 100000);
        if (!ok4 || s4.weights != a3.final_weights) o.fail(tag("Alg. 4 final weights", seed));
        if (extra4 != 0) o.fail(tag("Alg. 4 sent after convergence", seed));
        saved4 += a3.messages_sent - std::min(a3.messages_sent, f4.sent());

        auto a6 = unreliable_run(g, b, seed, 4, 0.0, UnreliableAlgorithm::Alg6, false);
        Fabric f7(LinkModel(g.edge_count(), 4, 0.0), seed ^ 0x5a5aULL);
        auto s7 = init_unreliable(g, b, seed);
        auto [ok7, extra7] = quiet_after_convergence(
            f7,
            [&] { return total_imbalance(g, s7.weights) == 0 && s7.perceived == s7.weights && f7.in_flight() == 0; },
            [&] { step_alg7(g, b, s7, f7); }, 100000);
        if (!ok7 || s7.weights != a6.weights) o.fail(tag("Alg. 7 final weights", seed));
        if (extra7 != 0) o.fail(tag("Alg. 7 sent after convergence", seed));
        saved7 += a6.messages_sent - std::min(a6.messages_sent, f7.sent());
    }
    if (o.pass) o.detail = "messages saved: Alg. 4 " + std::to_string(saved4) + ", Alg. 7 " + std::to_string(saved7);
    return o;
}

Outcome packet_drops() {
    Outcome o;
    int ok3 = 0, ok8 = 0;
    std::int64_t worst = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_strongly_connected(20, 0.15, seed);
        auto b = random_feasible_bounds(g, seed);
        auto d = delay_run(g, seed, 0, 0.8, seed + 1, DelayVariant::AlwaysTransmit, false);
        if (d.converged && d.epsilon.back() == 0) ++ok3;
        else o.fail(tag("Alg. 3 with drops", seed));
        auto a8 = unreliable_run(g, b, seed, 0, 0.8, UnreliableAlgorithm::Alg8, false);
        if (a8.converged && a8.epsilon.back() == 0) ++ok8;
        else o.fail(tag("Alg. 8", seed));
        worst = std::max({worst, d.rounds, a8.rounds});
    }
    std::string counts = "Alg. 3 " + std::to_string(ok3) + "/20, Alg. 8 " + std::to_string(ok8) + "/20";
    o.detail = o.pass ? counts + ", max rounds " + std::to_string(worst) : o.detail + " (" + counts + ")";
    return o;
}

Outcome ring_periodicity() {
    Outcome o;
    auto g = fx::ring4();
    auto b = fx::uniform_bounds(g, 1, 2);
    std::vector<std::vector<EdgeId>> lists(4);
    for (NodeId j = 0; j < 4; ++j) lists[j] = {g.out_edges(j)[0], g.in_edges(j)[0]};
    EdgeId w21 = g.edge_id(0, 1), w32 = g.edge_id(1, 2), w43 = g.edge_id(2, 3), w14 = g.edge_id(3, 0);
    WeightAssignment init(4);
    init[w21] = 1;
    init[w32] = 1;
    init[w43] = 2;
    init[w14] = 2;
    CapRunOptions opt;
    opt.mode = CapMode::Naive;
    opt.max_rounds = 40;
    opt.record_weights = true;
    auto r = run_cap(g, b, init_cap(g, b, incident_orders_from_edges(g, lists), init), opt);
    const Weight table[5][4] = {{1, 1, 2, 2}, {2, 1, 1, 2}, {2, 2, 1, 1}, {2, 1, 1, 2}, {1, 1, 2, 2}};
    if (r.weight_trace.size() < 41) o.fail("trace too short");
    for (std::size_t k = 0; k < 5 && k < r.weight_trace.size(); ++k) {
        const auto& w = r.weight_trace[k];
        WeightAssignment row{w[w21], w[w32], w[w43], w[w14]};
        if (row != WeightAssignment(table[k], table[k] + 4)) o.fail("table row " + std::to_string(k));
    }
    for (std::size_t k = 0; k + 4 < r.weight_trace.size(); ++k)
        if (r.weight_trace[k + 4] != r.weight_trace[k]) o.fail("w[k+4] != w[k] at k=" + std::to_string(k));
    if (r.converged) o.fail("naive ring converged");
    return o;
}

bool witness_violates(const Digraph& g, const CapacityBounds& b, const FeasibilityVerdict& v) {
    if (v.violating_edge) {
        EdgeId e = g.edge_id(v.violating_edge->from, v.violating_edge->to);
        return b.lo(e) > b.hi(e);
    }
    if (!v.violating_subset) return false;
    std::vector<bool> in_s(g.node_count(), false);
    for (NodeId j : *v.violating_subset) in_s[j] = true;
    Weight in_lower = 0, out_upper = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool t = in_s[g.edge(e).from], h = in_s[g.edge(e).to];
        if (h && !t) in_lower += b.lo(e);
        if (t && !h) out_upper += b.hi(e);
    }
    return in_lower > out_upper;
}

Outcome feasibility_oracle() {
    Outcome o;
    int infeasible = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        std::size_t n = 2 + seed % 9;
        auto g = random_strongly_connected(n, 0.1 + 0.05 * static_cast<double>(seed % 8), seed);
        // Mix independent intervals with instances built around a balanced assignment.
        auto b = seed % 3 == 0 ? random_bounds(g, seed, 3.0, 1.0 + 0.25 * static_cast<double>(seed % 5))
                 : seed % 3 == 1 ? random_feasible_bounds(g, seed, 0.6 + 0.2 * static_cast<double>(seed % 4))
                                 : random_infeasible_bounds(g, seed);
        auto flow = check_circulation_flow(g, b);
        auto brute = check_circulation_bruteforce(g, b);
        if (flow.feasible != brute.feasible) o.fail(tag("verdicts differ", seed));
        if (!flow.feasible) {
            ++infeasible;
            if (!witness_violates(g, b, flow) || !witness_violates(g, b, brute)) o.fail(tag("witness", seed));
        } else {
            auto w = find_balanced_weights_oracle(g, b);
            if (!w || !in_bounds(b, *w) || total_imbalance(g, *w) != 0) o.fail(tag("assignment", seed));
        }
    }
    if (o.pass) o.detail = std::to_string(infeasible) + "/500 infeasible";
    return o;
}

Outcome infeasible_stall() {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_strongly_connected(5 + seed % 16, 0.25, seed);
        auto b = random_infeasible_bounds(g, seed);
        for (const auto& [e, ok] : check_edge_intervals(g, b))
            if (!ok) o.fail(tag("interval check failed", seed));
        auto r = cap_run(g, b, seed, CapMode::Standard, {}, 10000);
        if (r.converged) o.fail(tag("converged", seed));
        for (Weight eps : r.epsilon)
            if (eps == 0) o.fail(tag("reached eps 0", seed));
        // V- only shrinks, so it is eventually constant.
        auto neg = [&](std::size_t k) {
            std::vector<bool> v(g.node_count());
            for (NodeId j = 0; j < g.node_count(); ++j) v[j] = r.imbalance[k][j] < 0;
            return v;
        };
        for (std::size_t k = 1; k < r.imbalance.size(); ++k) {
            auto prev = neg(k - 1), cur = neg(k);
            for (NodeId j = 0; j < g.node_count(); ++j)
                if (cur[j] && !prev[j]) o.fail(tag("V- grew", seed));
        }
        auto last = neg(r.imbalance.size() - 1);
        for (std::size_t k = r.imbalance.size() / 2; k < r.imbalance.size(); ++k)
            if (neg(k) != last) o.fail(tag("V- still changing in the second half", seed));
    }
    return o;
}

Outcome six_node_example() {
    Outcome o;
    auto g = fx::six_node();
    std::vector<std::vector<EdgeId>> prio(6);
    auto nbrs = fx::six_node_priorities();
    for (NodeId j = 0; j < 6; ++j)
        for (NodeId l : nbrs[j]) prio[j].push_back(g.edge_id(j, l));
    auto s = init_delay(g, prio);
    auto xbar = imbalances_split(g, s.perceived, s.weights);
    for (NodeId j = 0; j < 6; ++j) {
        bool expect_pos = j == 0 || j == 1 || j == 3;
        if ((xbar[j] > 0) != expect_pos || (expect_pos && xbar[j] != 1)) o.fail("initial positive set");
    }
    ScriptedDelays sd;
    sd.add({g.edge_id(0, 2), Direction::Forward}, 0, 6);
    sd.add({g.edge_id(1, 2), Direction::Forward}, 0, 3);
    sd.add({g.edge_id(3, 4), Direction::Forward}, 0, 7);
    sd.fallback = 7;
    Fabric f(LinkModel(g.edge_count(), 0, 0.0), 0, sd);
    // s.weights after k steps is f[k]; v2's raise (tau = 3) lands during round 4.
    for (int k = 0; k < 4; ++k) step_delay_round(g, s, f, DelayVariant::AlwaysTransmit);
    if (s.weights[g.edge_id(2, 0)] != 1) o.fail("v3 top edge raised before round 5");
    step_delay_round(g, s, f, DelayVariant::AlwaysTransmit);
    if (s.weights[g.edge_id(2, 0)] != 2) o.fail("v3 top edge is not 2 at round 5");
    if (s.weights[g.edge_id(2, 1)] != 1) o.fail("v3 second edge is not 1 at round 5");
    if (s.perceived[g.edge_id(0, 2)] != 1) o.fail("v1's raise reached v3 too early");
    return o;
}

Outcome bounds_safety() {
    Outcome o;
    std::uint64_t alg5_clamps = 0, other_clamps = 0;
    std::size_t runs = 0;
    auto check = [&](const std::vector<WeightAssignment>& trace, const CapacityBounds& b, const std::string& what) {
        for (const auto& w : trace)
            if (!in_bounds(b, w)) o.fail(what + ": out of bounds");
        ++runs;
    };
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_strongly_connected(4 + seed % 20, 0.25, seed);
        auto b = seed % 4 == 3 ? random_infeasible_bounds(g, seed) : random_feasible_bounds(g, seed, 1.0 + seed % 3);
        auto std_run = cap_run(g, b, seed, CapMode::Standard, {}, 3000);
        check(std_run.weight_trace, b, tag("cap", seed));
        alg5_clamps += std_run.clamp_engaged;
        for (CapMode m : {CapMode::Enhanced, CapMode::Naive}) {
            auto r = cap_run(g, b, seed, m, {}, 3000);
            check(r.weight_trace, b, tag("cap variant", seed));
            other_clamps += r.clamp_engaged;
        }
        auto t = cap_run(g, b, seed, CapMode::Targeted, reachable_targets(g, b, seed), 3000);
        check(t.weight_trace, b, tag("cap-targeted", seed));
        for (auto [alg, tau, q] : {std::tuple{UnreliableAlgorithm::Alg6, 4, 0.0}, std::tuple{UnreliableAlgorithm::Alg7, 4, 0.0},
                                   std::tuple{UnreliableAlgorithm::Alg8, 0, 0.6}}) {
            Fabric f(LinkModel(g.edge_count(), tau, q), seed);
            UnreliableRunOptions opt;
            opt.max_rounds = 3000;
            opt.record_weights = true;
            auto r = run_unreliable(g, b, init_unreliable(g, b, seed), f, alg, opt);
            check(r.weight_trace, b, tag("unreliable owned", seed));
            check(r.perceived_trace, b, tag("unreliable perceived", seed));
        }
    }
    if (alg5_clamps != 0) o.fail("Alg. 5 clamp engaged " + std::to_string(alg5_clamps) + " times");
    if (o.pass) o.detail = std::to_string(runs) + " traces; clamps in variants " + std::to_string(other_clamps);
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "conservation", conservation},
        {2, "monotone total imbalance", monotone_epsilon},
        {3, "centralized iteration bound", centralized_bound},
        {4, "sync round budget", sync_budget},
        {5, "delay invariance", delay_invariance},
        {6, "sandwich inequality", sandwich},
        {7, "event-triggered equivalence", event_equivalence},
        {8, "packet drops", packet_drops},
        {9, "ring periodicity", ring_periodicity},
        {10, "feasibility oracle equivalence", feasibility_oracle},
        {11, "infeasible stall", infeasible_stall},
        {12, "six-node checkpoints", six_node_example},
        {13, "bounds safety", bounds_safety},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s criterion %d (%s): %.1fs%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.empty() ? "" : "; ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
