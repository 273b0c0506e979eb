#include "wbal/feasibility.hpp"

#include "wbal/errors.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace wbal {

namespace {

constexpr double kSnap = 1e-9;
constexpr std::size_t kBruteForceMax = 20;

double snap(double v) {
    double r = std::round(v);
    return std::abs(v - r) < kSnap ? r : v;
}

// Residual network for shortest-augmenting-path max flow.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n) : adj_(n) {}

    std::size_t add_arc(std::size_t a, std::size_t b, Weight cap) {
        adj_[a].push_back(to_.size());
        to_.push_back(b);
        cap_.push_back(cap);
        adj_[b].push_back(to_.size());
        to_.push_back(a);
        cap_.push_back(0);
        return to_.size() - 2;
    }

    Weight max_flow(std::size_t s, std::size_t t) {
        Weight total = 0;
        std::vector<std::size_t> via(adj_.size());
        for (;;) {
            std::vector<bool> seen(adj_.size(), false);
            std::queue<std::size_t> q;
            q.push(s);
            seen[s] = true;
            while (!q.empty() && !seen[t]) {
                std::size_t v = q.front();
                q.pop();
                for (std::size_t a : adj_[v]) {
                    if (cap_[a] > 0 && !seen[to_[a]]) {
                        seen[to_[a]] = true;
                        via[to_[a]] = a;
                        q.push(to_[a]);
                    }
                }
            }
            if (!seen[t]) return total;
            Weight push = std::numeric_limits<Weight>::max();
            for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
            for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) {
                cap_[via[v]] -= push;
                cap_[via[v] ^ 1] += push;
            }
            total += push;
        }
    }

    std::vector<bool> residual_reachable(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t a : adj_[v])
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = true;
                    stack.push_back(to_[a]);
                }
        }
        return seen;
    }

    Weight flow_on(std::size_t arc) const { return cap_[arc ^ 1]; }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> to_;
    std::vector<Weight> cap_;
};

struct FlowOutcome {
    bool feasible;
    std::vector<bool> source_side; // per graph node
    WeightAssignment weights;
};

// Lower-bounded circulation reduced to max flow from a super source to a super sink.
FlowOutcome solve_circulation(const Digraph& g, const CapacityBounds& b) {
    const std::size_t n = g.node_count();
    const std::size_t s = n, t = n + 1;
    FlowNetwork net(n + 2);
    std::vector<std::size_t> arcs(g.edge_count());
    std::vector<Weight> excess(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        arcs[e] = net.add_arc(ed.from, ed.to, b.hi(e) - b.lo(e));
        excess[ed.to] += b.lo(e);
        excess[ed.from] -= b.lo(e);
    }
    Weight demand = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (excess[v] > 0) {
            net.add_arc(s, v, excess[v]);
            demand += excess[v];
        } else if (excess[v] < 0) {
            net.add_arc(v, t, -excess[v]);
        }
    }
    FlowOutcome out;
    out.feasible = net.max_flow(s, t) == demand;
    if (out.feasible) {
        out.weights.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) out.weights[e] = b.lo(e) + net.flow_on(arcs[e]);
    } else {
        auto seen = net.residual_reachable(s);
        out.source_side.assign(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return out;
}

std::optional<Edge> first_bad_interval(const Digraph& g, const CapacityBounds& b) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (b.lo(e) > b.hi(e)) return g.edge(e);
    return std::nullopt;
}

FeasibilityVerdict infeasible_at(const Digraph& g, const std::vector<bool>& in_s) {
    FeasibilityVerdict v;
    v.feasible = false;
    std::vector<NodeId> subset;
    for (NodeId j = 0; j < in_s.size(); ++j)
        if (in_s[j]) subset.push_back(j);
    describe_cut(g, subset, v);
    v.violating_subset = std::move(subset);
    return v;
}

} // namespace

Weight ceil_snapped(double v) { return static_cast<Weight>(std::ceil(snap(v))); }
Weight floor_snapped(double v) { return static_cast<Weight>(std::floor(snap(v))); }

CapacityBounds::CapacityBounds(const Digraph& g, std::vector<Interval> intervals)
    : iv_(std::move(intervals)) {
    if (iv_.size() != g.edge_count())
        throw Error(ErrorCode::MissingBound, "expected " + std::to_string(g.edge_count()) +
                                                 " intervals, got " + std::to_string(iv_.size()));
    for (EdgeId e = 0; e < iv_.size(); ++e) {
        const auto& ed = g.edge(e);
        std::string where = "edge (" + std::to_string(ed.from) + "," + std::to_string(ed.to) + ")";
        if (!(iv_[e].l > 0)) throw Error(ErrorCode::NonPositiveLowerBound, where);
        if (!(iv_[e].u >= iv_[e].l)) throw Error(ErrorCode::InvertedInterval, where);
    }
}

Weight CapacityBounds::lo(EdgeId e) const { return ceil_snapped(iv_.at(e).l); }
Weight CapacityBounds::hi(EdgeId e) const { return floor_snapped(iv_.at(e).u); }

std::vector<std::pair<Edge, bool>> check_edge_intervals(const Digraph& g, const CapacityBounds& b) {
    if (b.size() != g.edge_count()) throw Error(ErrorCode::MissingBound, "bounds do not cover the edge set");
    std::vector<std::pair<Edge, bool>> r;
    r.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) r.emplace_back(g.edge(e), b.lo(e) <= b.hi(e));
    return r;
}

bool cut_condition_holds(const Digraph& g, const CapacityBounds& b, const std::vector<bool>& in_s) {
    Weight in_lower = 0, out_upper = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        bool tail = in_s[g.edge(e).from], head = in_s[g.edge(e).to];
        if (head && !tail) in_lower += b.lo(e);
        if (tail && !head) out_upper += b.hi(e);
    }
    return in_lower <= out_upper;
}

void describe_cut(const Digraph& g, const std::vector<NodeId>& subset, FeasibilityVerdict& v) {
    std::vector<bool> in_s(g.node_count(), false);
    for (NodeId j : subset) in_s.at(j) = true;
    v.cut_in_edges.clear();
    v.cut_out_edges.clear();
    for (const auto& ed : g.edges()) {
        if (in_s[ed.to] && !in_s[ed.from]) v.cut_in_edges.push_back(ed);
        if (in_s[ed.from] && !in_s[ed.to]) v.cut_out_edges.push_back(ed);
    }
}

FeasibilityVerdict check_circulation_bruteforce(const Digraph& g, const CapacityBounds& b) {
    const std::size_t n = g.node_count();
    if (n > kBruteForceMax) throw Error(ErrorCode::TooManyNodes, "n=" + std::to_string(n));
    if (b.size() != g.edge_count()) throw Error(ErrorCode::MissingBound, "bounds do not cover the edge set");
    if (auto bad = first_bad_interval(g, b)) {
        FeasibilityVerdict v;
        v.feasible = false;
        v.violating_edge = bad;
        return v;
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<bool> in_s(n);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        for (NodeId j = 0; j < n; ++j) in_s[j] = (mask >> j) & 1U;
        if (!cut_condition_holds(g, b, in_s)) return infeasible_at(g, in_s);
    }
    return {};
}

FeasibilityVerdict check_circulation_flow(const Digraph& g, const CapacityBounds& b) {
    if (b.size() != g.edge_count()) throw Error(ErrorCode::MissingBound, "bounds do not cover the edge set");
    if (auto bad = first_bad_interval(g, b)) {
        FeasibilityVerdict v;
        v.feasible = false;
        v.violating_edge = bad;
        return v;
    }
    auto out = solve_circulation(g, b);
    if (out.feasible) return {};
    return infeasible_at(g, out.source_side);
}

std::optional<WeightAssignment> find_balanced_weights_oracle(const Digraph& g, const CapacityBounds& b) {
    if (b.size() != g.edge_count() || first_bad_interval(g, b)) return std::nullopt;
    auto out = solve_circulation(g, b);
    if (!out.feasible) return std::nullopt;
    return out.weights;
}

} // namespace wbal
