#pragma once

#include "wbal/digraph.hpp"

#include <optional>
#include <vector>

namespace wbal {

struct Interval {
    double l;
    double u;
};

// One interval per EdgeId.
class CapacityBounds {
public:
    CapacityBounds() = default;
    // Throws MissingBound on size mismatch, NonPositiveLowerBound, InvertedInterval.
    CapacityBounds(const Digraph& g, std::vector<Interval> intervals);

    const Interval& at(EdgeId e) const { return iv_.at(e); }
    std::size_t size() const noexcept { return iv_.size(); }

    Weight lo(EdgeId e) const; // ceil(l)
    Weight hi(EdgeId e) const; // floor(u)

private:
    std::vector<Interval> iv_;
};

// ceil/floor after snapping values within 1e-9 of an integer.
Weight ceil_snapped(double v);
Weight floor_snapped(double v);

struct FeasibilityVerdict {
    bool feasible = true;
    std::optional<Edge> violating_edge;            // condition (i) failure
    std::optional<std::vector<NodeId>> violating_subset;
    std::vector<Edge> cut_in_edges;                // head in S, tail outside
    std::vector<Edge> cut_out_edges;               // tail in S, head outside
};

std::vector<std::pair<Edge, bool>> check_edge_intervals(const Digraph& g, const CapacityBounds& b);

// Cut condition for one subset: sum of ceil(l) over in-cut <= sum of floor(u) over out-cut.
bool cut_condition_holds(const Digraph& g, const CapacityBounds& b, const std::vector<bool>& in_s);

// Fills cut edge lists for `subset` into `v`.
void describe_cut(const Digraph& g, const std::vector<NodeId>& subset, FeasibilityVerdict& v);

FeasibilityVerdict check_circulation_bruteforce(const Digraph& g, const CapacityBounds& b);
FeasibilityVerdict check_circulation_flow(const Digraph& g, const CapacityBounds& b);

std::optional<WeightAssignment> find_balanced_weights_oracle(const Digraph& g, const CapacityBounds& b);

} // namespace wbal
