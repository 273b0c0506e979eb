#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"

#include <cstdint>

namespace wbal {

// Balanced integer weights >= 1: random start in [1, 4], then routed to balance.
WeightAssignment random_balanced_weights(const Digraph& g, std::uint64_t seed);

// Intervals around a random balanced assignment f: l in (f - slack, f], u in [f, f + slack).
CapacityBounds random_feasible_bounds(const Digraph& g, std::uint64_t seed, double slack = 2.0);

// Independent random intervals; l in [0.5, max_l), width in [0, max_width). May be infeasible.
CapacityBounds random_bounds(const Digraph& g, std::uint64_t seed, double max_l = 4.0, double max_width = 2.0);

// Random intervals that contain an integer each yet fail the cut condition.
// Retries seeds derived from `seed`; throws DomainError if none found in `attempts`.
CapacityBounds random_infeasible_bounds(const Digraph& g, std::uint64_t seed, int attempts = 1000);

} // namespace wbal
