#include "wbal/instances.hpp"

#include "wbal/centralized.hpp"
#include "wbal/errors.hpp"
#include "wbal/rng.hpp"

#include <algorithm>

namespace wbal {

WeightAssignment random_balanced_weights(const Digraph& g, std::uint64_t seed) {
    auto rng = make_rng(seed, {0x62616cULL});
    std::uniform_int_distribution<Weight> pick(1, 4);
    WeightAssignment w(g.edge_count());
    for (auto& v : w) v = pick(rng);
    return balance_from(g, std::move(w), static_cast<std::int64_t>(g.node_count())).final_weights;
}

CapacityBounds random_feasible_bounds(const Digraph& g, std::uint64_t seed, double slack) {
    auto f = random_balanced_weights(g, seed);
    auto rng = make_rng(seed, {0x666561ULL});
    std::uniform_real_distribution<double> off(0.0, slack);
    std::vector<Interval> iv(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        double fv = static_cast<double>(f[e]);
        double l = std::max(fv - off(rng), 0.25);
        double u = fv + off(rng);
        iv[e] = {l, u};
    }
    return CapacityBounds(g, std::move(iv));
}

CapacityBounds random_bounds(const Digraph& g, std::uint64_t seed, double max_l, double max_width) {
    auto rng = make_rng(seed, {0x726e64ULL});
    std::uniform_real_distribution<double> lo(0.5, max_l), width(0.0, max_width);
    std::vector<Interval> iv(g.edge_count());
    for (auto& v : iv) {
        double l = lo(rng);
        v = {l, l + width(rng)};
    }
    return CapacityBounds(g, std::move(iv));
}

CapacityBounds random_infeasible_bounds(const Digraph& g, std::uint64_t seed, int attempts) {
    // Every interval holds an integer, so only the cut condition can fail.
    for (int a = 0; a < attempts; ++a) {
        auto rng = make_rng(seed, {0x696e66ULL, static_cast<std::uint64_t>(a)});
        std::uniform_int_distribution<int> centre(1, 4);
        std::uniform_real_distribution<double> below(0.0, 0.9), above(0.0, 1.5);
        std::vector<Interval> iv(g.edge_count());
        for (auto& v : iv) {
            double c = centre(rng);
            v = {c - below(rng), c + above(rng)};
        }
        CapacityBounds b(g, std::move(iv));
        if (!check_circulation_flow(g, b).feasible) return b;
    }
    throw Error(ErrorCode::DomainError, "no infeasible instance found");
}

} // namespace wbal
