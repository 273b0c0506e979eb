#pragma once

#include "wbal/digraph.hpp"
#include "wbal/netsim.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wbal {

enum class DelayVariant { AlwaysTransmit, EventTriggered };

// weights[e] is owned by the tail; perceived[e] is the head's latest copy.
struct DelayState {
    WeightAssignment weights;
    WeightAssignment perceived;
    std::vector<std::vector<EdgeId>> priority; // per node, out-edges in priority order
    std::int64_t round = 0;
};

DelayState init_delay(const Digraph& g, std::uint64_t ordering_seed);
DelayState init_delay(const Digraph& g, std::vector<std::vector<EdgeId>> priority);

// Max rule. Returns true if any perceived value rose. Throws WrongKind.
bool receive_updates(WeightAssignment& perceived, const std::vector<Message>& msgs);

// Delivers round s.round into s.perceived; result[j] tells whether node j saw an increase.
std::vector<bool> receive_phase(const Digraph& g, DelayState& s, Fabric& fabric);

// Compute and transmit, then advance s.round.
void act_phase(const Digraph& g, DelayState& s, Fabric& fabric, DelayVariant variant,
               const std::vector<bool>& changed);

void step_delay_round(const Digraph& g, DelayState& s, Fabric& fabric, DelayVariant variant);

struct DelayRunOptions {
    DelayVariant variant = DelayVariant::AlwaysTransmit;
    std::int64_t max_rounds = 100000;
    bool record_imbalance = false;
    bool record_perceived = false;
    bool throw_on_budget = true;
};

struct DelayRunResult {
    WeightAssignment final_weights;
    std::int64_t rounds = 0;
    bool converged = false;
    std::vector<Weight> epsilon;          // true, start of each round
    std::vector<Weight> epsilon_delayed;  // from perceived after that round's receive
    std::vector<std::vector<Weight>> imbalance;
    std::vector<WeightAssignment> perceived; // after each round's receive
    std::vector<WeightAssignment> weights;   // start of each round, with perceived
    std::uint64_t messages_sent = 0;
};

// Stops once eps = 0 and every perceived value equals its weight; event-triggered runs
// also need an empty fabric. Throws Diverged at max_rounds unless throw_on_budget is false.
DelayRunResult run_delay(const Digraph& g, DelayState s, Fabric& fabric, const DelayRunOptions& opt);

} // namespace wbal
