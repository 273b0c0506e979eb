#pragma once

#include "wbal/digraph.hpp"
#include "wbal/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace wbal {

enum class Direction : std::uint8_t { Forward = 0, Reverse = 1 }; // tail->head, head->tail

struct Channel {
    EdgeId edge;
    Direction dir;

    std::uint64_t id() const noexcept { return 2 * static_cast<std::uint64_t>(edge) + static_cast<std::uint64_t>(dir); }
    auto operator<=>(const Channel&) const = default;
};

enum class PayloadKind : std::uint8_t { FullWeight, ChangeAmount, DesiredWeight };

struct Message {
    Channel channel;
    NodeId to;
    PayloadKind kind;
    Weight value;
    std::int64_t sent_round;
    std::int64_t deliver_round = -1;
};

// Per-channel max delay and drop probability; indexed by Channel::id().
class LinkModel {
public:
    LinkModel() = default;
    LinkModel(std::size_t edge_count, int max_delay, double drop_prob);

    void set(Channel c, int max_delay, double drop_prob);
    int max_delay(Channel c) const { return tau_.at(c.id()); }
    double drop_prob(Channel c) const { return q_.at(c.id()); }
    int max_delay_overall() const;
    std::size_t channel_count() const noexcept { return tau_.size(); }

private:
    std::vector<int> tau_;
    std::vector<double> q_;
};

// Fixed delays for chosen (channel, send_round) pairs, with an optional fallback.
struct ScriptedDelays {
    std::map<std::pair<std::uint64_t, std::int64_t>, int> entries;
    std::optional<int> fallback;

    void add(Channel c, std::int64_t send_round, int delay) { entries[{c.id(), send_round}] = delay; }
};

class Fabric {
public:
    Fabric(LinkModel links, std::uint64_t seed, ScriptedDelays script = {});

    // Drop draw first, then delay draw; deliver_round = sent_round + 1 + tau.
    void send(Message m);

    // All messages due at `round`, grouped by recipient, each group in (sent_round, channel) order.
    std::map<NodeId, std::vector<Message>> deliver(std::int64_t round);

    std::size_t in_flight() const noexcept { return pending_.size(); }
    std::uint64_t sent() const noexcept { return sent_; }
    std::uint64_t dropped() const noexcept { return dropped_; }
    const LinkModel& links() const noexcept { return links_; }

private:
    struct Later {
        bool operator()(const Message& a, const Message& b) const;
    };

    Rng& stream(Channel c);

    LinkModel links_;
    std::uint64_t seed_;
    ScriptedDelays script_;
    std::unordered_map<std::uint64_t, Rng> streams_;
    std::priority_queue<Message, std::vector<Message>, Later> pending_;
    std::int64_t last_round_ = -1;
    std::uint64_t sent_ = 0;
    std::uint64_t dropped_ = 0;
};

// Smallest k with q^k <= eps.
std::int64_t retransmission_bound(double q, double eps);

} // namespace wbal
