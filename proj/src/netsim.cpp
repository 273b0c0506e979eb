#include "wbal/netsim.hpp"

#include "wbal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wbal {

LinkModel::LinkModel(std::size_t edge_count, int max_delay, double drop_prob)
    : tau_(2 * edge_count, max_delay), q_(2 * edge_count, drop_prob) {
    if (max_delay < 0) throw Error(ErrorCode::DomainError, "max_delay < 0");
    if (!(drop_prob >= 0.0 && drop_prob < 1.0)) throw Error(ErrorCode::DomainError, "drop_prob outside [0,1)");
}

void LinkModel::set(Channel c, int max_delay, double drop_prob) {
    if (max_delay < 0) throw Error(ErrorCode::DomainError, "max_delay < 0");
    if (!(drop_prob >= 0.0 && drop_prob < 1.0)) throw Error(ErrorCode::DomainError, "drop_prob outside [0,1)");
    tau_.at(c.id()) = max_delay;
    q_.at(c.id()) = drop_prob;
}

int LinkModel::max_delay_overall() const {
    return tau_.empty() ? 0 : *std::max_element(tau_.begin(), tau_.end());
}

bool Fabric::Later::operator()(const Message& a, const Message& b) const {
    if (a.deliver_round != b.deliver_round) return a.deliver_round > b.deliver_round;
    if (a.sent_round != b.sent_round) return a.sent_round > b.sent_round;
    return a.channel.id() > b.channel.id();
}

Fabric::Fabric(LinkModel links, std::uint64_t seed, ScriptedDelays script)
    : links_(std::move(links)), seed_(seed), script_(std::move(script)) {}

Rng& Fabric::stream(Channel c) {
    auto it = streams_.find(c.id());
    if (it == streams_.end()) it = streams_.emplace(c.id(), make_rng(seed_, {0x6c696e6bULL, c.id()})).first;
    return it->second;
}

void Fabric::send(Message m) {
    ++sent_;
    const double q = links_.drop_prob(m.channel);
    Rng& rng = stream(m.channel);
    if (q > 0.0 && std::bernoulli_distribution(q)(rng)) {
        ++dropped_;
        return;
    }
    int tau = 0;
    auto hit = script_.entries.find({m.channel.id(), m.sent_round});
    if (hit != script_.entries.end()) {
        tau = hit->second;
    } else if (script_.fallback) {
        tau = *script_.fallback;
    } else if (int tmax = links_.max_delay(m.channel); tmax > 0) {
        tau = std::uniform_int_distribution<int>(0, tmax)(rng);
    }
    m.deliver_round = m.sent_round + 1 + tau;
    pending_.push(m);
}

std::map<NodeId, std::vector<Message>> Fabric::deliver(std::int64_t round) {
    if (round < last_round_) throw Error(ErrorCode::DomainError, "deliver rounds must not decrease");
    last_round_ = round;
    std::map<NodeId, std::vector<Message>> out;
    while (!pending_.empty() && pending_.top().deliver_round <= round) {
        const Message& m = pending_.top();
        if (m.deliver_round < round)
            throw Error(ErrorCode::DomainError, "message due at round " + std::to_string(m.deliver_round) +
                                                    " was never collected");
        out[m.to].push_back(m);
        pending_.pop();
    }
    return out;
}

std::int64_t retransmission_bound(double q, double eps) {
    if (!(q > 0.0 && q < 1.0) || !(eps > 0.0 && eps < 1.0))
        throw Error(ErrorCode::DomainError, "need 0 < q < 1 and 0 < eps < 1");
    auto k = static_cast<std::int64_t>(std::ceil(std::log(eps) / std::log(q)));
    k = std::max<std::int64_t>(k, 1);
    while (std::pow(q, static_cast<double>(k)) > eps) ++k;
    while (k > 1 && std::pow(q, static_cast<double>(k - 1)) <= eps) --k;
    return k;
}

} // namespace wbal
