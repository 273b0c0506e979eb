#include "wbal/harness.hpp"

#include "wbal/balancer_capacity.hpp"
#include "wbal/balancer_capacity_unreliable.hpp"
#include "wbal/balancer_delay.hpp"
#include "wbal/balancer_sync.hpp"
#include "wbal/centralized.hpp"
#include "wbal/errors.hpp"
#include "wbal/instances.hpp"
#include "wbal/io.hpp"
#include "wbal/netsim.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

namespace wbal {

using nlohmann::json;

namespace {

constexpr std::int64_t kDefaultDelayRounds = 100000;
constexpr std::int64_t kDefaultCapRounds = 10000;

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

std::filesystem::path resolve(const ExperimentConfig& cfg, const std::string& file) {
    std::filesystem::path p(file);
    return p.is_absolute() || cfg.base_dir.empty() ? p : cfg.base_dir / p;
}

Digraph resolve_graph(const ExperimentConfig& cfg, std::uint64_t seed) {
    const json& gj = cfg.graph;
    if (gj.contains("file")) return graph_from_json(read_json(resolve(cfg, gj.at("file").get<std::string>())));
    if (gj.contains("generate")) {
        const json& gen = gj.at("generate");
        return random_strongly_connected(gen.at("n").get<std::size_t>(), gen.value("p", 0.0),
                                         gen.value("seed", seed));
    }
    if (gj.contains("edges")) return graph_from_json(gj);
    config_error("graph needs \"file\", \"generate\" or inline \"n\"/\"edges\"");
}

std::optional<CapacityBounds> resolve_bounds(const ExperimentConfig& cfg, const Digraph& g, std::uint64_t seed) {
    const json& bj = cfg.bounds;
    if (bj.is_null()) return std::nullopt;
    if (bj.contains("file")) return bounds_from_json(g, read_json(resolve(cfg, bj.at("file").get<std::string>())));
    if (bj.contains("generate")) {
        const json& gen = bj.at("generate");
        std::string kind = gen.value("kind", "feasible");
        std::uint64_t s = gen.value("seed", seed);
        if (kind == "feasible") return random_feasible_bounds(g, s, gen.value("slack", 2.0));
        if (kind == "random") return random_bounds(g, s, gen.value("max_l", 4.0), gen.value("max_width", 2.0));
        if (kind == "infeasible") return random_infeasible_bounds(g, s);
        config_error("unknown bounds kind '" + kind + "'");
    }
    if (bj.contains("bounds")) return bounds_from_json(g, bj);
    config_error("bounds need \"file\", \"generate\" or inline \"bounds\"");
}

// Applies a link field (number, per-edge numbers, or [from, to, v] / [from, to, fwd, rev] rows).
template <class Set>
void apply_link_field(const Digraph& g, const json& field, Set set) {
    if (field.is_number()) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            set({e, Direction::Forward}, field);
            set({e, Direction::Reverse}, field);
        }
        return;
    }
    if (!field.is_array()) config_error("link field must be a number or a list");
    if (field.size() == g.edge_count() && std::all_of(field.begin(), field.end(), [](const json& v) { return v.is_number(); })) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            set({e, Direction::Forward}, field[e]);
            set({e, Direction::Reverse}, field[e]);
        }
        return;
    }
    for (const auto& row : field) {
        if (!row.is_array() || row.size() < 3 || row.size() > 4) config_error("link rows are [from, to, v] or [from, to, fwd, rev]");
        EdgeId e = g.edge_id(row[0].get<NodeId>(), row[1].get<NodeId>());
        set({e, Direction::Forward}, row[2]);
        set({e, Direction::Reverse}, row.size() == 4 ? row[3] : row[2]);
    }
}

LinkModel resolve_links(const ExperimentConfig& cfg, const Digraph& g) {
    LinkModel links(g.edge_count(), 0, 0.0);
    if (cfg.link.is_null()) return links;
    std::vector<int> tau(2 * g.edge_count(), 0);
    std::vector<double> q(2 * g.edge_count(), 0.0);
    if (cfg.link.contains("tau_max"))
        apply_link_field(g, cfg.link.at("tau_max"), [&](Channel c, const json& v) { tau[c.id()] = v.get<int>(); });
    if (cfg.link.contains("drop_prob"))
        apply_link_field(g, cfg.link.at("drop_prob"), [&](Channel c, const json& v) { q[c.id()] = v.get<double>(); });
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (Direction d : {Direction::Forward, Direction::Reverse}) {
            Channel c{e, d};
            links.set(c, tau[c.id()], q[c.id()]);
        }
    return links;
}

ScriptedDelays resolve_script(const ExperimentConfig& cfg, const Digraph& g) {
    ScriptedDelays sd;
    const json& sj = cfg.scripted_delays;
    if (sj.is_null()) return sd;
    const json* entries = &sj;
    if (sj.is_object()) {
        if (sj.contains("default")) sd.fallback = sj.at("default").get<int>();
        if (!sj.contains("entries")) return sd;
        entries = &sj.at("entries");
    }
    for (const auto& en : *entries) {
        const json& ed = en.at("edge");
        EdgeId e = g.edge_id(ed.at(0).get<NodeId>(), ed.at(1).get<NodeId>());
        std::string dir = en.value("direction", "forward");
        if (dir != "forward" && dir != "reverse") config_error("direction must be forward or reverse");
        sd.add({e, dir == "forward" ? Direction::Forward : Direction::Reverse}, en.at("send_round").get<std::int64_t>(),
               en.at("delay").get<int>());
    }
    return sd;
}

std::uint64_t fabric_seed(const ExperimentConfig& cfg, std::uint64_t seed) {
    std::uint64_t link_seed = cfg.link.is_object() ? cfg.link.value("seed", std::uint64_t{0}) : 0;
    return link_seed * 0x9E3779B97F4A7C15ULL + seed;
}

std::vector<std::vector<EdgeId>> resolve_out_orders(const ExperimentConfig& cfg, const Digraph& g, std::uint64_t seed) {
    if (cfg.orders.is_null()) return random_out_orderings(g, seed);
    if (!cfg.orders.is_array() || cfg.orders.size() != g.node_count()) config_error("orders: one list per node");
    std::vector<std::vector<EdgeId>> ord(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j) {
        for (const auto& nb : cfg.orders[j]) ord[j].push_back(g.edge_id(j, nb.get<NodeId>()));
        auto sorted = ord[j];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.out_edges(j)) config_error("orders: node " + std::to_string(j) + " must list each out-neighbor once");
    }
    return ord;
}

std::vector<IncidentOrder> resolve_incident_orders(const ExperimentConfig& cfg, const Digraph& g, std::uint64_t seed) {
    if (cfg.orders.is_null()) return random_incident_orders(g, seed);
    if (!cfg.orders.is_array() || cfg.orders.size() != g.node_count()) config_error("orders: one list per node");
    std::vector<std::vector<EdgeId>> lists(g.node_count());
    for (NodeId j = 0; j < g.node_count(); ++j)
        for (const auto& ed : cfg.orders[j]) lists[j].push_back(g.edge_id(ed.at(0).get<NodeId>(), ed.at(1).get<NodeId>()));
    return incident_orders_from_edges(g, lists);
}

std::optional<WeightAssignment> resolve_initial(const ExperimentConfig& cfg, const Digraph& g) {
    if (cfg.initial_weights.is_null()) return std::nullopt;
    WeightAssignment w(g.edge_count(), 0);
    std::vector<bool> have(g.edge_count(), false);
    for (const auto& row : cfg.initial_weights) {
        EdgeId e = g.edge_id(row.at(0).get<NodeId>(), row.at(1).get<NodeId>());
        w[e] = row.at(2).get<Weight>();
        have[e] = true;
    }
    if (std::find(have.begin(), have.end(), false) != have.end())
        throw Error(ErrorCode::MissingWeight, "initial_weights must cover every edge");
    return w;
}

void push_row(RunOutput& out, std::int64_t round, const std::vector<Weight>& x, std::optional<Weight> eps_p) {
    out.trace.rows.push_back({round, total_imbalance(x), eps_p, x});
}

void finish(RunOutput& out, const WeightAssignment& final_w, bool converged, std::int64_t rounds) {
    out.summary.converged = converged;
    out.summary.rounds = rounds;
    out.summary.final_epsilon = total_imbalance(out.graph, final_w);
    out.summary.weights_digest = weights_digest(out.graph, final_w);
}

CapMode cap_mode(const std::string& id) {
    if (id == "cap-enhanced") return CapMode::Enhanced;
    if (id == "cap-naive") return CapMode::Naive;
    if (id == "cap-targeted") return CapMode::Targeted;
    return CapMode::Standard;
}

} // namespace

const std::vector<std::string>& algorithm_ids() {
    static const std::vector<std::string> ids{"centralized", "sync",    "sync-async-script", "delay",
                                              "delay-event", "cap",     "cap-enhanced",      "cap-naive",
                                              "cap-targeted", "cap-delay", "cap-event",      "cap-drop"};
    return ids;
}

bool is_cap_algorithm(const std::string& id) { return id.rfind("cap", 0) == 0; }

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) config_error("config must be a JSON object");
    ExperimentConfig c;
    c.base_dir = base_dir;
    try {
        c.algorithm = j.at("algorithm").get<std::string>();
        const auto& ids = algorithm_ids();
        if (std::find(ids.begin(), ids.end(), c.algorithm) == ids.end()) config_error("unknown algorithm '" + c.algorithm + "'");
        if (!j.contains("graph")) config_error("missing \"graph\"");
        c.graph = j.at("graph");
        c.bounds = j.value("bounds", json());
        c.link = j.value("link", json());
        c.orders = j.value("orders", json());
        c.initial_weights = j.value("initial_weights", json());
        c.scripted_delays = j.value("scripted_delays", json());
        if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        if (c.seeds.empty()) config_error("\"seeds\" must not be empty");
        if (j.contains("max_rounds")) c.max_rounds = j.at("max_rounds").get<std::int64_t>();
        if (j.contains("init_weight")) c.init_weight = j.at("init_weight").get<Weight>();
        if (j.contains("targets")) c.targets = j.at("targets").get<std::vector<Weight>>();
        if (j.contains("script")) c.script = j.at("script").get<std::vector<NodeId>>();
        if (j.contains("trace")) c.trace_weights = j.at("trace").value("weights", false);
    } catch (const json::exception& ex) {
        config_error(ex.what());
    }
    if (is_cap_algorithm(c.algorithm) && c.bounds.is_null()) config_error(c.algorithm + " requires \"bounds\"");
    if (c.algorithm == "cap-targeted") {
        if (c.targets.empty()) config_error("cap-targeted requires \"targets\"");
        if (std::accumulate(c.targets.begin(), c.targets.end(), Weight{0}) != 0) config_error("targets must sum to zero");
    }
    if (c.algorithm == "sync-async-script" && c.script.empty()) config_error("sync-async-script requires \"script\"");
    return c;
}

std::uint64_t weights_digest(const Digraph& g, const WeightAssignment& w) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::string s = std::to_string(g.edge(e).from) + ":" + std::to_string(g.edge(e).to) + ":" + std::to_string(w.at(e)) + "\n";
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

RunOutput run_single(const ExperimentConfig& cfg, std::uint64_t seed) {
    RunOutput out;
    out.graph = resolve_graph(cfg, seed);
    const Digraph& g = out.graph;
    out.trace.n = g.node_count();
    out.summary.seed = seed;
    const std::string& alg = cfg.algorithm;

    if (alg == "centralized") {
        auto r = run_centralized(g, cfg.max_rounds.value_or(static_cast<std::int64_t>(g.node_count())));
        for (std::size_t k = 0; k < r.imbalance.size(); ++k) {
            push_row(out, static_cast<std::int64_t>(k), r.imbalance[k], std::nullopt);
            if (cfg.trace_weights) out.weights.push_back({static_cast<std::int64_t>(k), r.weights[k], {}});
        }
        finish(out, r.final_weights, true, r.iterations);
        return out;
    }

    if (alg == "sync" || alg == "sync-async-script") {
        SyncState s = init_sync(g, cfg.init_weight.value_or(static_cast<Weight>(g.node_count())), seed);
        if (!cfg.orders.is_null()) s.orderings = resolve_out_orders(cfg, g, seed);
        if (alg == "sync") {
            auto r = run_sync(g, s, cfg.max_rounds, true, false);
            for (std::size_t k = 0; k < r.imbalance.size(); ++k) {
                push_row(out, static_cast<std::int64_t>(k), r.imbalance[k], std::nullopt);
                if (cfg.trace_weights) out.weights.push_back({static_cast<std::int64_t>(k), r.weight_trace[k], {}});
            }
            finish(out, r.weights, r.converged, r.rounds);
            return out;
        }
        for (std::size_t k = 0;; ++k) {
            push_row(out, static_cast<std::int64_t>(k), imbalances(g, s.weights), std::nullopt);
            if (cfg.trace_weights) out.weights.push_back({static_cast<std::int64_t>(k), s.weights, {}});
            if (k == cfg.script.size()) break;
            s = step_async(g, s, cfg.script[k]);
        }
        finish(out, s.weights, total_imbalance(g, s.weights) == 0, static_cast<std::int64_t>(cfg.script.size()));
        return out;
    }

    LinkModel links = resolve_links(cfg, g);

    if (alg == "delay" || alg == "delay-event") {
        DelayState s = init_delay(g, resolve_out_orders(cfg, g, seed));
        Fabric fabric(links, fabric_seed(cfg, seed), resolve_script(cfg, g));
        DelayRunOptions opt;
        opt.variant = alg == "delay" ? DelayVariant::AlwaysTransmit : DelayVariant::EventTriggered;
        opt.max_rounds = cfg.max_rounds.value_or(kDefaultDelayRounds);
        opt.record_imbalance = true;
        opt.record_perceived = cfg.trace_weights;
        opt.throw_on_budget = false;
        auto r = run_delay(g, std::move(s), fabric, opt);
        for (std::size_t k = 0; k < r.imbalance.size(); ++k) {
            push_row(out, static_cast<std::int64_t>(k), r.imbalance[k], r.epsilon_delayed[k]);
            if (cfg.trace_weights && k < r.weights.size())
                out.weights.push_back({static_cast<std::int64_t>(k), r.weights[k], r.perceived[k]});
        }
        out.summary.messages_sent = r.messages_sent;
        finish(out, r.final_weights, r.converged, r.rounds);
        return out;
    }

    // cap-*
    out.bounds = resolve_bounds(cfg, g, seed);
    const CapacityBounds& b = *out.bounds;
    out.summary.feasible = check_circulation_flow(g, b).feasible;
    if (!*out.summary.feasible)
        std::cerr << "warning: InfeasibleForCapAlgorithm: bounds fail the circulation conditions (seed " << seed << ")\n";
    auto orders = resolve_incident_orders(cfg, g, seed);
    auto initial = resolve_initial(cfg, g);

    if (alg == "cap" || alg == "cap-enhanced" || alg == "cap-naive" || alg == "cap-targeted") {
        CapRunOptions opt;
        opt.mode = cap_mode(alg);
        if (opt.mode == CapMode::Targeted) {
            if (cfg.targets.size() != g.node_count()) config_error("targets: one per node");
            opt.targets = cfg.targets;
        }
        opt.max_rounds = cfg.max_rounds.value_or(kDefaultCapRounds);
        opt.record_imbalance = true;
        opt.record_weights = cfg.trace_weights;
        auto r = run_cap(g, b, init_cap(g, b, std::move(orders), std::move(initial)), opt);
        for (std::size_t k = 0; k < r.imbalance.size(); ++k) {
            push_row(out, static_cast<std::int64_t>(k), r.imbalance[k], std::nullopt);
            if (cfg.trace_weights) out.weights.push_back({static_cast<std::int64_t>(k), r.weight_trace[k], {}});
        }
        out.summary.clamp_engaged = r.clamp_engaged;
        finish(out, r.weights, r.converged, r.rounds);
        return out;
    }

    UnreliableAlgorithm ua = alg == "cap-delay"   ? UnreliableAlgorithm::Alg6
                             : alg == "cap-event" ? UnreliableAlgorithm::Alg7
                                                  : UnreliableAlgorithm::Alg8;
    Fabric fabric(links, fabric_seed(cfg, seed), resolve_script(cfg, g));
    UnreliableRunOptions opt;
    opt.max_rounds = cfg.max_rounds.value_or(kDefaultDelayRounds);
    opt.record_imbalance = true;
    opt.record_weights = cfg.trace_weights;
    auto r = run_unreliable(g, b, init_unreliable(g, b, std::move(orders), std::move(initial)), fabric, ua, opt);
    for (std::size_t k = 0; k < r.imbalance.size(); ++k) {
        push_row(out, static_cast<std::int64_t>(k), r.imbalance[k], r.epsilon_perceived[k]);
        if (cfg.trace_weights)
            out.weights.push_back({static_cast<std::int64_t>(k), r.weight_trace[k], r.perceived_trace[k]});
    }
    out.summary.messages_sent = r.messages_sent;
    out.summary.clamp_engaged = r.clamp_engaged;
    finish(out, r.weights, r.converged, r.rounds);
    return out;
}

json summary_to_json(const RunSummary& s) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(s.weights_digest));
    json j{{"seed", s.seed},
           {"converged", s.converged},
           {"rounds", s.rounds},
           {"final_epsilon", s.final_epsilon},
           {"weights_digest", digest},
           {"messages_sent", s.messages_sent},
           {"clamp_engaged", s.clamp_engaged}};
    if (s.feasible) j["feasible"] = *s.feasible;
    return j;
}

std::vector<RunSummary> run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir.string());

    std::vector<RunSummary> summaries;
    std::vector<std::vector<Weight>> eps_runs;
    for (std::uint64_t seed : cfg.seeds) {
        RunOutput run = run_single(cfg, seed);
        std::string tag = std::to_string(seed);
        emit_trace(run.trace, out_dir / ("trace_" + tag + ".csv"));
        if (cfg.trace_weights) write_text(out_dir / ("weights_" + tag + ".csv"), weights_csv(run.graph, run.weights));
        std::vector<Weight> eps;
        for (const auto& r : run.trace.rows) eps.push_back(r.epsilon);
        eps_runs.push_back(std::move(eps));
        summaries.push_back(run.summary);
    }

    json runs = json::array();
    for (const auto& s : summaries) runs.push_back(summary_to_json(s));
    write_json(out_dir / "summary.json", {{"algorithm", cfg.algorithm}, {"runs", runs}});

    // Finished runs hold their last value.
    std::size_t len = 0;
    for (const auto& e : eps_runs) len = std::max(len, e.size());
    std::ostringstream mean;
    mean << "round,mean_epsilon\n";
    for (std::size_t k = 0; k < len; ++k) {
        double sum = 0;
        for (const auto& e : eps_runs) sum += static_cast<double>(e.empty() ? 0 : e[std::min(k, e.size() - 1)]);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu,%.6f\n", k, sum / static_cast<double>(eps_runs.size()));
        mean << buf;
    }
    write_text(out_dir / "mean_epsilon.csv", mean.str());
    return summaries;
}

} // namespace wbal
