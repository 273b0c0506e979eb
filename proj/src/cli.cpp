#include "wbal/cli.hpp"

#include "wbal/errors.hpp"
#include "wbal/feasibility.hpp"
#include "wbal/harness.hpp"
#include "wbal/instances.hpp"
#include "wbal/io.hpp"
#include "wbal/trace.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace wbal {

using nlohmann::json;

namespace {

json verdict_json(const FeasibilityVerdict& v, const std::optional<WeightAssignment>& w, const Digraph& g) {
    auto pair = [](const Edge& e) { return json::array({e.from, e.to}); };
    json j{{"feasible", v.feasible}};
    if (v.violating_edge) j["edge"] = pair(*v.violating_edge);
    if (v.violating_subset) {
        j["subset"] = *v.violating_subset;
        json in = json::array(), out = json::array();
        for (const auto& e : v.cut_in_edges) in.push_back(pair(e));
        for (const auto& e : v.cut_out_edges) out.push_back(pair(e));
        j["cut_in_edges"] = in;
        j["cut_out_edges"] = out;
    }
    if (w) {
        json rows = json::array();
        for (EdgeId e = 0; e < g.edge_count(); ++e) rows.push_back({g.edge(e).from, g.edge(e).to, (*w)[e]});
        j["weights"] = rows;
    }
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer weight balancing on digraphs: simulation and feasibility tools", "wbal"};
    app.require_subcommand(1);

    std::size_t n = 0;
    double p = 0.0, slack = 2.0;
    std::uint64_t seed = 0;
    std::string out_path, bounds_out;
    auto* gen = app.add_subcommand("generate", "Random strongly connected digraph");
    gen->add_option("--n", n, "Node count")->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    gen->add_option("--p", p, "Extra edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "Seed")->required();
    gen->add_option("--out", out_path, "Graph JSON output")->required();
    gen->add_option("--bounds-out", bounds_out, "Also write feasible bounds here");
    gen->add_option("--slack", slack, "Interval slack for --bounds-out")->check(CLI::PositiveNumber);

    std::string graph_path, bounds_path;
    bool brute = false;
    auto* feas = app.add_subcommand("feasible", "Check the integer circulation conditions");
    feas->add_option("--graph", graph_path, "Graph JSON")->required();
    feas->add_option("--bounds", bounds_path, "Bounds JSON")->required();
    feas->add_flag("--brute-force", brute, "Enumerate subsets instead of max flow");

    std::string config_path, out_dir;
    auto* run = app.add_subcommand("run", "Run an experiment config");
    run->add_option("--config", config_path, "Config JSON")->required();
    run->add_option("--out-dir", out_dir, "Output directory")->required();

    std::string trace_path, weights_path, rg_path, rb_path;
    bool check = false, allow_nonmono = false;
    auto* replay = app.add_subcommand("replay", "Re-validate an emitted trace");
    replay->add_option("--trace", trace_path, "Trace CSV")->required();
    replay->add_flag("--check-invariants", check, "Check parity, zero sum, epsilon, monotonicity");
    replay->add_flag("--allow-nonmonotone", allow_nonmono, "Skip the monotone epsilon check");
    auto* wopt = replay->add_option("--weights", weights_path, "Weights CSV for the bounds check");
    auto* gopt = replay->add_option("--graph", rg_path, "Graph JSON for the bounds check");
    auto* bopt = replay->add_option("--bounds", rb_path, "Bounds JSON for the bounds check");
    wopt->needs(gopt)->needs(bopt);
    bopt->needs(wopt);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            Digraph g = random_strongly_connected(n, p, seed);
            write_json(out_path, graph_to_json(g));
            if (!bounds_out.empty()) write_json(bounds_out, bounds_to_json(g, random_feasible_bounds(g, seed, slack)));
            return kExitOk;
        }
        if (*feas) {
            Digraph g = graph_from_json(read_json(graph_path));
            CapacityBounds b = bounds_from_json(g, read_json(bounds_path));
            auto v = brute ? check_circulation_bruteforce(g, b) : check_circulation_flow(g, b);
            std::optional<WeightAssignment> w;
            if (v.feasible) w = find_balanced_weights_oracle(g, b);
            out << verdict_json(v, w, g).dump() << '\n';
            return v.feasible ? kExitOk : kExitNegative;
        }
        if (*run) {
            std::filesystem::path cp(config_path);
            auto cfg = parse_config(read_json(cp), cp.parent_path());
            auto sums = run_experiment(cfg, out_dir);
            for (const auto& s : sums) out << summary_to_json(s).dump() << '\n';
            return kExitOk;
        }
        if (*replay) {
            Trace t = parse_trace_csv(read_text(trace_path));
            std::vector<std::string> bad;
            if (check) bad = check_trace_invariants(t, {.check_monotone = !allow_nonmono});
            if (!weights_path.empty()) {
                Digraph g = graph_from_json(read_json(rg_path));
                CapacityBounds b = bounds_from_json(g, read_json(rb_path));
                auto more = check_weight_bounds(g, b, parse_weights_csv(g, read_text(weights_path)));
                bad.insert(bad.end(), more.begin(), more.end());
            }
            for (const auto& msg : bad) err << msg << '\n';
            Weight last = t.rows.empty() ? 0 : t.rows.back().epsilon;
            out << json{{"rows", t.rows.size()}, {"final_epsilon", last}, {"violations", bad.size()}}.dump() << '\n';
            return bad.empty() ? kExitOk : kExitNegative;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace wbal
