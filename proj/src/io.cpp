#include "wbal/io.hpp"

#include "wbal/errors.hpp"

#include <fstream>
#include <sstream>

namespace wbal {

using nlohmann::json;

json graph_to_json(const Digraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.from, e.to});
    return {{"n", g.node_count()}, {"edges", edges}};
}

Digraph graph_from_json(const json& j) {
    try {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
        return build_digraph(j.at("n").get<std::size_t>(), pairs);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ConfigError, std::string("graph json: ") + ex.what());
    }
}

json bounds_to_json(const Digraph& g, const CapacityBounds& b) {
    json rows = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        rows.push_back({g.edge(e).from, g.edge(e).to, b.at(e).l, b.at(e).u});
    return {{"bounds", rows}};
}

CapacityBounds bounds_from_json(const Digraph& g, const json& j) {
    std::vector<Interval> iv(g.edge_count(), Interval{0.0, 0.0});
    std::vector<bool> have(g.edge_count(), false);
    try {
        for (const auto& row : j.at("bounds")) {
            NodeId a = row.at(0).get<NodeId>(), b = row.at(1).get<NodeId>();
            if (!g.has_edge(a, b))
                throw Error(ErrorCode::UnknownEdge, "bound for (" + std::to_string(a) + "," + std::to_string(b) + ")");
            EdgeId e = g.edge_id(a, b);
            iv[e] = {row.at(2).get<double>(), row.at(3).get<double>()};
            have[e] = true;
        }
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ConfigError, std::string("bounds json: ") + ex.what());
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!have[e])
            throw Error(ErrorCode::MissingBound,
                        "edge (" + std::to_string(g.edge(e).from) + "," + std::to_string(g.edge(e).to) + ")");
    return CapacityBounds(g, std::move(iv));
}

json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ConfigError, p.string() + ": " + ex.what());
    }
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + p.string());
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + p.string());
}

void write_json(const std::filesystem::path& p, const json& j) { write_text(p, j.dump(2) + "\n"); }

} // namespace wbal
