#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace wbal {

nlohmann::json graph_to_json(const Digraph& g);
Digraph graph_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(const Digraph& g, const CapacityBounds& b);
// Entries must cover exactly the edge set of g.
CapacityBounds bounds_from_json(const Digraph& g, const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const nlohmann::json& j);
void write_text(const std::filesystem::path& p, const std::string& text);

} // namespace wbal
