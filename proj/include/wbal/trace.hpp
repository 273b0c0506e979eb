#pragma once

#include "wbal/digraph.hpp"
#include "wbal/feasibility.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wbal {

struct TraceRow {
    std::int64_t round = 0;
    Weight epsilon = 0;
    std::optional<Weight> epsilon_perceived;
    std::vector<Weight> x;
};

struct Trace {
    std::size_t n = 0;
    std::vector<TraceRow> rows;
};

// Per-row weight snapshot; perceived is empty for algorithms without perceived state.
struct WeightRow {
    std::int64_t round = 0;
    WeightAssignment weights;
    WeightAssignment perceived;
};

std::string trace_csv(const Trace& t);
Trace parse_trace_csv(const std::string& text);
void emit_trace(const Trace& t, const std::filesystem::path& path);

// Header: round,f_<from>_<to>...[,p_<from>_<to>...]
std::string weights_csv(const Digraph& g, const std::vector<WeightRow>& rows);
std::vector<WeightRow> parse_weights_csv(const Digraph& g, const std::string& text);

struct ReplayOptions {
    bool check_monotone = true;
};

// Parity, zero sum, eps = sum |x|, and (optionally) nonincreasing eps. One message per violation.
std::vector<std::string> check_trace_invariants(const Trace& t, const ReplayOptions& opt = {});

// ceil(l) <= f <= floor(u) for weights and perceived values.
std::vector<std::string> check_weight_bounds(const Digraph& g, const CapacityBounds& b,
                                             const std::vector<WeightRow>& rows);

std::string read_text(const std::filesystem::path& p);

} // namespace wbal
