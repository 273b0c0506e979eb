#include "wbal/trace.hpp"

#include "wbal/errors.hpp"
#include "wbal/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace wbal {

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

Weight to_weight(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, "not an integer: '" + s + "'");
    }
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string edge_tag(const Edge& e) { return std::to_string(e.from) + "_" + std::to_string(e.to); }

} // namespace

std::string trace_csv(const Trace& t) {
    std::ostringstream out;
    out << "round,epsilon,epsilon_perceived";
    for (std::size_t j = 0; j < t.n; ++j) out << ",x_" << j;
    out << '\n';
    for (const auto& r : t.rows) {
        out << r.round << ',' << r.epsilon << ',';
        if (r.epsilon_perceived) out << *r.epsilon_perceived;
        for (Weight v : r.x) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

Trace parse_trace_csv(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty()) throw Error(ErrorCode::ConfigError, "empty trace");
    auto head = split(lines[0]);
    if (head.size() < 3 || head[0] != "round" || head[1] != "epsilon" || head[2] != "epsilon_perceived")
        throw Error(ErrorCode::ConfigError, "bad trace header");
    Trace t;
    t.n = head.size() - 3;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split(lines[i]);
        if (cells.size() != head.size())
            throw Error(ErrorCode::ConfigError, "trace line " + std::to_string(i + 1) + ": wrong column count");
        TraceRow r;
        r.round = to_weight(cells[0]);
        r.epsilon = to_weight(cells[1]);
        if (!cells[2].empty()) r.epsilon_perceived = to_weight(cells[2]);
        for (std::size_t j = 3; j < cells.size(); ++j) r.x.push_back(to_weight(cells[j]));
        t.rows.push_back(std::move(r));
    }
    return t;
}

void emit_trace(const Trace& t, const std::filesystem::path& path) { write_text(path, trace_csv(t)); }

std::string weights_csv(const Digraph& g, const std::vector<WeightRow>& rows) {
    const bool perceived = !rows.empty() && !rows.front().perceived.empty();
    std::ostringstream out;
    out << "round";
    for (const auto& e : g.edges()) out << ",f_" << edge_tag(e);
    if (perceived)
        for (const auto& e : g.edges()) out << ",p_" << edge_tag(e);
    out << '\n';
    for (const auto& r : rows) {
        out << r.round;
        for (Weight w : r.weights) out << ',' << w;
        for (Weight w : r.perceived) out << ',' << w;
        out << '\n';
    }
    return out.str();
}

std::vector<WeightRow> parse_weights_csv(const Digraph& g, const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty()) throw Error(ErrorCode::ConfigError, "empty weights file");
    auto head = split(lines[0]);
    const std::size_t m = g.edge_count();
    if (head.empty() || head[0] != "round" || (head.size() != 1 + m && head.size() != 1 + 2 * m))
        throw Error(ErrorCode::ConfigError, "weights header does not match the graph");
    for (EdgeId e = 0; e < m; ++e)
        if (head[1 + e] != "f_" + edge_tag(g.edge(e)))
            throw Error(ErrorCode::ConfigError, "weights column " + head[1 + e] + " does not match the graph");
    const bool perceived = head.size() == 1 + 2 * m;
    std::vector<WeightRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split(lines[i]);
        if (cells.size() != head.size())
            throw Error(ErrorCode::ConfigError, "weights line " + std::to_string(i + 1) + ": wrong column count");
        WeightRow r;
        r.round = to_weight(cells[0]);
        for (EdgeId e = 0; e < m; ++e) r.weights.push_back(to_weight(cells[1 + e]));
        if (perceived)
            for (EdgeId e = 0; e < m; ++e) r.perceived.push_back(to_weight(cells[1 + m + e]));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::string> check_trace_invariants(const Trace& t, const ReplayOptions& opt) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& r = t.rows[i];
        std::string at = "round " + std::to_string(r.round) + ": ";
        if (r.epsilon % 2 != 0) bad.push_back(at + "epsilon is odd");
        if (std::accumulate(r.x.begin(), r.x.end(), Weight{0}) != 0) bad.push_back(at + "imbalances do not sum to 0");
        if (total_imbalance(r.x) != r.epsilon) bad.push_back(at + "epsilon differs from sum of |x|");
        if (r.epsilon_perceived && *r.epsilon_perceived < 0) bad.push_back(at + "negative perceived epsilon");
        if (opt.check_monotone && i > 0 && r.epsilon > t.rows[i - 1].epsilon)
            bad.push_back(at + "epsilon increased from " + std::to_string(t.rows[i - 1].epsilon));
    }
    return bad;
}

std::vector<std::string> check_weight_bounds(const Digraph& g, const CapacityBounds& b,
                                             const std::vector<WeightRow>& rows) {
    std::vector<std::string> bad;
    for (const auto& r : rows)
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto out_of = [&](Weight v) { return v < b.lo(e) || v > b.hi(e); };
            std::string at = "round " + std::to_string(r.round) + " edge " + edge_tag(g.edge(e)) + ": ";
            if (out_of(r.weights[e])) bad.push_back(at + "weight " + std::to_string(r.weights[e]) + " out of bounds");
            if (!r.perceived.empty() && out_of(r.perceived[e]))
                bad.push_back(at + "perceived " + std::to_string(r.perceived[e]) + " out of bounds");
        }
    return bad;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace wbal
