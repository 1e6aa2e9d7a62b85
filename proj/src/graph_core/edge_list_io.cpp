#include "edgecolor/edge_list_io.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace edgecolor {

namespace {

constexpr int kMaxDecimals = 9;

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

Label parse_id(std::string_view s, std::size_t line) {
    Label value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line, "malformed node id '" + std::string(s) + "'");
    }
    if (value < 0) {
        throw ParseError(line, "negative node id '" + std::string(s) + "'");
    }
    return value;
}

// Decimal text -> (mantissa, number of fractional digits).
std::pair<Weight, int> parse_decimal(std::string_view s, std::size_t line) {
    const auto dot = s.find('.');
    std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    auto digits_only = [](std::string_view t) { return t.find_first_not_of("0123456789") == std::string_view::npos; };
    if ((whole.empty() && frac.empty()) || !digits_only(whole) || !digits_only(frac) ||
        (dot != std::string_view::npos && frac.empty())) {
        throw ParseError(line, "malformed weight '" + std::string(s) + "'");
    }
    if (frac.size() > static_cast<std::size_t>(kMaxDecimals)) {
        throw ParseError(line, "weight '" + std::string(s) + "' has more than 9 decimals");
    }
    std::string digits = std::string(whole) + std::string(frac);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    if (digits.empty()) {
        throw ParseError(line, "weight must be positive");
    }
    if (digits.size() > 17) {
        throw ParseError(line, "weight '" + std::string(s) + "' too large");
    }
    return {std::stoll(digits), static_cast<int>(frac.size())};
}

Weight pow10(int k) {
    Weight p = 1;
    for (int i = 0; i < k; ++i) {
        p *= 10;
    }
    return p;
}

} // namespace

EdgeListFile read_edge_list(std::istream& in) {
    std::vector<std::pair<Label, Label>> pairs;
    std::vector<std::pair<Weight, int>> raw_weights;
    std::vector<std::size_t> line_of;
    std::optional<bool> weighted;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::string_view view(text);
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        const auto fields = split_fields(view);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() != 2 && fields.size() != 3) {
            throw ParseError(line, "expected 'u v' or 'u v w', got " + std::to_string(fields.size()) + " fields");
        }
        const bool has_weight = fields.size() == 3;
        if (weighted && *weighted != has_weight) {
            throw ParseError(line, "mixed weighted and unweighted lines");
        }
        weighted = has_weight;
        const Label a = parse_id(fields[0], line);
        const Label b = parse_id(fields[1], line);
        if (a == b) {
            throw ParseError(line, "self-loop at node " + std::to_string(a));
        }
        pairs.emplace_back(a, b);
        line_of.push_back(line);
        if (has_weight) {
            raw_weights.push_back(parse_decimal(fields[2], line));
        }
    }
    // Duplicates are reported against their file line rather than pair index.
    std::map<std::pair<Label, Label>, std::size_t> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto key = std::minmax(pairs[i].first, pairs[i].second);
        auto [it, fresh] = seen.emplace(key, line_of[i]);
        if (!fresh) {
            throw ParseError(line_of[i], "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second) +
                                             " (first at line " + std::to_string(it->second) + ")");
        }
    }

    EdgeListFile out;
    out.graph = build_graph(pairs);
    if (weighted.value_or(false)) {
        int decimals = 0;
        for (const auto& [mantissa, d] : raw_weights) {
            decimals = std::max(decimals, d);
        }
        std::vector<Weight> weights(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [mantissa, d] = raw_weights[i];
            const Weight scale = pow10(decimals - d);
            if (mantissa > INT64_MAX / scale) {
                throw ParseError(line_of[i], "weight too large after scaling");
            }
            const NodeId u = *out.graph.node_of_label(pairs[i].first);
            const NodeId v = *out.graph.node_of_label(pairs[i].second);
            weights[*out.graph.find_edge(u, v)] = mantissa * scale;
        }
        out.weighted = WeightedGraph(out.graph, std::move(weights), decimals);
    }
    return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
}

void write_edge_list(std::ostream& out, const WeightedGraph& wg) {
    const Graph& g = wg.graph();
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << wg.format_weight(wg.weight(id)) << '\n';
    }
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << c.color(id) << '\n';
    }
}

EdgeColoring read_coloring(std::istream& in, const Graph& g, bool require_complete) {
    EdgeColoring c(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::string_view view(text);
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        const auto fields = split_fields(view);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError(line, "expected 'u v color'");
        }
        const auto u = g.node_of_label(parse_id(fields[0], line));
        const auto v = g.node_of_label(parse_id(fields[1], line));
        const auto id = (u && v) ? g.find_edge(*u, *v) : std::nullopt;
        if (!id) {
            throw ParseError(line, "edge not in graph");
        }
        if (seen[*id]) {
            throw ParseError(line, "edge colored twice");
        }
        seen[*id] = 1;
        Color color = 0;
        auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), color);
        if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size() || color < kUncolored) {
            throw ParseError(line, "malformed color '" + std::string(fields[2]) + "'");
        }
        c.assign(*id, color);
    }
    if (require_complete) {
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            if (!seen[id]) {
                throw ParseError(0, "coloring is missing edge " + std::to_string(g.label(g.edge(id).u)) + " " +
                                        std::to_string(g.label(g.edge(id).v)));
            }
        }
    }
    return c;
}

} // namespace edgecolor
