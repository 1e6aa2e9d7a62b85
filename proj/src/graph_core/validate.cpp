#include "edgecolor/validate.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>

namespace edgecolor {

namespace {

Verdict pass(std::string check) { return Verdict{true, std::move(check), {}, {}, {}}; }

Verdict fail(std::string check, std::string detail, std::vector<NodeId> nodes, std::vector<Edge> edges) {
    return Verdict{false, std::move(check), std::move(detail), std::move(nodes), std::move(edges)};
}

std::string edge_text(const Graph& g, const Edge& e) {
    return std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v));
}

constexpr std::array<std::pair<std::string_view, CheckKind>, 6> kKinds{{
    {"matching", CheckKind::matching},
    {"maximal_matching", CheckKind::maximal_matching},
    {"proper_coloring", CheckKind::proper_coloring},
    {"complete_coloring", CheckKind::complete_coloring},
    {"three_graph", CheckKind::three_graph},
    {"split_discrepancy", CheckKind::split_discrepancy},
}};

} // namespace

CheckKind parse_check_kind(std::string_view name) {
    for (const auto& [text, kind] : kKinds) {
        if (text == name) {
            return kind;
        }
    }
    throw UsageError("unknown validator kind '" + std::string(name) + "'");
}

std::string_view to_string(CheckKind kind) {
    for (const auto& [text, k] : kKinds) {
        if (k == kind) {
            return text;
        }
    }
    return "unknown";
}

Verdict check_matching(const Graph& g, std::span<const Edge> edges) {
    std::vector<std::size_t> owner(g.node_count(), edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (!g.has_edge(e.u, e.v)) {
            return fail("matching", "edge not in graph", {}, {e});
        }
        for (NodeId x : {e.u, e.v}) {
            if (owner[x] != edges.size()) {
                return fail("matching",
                            "edges " + edge_text(g, edges[owner[x]]) + " and " + edge_text(g, e) + " share node " +
                                std::to_string(g.label(x)),
                            {x}, {edges[owner[x]], e});
            }
            owner[x] = i;
        }
    }
    return pass("matching");
}

Verdict check_maximal_matching(const Graph& g, std::span<const Edge> edges) {
    if (Verdict v = check_matching(g, edges); !v) {
        v.check = "maximal_matching";
        return v;
    }
    std::vector<char> covered(g.node_count(), 0);
    for (const Edge& e : edges) {
        covered[e.u] = covered[e.v] = 1;
    }
    for (const Edge& e : g.edges()) {
        if (!covered[e.u] && !covered[e.v]) {
            return fail("maximal_matching", "edge " + edge_text(g, e) + " can be added", {e.u, e.v}, {e});
        }
    }
    return pass("maximal_matching");
}

Verdict check_maximal_matching(const Graph& g, const Matching& m) { return check_maximal_matching(g, m.edges()); }

Verdict check_proper_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.edge_count() != g.edge_count()) {
        return fail("proper_coloring", "coloring does not match graph edge count", {}, {});
    }
    std::vector<Color> seen;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        seen.clear();
        for (const Incidence& inc : g.incident(v)) {
            if (c.is_colored(inc.edge)) {
                seen.push_back(c.color(inc.edge));
            }
        }
        std::sort(seen.begin(), seen.end());
        if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
            std::vector<Edge> witness;
            for (const Incidence& inc : g.incident(v)) {
                if (c.color(inc.edge) == *dup) {
                    witness.push_back(g.edge(inc.edge));
                }
            }
            return fail("proper_coloring",
                        "node " + std::to_string(g.label(v)) + " sees color " + std::to_string(*dup) + " twice", {v},
                        witness);
        }
    }
    return pass("proper_coloring");
}

Verdict check_complete_coloring(const Graph& g, const EdgeColoring& c) {
    if (Verdict v = check_proper_coloring(g, c); !v) {
        v.check = "complete_coloring";
        return v;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!c.is_colored(e)) {
            const Edge& ed = g.edge(e);
            return fail("complete_coloring", "edge " + edge_text(g, ed) + " is uncolored", {ed.u, ed.v}, {ed});
        }
    }
    return pass("complete_coloring");
}

Verdict check_three_graph(const Graph& h) {
    for (NodeId v = 0; v < h.node_count(); ++v) {
        if (h.degree(v) > 3) {
            return fail("three_graph",
                        "node " + std::to_string(h.label(v)) + " has degree " + std::to_string(h.degree(v)), {v}, {});
        }
    }
    for (const Edge& e : h.edges()) {
        if (h.degree(e.u) == 3 && h.degree(e.v) == 3) {
            return fail("three_graph", "adjacent degree-3 nodes " + edge_text(h, e), {e.u, e.v}, {e});
        }
    }
    return pass("three_graph");
}

Verdict check_split_discrepancy(const Graph& g, std::span<const Edge> a, std::span<const Edge> b, std::size_t bound) {
    std::vector<int> side(g.edge_count(), -1);
    std::vector<long> balance(g.node_count(), 0);
    auto place = [&](std::span<const Edge> part, int which) -> std::optional<Verdict> {
        for (const Edge& e : part) {
            auto id = g.find_edge(e.u, e.v);
            if (!id) {
                return fail("split_discrepancy", "edge " + edge_text(g, e) + " not in graph", {}, {e});
            }
            if (side[*id] != -1) {
                return fail("split_discrepancy", "edge " + edge_text(g, e) + " assigned twice", {}, {e});
            }
            side[*id] = which;
            const long delta = which == 0 ? 1 : -1;
            balance[e.u] += delta;
            balance[e.v] += delta;
        }
        return std::nullopt;
    };
    if (auto v = place(a, 0)) {
        return *v;
    }
    if (auto v = place(b, 1)) {
        return *v;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (side[e] == -1) {
            return fail("split_discrepancy", "edge " + edge_text(g, g.edge(e)) + " in neither side", {}, {g.edge(e)});
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (static_cast<std::size_t>(std::labs(balance[v])) > bound) {
            return fail("split_discrepancy",
                        "node " + std::to_string(g.label(v)) + " has discrepancy " + std::to_string(std::labs(balance[v])),
                        {v}, {});
        }
    }
    return pass("split_discrepancy");
}

Verdict validate(const Graph& g, const Artifact& artifact, CheckKind kind, std::size_t bound) {
    auto need = [&](auto* ptr) {
        if (ptr == nullptr) {
            throw UsageError("artifact type does not fit validator kind '" + std::string(to_string(kind)) + "'");
        }
        return ptr;
    };
    switch (kind) {
    case CheckKind::matching:
        return check_matching(g, *need(std::get_if<std::vector<Edge>>(&artifact)));
    case CheckKind::maximal_matching:
        return check_maximal_matching(g, std::span<const Edge>(*need(std::get_if<std::vector<Edge>>(&artifact))));
    case CheckKind::proper_coloring:
        return check_proper_coloring(g, *need(std::get_if<EdgeColoring>(&artifact)));
    case CheckKind::complete_coloring:
        return check_complete_coloring(g, *need(std::get_if<EdgeColoring>(&artifact)));
    case CheckKind::three_graph: {
        const auto* edges = need(std::get_if<std::vector<Edge>>(&artifact));
        return check_three_graph(g.edge_subgraph(*edges));
    }
    case CheckKind::split_discrepancy: {
        const auto* split = need(std::get_if<EdgeSplit>(&artifact));
        return check_split_discrepancy(g, split->a, split->b, bound);
    }
    }
    throw UsageError("unknown validator kind");
}

} // namespace edgecolor
