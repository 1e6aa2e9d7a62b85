#include "edgecolor/coloring.hpp"

#include "edgecolor/errors.hpp"
#include "edgecolor/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace edgecolor {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

NodeSet nodes_of_degree(const Graph& g, std::size_t degree) {
    NodeSet out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == degree) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Edge> crossing_edges(const Graph& g, std::span<const char> side) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if ((side[e.u] != 0) != (side[e.v] != 0)) {
            out.push_back(e);
        }
    }
    return out;
}

// Maximum matching between `left` and the rest of g, restricted to the edges
// leaving `left`.
BipartiteMatchingResult skewed_matching(const Graph& g, const NodeSet& left) {
    const auto side = node_mask(g.node_count(), left);
    const Graph b = g.edge_subgraph(crossing_edges(g, side));
    NodeSet right;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (side[v] == 0) {
            right.push_back(v);
        }
    }
    return bipartite_max_matching(b, left, right);
}

void charge(const ColoringOptions& options, Primitive p, double n, double d = 0) {
    if (options.ledger != nullptr) {
        CostParams c;
        c.n = n;
        c.d = d;
        options.ledger->charge(p, c);
    }
}

// Incremental proper 3-coloring of a (3)-graph. Edges whose endpoints share
// no free color are inserted with a Misra–Gries fan around the degree-3 end.
class ThreeColorer {
public:
    explicit ThreeColorer(const Graph& h) : h_(h), colors_(h.edge_count(), kUncolored), at_(h.node_count()) {
        for (auto& slots : at_) {
            slots.fill(kNoEdge);
        }
    }

    EdgeColoring run() {
        for (EdgeId id = 0; id < h_.edge_count(); ++id) {
            insert(id);
        }
        return EdgeColoring(std::move(colors_));
    }

private:
    bool is_free(NodeId v, Color c) const { return at_[v][static_cast<std::size_t>(c)] == kNoEdge; }

    Color first_free(NodeId v) const {
        for (Color c = 0; c < 3; ++c) {
            if (is_free(v, c)) {
                return c;
            }
        }
        throw InvariantError("node " + std::to_string(h_.label(v)) + " has no free color");
    }

    void set(EdgeId id, Color c) {
        const Edge& e = h_.edge(id);
        if (colors_[id] != kUncolored) {
            at_[e.u][static_cast<std::size_t>(colors_[id])] = kNoEdge;
            at_[e.v][static_cast<std::size_t>(colors_[id])] = kNoEdge;
        }
        colors_[id] = c;
        if (c != kUncolored) {
            at_[e.u][static_cast<std::size_t>(c)] = id;
            at_[e.v][static_cast<std::size_t>(c)] = id;
        }
    }

    void insert(EdgeId id) {
        const Edge& e = h_.edge(id);
        for (Color c = 0; c < 3; ++c) {
            if (is_free(e.u, c) && is_free(e.v, c)) {
                set(id, c);
                return;
            }
        }
        const NodeId u = h_.degree(e.u) == 3 ? e.u : e.v;
        if (h_.degree(u) != 3) {
            throw InvariantError("no common free color on an edge without a degree-3 end");
        }
        fan_recolor(u, other_end(e, u), id);
    }

    void fan_recolor(NodeId u, NodeId v, EdgeId uv) {
        std::vector<NodeId> fan{v};
        std::vector<EdgeId> fan_edges{uv};
        for (bool grew = true; grew;) {
            grew = false;
            for (const Incidence& inc : h_.incident(u)) {
                const Color c = colors_[inc.edge];
                if (c == kUncolored || std::find(fan.begin(), fan.end(), inc.neighbor) != fan.end()) {
                    continue;
                }
                if (is_free(fan.back(), c)) {
                    fan.push_back(inc.neighbor);
                    fan_edges.push_back(inc.edge);
                    grew = true;
                    break;
                }
            }
        }
        const Color c = first_free(u);
        const Color d = first_free(fan.back());
        if (c != d) {
            invert_path(u, c, d);
        }
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0 && !is_free(fan[i - 1], colors_[fan_edges[i]])) {
                break; // prefix is no longer a fan
            }
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (w == fan.size()) {
            throw InvariantError("fan rotation found no vertex with the inverted color free");
        }
        std::vector<Color> shifted(w);
        for (std::size_t j = 0; j < w; ++j) {
            shifted[j] = colors_[fan_edges[j + 1]];
        }
        for (std::size_t j = 0; j <= w; ++j) {
            set(fan_edges[j], kUncolored);
        }
        for (std::size_t j = 0; j < w; ++j) {
            set(fan_edges[j], shifted[j]);
        }
        set(fan_edges[w], d);
    }

    // Swap c and d along the cd-path leaving u by its d-edge.
    void invert_path(NodeId u, Color c, Color d) {
        std::vector<EdgeId> path;
        NodeId cur = u;
        Color want = d;
        for (EdgeId e = at_[cur][static_cast<std::size_t>(want)]; e != kNoEdge;
             e = at_[cur][static_cast<std::size_t>(want)]) {
            path.push_back(e);
            cur = other_end(h_.edge(e), cur);
            want = want == d ? c : d;
            if (cur == u) {
                break;
            }
        }
        std::vector<Color> flipped;
        for (EdgeId e : path) {
            flipped.push_back(colors_[e] == c ? d : c);
            set(e, kUncolored);
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            set(path[i], flipped[i]);
        }
    }

    const Graph& h_;
    std::vector<Color> colors_;
    std::vector<std::array<EdgeId, 3>> at_;
};

} // namespace

EdgeColoring color_3graph(const Graph& h) {
    if (const Verdict v = check_three_graph(h); !v) {
        throw PreconditionError("not a (3)-graph: " + v.detail);
    }
    return ThreeColorer(h).run();
}

EdgeColoring color_degree_le2(const Graph& g) {
    if (g.max_degree() > 2) {
        throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " exceeds 2");
    }
    EdgeColoring out(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    auto walk = [&](NodeId start) {
        std::vector<EdgeId> trail;
        NodeId cur = start;
        for (bool moved = true; moved;) {
            moved = false;
            for (const Incidence& inc : g.incident(cur)) {
                if (seen[inc.edge] == 0) {
                    seen[inc.edge] = 1;
                    trail.push_back(inc.edge);
                    cur = inc.neighbor;
                    moved = true;
                    break;
                }
            }
        }
        const bool odd_cycle = cur == start && trail.size() % 2 == 1;
        for (std::size_t i = 0; i < trail.size(); ++i) {
            out.assign(trail[i], static_cast<Color>(i % 2));
        }
        if (odd_cycle) {
            out.assign(trail.back(), 2);
        }
    };
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 1 && seen[g.incident(v)[0].edge] == 0) {
            walk(v);
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 2 && seen[g.incident(v)[0].edge] == 0) {
            walk(v);
        }
    }
    return out;
}

std::size_t three_halves_budget(std::size_t delta) { return delta % 2 == 0 ? 3 * delta / 2 : (3 * delta + 1) / 2; }

ExtractionTrace extract_3graph(const Graph& g, std::size_t delta, const ColoringOptions& options) {
    if (delta < 3) {
        throw PreconditionError("extraction needs delta >= 3, got " + std::to_string(delta));
    }
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double n = static_cast<double>(options.schedule_nodes == 0 ? g.node_count() : options.schedule_nodes);
    ExtractionTrace t;

    t.v_delta = nodes_of_degree(g, delta);
    t.m1 = greedy_maximal_matching(g, node_mask(g.node_count(), t.v_delta));
    charge(options, Primitive::maximal_matching, n);
    const Graph g1 = g.without_edges(t.m1.edges());

    t.v1_delta = nodes_of_degree(g1, delta);
    BipartiteMatchingResult b1 = skewed_matching(g1, t.v1_delta);
    charge(options, Primitive::bipartite_max_matching, n, static_cast<double>(delta));
    t.m2 = std::move(b1.matching);
    t.m2_phases = std::move(b1.phase_lengths);
    const Graph g2 = g1.without_edges(t.m2.edges());

    t.v2_delta_minus1 = nodes_of_degree(g2, delta - 1);
    t.m3 = greedy_maximal_matching(g2, node_mask(g.node_count(), t.v2_delta_minus1));
    charge(options, Primitive::maximal_matching, n);
    const Graph g3 = g2.without_edges(t.m3.edges());

    t.v3_delta_minus1 = nodes_of_degree(g3, delta - 1);
    BipartiteMatchingResult b3 = skewed_matching(g3, t.v3_delta_minus1);
    charge(options, Primitive::bipartite_max_matching, n, static_cast<double>(delta - 1));
    t.m4 = std::move(b3.matching);
    t.m4_phases = std::move(b3.phase_lengths);

    std::vector<Edge> union_edges;
    for (const Matching* m : {&t.m1, &t.m2, &t.m3, &t.m4}) {
        union_edges.insert(union_edges.end(), m->edges().begin(), m->edges().end());
    }
    std::sort(union_edges.begin(), union_edges.end());
    const Graph h_prime = g.edge_subgraph(union_edges);
    t.m_prime = greedy_maximal_matching(h_prime, node_mask(g.node_count(), nodes_of_degree(h_prime, 3)));
    charge(options, Primitive::maximal_matching, n);

    t.h = h_prime.without_edges(t.m_prime.edges());
    t.f.assign(t.h.edges().begin(), t.h.edges().end());
    t.residual = g.without_edges(t.f);
    return t;
}

ThreeHalvesResult three_halves_coloring(const Graph& g, std::size_t delta, const ColoringOptions& options) {
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double n = static_cast<double>(options.schedule_nodes == 0 ? g.node_count() : options.schedule_nodes);
    ThreeHalvesResult out;
    out.coloring = EdgeColoring(g.edge_count());
    out.budget = three_halves_budget(delta);

    Graph current = g;
    Color base = 0;
    if (delta >= 3) {
        const std::size_t rounds = (delta - 1) / 2;
        for (std::size_t i = 0; i < rounds; ++i) {
            ExtractionTrace t = extract_3graph(current, delta - 2 * i, options);
            const EdgeColoring local = color_3graph(t.h);
            charge(options, Primitive::three_coloring, n);
            for (EdgeId id = 0; id < t.h.edge_count(); ++id) {
                const Edge& e = t.h.edge(id);
                out.coloring.assign(*g.find_edge(e.u, e.v), base + local.color(id));
            }
            base += 3;
            ++out.extractions;
            current = t.residual;
            if (options.keep_traces) {
                out.traces.push_back(std::move(t));
            }
        }
    }
    const EdgeColoring tail = color_degree_le2(current);
    charge(options, Primitive::cole_vishkin, n);
    for (EdgeId id = 0; id < current.edge_count(); ++id) {
        const Edge& e = current.edge(id);
        out.coloring.assign(*g.find_edge(e.u, e.v), base + tail.color(id));
    }
    out.colors_used = out.coloring.palette_count();
    return out;
}

} // namespace edgecolor
