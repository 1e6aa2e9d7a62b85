#include "edgecolor/matching.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>

namespace edgecolor {

Matching hit_matching(const Graph& g, std::span<const NodeId> s, std::size_t delta_s, const Ratio& eps,
                      const WeightedMatchingOptions& options) {
    if (delta_s == 0) {
        throw PreconditionError("hit matching needs a minimum degree of at least 1");
    }
    for (NodeId v : s) {
        if (g.degree(v) < delta_s) {
            throw PreconditionError("node " + std::to_string(g.label(v)) + " has degree " + std::to_string(g.degree(v)) +
                                    " < " + std::to_string(delta_s));
        }
    }
    const auto in_s = node_mask(g.node_count(), s);
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    for (const Edge& e : g.edges()) {
        const Weight w = (in_s[e.u] ? 1 : 0) + (in_s[e.v] ? 1 : 0);
        if (w > 0) {
            edges.push_back(e);
            weights.push_back(w);
        }
    }
    if (edges.empty()) {
        return Matching(g.node_count());
    }
    const WeightedGraph wg(Graph(g.node_count(), std::move(edges)), std::move(weights));
    const Matching m = approx_weighted_matching(wg, eps, options);
    return Matching(g.node_count(), {m.edges().begin(), m.edges().end()});
}

Matching restrict_to_touching(const Matching& m, std::span<const NodeId> s) {
    const auto in_s = node_mask(m.node_count(), s);
    std::vector<Edge> kept;
    for (const Edge& e : m.edges()) {
        if (in_s[e.u] || in_s[e.v]) {
            kept.push_back(e);
        }
    }
    return Matching(m.node_count(), std::move(kept));
}

Matching combine_matchings(const Graph& g, const Matching& a, const Matching& b, std::span<const NodeId> s,
                           std::size_t k) {
    if (k == 0) {
        throw PreconditionError("combine_matchings needs k >= 1");
    }
    if (a.node_count() != g.node_count() || b.node_count() != g.node_count()) {
        throw PreconditionError("matchings and graph disagree on node count");
    }
    const Matching blue_side = restrict_to_touching(b, s);
    const auto in_s = node_mask(g.node_count(), s);
    auto starts_in_sb_minus_sa = [&](NodeId v, bool blue_end) { return blue_end && in_s[v] && !a.is_matched(v); };

    std::vector<NodeId> mate(a.mates().begin(), a.mates().end());
    for (const AlternatingComponent& c : symmetric_difference_decompose(a, blue_side)) {
        if (c.cycle || c.length() > 4 * k) {
            continue;
        }
        if (!starts_in_sb_minus_sa(c.nodes.front(), c.front_blue()) &&
            !starts_in_sb_minus_sa(c.nodes.back(), c.back_blue())) {
            continue;
        }
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            if (!c.blue[i]) {
                mate[c.edges[i].u] = mate[c.edges[i].v] = kNoNode;
            }
        }
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            if (c.blue[i]) {
                mate[c.edges[i].u] = c.edges[i].v;
                mate[c.edges[i].v] = c.edges[i].u;
            }
        }
    }
    return Matching::from_mates(std::move(mate));
}

Matching pervasive_matching(const Graph& g, std::size_t delta, std::size_t t, const Ratio& eps,
                            const PervasiveOptions& options) {
    if (!eps.in_open_unit_interval()) {
        throw UsageError("pervasive matching needs 0 < eps < 1, got " + to_string(eps));
    }
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const auto classes = DegreeClassPartition::by_degree_window(g, delta, t);
    const Ratio half = eps / 2;
    std::vector<Matching> per_class(classes.suffix_unions.size());
    for_each_index(options.exec, per_class.size(), [&](std::size_t j) {
        per_class[j] = hit_matching(g, classes.suffix_unions[j], classes.min_degrees[j], half, options.matching);
    });

    Matching folded(g.node_count());
    const auto k = static_cast<std::size_t>(ceil_inverse(eps, 2));
    for (std::size_t j = 0; j < per_class.size(); ++j) {
        folded = j == 0 ? per_class[0] : combine_matchings(g, folded, per_class[j], classes.suffix_unions[j], k);
    }
    return extend_to_maximal(g, std::move(folded));
}

} // namespace edgecolor
