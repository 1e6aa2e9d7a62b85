#include "edgecolor/matching.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace edgecolor {

namespace {

__extension__ typedef __int128 i128;

// Subset DP over one component. best[mask] is the heaviest matching inside
// mask; the lowest node of mask is either left free or matched to one of its
// neighbours, ties keeping the earlier option.
std::vector<Edge> solve_component(const WeightedGraph& wg, const NodeSet& comp) {
    const Graph& g = wg.graph();
    const std::size_t k = comp.size();
    auto local = [&](NodeId v) {
        return static_cast<std::size_t>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
    };
    std::vector<std::vector<std::pair<std::size_t, Weight>>> adj(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (const Incidence& inc : g.incident(comp[i])) {
            adj[i].emplace_back(local(inc.neighbor), wg.weight(inc.edge));
        }
    }
    const std::size_t full = std::size_t{1} << k;
    std::vector<Weight> best(full, 0);
    std::vector<std::int8_t> choice(full, -1);
    for (std::size_t mask = 1; mask < full; ++mask) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        const std::size_t rest = mask & ~(std::size_t{1} << low);
        best[mask] = best[rest];
        for (const auto& [j, w] : adj[low]) {
            if ((rest >> j) & 1U) {
                const Weight cand = w + best[rest & ~(std::size_t{1} << j)];
                if (cand > best[mask]) {
                    best[mask] = cand;
                    choice[mask] = static_cast<std::int8_t>(j);
                }
            }
        }
    }
    std::vector<Edge> out;
    std::size_t mask = full - 1;
    while (mask != 0) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        mask &= ~(std::size_t{1} << low);
        if (choice[mask | (std::size_t{1} << low)] >= 0) {
            const auto j = static_cast<std::size_t>(choice[mask | (std::size_t{1} << low)]);
            out.push_back(make_edge(comp[low], comp[j]));
            mask &= ~(std::size_t{1} << j);
        }
    }
    return out;
}

std::size_t eccentricity(const Graph& g, NodeId source) {
    std::vector<std::size_t> dist(g.node_count(), std::numeric_limits<std::size_t>::max());
    std::deque<NodeId> queue{source};
    dist[source] = 0;
    std::size_t far = 0;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        far = std::max(far, dist[v]);
        for (const Incidence& inc : g.incident(v)) {
            if (dist[inc.neighbor] == std::numeric_limits<std::size_t>::max()) {
                dist[inc.neighbor] = dist[v] + 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
    return far;
}

// Heaviest-first greedy restricted to one component; only used as a lower
// bound on w(M*).
Weight greedy_weight(const WeightedGraph& wg, const NodeSet& comp) {
    const Graph& g = wg.graph();
    std::vector<EdgeId> ids;
    for (NodeId v : comp) {
        for (const Incidence& inc : g.incident(v)) {
            if (v < inc.neighbor) {
                ids.push_back(inc.edge);
            }
        }
    }
    std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
        return wg.weight(a) != wg.weight(b) ? wg.weight(a) > wg.weight(b) : a < b;
    });
    std::vector<char> used(g.node_count(), 0);
    Weight total = 0;
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            total += wg.weight(id);
        }
    }
    return total;
}

std::size_t iteration_budget(std::size_t length) {
    const double l = static_cast<double>(length);
    return static_cast<std::size_t>(std::ceil(4.0 * l * std::log(2.0 * l)));
}

} // namespace

Matching brute_force_max_weight_matching(const WeightedGraph& wg, std::size_t cap) {
    const Graph& g = wg.graph();
    std::vector<Edge> edges;
    for (const NodeSet& comp : connected_components(g)) {
        if (comp.size() < 2) {
            continue;
        }
        if (comp.size() > cap || comp.size() > 26) {
            throw OracleCapError("component with " + std::to_string(comp.size()) + " nodes exceeds the oracle cap of " +
                                 std::to_string(cap));
        }
        auto part = solve_component(wg, comp);
        edges.insert(edges.end(), part.begin(), part.end());
    }
    return Matching(g.node_count(), std::move(edges));
}

WeightedMatchingReport approx_weighted_matching_report(const WeightedGraph& wg, const Ratio& eps,
                                                       const WeightedMatchingOptions& options) {
    if (!eps.in_open_unit_interval()) {
        throw UsageError("approximate weighted matching needs 0 < eps < 1, got " + to_string(eps));
    }
    const Graph& g = wg.graph();
    const std::size_t n = g.node_count();
    WeightedMatchingReport report;
    report.nominal_length = static_cast<std::size_t>(ceil_inverse(eps, 2));
    report.iteration_budget = iteration_budget(report.nominal_length);
    report.matching = Matching(n);
    if (g.empty()) {
        return report;
    }

    // Preprocessing: a component whose optimum may be below wmin/ε and that
    // is small in both radius and size is solved exactly.
    std::vector<Edge> exact_edges;
    std::vector<char> exact_node(n, 0);
    std::size_t active_nodes = 0;
    for (const NodeSet& comp : connected_components(g)) {
        if (comp.size() < 2) {
            continue;
        }
        const bool small_radius = static_cast<i128>(eccentricity(g, comp.front())) * eps.num <= 2 * static_cast<i128>(eps.den);
        const bool light = static_cast<i128>(greedy_weight(wg, comp)) * eps.num < static_cast<i128>(wg.wmin()) * eps.den;
        if (small_radius && light && comp.size() <= options.oracle_cap && comp.size() <= 26) {
            auto part = solve_component(wg, comp);
            exact_edges.insert(exact_edges.end(), part.begin(), part.end());
            for (NodeId v : comp) {
                exact_node[v] = 1;
            }
            ++report.exact_components;
        } else {
            active_nodes += comp.size();
        }
    }

    std::vector<Edge> rest_edges;
    std::vector<Weight> rest_weights;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (!exact_node[g.edge(id).u]) {
            rest_edges.push_back(g.edge(id));
            rest_weights.push_back(wg.weight(id));
        }
    }
    Matching m(n);
    if (!rest_edges.empty()) {
        const WeightedGraph rest(Graph(n, rest_edges, g.labels()), std::move(rest_weights), wg.decimals());
        // An augmentation's S is a matching, so more than active/2 S-edges never occur.
        std::size_t length = std::min(report.nominal_length, std::max<std::size_t>(1, active_nodes / 2));
        if (length > options.limits.max_length) {
            if (!options.limits.clamp) {
                throw BlowUpGuardError("augmentation length " + std::to_string(length) +
                                       " exceeds the blow-up guard max_length=" +
                                       std::to_string(options.limits.max_length));
            }
            length = options.limits.max_length;
            report.clamped = true;
        }
        report.max_rank = max_augmentation_rank(report.nominal_length, n, rest.wmin(), rest.wmax());
        EnumerateOptions enumerate;
        enumerate.limits = options.limits;
        enumerate.exec = options.exec;
        enumerate.rank_length = report.nominal_length;

        for (std::size_t iter = 0; iter < report.iteration_budget; ++iter) {
            std::vector<Augmentation> augs;
            for (;;) {
                try {
                    augs = enumerate_augmentations(rest, m, length, enumerate);
                    break;
                } catch (const BlowUpGuardError&) {
                    if (!options.limits.clamp || length == 1) {
                        throw;
                    }
                    --length;
                    report.clamped = true;
                }
            }
            // Sweep ranks high to low; nodes taken at a higher rank are
            // deleted from every lower one. Ranks stay as computed.
            std::stable_sort(augs.begin(), augs.end(),
                             [](const Augmentation& a, const Augmentation& b) { return a.rank > b.rank; });
            AugmentationHypergraph h{n, std::move(augs)};
            std::vector<std::size_t> order;
            for (std::size_t i = 0; i < h.hyperedges.size() && h.hyperedges[i].rank >= 1; ++i) {
                order.push_back(i);
            }
            const auto chosen = hypergraph_greedy_maximal_matching(h, order);
            if (chosen.empty()) {
                break;
            }
            for (std::size_t idx : chosen) {
                m = apply_augmentation(m, h.hyperedges[idx]);
            }
            report.augmentations_applied += chosen.size();
            ++report.iterations;
            report.weight_trace.push_back(total_weight(m.edges(), wg));
        }
        report.used_length = length;
    }

    std::vector<Edge> combined(m.edges().begin(), m.edges().end());
    combined.insert(combined.end(), exact_edges.begin(), exact_edges.end());
    report.matching = extend_to_maximal(g, Matching(n, std::move(combined)));
    return report;
}

Matching approx_weighted_matching(const WeightedGraph& wg, const Ratio& eps, const WeightedMatchingOptions& options) {
    return approx_weighted_matching_report(wg, eps, options).matching;
}

} // namespace edgecolor
