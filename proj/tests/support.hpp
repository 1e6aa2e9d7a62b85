#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.

#include "edgecolor/bench.hpp"
#include "edgecolor/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

namespace testing_support {

using namespace edgecolor;

inline Graph graph_of(std::initializer_list<std::pair<Label, Label>> pairs) {
    std::vector<std::pair<Label, Label>> list(pairs);
    return build_graph(list);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
        }
    }
    return Graph(n, std::move(edges));
}

inline Edge edge_of(const Graph& g, Label a, Label b) {
    return make_edge(*g.node_of_label(a), *g.node_of_label(b));
}

/// Random graph with n nodes and ~m edges from the project generator.
inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    return bench::generate("gnm:" + std::to_string(n) + "," + std::to_string(m), seed).graph;
}

/// Greedy matching over a seeded shuffle of the edges; maximal when `keep` is 1.
inline Matching random_matching(const Graph& g, std::uint64_t seed, std::uint64_t keep_percent = 100) {
    bench::SplitMix64 rng(seed);
    std::vector<Edge> order(g.edges().begin(), g.edges().end());
    rng.shuffle(order);
    std::vector<NodeId> mate(g.node_count(), kNoNode);
    for (const Edge& e : order) {
        if (mate[e.u] == kNoNode && mate[e.v] == kNoNode && rng.below(100) < keep_percent) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    }
    return Matching::from_mates(std::move(mate));
}

// --- Boost oracles ---------------------------------------------------------

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostWeighted = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                            boost::property<boost::vertex_index_t, int>,
                                            boost::property<boost::edge_weight_t, long>>;

/// Edmonds maximum cardinality matching size.
inline std::size_t boost_max_matching_size(const Graph& g) {
    BoostGraph b(g.node_count());
    for (const Edge& e : g.edges()) {
        boost::add_edge(e.u, e.v, b);
    }
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.node_count());
    boost::edmonds_maximum_cardinality_matching(b, &mate[0]);
    return boost::matching_size(b, &mate[0]);
}

/// Maximum matching weight, via Boost's weighted blossom or its exhaustive search.
inline Weight boost_max_weight(const WeightedGraph& wg, bool exhaustive) {
    const Graph& g = wg.graph();
    BoostWeighted b(g.node_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        boost::add_edge(g.edge(id).u, g.edge(id).v, wg.weight(id), b);
    }
    std::vector<boost::graph_traits<BoostWeighted>::vertex_descriptor> mate(g.node_count());
    if (exhaustive) {
        boost::brute_force_maximum_weighted_matching(b, &mate[0]);
    } else {
        boost::maximum_weighted_matching(b, &mate[0]);
    }
    Weight total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto u = mate[v];
        if (u != boost::graph_traits<BoostWeighted>::null_vertex() && v < u) {
            total += wg.weight(*g.find_edge(v, static_cast<NodeId>(u)));
        }
    }
    return total;
}

// --- Augmentation oracle by edge-subset enumeration --------------------------

struct SubsetAugmentation {
    std::vector<Edge> s;
    Weight gain;
};

/// Every S ⊆ E − M with |S| ≤ length that is a matching, whose symmetric
/// difference with M is a single path or cycle, and whose gain is positive.
inline std::vector<SubsetAugmentation> brute_force_augmentations(const WeightedGraph& wg, const Matching& m,
                                                                 std::size_t length) {
    const Graph& g = wg.graph();
    std::vector<EdgeId> free_edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (!m.contains(g.edge(id))) {
            free_edges.push_back(id);
        }
    }
    std::vector<SubsetAugmentation> out;
    const std::size_t k = free_edges.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > length) {
            continue;
        }
        std::vector<Edge> s;
        std::vector<int> touch(g.node_count(), 0);
        bool matching = true;
        Weight gain = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) {
                const Edge& e = g.edge(free_edges[i]);
                matching = matching && ++touch[e.u] == 1 && ++touch[e.v] == 1;
                s.push_back(e);
                gain += wg.weight(free_edges[i]);
            }
        }
        if (!matching) {
            continue;
        }
        // removed M-edges and the symmetric difference S ⊕ M(S)
        std::set<Edge> removed;
        for (const Edge& e : s) {
            for (NodeId x : {e.u, e.v}) {
                if (m.is_matched(x)) {
                    removed.insert(make_edge(x, m.mate(x)));
                }
            }
        }
        for (const Edge& e : removed) {
            gain -= wg.weight(e);
        }
        std::vector<Edge> diff(s.begin(), s.end());
        diff.insert(diff.end(), removed.begin(), removed.end());
        // single path or cycle: connected, all degrees ≤ 2
        std::vector<std::vector<NodeId>> adj(g.node_count());
        for (const Edge& e : diff) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<NodeId> nodes;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!adj[v].empty()) {
                nodes.push_back(v);
            }
        }
        std::vector<char> seen(g.node_count(), 0);
        std::vector<NodeId> stack{nodes.front()};
        seen[nodes.front()] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++reached;
            for (NodeId w : adj[v]) {
                if (seen[w] == 0) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (reached != nodes.size() || gain <= 0) {
            continue;
        }
        std::sort(s.begin(), s.end());
        out.push_back({std::move(s), gain});
    }
    return out;
}

} // namespace testing_support
