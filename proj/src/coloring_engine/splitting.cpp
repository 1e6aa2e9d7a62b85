#include "edgecolor/coloring.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <cmath>

namespace edgecolor {

namespace {

double schedule_log_n(const Graph& g, const ColoringOptions& options) {
    const std::size_t n = options.schedule_nodes == 0 ? g.node_count() : options.schedule_nodes;
    return std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
}

} // namespace

SplitResult degree_split(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto hub = static_cast<NodeId>(n);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) % 2 == 1) {
            edges.push_back({v, hub});
        }
    }
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(n + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].u].push_back({edges[i].v, i});
        adj[edges[i].v].push_back({edges[i].u, i});
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> cursor(n + 1, 0);
    std::vector<int> side(edges.size(), 0);

    // Hierholzer; the popped edge order is a closed trail
    auto circuit_from = [&](NodeId start) {
        std::vector<std::pair<NodeId, std::size_t>> stack{{start, edges.size()}};
        std::size_t position = 0;
        while (!stack.empty()) {
            const NodeId v = stack.back().first;
            auto& c = cursor[v];
            while (c < adj[v].size() && used[adj[v][c].second] != 0) {
                ++c;
            }
            if (c < adj[v].size()) {
                const auto [w, id] = adj[v][c];
                used[id] = 1;
                stack.push_back({w, id});
            } else {
                const std::size_t id = stack.back().second;
                stack.pop_back();
                if (id != edges.size()) {
                    side[id] = static_cast<int>(position++ % 2);
                }
            }
        }
    };
    if (!adj[hub].empty()) {
        circuit_from(hub);
    }
    for (NodeId v = 0; v < n; ++v) {
        if (cursor[v] < adj[v].size()) {
            circuit_from(v);
        }
    }

    SplitResult out;
    std::vector<long> balance(n, 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = edges[i];
        (side[i] == 0 ? out.a : out.b).push_back(e);
        const long d = side[i] == 0 ? 1 : -1;
        balance[e.u] += d;
        balance[e.v] += d;
    }
    for (long b : balance) {
        out.max_discrepancy = std::max(out.max_discrepancy, static_cast<std::size_t>(std::labs(b)));
    }
    return out;
}

FullColoringResult full_coloring(const Graph& g, std::size_t delta, const Ratio& eps, const ColoringOptions& options) {
    if (!eps.in_open_unit_interval()) {
        throw UsageError("full coloring needs 0 < eps < 1, got " + to_string(eps));
    }
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double log_n = schedule_log_n(g, options);
    const double e = static_cast<double>(eps.value());
    FullColoringResult out;
    out.threshold = options.split_constant / e * std::log2(1 / e) * log_n;

    if (!options.forced_split_depth && static_cast<double>(delta) < out.threshold) {
        ThreeHalvesResult r = three_halves_coloring(g, delta, options);
        out.dispatched_to_three_halves = true;
        out.coloring = std::move(r.coloring);
        out.colors_used = r.colors_used;
        return out;
    }

    SplitTree& tree = out.tree;
    tree.gamma = (e / 8) / (20 * std::max(1.0, std::log2(static_cast<double>(delta))));
    if (options.forced_split_depth) {
        tree.depth = *options.forced_split_depth;
    } else {
        const double ratio = std::log(out.threshold / static_cast<double>(delta)) / std::log(0.5 + tree.gamma);
        tree.depth = static_cast<std::size_t>(std::max(0.0, std::floor(ratio)));
    }
    tree.degree_bounds.push_back(delta);

    ColoringOptions inner = options;
    inner.schedule_nodes = options.schedule_nodes == 0 ? g.node_count() : options.schedule_nodes;
    const double n = std::exp2(log_n);

    std::vector<Graph> level{g};
    for (std::size_t depth = 0; depth < tree.depth; ++depth) {
        std::vector<Graph> next(2 * level.size());
        std::vector<RoundLedger> parts(level.size());
        for_each_index(options.exec, level.size(), [&](std::size_t i) {
            const SplitResult s = degree_split(level[i]);
            next[2 * i] = level[i].edge_subgraph(s.a);
            next[2 * i + 1] = level[i].edge_subgraph(s.b);
            CostParams c;
            c.n = n;
            c.gamma = tree.gamma;
            parts[i].charge(Primitive::degree_split, c);
        });
        if (options.ledger != nullptr) {
            options.ledger->merge_parallel(parts);
        }
        level = std::move(next);
        tree.degree_bounds.push_back((tree.degree_bounds.back() + 1) / 2 + 1);
    }

    const std::size_t leaf_delta = tree.degree_bounds.back();
    const Ratio leaf_eps = eps / 4;
    std::vector<EdgeColoring> leaf_colors(level.size());
    std::vector<RoundLedger> leaf_ledgers(level.size());
    for_each_index(options.exec, level.size(), [&](std::size_t i) {
        ColoringOptions leaf = inner;
        leaf.exec = Exec::serial;
        leaf.ledger = &leaf_ledgers[i];
        leaf_colors[i] = compact_colors(eps_edge_coloring(level[i], leaf_delta, leaf_eps, leaf).coloring);
    });
    if (options.ledger != nullptr) {
        options.ledger->merge_parallel(leaf_ledgers);
    }

    out.coloring = EdgeColoring(g.edge_count());
    Color offset = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
        tree.palette_offsets.push_back(offset);
        const std::size_t size = leaf_colors[i].palette_count();
        tree.palette_sizes.push_back(size);
        for (EdgeId id = 0; id < level[i].edge_count(); ++id) {
            const Edge& edge = level[i].edge(id);
            out.coloring.assign(*g.find_edge(edge.u, edge.v), offset + leaf_colors[i].color(id));
        }
        offset += static_cast<Color>(size);
    }
    tree.leaves = std::move(level);
    out.colors_used = out.coloring.palette_count();
    return out;
}

TightResult tight_palette_coloring(const Graph& g, std::size_t delta, const ColoringOptions& options) {
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double log_n = schedule_log_n(g, options);
    const double d = static_cast<double>(delta);
    TightResult out;
    out.overhead_reference = options.split_constant * log_n * std::log2(2 + d / log_n);

    auto via_full = [&] {
        out.route = "full";
        out.eps = Ratio(1, 2);
        if (options.ledger != nullptr) {
            options.ledger->note("small degree: full coloring at eps = 1/2");
        }
        FullColoringResult full = full_coloring(g, delta, out.eps, options);
        out.coloring = std::move(full.coloring);
        out.dispatched_to_three_halves = full.dispatched_to_three_halves;
        out.split_depth = full.tree.depth;
        out.gamma = full.tree.gamma;
        out.leaf_delta = full.tree.degree_bounds.empty() ? delta : full.tree.degree_bounds.back();
    };
    const double eps = out.overhead_reference / d;
    if (d <= options.split_constant * log_n || eps >= 1) {
        via_full();
    } else {
        out.route = "eps";
        out.eps = Ratio(static_cast<std::int64_t>(std::ceil(eps * 1e6)), 1'000'000);
        if (!out.eps.in_open_unit_interval()) {
            via_full();
        } else {
            out.coloring = eps_edge_coloring(g, delta, out.eps, options).coloring;
        }
    }
    out.colors_used = out.coloring.palette_count();
    out.overhead = static_cast<long>(out.colors_used) - static_cast<long>(delta);
    return out;
}

EdgeColoring greedy_edge_coloring(const Graph& g) {
    EdgeColoring out(g.edge_count());
    const std::size_t palette = std::max<std::size_t>(1, 2 * g.max_degree());
    std::vector<std::vector<char>> taken(g.node_count(), std::vector<char>(palette, 0));
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        std::size_t c = 0;
        while (taken[e.u][c] != 0 || taken[e.v][c] != 0) {
            ++c;
        }
        taken[e.u][c] = taken[e.v][c] = 1;
        out.assign(id, static_cast<Color>(c));
    }
    return out;
}

EdgeColoring compact_colors(const EdgeColoring& c) {
    std::vector<Color> palette;
    for (Color x : c.colors()) {
        if (x != kUncolored) {
            palette.push_back(x);
        }
    }
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<Color> out(c.colors().begin(), c.colors().end());
    for (Color& x : out) {
        if (x != kUncolored) {
            x = static_cast<Color>(std::lower_bound(palette.begin(), palette.end(), x) - palette.begin());
        }
    }
    return EdgeColoring(std::move(out));
}

} // namespace edgecolor
