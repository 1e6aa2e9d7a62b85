#include "edgecolor/graph.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <map>

namespace edgecolor {

Edge make_edge(NodeId a, NodeId b) {
    if (a == b) {
        throw GraphError("self-loop at node " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<Label> labels)
    : edges_(std::move(edges)), adjacency_(node_count), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != node_count) {
        throw GraphError("label count does not match node count");
    }
    for (std::size_t i = 1; i < labels_.size(); ++i) {
        if (labels_[i - 1] >= labels_[i]) {
            throw GraphError("labels must be strictly increasing");
        }
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw GraphError("self-loop at node " + std::to_string(label(e.u)));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.v >= node_count) {
            throw GraphError("edge endpoint " + std::to_string(e.v) + " out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw GraphError("duplicate edge " + std::to_string(label(dup->u)) + " " + std::to_string(label(dup->v)));
    }
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        adjacency_[edges_[id].u].push_back({edges_[id].v, id});
        adjacency_[edges_[id].v].push_back({edges_[id].u, id});
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
        max_degree_ = std::max(max_degree_, list.size());
    }
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(node_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        out[v] = degree(v);
    }
    return out;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
    if (a >= node_count() || b >= node_count() || a == b) {
        return std::nullopt;
    }
    if (adjacency_[a].size() > adjacency_[b].size()) {
        std::swap(a, b);
    }
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& inc, NodeId x) { return inc.neighbor < x; });
    if (it == list.end() || it->neighbor != b) {
        return std::nullopt;
    }
    return it->edge;
}

std::vector<Label> Graph::labels() const {
    if (!labels_.empty()) {
        return labels_;
    }
    std::vector<Label> out(node_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        out[v] = v;
    }
    return out;
}

std::optional<NodeId> Graph::node_of_label(Label l) const {
    if (labels_.empty()) {
        if (l < 0 || static_cast<std::size_t>(l) >= node_count()) {
            return std::nullopt;
        }
        return static_cast<NodeId>(l);
    }
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) {
        return std::nullopt;
    }
    return static_cast<NodeId>(it - labels_.begin());
}

Graph Graph::edge_subgraph(std::span<const Edge> keep) const {
    std::vector<Edge> kept(keep.begin(), keep.end());
    for (const Edge& e : kept) {
        if (!has_edge(e.u, e.v)) {
            throw GraphError("edge_subgraph: edge not in graph");
        }
    }
    return Graph(node_count(), std::move(kept), labels_);
}

Graph Graph::without_edges(std::span<const Edge> remove) const {
    std::vector<char> drop(edges_.size(), 0);
    for (const Edge& e : remove) {
        if (auto id = find_edge(e.u, e.v)) {
            drop[*id] = 1;
        }
    }
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        if (!drop[id]) {
            kept.push_back(edges_[id]);
        }
    }
    return Graph(node_count(), std::move(kept), labels_);
}

Graph build_graph(std::span<const std::pair<Label, Label>> edge_list) {
    std::vector<Label> labels;
    labels.reserve(edge_list.size() * 2);
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const auto [a, b] = edge_list[i];
        if (a < 0 || b < 0) {
            throw GraphError("pair " + std::to_string(i + 1) + ": negative node id");
        }
        if (a == b) {
            throw GraphError("pair " + std::to_string(i + 1) + ": self-loop at node " + std::to_string(a));
        }
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto index_of = [&](Label l) {
        return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::map<Edge, std::size_t> seen;
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const Edge e = make_edge(index_of(edge_list[i].first), index_of(edge_list[i].second));
        auto [it, fresh] = seen.emplace(e, i + 1);
        if (!fresh) {
            throw GraphError("pair " + std::to_string(i + 1) + ": duplicate edge " + std::to_string(edge_list[i].first) +
                             " " + std::to_string(edge_list[i].second) + " (first seen at pair " +
                             std::to_string(it->second) + ")");
        }
        edges.push_back(e);
    }
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

Matching::Matching(std::size_t node_count, std::vector<Edge> edges) : mate_(node_count, kNoNode), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u == e.v || e.v >= node_count) {
            throw GraphError("matching edge is not a valid edge");
        }
        if (mate_[e.u] != kNoNode || mate_[e.v] != kNoNode) {
            throw GraphError("matching edges share node " + std::to_string(mate_[e.u] != kNoNode ? e.u : e.v));
        }
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
    }
    std::sort(edges_.begin(), edges_.end());
}

Matching Matching::from_mates(std::vector<NodeId> mate) {
    Matching m;
    m.mate_ = std::move(mate);
    for (NodeId v = 0; v < m.mate_.size(); ++v) {
        const NodeId w = m.mate_[v];
        if (w == kNoNode) {
            continue;
        }
        if (w >= m.mate_.size() || m.mate_[w] != v || w == v) {
            throw GraphError("mate array is not symmetric at node " + std::to_string(v));
        }
        if (v < w) {
            m.edges_.push_back({v, w});
        }
    }
    return m;
}

NodeSet Matching::matched_nodes() const {
    NodeSet out;
    for (NodeId v = 0; v < mate_.size(); ++v) {
        if (mate_[v] != kNoNode) {
            out.push_back(v);
        }
    }
    return out;
}

std::size_t Matching::hits(std::span<const NodeId> nodes) const {
    std::size_t count = 0;
    for (NodeId v : nodes) {
        count += is_matched(v) ? 1 : 0;
    }
    return count;
}

std::size_t EdgeColoring::palette_count() const {
    std::vector<Color> used;
    for (Color c : colors_) {
        if (c != kUncolored) {
            used.push_back(c);
        }
    }
    std::sort(used.begin(), used.end());
    return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

Color EdgeColoring::palette_end() const {
    Color top = 0;
    for (Color c : colors_) {
        top = std::max(top, c + 1);
    }
    return top;
}

std::size_t EdgeColoring::colored_count() const {
    return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; }));
}

WeightedGraph::WeightedGraph(Graph graph, std::vector<Weight> weights, int decimals)
    : graph_(std::move(graph)), weights_(std::move(weights)), decimals_(decimals) {
    if (weights_.size() != graph_.edge_count()) {
        throw PreconditionError("weight count does not match edge count");
    }
    for (EdgeId e = 0; e < weights_.size(); ++e) {
        if (weights_[e] <= 0) {
            const Edge& ed = graph_.edge(e);
            throw PreconditionError("nonpositive weight on edge " + std::to_string(graph_.label(ed.u)) + " " +
                                    std::to_string(graph_.label(ed.v)));
        }
    }
    if (!weights_.empty()) {
        auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
        wmin_ = *lo;
        wmax_ = *hi;
    }
}

Weight WeightedGraph::weight(const Edge& e) const {
    auto id = graph_.find_edge(e.u, e.v);
    if (!id) {
        throw GraphError("edge not in weighted graph");
    }
    return weights_[*id];
}

std::string WeightedGraph::format_weight(Weight w) const {
    if (decimals_ == 0) {
        return std::to_string(w);
    }
    std::string digits = std::to_string(w);
    if (digits.size() <= static_cast<std::size_t>(decimals_)) {
        digits.insert(0, static_cast<std::size_t>(decimals_) + 1 - digits.size(), '0');
    }
    std::string whole = digits.substr(0, digits.size() - decimals_);
    std::string frac = digits.substr(digits.size() - decimals_);
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    return frac.empty() ? whole : whole + "." + frac;
}

Weight total_weight(std::span<const Edge> edges, const WeightedGraph& wg) {
    Weight sum = 0;
    for (const Edge& e : edges) {
        sum += wg.weight(e);
    }
    return sum;
}

DegreeClassPartition DegreeClassPartition::by_degree_window(const Graph& g, std::size_t delta, std::size_t t) {
    DegreeClassPartition p;
    for (std::size_t j = 1; j <= t + 1; ++j) {
        if (delta + j < t + 2) {
            continue; // Δ - t + j - 1 < 1
        }
        const std::size_t degree = delta + j - t - 1;
        NodeSet cls;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.degree(v) == degree) {
                cls.push_back(v);
            }
        }
        p.classes.push_back(std::move(cls));
        p.min_degrees.push_back(degree);
    }
    p.suffix_unions.resize(p.classes.size());
    NodeSet acc;
    for (std::size_t i = p.classes.size(); i-- > 0;) {
        NodeSet merged;
        std::merge(acc.begin(), acc.end(), p.classes[i].begin(), p.classes[i].end(), std::back_inserter(merged));
        acc = std::move(merged);
        p.suffix_unions[i] = acc;
    }
    return p;
}

NodeSet nodes_with_degree_at_least(const Graph& g, std::size_t delta) {
    NodeSet out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) >= delta) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<AlternatingComponent> symmetric_difference_decompose(const Matching& a, const Matching& b) {
    const std::size_t n = std::max(a.node_count(), b.node_count());
    auto mate_in = [n](const Matching& m, NodeId v) { return v < m.node_count() ? m.mate(v) : kNoNode; };
    // green[v]: partner through M_a − M_b; blue[v]: partner through M_b − M_a.
    std::vector<NodeId> green(n, kNoNode), blue(n, kNoNode);
    for (NodeId v = 0; v < n; ++v) {
        const NodeId ga = mate_in(a, v);
        const NodeId gb = mate_in(b, v);
        if (ga != gb) {
            green[v] = ga;
            blue[v] = gb;
        }
    }
    std::vector<char> visited(n, 0);
    std::vector<AlternatingComponent> out;

    auto walk = [&](NodeId start, bool first_blue, bool cycle) {
        AlternatingComponent comp;
        comp.cycle = cycle;
        comp.nodes.push_back(start);
        visited[start] = 1;
        NodeId cur = start;
        bool use_blue = first_blue;
        while (true) {
            const NodeId next = use_blue ? blue[cur] : green[cur];
            if (next == kNoNode) {
                break;
            }
            comp.edges.push_back(make_edge(cur, next));
            comp.blue.push_back(use_blue);
            if (next == start) {
                break;
            }
            comp.nodes.push_back(next);
            visited[next] = 1;
            cur = next;
            use_blue = !use_blue;
        }
        out.push_back(std::move(comp));
    };

    for (NodeId v = 0; v < n; ++v) {
        const bool has_green = green[v] != kNoNode;
        const bool has_blue = blue[v] != kNoNode;
        if (!visited[v] && has_green != has_blue) {
            walk(v, has_blue, false);
        }
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!visited[v] && green[v] != kNoNode && blue[v] != kNoNode) {
            walk(v, false, true);
        }
    }
    return out;
}

std::vector<char> node_mask(std::size_t node_count, std::span<const NodeId> nodes) {
    std::vector<char> mask(node_count, 0);
    for (NodeId v : nodes) {
        mask[v] = 1;
    }
    return mask;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    std::vector<NodeSet> out;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (seen[root]) {
            continue;
        }
        NodeSet comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const Incidence& inc : g.incident(v)) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

NodeSet to_node_set(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

} // namespace edgecolor
