#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edgecolor {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::int32_t;
using Weight = std::int64_t;
using Label = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr Color kUncolored = -1;

// Sorted, duplicate-free list of dense node indices.
using NodeSet = std::vector<NodeId>;

// Undirected edge with u < v. The derived ordering is the canonical
// (min endpoint, max endpoint) order every algorithm iterates in.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Orders the endpoints. Throws GraphError on a self-loop.
Edge make_edge(NodeId a, NodeId b);

inline NodeId other_end(const Edge& e, NodeId x) { return e.u == x ? e.v : e.u; }

struct Incidence {
    NodeId neighbor;
    EdgeId edge;
};

/// Simple undirected graph on dense node indices 0..n-1.
///
/// Edge ids are positions in the canonical edge order, so two graphs built
/// from the same edge set agree on ids. Each node also carries an external
/// label (the id used in edge-list files); labels are strictly increasing in
/// the node index, which keeps canonical order identical in both views.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicates or endpoints >= node_count.
    /// Empty `labels` means label(v) == v.
    Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<Label> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }
    std::span<const Incidence> incident(NodeId v) const { return adjacency_[v]; }
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
    std::vector<std::size_t> degrees() const;

    /// Actual maximum degree (Δ̂).
    std::size_t max_degree() const { return max_degree_; }

    std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
    bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

    Label label(NodeId v) const { return labels_.empty() ? static_cast<Label>(v) : labels_[v]; }
    std::vector<Label> labels() const;
    /// Dense index for an external label, if present.
    std::optional<NodeId> node_of_label(Label label) const;

    /// Same node set, only the given edges (each must exist in this graph).
    Graph edge_subgraph(std::span<const Edge> keep) const;
    /// Same node set, every edge except the given ones.
    Graph without_edges(std::span<const Edge> remove) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.edges_ == b.edges_ && a.node_count() == b.node_count() && a.labels() == b.labels();
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Label> labels_;
    std::size_t max_degree_ = 0;
};

/// Build from labelled pairs. Nodes are the labels that appear, in increasing
/// order. Throws GraphError naming the offending pair (1-based position) on
/// negative ids, self-loops or duplicates.
Graph build_graph(std::span<const std::pair<Label, Label>> edge_list);

/// A set of pairwise node-disjoint edges.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::size_t node_count) : mate_(node_count, kNoNode) {}
    /// Throws GraphError if two edges share a node.
    Matching(std::size_t node_count, std::vector<Edge> edges);

    /// Partner array; mate[v] == kNoNode for free nodes. Must be symmetric.
    static Matching from_mates(std::vector<NodeId> mate);

    std::size_t node_count() const { return mate_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const NodeId> mates() const { return mate_; }

    NodeId mate(NodeId v) const { return mate_[v]; }
    bool is_matched(NodeId v) const { return mate_[v] != kNoNode; }
    bool contains(const Edge& e) const { return mate_[e.u] == e.v; }

    /// V(M), sorted.
    NodeSet matched_nodes() const;
    /// |S ∩ V(M)|.
    std::size_t hits(std::span<const NodeId> nodes) const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.mate_ == b.mate_; }

private:
    std::vector<NodeId> mate_;
    std::vector<Edge> edges_;
};

/// Partial map edge id -> colour, bound to one graph's edge ids.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::size_t edge_count) : colors_(edge_count, kUncolored) {}
    explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    std::size_t edge_count() const { return colors_.size(); }
    Color color(EdgeId e) const { return colors_[e]; }
    bool is_colored(EdgeId e) const { return colors_[e] != kUncolored; }
    std::span<const Color> colors() const { return colors_; }

    void assign(EdgeId e, Color c) { colors_[e] = c; }

    /// Number of distinct colours in use.
    std::size_t palette_count() const;
    /// One past the largest colour index in use (0 when nothing is coloured).
    Color palette_end() const;
    std::size_t colored_count() const;
    bool complete() const { return colored_count() == colors_.size(); }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
};

/// Graph with strictly positive integer weights. Decimal inputs are stored
/// scaled by 10^decimals so every comparison is exact.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// weights[i] belongs to graph.edge(i). Throws PreconditionError on w <= 0.
    WeightedGraph(Graph graph, std::vector<Weight> weights, int decimals = 0);

    const Graph& graph() const { return graph_; }
    Weight weight(EdgeId e) const { return weights_[e]; }
    Weight weight(const Edge& e) const;
    std::span<const Weight> weights() const { return weights_; }
    Weight wmin() const { return wmin_; }
    Weight wmax() const { return wmax_; }
    int decimals() const { return decimals_; }

    /// Unscaled decimal text of a stored weight.
    std::string format_weight(Weight w) const;

private:
    Graph graph_;
    std::vector<Weight> weights_;
    int decimals_ = 0;
    Weight wmin_ = 0;
    Weight wmax_ = 0;
};

Weight total_weight(std::span<const Edge> edges, const WeightedGraph& wg);

/// Disjoint node classes V_1..V_t with non-decreasing minimum degrees and the
/// suffix unions U_i = V_i ∪ ... ∪ V_t.
struct DegreeClassPartition {
    std::vector<NodeSet> classes;
    std::vector<std::size_t> min_degrees;
    std::vector<NodeSet> suffix_unions;

    /// V_j = nodes of degree exactly Δ - t + j - 1 for j = 1..t+1, dropping
    /// classes whose degree would be below 1.
    static DegreeClassPartition by_degree_window(const Graph& g, std::size_t delta, std::size_t t);
};

/// {v : deg(v) >= δ}.
NodeSet nodes_with_degree_at_least(const Graph& g, std::size_t delta);

/// A maximal connected piece of (M_a − M_b) ∪ (M_b − M_a). Edges are listed in
/// walk order along `nodes`; blue edges come from M_b − M_a, green from M_a − M_b.
struct AlternatingComponent {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    std::vector<bool> blue;
    bool cycle = false;

    std::size_t length() const { return edges.size(); }
    bool front_blue() const { return !blue.empty() && blue.front(); }
    bool back_blue() const { return !blue.empty() && blue.back(); }
};

std::vector<AlternatingComponent> symmetric_difference_decompose(const Matching& a, const Matching& b);

/// Connected components (including isolated nodes), each sorted, ordered by
/// smallest node.
std::vector<NodeSet> connected_components(const Graph& g);

/// Node mask helper: mask[v] != 0 iff v in nodes.
std::vector<char> node_mask(std::size_t node_count, std::span<const NodeId> nodes);
NodeSet to_node_set(std::vector<NodeId> nodes);

} // namespace edgecolor
