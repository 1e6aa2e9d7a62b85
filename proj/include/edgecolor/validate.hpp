#pragma once

#include "edgecolor/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edgecolor {

/// Outcome of a validator. On failure `nodes`/`edges` hold a concrete witness.
struct Verdict {
    bool ok = true;
    std::string check;
    std::string detail;
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;

    explicit operator bool() const { return ok; }
};

enum class CheckKind {
    matching,
    maximal_matching,
    proper_coloring,
    complete_coloring,
    three_graph,
    split_discrepancy,
};

/// Throws UsageError for unknown names.
CheckKind parse_check_kind(std::string_view name);
std::string_view to_string(CheckKind kind);

// Edge set must be pairwise node-disjoint and contained in g.
Verdict check_matching(const Graph& g, std::span<const Edge> edges);
// Matching plus: no edge of g has both endpoints free.
Verdict check_maximal_matching(const Graph& g, const Matching& m);
Verdict check_maximal_matching(const Graph& g, std::span<const Edge> edges);
// No node sees the same colour twice.
Verdict check_proper_coloring(const Graph& g, const EdgeColoring& c);
// Proper and every edge coloured.
Verdict check_complete_coloring(const Graph& g, const EdgeColoring& c);
// Max degree <= 3 and degree-3 nodes pairwise non-adjacent.
Verdict check_three_graph(const Graph& h);
// A and B partition E(g) and |deg_A(v) - deg_B(v)| <= bound everywhere.
Verdict check_split_discrepancy(const Graph& g, std::span<const Edge> a, std::span<const Edge> b, std::size_t bound);

struct EdgeSplit {
    std::vector<Edge> a;
    std::vector<Edge> b;
};

using Artifact = std::variant<std::vector<Edge>, EdgeColoring, EdgeSplit>;

/// Dispatch by kind. `bound` is used only by split_discrepancy. Throws
/// UsageError when the artifact type does not fit the kind.
Verdict validate(const Graph& g, const Artifact& artifact, CheckKind kind, std::size_t bound = 2);

} // namespace edgecolor
