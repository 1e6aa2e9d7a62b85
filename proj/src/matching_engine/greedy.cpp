#include "edgecolor/matching.hpp"

namespace edgecolor {

Matching greedy_maximal_matching(const Graph& g) {
    return extend_to_maximal(g, Matching(g.node_count()));
}

Matching greedy_maximal_matching(const Graph& g, std::span<const char> allowed) {
    std::vector<NodeId> mate(g.node_count(), kNoNode);
    for (const Edge& e : g.edges()) {
        if (allowed[e.u] && allowed[e.v] && mate[e.u] == kNoNode && mate[e.v] == kNoNode) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    }
    return Matching::from_mates(std::move(mate));
}

Matching extend_to_maximal(const Graph& g, Matching m) {
    std::vector<NodeId> mate(m.mates().begin(), m.mates().end());
    mate.resize(g.node_count(), kNoNode);
    for (const Edge& e : g.edges()) {
        if (mate[e.u] == kNoNode && mate[e.v] == kNoNode) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    }
    return Matching::from_mates(std::move(mate));
}

} // namespace edgecolor
