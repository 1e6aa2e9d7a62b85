#include "edgecolor/matching.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace edgecolor {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Phase-based search: BFS layers from free left nodes, then a maximal set of
// node-disjoint shortest augmenting paths found by layered DFS.
class Phases {
public:
    Phases(const Graph& b, std::span<const NodeId> left) : b_(b), left_(left), mate_(b.node_count(), kNoNode) {}

    // Shortest augmenting path length in edges, or 0 if none exists.
    std::size_t layer() {
        layer_.assign(b_.node_count(), kUnreached);
        std::deque<NodeId> queue;
        for (NodeId u : left_) {
            if (mate_[u] == kNoNode) {
                layer_[u] = 0;
                queue.push_back(u);
            }
        }
        shortest_ = 0;
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            if (shortest_ != 0 && 2 * layer_[u] + 1 > shortest_) {
                break;
            }
            for (const Incidence& inc : b_.incident(u)) {
                const NodeId w = mate_[inc.neighbor];
                if (w == kNoNode) {
                    if (shortest_ == 0) {
                        shortest_ = 2 * layer_[u] + 1;
                    }
                } else if (layer_[w] == kUnreached) {
                    layer_[w] = layer_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return shortest_;
    }

    void augment_all() {
        for (NodeId u : left_) {
            if (mate_[u] == kNoNode && layer_[u] == 0) {
                search(u);
            }
        }
    }

    std::vector<NodeId> take_mates() { return std::move(mate_); }

private:
    bool search(NodeId u) {
        for (const Incidence& inc : b_.incident(u)) {
            const NodeId v = inc.neighbor;
            const NodeId w = mate_[v];
            const bool hit = w == kNoNode ? 2 * layer_[u] + 1 == shortest_
                                          : layer_[w] == layer_[u] + 1 && search(w);
            if (hit) {
                mate_[u] = v;
                mate_[v] = u;
                return true;
            }
        }
        layer_[u] = kUnreached;
        return false;
    }

    const Graph& b_;
    std::span<const NodeId> left_;
    std::vector<NodeId> mate_;
    std::vector<std::size_t> layer_;
    std::size_t shortest_ = 0;
};

} // namespace

BipartiteMatchingResult bipartite_max_matching(const Graph& b, std::span<const NodeId> left,
                                               std::span<const NodeId> right) {
    const auto in_left = node_mask(b.node_count(), left);
    const auto in_right = node_mask(b.node_count(), right);
    for (NodeId v : left) {
        if (in_right[v]) {
            throw PreconditionError("node " + std::to_string(b.label(v)) + " is on both sides");
        }
    }
    for (const Edge& e : b.edges()) {
        if (!((in_left[e.u] && in_right[e.v]) || (in_right[e.u] && in_left[e.v]))) {
            throw PreconditionError("edge " + std::to_string(b.label(e.u)) + "-" + std::to_string(b.label(e.v)) +
                                    " does not cross the bipartition");
        }
    }
    BipartiteMatchingResult result;
    result.matching = Matching(b.node_count());
    if (left.empty()) {
        return result;
    }
    result.min_left_degree = kUnreached;
    for (NodeId u : left) {
        result.min_left_degree = std::min(result.min_left_degree, b.degree(u));
    }
    for (NodeId v : right) {
        result.max_right_degree = std::max(result.max_right_degree, b.degree(v));
    }
    if (result.min_left_degree <= result.max_right_degree) {
        throw PreconditionError("skewed bipartite matching needs d > f, got d=" + std::to_string(result.min_left_degree) +
                                " f=" + std::to_string(result.max_right_degree));
    }

    Phases phases(b, left);
    while (const std::size_t length = phases.layer()) {
        if (!result.phase_lengths.empty() && length <= result.phase_lengths.back()) {
            throw InvariantError("shortest augmenting path did not grow between phases");
        }
        result.phase_lengths.push_back(length);
        phases.augment_all();
    }
    result.matching = Matching::from_mates(phases.take_mates());
    for (NodeId u : left) {
        if (!result.matching.is_matched(u)) {
            throw InvariantError("left node " + std::to_string(b.label(u)) + " left unmatched");
        }
    }
    return result;
}

} // namespace edgecolor
