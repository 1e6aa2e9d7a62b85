#include "edgecolor/matching.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <atomic>

namespace edgecolor {

namespace {

__extension__ typedef __int128 i128;

// Depth-first walk over chains s1, m1, s2, m2, ... where s_j are non-matching
// edges and m_j = (y_j, mate(y_j)) links consecutive ones. Every prefix of a
// chain is an augmentation; the walk emits each one once via the
// orientation rules in emit().
class ChainWalker {
public:
    ChainWalker(const WeightedGraph& wg, const Matching& m, std::span<const Weight> mate_weight, std::size_t length,
                std::size_t rank_length, std::atomic<std::size_t>& visited, std::size_t max_candidates)
        : wg_(wg), g_(wg.graph()), m_(m), mate_weight_(mate_weight), length_(length), rank_length_(rank_length),
          visited_(visited), max_candidates_(max_candidates) {}

    void run(NodeId x1, NodeId y1, EdgeId first, std::vector<Augmentation>& out) {
        out_ = &out;
        nodes_ = {x1, y1};
        s_ids_ = {first};
        // gain of S = {s1} before subtracting any M-edge
        extend(wg_.weight(first));
    }

private:
    bool in_chain(NodeId v) const { return std::find(nodes_.begin(), nodes_.end(), v) != nodes_.end(); }

    void extend(Weight s_weight) {
        if (visited_.fetch_add(1, std::memory_order_relaxed) >= max_candidates_) {
            throw BlowUpGuardError("augmentation enumeration exceeded the blow-up guard max_candidates=" +
                                   std::to_string(max_candidates_) + " at length " + std::to_string(length_));
        }
        emit(s_weight);
        if (s_ids_.size() == length_) {
            return;
        }
        const NodeId y = nodes_.back();
        const NodeId x_next = m_.mate(y);
        if (x_next == kNoNode || x_next == nodes_.front()) {
            return; // free end, or the chain already closed into a cycle
        }
        nodes_.push_back(x_next);
        for (const Incidence& inc : g_.incident(x_next)) {
            const NodeId z = inc.neighbor;
            if (z == y || in_chain(z)) {
                continue;
            }
            nodes_.push_back(z);
            s_ids_.push_back(inc.edge);
            extend(s_weight + wg_.weight(inc.edge));
            s_ids_.pop_back();
            nodes_.pop_back();
        }
        nodes_.pop_back();
    }

    void emit(Weight s_weight) {
        const NodeId x1 = nodes_.front();
        const NodeId y_last = nodes_.back();
        const NodeId y1 = nodes_[1];
        const bool cycle = s_ids_.size() >= 2 && m_.mate(y_last) == x1;
        if (cycle) {
            // one representative: start at the smallest S-edge, walk from its smaller endpoint
            if (x1 > y1 || *std::min_element(s_ids_.begin(), s_ids_.end()) != s_ids_.front()) {
                return;
            }
        } else if (x1 > y_last) {
            return;
        }

        Weight removed_weight = 0;
        std::vector<Edge> removed;
        for (std::size_t j = 1; j + 2 < nodes_.size(); j += 2) {
            // (y_j, x_{j+1}) sits at positions j, j+1
            removed.push_back(make_edge(nodes_[j], nodes_[j + 1]));
            removed_weight += mate_weight_[nodes_[j]];
        }
        NodeSet footprint(nodes_.begin(), nodes_.end());
        if (cycle) {
            removed.push_back(make_edge(y_last, x1));
            removed_weight += mate_weight_[x1];
        } else {
            for (NodeId end : {x1, y_last}) {
                if (m_.is_matched(end)) {
                    removed.push_back(make_edge(end, m_.mate(end)));
                    removed_weight += mate_weight_[end];
                    footprint.push_back(m_.mate(end));
                }
            }
        }
        const Weight gain = s_weight - removed_weight;
        if (gain <= 0) {
            return;
        }
        Augmentation a;
        for (EdgeId id : s_ids_) {
            a.s_edges.push_back(g_.edge(id));
        }
        std::sort(a.s_edges.begin(), a.s_edges.end());
        std::sort(removed.begin(), removed.end());
        a.removed = std::move(removed);
        std::sort(footprint.begin(), footprint.end());
        a.footprint = std::move(footprint);
        a.shape = cycle ? AugmentationShape::cycle : AugmentationShape::path;
        a.gain = gain;
        a.rank = augmentation_rank(gain, rank_length_, g_.node_count(), wg_.wmin());
        out_->push_back(std::move(a));
    }

    const WeightedGraph& wg_;
    const Graph& g_;
    const Matching& m_;
    std::span<const Weight> mate_weight_;
    std::size_t length_;
    std::size_t rank_length_;
    std::atomic<std::size_t>& visited_;
    std::size_t max_candidates_;
    std::vector<Augmentation>* out_ = nullptr;
    std::vector<NodeId> nodes_; // x1, y1, x2, y2, ...
    std::vector<EdgeId> s_ids_;
};

} // namespace

std::uint32_t augmentation_rank(Weight gain, std::size_t length, std::size_t n, Weight wmin) {
    const i128 scaled = static_cast<i128>(gain) * static_cast<i128>(length) * static_cast<i128>(n);
    i128 bucket = wmin;
    std::uint32_t rank = 0;
    while (bucket < scaled) {
        bucket <<= 1;
        ++rank;
    }
    return rank;
}

std::uint32_t max_augmentation_rank(std::size_t length, std::size_t n, Weight wmin, Weight wmax) {
    const i128 target = static_cast<i128>(length) * static_cast<i128>(length) * static_cast<i128>(n) * wmax;
    i128 bucket = wmin;
    std::uint32_t rank = 0;
    while (bucket < target) {
        bucket <<= 1;
        ++rank;
    }
    return rank;
}

bool canonical_before(const Augmentation& a, const Augmentation& b) {
    if (a.gain != b.gain) {
        return a.gain > b.gain;
    }
    if (a.footprint != b.footprint) {
        return a.footprint < b.footprint;
    }
    return a.s_edges < b.s_edges;
}

std::vector<Augmentation> enumerate_augmentations(const WeightedGraph& wg, const Matching& m, std::size_t length,
                                                  const EnumerateOptions& options) {
    const Graph& g = wg.graph();
    if (length == 0) {
        throw PreconditionError("augmentation length must be at least 1");
    }
    if (length > options.limits.max_length) {
        throw BlowUpGuardError("augmentation length " + std::to_string(length) +
                               " exceeds the blow-up guard max_length=" + std::to_string(options.limits.max_length));
    }
    if (m.node_count() != g.node_count()) {
        throw PreconditionError("matching and graph disagree on node count");
    }
    std::vector<Weight> mate_weight(g.node_count(), 0);
    for (const Edge& e : m.edges()) {
        const auto id = g.find_edge(e.u, e.v);
        if (!id) {
            throw PreconditionError("matching edge is not in the graph");
        }
        mate_weight[e.u] = mate_weight[e.v] = wg.weight(*id);
    }
    const std::size_t rank_length = options.rank_length == 0 ? length : options.rank_length;

    // slot 2e + o: chains whose first S-edge is e, entered from endpoint o
    std::vector<std::vector<Augmentation>> slots(2 * g.edge_count());
    std::atomic<std::size_t> visited{0};
    for_each_index(options.exec, slots.size(), [&](std::size_t slot) {
        const auto id = static_cast<EdgeId>(slot / 2);
        const Edge& e = g.edge(id);
        if (m.contains(e)) {
            return;
        }
        const bool flipped = slot % 2 == 1;
        ChainWalker walker(wg, m, mate_weight, length, rank_length, visited, options.limits.max_candidates);
        walker.run(flipped ? e.v : e.u, flipped ? e.u : e.v, id, slots[slot]);
    });

    std::vector<Augmentation> all;
    for (auto& slot : slots) {
        std::move(slot.begin(), slot.end(), std::back_inserter(all));
    }
    std::sort(all.begin(), all.end(), canonical_before);
    return all;
}

std::vector<std::size_t> hypergraph_greedy_maximal_matching(const AugmentationHypergraph& h,
                                                            std::span<const std::size_t> order,
                                                            std::span<const char> blocked) {
    std::vector<char> used(h.node_count, 0);
    if (!blocked.empty()) {
        std::copy(blocked.begin(), blocked.end(), used.begin());
    }
    std::vector<std::size_t> chosen;
    for (std::size_t idx : order) {
        const NodeSet& fp = h.hyperedges[idx].footprint;
        if (std::any_of(fp.begin(), fp.end(), [&](NodeId v) { return used[v] != 0; })) {
            continue;
        }
        for (NodeId v : fp) {
            used[v] = 1;
        }
        chosen.push_back(idx);
    }
    return chosen;
}

std::vector<std::size_t> hypergraph_greedy_maximal_matching(const AugmentationHypergraph& h,
                                                            std::span<const char> blocked) {
    std::vector<std::size_t> order(h.hyperedges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canonical_before(h.hyperedges[a], h.hyperedges[b]);
    });
    return hypergraph_greedy_maximal_matching(h, order, blocked);
}

Matching apply_augmentation(const Matching& m, const Augmentation& a) {
    std::vector<NodeId> mate(m.mates().begin(), m.mates().end());
    for (const Edge& e : a.removed) {
        mate[e.u] = mate[e.v] = kNoNode;
    }
    for (const Edge& e : a.s_edges) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return Matching::from_mates(std::move(mate));
}

} // namespace edgecolor
