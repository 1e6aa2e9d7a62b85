#pragma once

#include "edgecolor/execution.hpp"
#include "edgecolor/graph.hpp"
#include "edgecolor/ratio.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace edgecolor {

// ---------------------------------------------------------------------------
// Maximal matchings

/// Scan edges in canonical order, keep every edge whose endpoints are free.
Matching greedy_maximal_matching(const Graph& g);
/// Same, restricted to G[allowed] (allowed[v] != 0).
Matching greedy_maximal_matching(const Graph& g, std::span<const char> allowed);
/// Add canonical-order edges to `m` until it is maximal in g.
Matching extend_to_maximal(const Graph& g, Matching m);

// ---------------------------------------------------------------------------
// Augmentations

enum class AugmentationShape { path, cycle };

/// S is a matching in E − M whose symmetric difference with M is one path or
/// cycle. `removed` = M(S), the M-edges touching V(S).
struct Augmentation {
    std::vector<Edge> s_edges;
    std::vector<Edge> removed;
    AugmentationShape shape = AugmentationShape::path;
    Weight gain = 0;
    std::uint32_t rank = 0;
    NodeSet footprint; // V(S) ∪ V(M(S))

    friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

/// Enumeration caps. Candidate counts grow as Δ^ℓ, so a run either refuses
/// (strict) or shortens ℓ (clamp) when a cap is hit.
struct AugmentationLimits {
    std::size_t max_length = 24;
    std::size_t max_candidates = 4'000'000;
    bool clamp = false;
};

/// rank 0 iff gain ≤ wmin/(ℓn); otherwise the smallest i with gain ≤ 2^i·wmin/(ℓn).
std::uint32_t augmentation_rank(Weight gain, std::size_t length, std::size_t n, Weight wmin);
/// Smallest r with 2^r·wmin ≥ ℓ²·n·wmax, i.e. a rank bucket for every possible gain.
std::uint32_t max_augmentation_rank(std::size_t length, std::size_t n, Weight wmin, Weight wmax);

struct EnumerateOptions {
    AugmentationLimits limits;
    Exec exec = Exec::serial;
    /// ℓ used for rank buckets; 0 means "same as the enumeration length".
    std::size_t rank_length = 0;
};

/// All positive-gain augmentations with at most `length` S-edges, sorted by
/// gain descending, then footprint, then S. Throws BlowUpGuardError when
/// `length` or the candidate count exceeds the limits (clamp is ignored here).
std::vector<Augmentation> enumerate_augmentations(const WeightedGraph& wg, const Matching& m, std::size_t length,
                                                  const EnumerateOptions& options = {});

/// Hyperedges are augmentations; two collide iff their footprints intersect.
struct AugmentationHypergraph {
    std::size_t node_count = 0;
    std::vector<Augmentation> hyperedges;
};

/// Canonical priority: gain descending, then footprint, then S.
bool canonical_before(const Augmentation& a, const Augmentation& b);

/// Greedy maximal footprint-disjoint set, scanning `order` (indices into
/// h.hyperedges). Hyperedges touching a node with blocked[v] != 0 are skipped.
std::vector<std::size_t> hypergraph_greedy_maximal_matching(const AugmentationHypergraph& h,
                                                            std::span<const std::size_t> order,
                                                            std::span<const char> blocked = {});
/// Same with the canonical priority.
std::vector<std::size_t> hypergraph_greedy_maximal_matching(const AugmentationHypergraph& h,
                                                            std::span<const char> blocked = {});

/// M − M(S) + S.
Matching apply_augmentation(const Matching& m, const Augmentation& a);

// ---------------------------------------------------------------------------
// Weighted matching

struct WeightedMatchingOptions {
    AugmentationLimits limits;
    Exec exec = Exec::serial;
    std::size_t oracle_cap = 16;
};

struct WeightedMatchingReport {
    Matching matching;
    std::size_t nominal_length = 0; // ⌈2/ε⌉
    std::size_t used_length = 0;    // after the n/2 and cap adjustments
    bool clamped = false;
    std::size_t iteration_budget = 0;
    std::size_t iterations = 0;
    std::uint32_t max_rank = 0;
    std::size_t exact_components = 0;
    std::size_t augmentations_applied = 0;
    std::vector<Weight> weight_trace; // after each iteration, before the maximal extension
};

/// Maximal matching with w(M) ≥ (1−ε)·w(M*) whenever no clamping happened.
/// Throws UsageError unless 0 < ε < 1.
WeightedMatchingReport approx_weighted_matching_report(const WeightedGraph& wg, const Ratio& eps,
                                                       const WeightedMatchingOptions& options = {});
Matching approx_weighted_matching(const WeightedGraph& wg, const Ratio& eps, const WeightedMatchingOptions& options = {});

/// Exact maximum-weight matching, per component by subset DP. Throws
/// OracleCapError when a component has more than `cap` nodes.
Matching brute_force_max_weight_matching(const WeightedGraph& wg, std::size_t cap = 16);

// ---------------------------------------------------------------------------
// Matchings that hit node sets

/// Approximate max-weight matching under w({u,v}) = |S ∩ {u,v}|. Throws
/// PreconditionError if δ_S = 0 or some S-node has degree < δ_S.
Matching hit_matching(const Graph& g, std::span<const NodeId> s, std::size_t delta_s, const Ratio& eps,
                      const WeightedMatchingOptions& options = {});

/// Starts from M_a and swaps every short augmenting path of M_a ⊕ M_b|S that
/// begins in S_b − S_a. Requires k ≥ 1.
Matching combine_matchings(const Graph& g, const Matching& a, const Matching& b, std::span<const NodeId> s,
                           std::size_t k);

/// Keep only the edges of `m` with at least one endpoint in S.
Matching restrict_to_touching(const Matching& m, std::span<const NodeId> s);

struct PervasiveOptions {
    WeightedMatchingOptions matching;
    Exec exec = Exec::serial; // per-class hit matchings
};

/// One maximal matching that, for every i ≤ t, hits a
/// (1−ε)(Δ−i)/(Δ̂+1) fraction of the nodes of degree ≥ Δ−i.
/// Throws PreconditionError when Δ < Δ̂.
Matching pervasive_matching(const Graph& g, std::size_t delta, std::size_t t, const Ratio& eps,
                            const PervasiveOptions& options = {});

// ---------------------------------------------------------------------------
// Skewed bipartite maximum matching

struct BipartiteMatchingResult {
    Matching matching;
    std::vector<std::size_t> phase_lengths; // shortest augmenting path per phase, in edges
    std::size_t min_left_degree = 0;         // d
    std::size_t max_right_degree = 0;        // f
};

/// Maximum matching of B between U and V, assuming d = min deg(U) > f = max deg(V).
/// Every U-node ends up matched. Throws PreconditionError when d ≤ f or an
/// edge does not cross the sides.
BipartiteMatchingResult bipartite_max_matching(const Graph& b, std::span<const NodeId> left,
                                               std::span<const NodeId> right);

} // namespace edgecolor
