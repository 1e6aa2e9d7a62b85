#pragma once

#include "edgecolor/execution.hpp"
#include "edgecolor/graph.hpp"
#include "edgecolor/matching.hpp"
#include "edgecolor/ratio.hpp"
#include "edgecolor/round_ledger.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace edgecolor {

/// Knobs shared by every coloring driver.
struct ColoringOptions {
    RoundLedger* ledger = nullptr;
    Exec exec = Exec::serial;
    /// Augmentation caps for the matchings inside the drivers. Clamped by
    /// default: exhaustive ℓ = ⌈2/ε⌉ enumeration is Δ^ℓ work per iteration.
    AugmentationLimits limits{2, 4'000'000, true};
    /// Node count whose log₂ drives every schedule; 0 means the input's own.
    std::size_t schedule_nodes = 0;
    /// ε′ = ε / eps_divisor in the phase schedule.
    std::int64_t eps_divisor = 120;
    /// c in the split threshold Δ′ = c·ε⁻¹·log ε⁻¹·log n.
    double split_constant = 360;
    /// Overrides the computed split depth h (tests and experiments).
    std::optional<std::size_t> forced_split_depth;
    /// Keep per-extraction traces in three_halves_coloring.
    bool keep_traces = false;
};

// ---------------------------------------------------------------------------
// Degree reduction with pervasive matchings

/// ε′ = ε/divisor, ε_i = 2^i ε′, Δ_i = 2 log n/ε_i, T_i = ⌈log n/(4e ε_i)⌉,
/// l = smallest index with ε_{l+1} ≥ 1/(4e).
struct PhaseSchedule {
    Ratio eps_prime;
    std::vector<Ratio> eps;
    std::vector<double> thresholds;
    std::vector<std::size_t> steps;
    std::size_t last = 0;
    double cleanup_colors = 0; // 2·Δ_l

    static PhaseSchedule make(const Ratio& eps, double log_n, std::int64_t divisor = 120);
};

/// Steps per degree-reduction run: ⌈log n/(4eε)⌉.
std::size_t reduction_steps(const Ratio& eps, double log_n);

struct PhaseResult {
    EdgeColoring coloring; // partial, ids of the input graph
    Graph residual;
    std::size_t colors_used = 0;
    /// census[t][i] = #nodes of degree ≥ Δ−t+i after step t, for i ≤ t.
    std::vector<std::vector<std::size_t>> census;
    bool precondition_met = false;     // Δ ≥ 2 log n/ε
    double guaranteed_max_degree = 0;  // Δ − (1−4eε)T
};

/// Runs T steps; step t colors a pervasive matching of the residual (class
/// window t) with palette_base + t − 1. Throws PreconditionError if Δ < Δ̂.
PhaseResult reduce_degree_phase(const Graph& g, std::size_t delta, const Ratio& eps, std::size_t steps,
                                Color palette_base, const ColoringOptions& options = {});

/// C(t,i)·(2ε)^i·n, the census bound.
double census_bound(std::size_t t, std::size_t i, const Ratio& eps, std::size_t n);

struct PhaseRun {
    std::size_t phase = 0;
    std::size_t steps = 0;        // T_i
    std::size_t colors_used = 0;
    double bound_before = 0;      // tracked degree bound
    double bound_after = 0;
    std::size_t measured_after = 0;
    bool guarantee_held = true;
};

struct EpsColoringResult {
    EdgeColoring coloring;
    PhaseSchedule schedule;
    std::vector<PhaseRun> runs;
    std::size_t cleanup_matchings = 0;
    std::size_t cleanup_budget = 0; // 2Δ_l − 1
    bool precondition_met = false;  // Δ ≥ 360·ε⁻¹·log ε⁻¹·log n
    double color_bound = 0;         // (1+ε)Δ
    std::size_t colors_used = 0;
};

/// Proper complete coloring. Throws UsageError unless 0 < ε < 1 and
/// PreconditionError if Δ < Δ̂.
EpsColoringResult eps_edge_coloring(const Graph& g, std::size_t delta, const Ratio& eps,
                                    const ColoringOptions& options = {});

// ---------------------------------------------------------------------------
// Splitting

struct SplitResult {
    std::vector<Edge> a;
    std::vector<Edge> b;
    std::size_t max_discrepancy = 0;
};

/// Euler-circuit split: |deg_A(v) − deg_B(v)| ≤ 2 at every node.
SplitResult degree_split(const Graph& g);

struct SplitTree {
    std::size_t depth = 0;
    double gamma = 0;
    std::vector<std::size_t> degree_bounds; // D_0 … D_h, D_{i+1} = ⌈D_i/2⌉ + 1
    std::vector<Graph> leaves;
    std::vector<Color> palette_offsets;
    std::vector<std::size_t> palette_sizes;
};

struct FullColoringResult {
    EdgeColoring coloring;
    bool dispatched_to_three_halves = false;
    double threshold = 0; // Δ′
    SplitTree tree;
    std::size_t colors_used = 0;
};

/// Δ < Δ′ goes to the 3Δ/2 algorithm; otherwise split h levels and color the
/// leaves with disjoint palettes at ε/4.
FullColoringResult full_coloring(const Graph& g, std::size_t delta, const Ratio& eps,
                                 const ColoringOptions& options = {});

// ---------------------------------------------------------------------------
// 3Δ/2 coloring

struct ExtractionTrace {
    Matching m1, m2, m3, m4, m_prime;
    NodeSet v_delta, v1_delta, v2_delta_minus1, v3_delta_minus1;
    std::vector<std::size_t> m2_phases, m4_phases;
    std::vector<Edge> f; // (M1 ∪ M2 ∪ M3 ∪ M4) − M′
    Graph h;
    Graph residual; // (V, E − F)
};

/// Five-step extraction of a (3)-graph. Throws PreconditionError unless
/// Δ ≥ 3 and Δ ≥ Δ̂.
ExtractionTrace extract_3graph(const Graph& g, std::size_t delta, const ColoringOptions& options = {});

/// Colors 0..2. Throws PreconditionError with a witness if h is not a (3)-graph.
EdgeColoring color_3graph(const Graph& h);

/// Paths and even cycles get colors 0/1, odd cycles also use 2. Throws
/// PreconditionError when Δ̂ > 2.
EdgeColoring color_degree_le2(const Graph& g);

/// ⌊3Δ/2⌋ for even Δ, ⌈3Δ/2⌉ for odd Δ.
std::size_t three_halves_budget(std::size_t delta);

struct ThreeHalvesResult {
    EdgeColoring coloring;
    std::size_t extractions = 0;
    std::size_t colors_used = 0;
    std::size_t budget = 0;
    std::vector<ExtractionTrace> traces; // only with keep_traces
};

ThreeHalvesResult three_halves_coloring(const Graph& g, std::size_t delta, const ColoringOptions& options = {});

// ---------------------------------------------------------------------------
// Parameter selection for Δ + O(log n · log(2 + Δ/log n)) colors

struct TightResult {
    EdgeColoring coloring;
    std::string route; // "full" or "eps"
    Ratio eps;
    std::size_t colors_used = 0;
    long overhead = 0;           // colors_used − Δ
    double overhead_reference = 0; // 360·log n·log(2 + Δ/log n)
    bool dispatched_to_three_halves = false; // route "full" only
    std::size_t split_depth = 0;
    double gamma = 0;
    std::size_t leaf_delta = 0;
};

TightResult tight_palette_coloring(const Graph& g, std::size_t delta, const ColoringOptions& options = {});

// ---------------------------------------------------------------------------

/// Least non-conflicting color per edge in canonical order (≤ 2Δ̂ − 1 colors).
EdgeColoring greedy_edge_coloring(const Graph& g);

/// Renumber colors to 0..k−1 preserving their order.
EdgeColoring compact_colors(const EdgeColoring& c);

} // namespace edgecolor
