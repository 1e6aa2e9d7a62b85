#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgecolor {

/// Primitives whose LOCAL-round cost is priced from closed-form bounds.
enum class Primitive {
    maximal_matching,       // log³ n
    hypergraph_mm,          // M(r, Γ) = r² · log(nΓ) · log n · log⁴ Γ
    weighted_matching,      // M_W(ε) = 1/ε² + (1/ε) · M(⌈1/ε⌉, Δ^⌈1/ε⌉) · log n + log³ n
    hit_matching,           // M_W(ε)
    combine_matchings,      // k
    pervasive_matching,     // t/ε + M_W(ε/2)
    bipartite_max_matching, // d · log n · M(d log n, d^(d log n))
    degree_split,           // γ⁻¹ · log γ⁻¹ · log n · log log γ⁻¹
    three_coloring,         // log³ n
    cole_vishkin,           // log* n
    sequential_greedy,      // m (one edge per step)
};

std::string_view to_string(Primitive p);
/// Throws UsageError for unknown names.
Primitive parse_primitive(std::string_view name);

/// Formula inputs. Γ-type quantities are carried as log₂ Γ so that
/// Δ^⌈1/ε⌉ never has to be materialised.
struct CostParams {
    double n = 0;
    double delta = 0;
    double eps = 0;
    double t = 0;
    double r = 0;
    double log2_gamma = 0;
    double gamma = 0;
    double d = 0;
    double k = 0;
    double m = 0;
};

/// Unit-constant evaluation; every log is base 2. Throws UsageError when a
/// required parameter is non-positive.
double price(Primitive p, const CostParams& params);
double price(std::string_view primitive, const CostParams& params);

// Building blocks, exposed for headline formulas and tests.
double log2_clamped(double x);           // log₂ max(x, 1)
double iterated_log2(double n);          // log* n
double hypergraph_matching_rounds(double r, double log2_gamma, double n);
double weighted_matching_rounds(double eps, double delta, double n);

struct LedgerEntry {
    Primitive primitive;
    CostParams params;
    double rounds;
    std::size_t group; // entries sharing a non-zero group ran in parallel
};

/// Append-only cost log for one run. `work` sums every entry; `depth` sums
/// sequential entries and takes the max over each parallel group.
class RoundLedger {
public:
    double charge(Primitive p, const CostParams& params);

    /// Fold sub-ledgers that ran concurrently: work adds, depth takes the max.
    void merge_parallel(const std::vector<RoundLedger>& parts);

    std::span<const LedgerEntry> entries() const { return entries_; }
    double work() const { return work_; }
    double depth() const { return depth_; }
    bool empty() const { return entries_.empty(); }

    /// Free-text remarks about routing decisions; no cost.
    void note(std::string text) { notes_.push_back(std::move(text)); }
    std::span<const std::string> notes() const { return notes_; }

private:
    std::vector<LedgerEntry> entries_;
    std::vector<std::string> notes_;
    double work_ = 0;
    double depth_ = 0;
    std::size_t next_group_ = 1;
};

struct LedgerSummary {
    std::map<std::string, double> subtotals; // by primitive name, work
    std::map<std::string, std::size_t> counts;
    double work = 0;
    double depth = 0;
    std::string headline_formula;
    double headline_rounds = 0;
    std::vector<std::string> notes;
};

/// Headline bound for one top-level algorithm.
struct Headline {
    std::string formula;
    double rounds = 0;
};

Headline headline_eps_coloring(double delta, double eps, double n);
Headline headline_three_halves(double delta, double n);
Headline headline_full_coloring(double delta, double eps, double n, std::size_t split_depth, double gamma,
                                double leaf_delta, bool dispatched_to_three_halves);
Headline headline_greedy(double m);

LedgerSummary report(const RoundLedger& ledger, const std::optional<Headline>& headline = std::nullopt);

} // namespace edgecolor
