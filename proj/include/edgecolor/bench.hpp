#pragma once

#include "edgecolor/coloring.hpp"
#include "edgecolor/graph.hpp"
#include "edgecolor/ratio.hpp"
#include "edgecolor/round_ledger.hpp"
#include "edgecolor/validate.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgecolor::bench {

/// splitmix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds.
/// The only randomness in the project; algorithms never see it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

struct GeneratedGraph {
    Graph graph;
    std::optional<WeightedGraph> weighted;
    NodeSet left; // U side of bipartite_skewed, else empty
};

/// Specs: gnm:n,m  dregular:n,d  bipartite_skewed:nU,nV,d,f  path:n  cycle:n
/// weighted:R:<spec>. Node labels are 1..n. Throws UsageError on malformed
/// or infeasible specs and GeneratorError when retries run out.
GeneratedGraph generate(std::string_view spec, std::uint64_t seed);

enum class Algorithm { eps, threehalves, full, tight, greedy_baseline };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

enum class AssertMode { hard, report };

struct RunConfig {
    Algorithm algorithm = Algorithm::threehalves;
    Ratio eps{1, 2};
    std::uint64_t seed = 0;
    std::string input; // path or generator spec, echoed into the result
    std::optional<std::size_t> delta; // declared Δ; defaults to Δ̂
    AssertMode assert_mode = AssertMode::hard;
    ColoringOptions options; // ledger field is ignored; run owns its ledger
};

struct Guarantee {
    std::string name;
    std::string status; // "pass", "fail" or "informational"
    std::string detail;
};

struct RunResult {
    RunConfig config;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t delta_declared = 0;
    std::size_t delta_measured = 0;
    std::size_t colors_used = 0;
    double colors_bound = 0;
    std::vector<std::pair<std::string, double>> bounds;
    EdgeColoring coloring;
    Verdict proper;
    Verdict complete;
    std::vector<Guarantee> guarantees;
    LedgerSummary ledger;
    double wall_ms = 0;

    /// Validators pass and no guarantee is "fail".
    bool passed() const;
};

RunResult run(const Graph& g, const RunConfig& config);

/// Fixed key order; wall_ms is the last key and omitted when include_wall is false.
nlohmann::ordered_json to_json(const RunResult& r, bool include_wall = true);

/// Header plus one row per result: algorithm,colors_used,colors_bound,ledger_total,time_ms.
/// Throws UsageError when results come from different inputs.
std::string compare_csv(std::span<const RunResult> results);

} // namespace edgecolor::bench
