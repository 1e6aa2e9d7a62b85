// Acceptance run: one PASS/FAIL line per criterion, thresholds pinned below.

#include "support.hpp"

#include "edgecolor/bench.hpp"
#include "edgecolor/coloring.hpp"
#include "edgecolor/errors.hpp"
#include "edgecolor/matching.hpp"
#include "edgecolor/round_ledger.hpp"
#include "edgecolor/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace edgecolor;
using namespace testing_support;

namespace {

// Corpus sizes and limits.
constexpr std::size_t kColoringCorpus = 200;
constexpr std::size_t kColoringMaxNodes = 200;
constexpr std::size_t kColoringMinDelta = 3;
constexpr std::size_t kColoringMaxDelta = 12;
constexpr double kColoringSeconds = 60;

constexpr std::size_t kWeightedInstances = 500;
constexpr std::size_t kWeightedMaxNodes = 14;
constexpr double kWeightedSeconds = 120;

constexpr std::size_t kCombineInstances = 1000;
constexpr std::size_t kCombineMaxNodes = 30;
constexpr std::size_t kCombineMaxK = 4;

constexpr std::size_t kPervasiveInstances = 200;
constexpr std::size_t kPervasiveMaxNodes = 100;
constexpr std::size_t kPervasiveMaxT = 4;

constexpr std::size_t kBipartiteInstances = 300;

constexpr std::size_t kSplitInstances = 200;
constexpr std::size_t kSplitDiscrepancy = 2;

constexpr std::size_t kCensusNodes = 1024;
constexpr std::size_t kCensusDegree = 250;
constexpr std::int64_t kCensusEpsNum = 9;
constexpr std::int64_t kCensusEpsDen = 100;
constexpr double kCensusSeconds = 600;

constexpr double kHeadlineSlack = 1e-12;

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Random graphs with n ≤ 200 and 3 ≤ Δ̂ ≤ 12, shared by criteria 1, 2 and 11.
std::vector<Graph> coloring_corpus() {
    std::vector<Graph> out;
    bench::SplitMix64 rng(0xC0105);
    for (std::uint64_t seed = 1; out.size() < kColoringCorpus; ++seed) {
        const std::size_t n = 6 + rng.below(kColoringMaxNodes - 5);
        const std::size_t d = 2 + rng.below(6);
        const std::size_t m = std::min(n * d / 2, n * (n - 1) / 2);
        const Graph g = random_graph(n, m, seed);
        if (g.max_degree() >= kColoringMinDelta && g.max_degree() <= kColoringMaxDelta) {
            out.push_back(g);
        }
    }
    return out;
}

std::size_t h_degree(const ExtractionTrace& t, NodeId v) {
    return t.h.degree(v);
}

// --- 1 ------------------------------------------------------------------------

Outcome three_halves_bound(const std::vector<Graph>& corpus) {
    const auto start = Clock::now();
    std::size_t violations = 0;
    std::size_t worst_slack = 1000;
    for (const Graph& g : corpus) {
        const std::size_t delta = g.max_degree();
        const ThreeHalvesResult r = three_halves_coloring(g, delta);
        const std::size_t limit = (3 * delta + 1) / 2;
        const bool ok = check_proper_coloring(g, r.coloring).ok && check_complete_coloring(g, r.coloring).ok &&
                        r.colors_used <= limit;
        violations += ok ? 0 : 1;
        worst_slack = std::min(worst_slack, limit >= r.colors_used ? limit - r.colors_used : 0);
    }
    const Graph k4 = complete_graph(4);
    const ThreeHalvesResult rk4 = three_halves_coloring(k4, 3);
    const bool k4_ok = check_proper_coloring(k4, rk4.coloring).ok && rk4.colors_used <= 4;
    const double secs = seconds_since(start);
    Outcome o;
    o.ok = violations == 0 && k4_ok && secs < kColoringSeconds;
    o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(violations) +
               " violations, min slack to ceil(3D/2) " + std::to_string(worst_slack) + ", K4 colors " +
               std::to_string(rk4.colors_used) + ", " + std::to_string(secs) + " s";
    return o;
}

// --- 2 ------------------------------------------------------------------------

Outcome extraction_properties(const std::vector<Graph>& corpus) {
    std::size_t traces = 0;
    std::size_t violations = 0;
    ColoringOptions opts;
    opts.keep_traces = true;
    for (const Graph& g : corpus) {
        const std::size_t delta = g.max_degree();
        const ThreeHalvesResult r = three_halves_coloring(g, delta, opts);
        // Degree bound of the current graph shrinks by 2 per extraction.
        std::size_t current = delta;
        for (const ExtractionTrace& t : r.traces) {
            ++traces;
            const std::size_t n = t.h.node_count();
            bool ok = check_three_graph(t.h).ok && t.residual.max_degree() + 2 <= current;
            for (NodeId v = 0; v < n; ++v) {
                const std::size_t deg = t.h.degree(v) + t.residual.degree(v);
                if (deg == current) {
                    ok = ok && h_degree(t, v) >= 2;
                } else if (deg + 1 == current) {
                    ok = ok && h_degree(t, v) >= 1;
                }
            }
            violations += ok ? 0 : 1;
            current -= 2;
        }
    }
    Outcome o;
    o.ok = violations == 0 && traces > 0;
    o.detail = std::to_string(traces) + " extraction traces, " + std::to_string(violations) + " violations";
    return o;
}

// --- 3 ------------------------------------------------------------------------

Outcome weighted_approximation() {
    const auto start = Clock::now();
    const Ratio eps_values[] = {Ratio(1, 2), Ratio(1, 4), Ratio(1, 10)};
    bench::SplitMix64 rng(0x3E16);
    std::size_t failures = 0;
    std::size_t oracle_disagreements = 0;
    std::size_t clamped = 0;
    std::size_t exact_components = 0;
    std::size_t augmentations = 0;
    long double worst_ratio = 1;
    for (std::size_t i = 0; i < kWeightedInstances; ++i) {
        const std::size_t n = 2 + rng.below(kWeightedMaxNodes - 1);
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = 1 + rng.below(pairs);
        const std::size_t range = 1 + rng.below(100);
        const auto gen = bench::generate("weighted:" + std::to_string(range) + ":gnm:" + std::to_string(n) + "," +
                                             std::to_string(m),
                                         i + 1);
        const WeightedGraph& wg = *gen.weighted;
        const Ratio eps = eps_values[i % 3];
        const WeightedMatchingReport rep = approx_weighted_matching_report(wg, eps);
        clamped += rep.clamped ? 1 : 0;
        exact_components += rep.exact_components;
        augmentations += rep.augmentations_applied;
        const Weight got = total_weight(rep.matching.edges(), wg);
        const Weight opt = boost_max_weight(wg, false);
        const Weight opt_exhaustive = boost_max_weight(wg, true);
        const Weight opt_project = total_weight(brute_force_max_weight_matching(wg).edges(), wg);
        if (opt != opt_exhaustive || opt != opt_project) {
            ++oracle_disagreements;
        }
        // got ≥ (1 − ε)·opt, exactly
        const bool ok = static_cast<__int128>(got) * eps.den >= static_cast<__int128>(eps.den - eps.num) * opt &&
                        check_matching(wg.graph(), rep.matching.edges()).ok;
        failures += ok ? 0 : 1;
        if (opt > 0) {
            worst_ratio = std::min(worst_ratio, static_cast<long double>(got) / static_cast<long double>(opt));
        }
    }
    const double secs = seconds_since(start);
    Outcome o;
    o.ok = failures == 0 && oracle_disagreements == 0 && secs < kWeightedSeconds;
    std::ostringstream d;
    d << kWeightedInstances << " instances, " << failures << " failures, " << oracle_disagreements
      << " oracle disagreements, " << clamped << " clamped runs, " << exact_components
      << " exactly solved light components, " << augmentations << " augmentations applied, worst w/opt " << static_cast<double>(worst_ratio)
      << ", " << secs << " s";
    o.detail = d.str();
    return o;
}

// --- 4 ------------------------------------------------------------------------

std::size_t count_in(const NodeSet& nodes, const std::vector<char>& mask) {
    std::size_t c = 0;
    for (NodeId v : nodes) {
        c += mask[v] != 0 ? 1 : 0;
    }
    return c;
}

Outcome combination_properties() {
    bench::SplitMix64 rng(0xC0B1);
    std::size_t failures[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < kCombineInstances; ++i) {
        const std::size_t n = 2 + rng.below(kCombineMaxNodes - 1);
        const std::size_t pairs = n * (n - 1) / 2;
        const std::size_t m = rng.below(std::min(pairs, 3 * n) + 1);
        const Graph g = random_graph(n, m, 7000 + i);
        const Matching a = random_matching(g, rng.next(), 30 + rng.below(71));
        const Matching b = random_matching(g, rng.next(), 30 + rng.below(71));
        NodeSet s;
        std::vector<char> in_s(n, 0);
        const std::uint64_t density = 1 + rng.below(99);
        for (NodeId v = 0; v < n; ++v) {
            if (rng.below(100) < density) {
                s.push_back(v);
                in_s[v] = 1;
            }
        }
        const std::size_t k = 1 + rng.below(kCombineMaxK);
        const Matching c = combine_matchings(g, a, b, s, k);

        failures[0] += check_matching(g, c.edges()).ok ? 0 : 1;
        failures[1] += c.size() >= a.size() ? 0 : 1;
        // (ii): matched by a, outside S, lost in c  ≤  in S, gained by c
        std::size_t lost_outside = 0;
        std::size_t gained_inside = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (a.is_matched(v) && !c.is_matched(v) && in_s[v] == 0) {
                ++lost_outside;
            }
            if (c.is_matched(v) && !a.is_matched(v) && in_s[v] != 0) {
                ++gained_inside;
            }
        }
        failures[2] += lost_outside <= gained_inside ? 0 : 1;
        // (iii): c hits ≥ (1 − 1/k)·s nodes of S, s counted for b restricted to S
        const std::size_t s_b = count_in(restrict_to_touching(b, s).matched_nodes(), in_s);
        const std::size_t s_c = c.hits(s);
        failures[3] += k * s_c >= (k - 1) * s_b ? 0 : 1;
    }
    Outcome o;
    o.ok = failures[0] + failures[1] + failures[2] + failures[3] == 0;
    o.detail = std::to_string(kCombineInstances) + " instances; failures: matching " + std::to_string(failures[0]) +
               ", (i) " + std::to_string(failures[1]) + ", (ii) " + std::to_string(failures[2]) + ", (iii) " +
               std::to_string(failures[3]);
    return o;
}

// --- 5 ------------------------------------------------------------------------

Outcome pervasive_fractions() {
    bench::SplitMix64 rng(0x9E5);
    const Ratio eps_values[] = {Ratio(1, 2), Ratio(1, 4), Ratio(1, 5)};
    std::size_t violations = 0;
    std::size_t not_maximal = 0;
    std::size_t checks = 0;
    long double worst_margin = 1e9;
    for (std::size_t i = 0; i < kPervasiveInstances; ++i) {
        const std::size_t n = 4 + rng.below(kPervasiveMaxNodes - 3);
        const std::size_t d = 2 + rng.below(6);
        const Graph g = random_graph(n, std::min(n * d / 2, n * (n - 1) / 2), 9000 + i);
        const std::size_t delta = g.max_degree();
        if (delta == 0) {
            continue;
        }
        const std::size_t t = i % (kPervasiveMaxT + 1);
        const Ratio eps = eps_values[i % 3];
        // Unclamped ℓ = ⌈4/ε⌉ is Δ^ℓ work; the guard steps ℓ down instead.
        PervasiveOptions opts;
        opts.matching.limits.clamp = true;
        const Matching p = pervasive_matching(g, delta, t, eps, opts);
        not_maximal += check_maximal_matching(g, p).ok ? 0 : 1;
        for (std::size_t j = 0; j <= t && j < delta; ++j) {
            const NodeSet dj = nodes_with_degree_at_least(g, delta - j);
            const std::size_t hits = p.hits(dj);
            ++checks;
            // hits·(Δ̂+1)·den ≥ (den − num)·(Δ − j)·|D_j|
            const __int128 lhs = static_cast<__int128>(hits) * (delta + 1) * eps.den;
            const __int128 rhs = static_cast<__int128>(eps.den - eps.num) * (delta - j) * dj.size();
            violations += lhs >= rhs ? 0 : 1;
            if (!dj.empty()) {
                const long double need = static_cast<long double>(rhs) / static_cast<long double>(lhs == 0 ? 1 : lhs);
                worst_margin = std::min(worst_margin, 1 / need);
            }
        }
    }
    Outcome o;
    o.ok = violations == 0 && not_maximal == 0;
    std::ostringstream d;
    d << kPervasiveInstances << " graphs (clamped augmentation length), " << checks << " class checks, " << violations << " fraction violations, "
      << not_maximal << " non-maximal, min hit/required " << static_cast<double>(worst_margin);
    o.detail = d.str();
    return o;
}

// --- 6 ------------------------------------------------------------------------

Outcome bipartite_maximum() {
    bench::SplitMix64 rng(0xB1);
    std::size_t size_mismatch = 0;
    std::size_t unmatched_left = 0;
    std::size_t non_increasing = 0;
    std::size_t made = 0;
    for (std::uint64_t seed = 1; made < kBipartiteInstances; ++seed) {
        const std::size_t f = 1 + rng.below(4);
        const std::size_t d = f + 1 + rng.below(4);
        const std::size_t nu = 2 + rng.below(40);
        const std::size_t nv = std::max(d, (nu * d + f - 1) / f) + rng.below(20);
        const std::string spec = "bipartite_skewed:" + std::to_string(nu) + "," + std::to_string(nv) + "," +
                                 std::to_string(d) + "," + std::to_string(f);
        bench::GeneratedGraph gen;
        try {
            gen = bench::generate(spec, seed);
        } catch (const GeneratorError&) {
            continue;
        }
        ++made;
        NodeSet right;
        for (NodeId v = static_cast<NodeId>(nu); v < gen.graph.node_count(); ++v) {
            right.push_back(v);
        }
        const BipartiteMatchingResult r = bipartite_max_matching(gen.graph, gen.left, right);
        size_mismatch += r.matching.size() == boost_max_matching_size(gen.graph) ? 0 : 1;
        bool all_left = true;
        for (NodeId u : gen.left) {
            all_left = all_left && r.matching.is_matched(u);
        }
        unmatched_left += all_left ? 0 : 1;
        non_increasing += std::adjacent_find(r.phase_lengths.begin(), r.phase_lengths.end(),
                                             [](std::size_t x, std::size_t y) { return y <= x; }) ==
                                  r.phase_lengths.end()
                              ? 0
                              : 1;
    }
    Outcome o;
    o.ok = size_mismatch + unmatched_left + non_increasing == 0;
    o.detail = std::to_string(made) + " instances; size mismatches " + std::to_string(size_mismatch) +
               ", unmatched U " + std::to_string(unmatched_left) + ", non-increasing phases " +
               std::to_string(non_increasing);
    return o;
}

// --- 7 ------------------------------------------------------------------------

Outcome split_and_palettes() {
    bench::SplitMix64 rng(0x5B1);
    std::size_t split_failures = 0;
    for (std::size_t i = 0; i < kSplitInstances; ++i) {
        const std::size_t n = 2 + rng.below(150);
        const std::size_t pairs = n * (n - 1) / 2;
        const Graph g = random_graph(n, rng.below(std::min(pairs, 6 * n) + 1), 11000 + i);
        const SplitResult s = degree_split(g);
        split_failures += check_split_discrepancy(g, s.a, s.b, kSplitDiscrepancy).ok ? 0 : 1;
    }

    // Full coloring with two forced split levels on dense regular graphs.
    std::size_t palette_failures = 0;
    std::size_t runs = 0;
    for (const char* spec : {"dregular:64,40", "dregular:80,33", "gnm:100,1500", "dregular:50,49"}) {
        const Graph g = bench::generate(spec, 5).graph;
        ColoringOptions opts;
        opts.forced_split_depth = 2;
        opts.split_constant = 0; // never dispatch to the 3Δ/2 route
        const FullColoringResult r = full_coloring(g, g.max_degree(), Ratio(1, 2), opts);
        ++runs;
        bool ok = !r.dispatched_to_three_halves && r.tree.leaves.size() == 4 &&
                  check_proper_coloring(g, r.coloring).ok && check_complete_coloring(g, r.coloring).ok;
        std::vector<char> covered(g.edge_count(), 0);
        for (std::size_t leaf = 0; ok && leaf < r.tree.leaves.size(); ++leaf) {
            const Color lo = r.tree.palette_offsets[leaf];
            const Color hi = lo + static_cast<Color>(r.tree.palette_sizes[leaf]);
            if (leaf + 1 < r.tree.leaves.size()) {
                ok = ok && hi <= r.tree.palette_offsets[leaf + 1];
            }
            for (const Edge& e : r.tree.leaves[leaf].edges()) {
                const EdgeId id = *g.find_edge(e.u, e.v);
                ok = ok && covered[id] == 0 && r.coloring.color(id) >= lo && r.coloring.color(id) < hi;
                covered[id] = 1;
            }
        }
        ok = ok && std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
        palette_failures += ok ? 0 : 1;
    }
    Outcome o;
    o.ok = split_failures == 0 && palette_failures == 0;
    o.detail = std::to_string(kSplitInstances) + " splits, " + std::to_string(split_failures) +
               " discrepancy/partition failures; " + std::to_string(runs) + " two-level full colorings, " +
               std::to_string(palette_failures) + " palette failures";
    return o;
}

// --- 8 ------------------------------------------------------------------------

Outcome census_bound_holds() {
    const auto start = Clock::now();
    const Graph g =
        bench::generate("dregular:" + std::to_string(kCensusNodes) + "," + std::to_string(kCensusDegree), 1).graph;
    const Ratio eps(kCensusEpsNum, kCensusEpsDen);
    const double log_n = std::log2(static_cast<double>(kCensusNodes));
    const std::size_t steps = reduction_steps(eps, log_n);
    ColoringOptions opts; // clamped augmentation limits (ℓ ≤ 2)
    const PhaseResult r = reduce_degree_phase(g, g.max_degree(), eps, steps, 0, opts);
    std::size_t violations = 0;
    std::size_t checks = 0;
    double tightest = 0;
    for (std::size_t t = 0; t < r.census.size(); ++t) {
        for (std::size_t i = 0; i <= t && i < r.census[t].size(); ++i) {
            ++checks;
            const double bound = census_bound(t, i, eps, kCensusNodes);
            violations += static_cast<double>(r.census[t][i]) <= bound ? 0 : 1;
            if (bound > 0) {
                tightest = std::max(tightest, static_cast<double>(r.census[t][i]) / bound);
            }
        }
    }
    const bool proper = check_proper_coloring(g, r.coloring).ok;
    const double secs = seconds_since(start);
    Outcome o;
    o.ok = violations == 0 && proper && r.precondition_met && secs < kCensusSeconds;
    std::ostringstream d;
    d << "n=" << kCensusNodes << " D=" << g.max_degree() << " eps=" << to_string(eps) << " T=" << steps << ", "
      << checks << " census entries, " << violations << " violations, max K/bound " << tightest
      << ", precondition " << (r.precondition_met ? "met" : "not met") << ", " << secs << " s";
    o.detail = d.str();
    return o;
}

// --- 9 ------------------------------------------------------------------------

Outcome eps_coloring_substitute() {
    std::size_t failures = 0;
    std::size_t phase_runs = 0;
    std::size_t over_budget = 0;
    // Instances that exercise the phase loop through a small schedule.
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Graph g = bench::generate("dregular:100,96", seed).graph;
        ColoringOptions opts;
        opts.schedule_nodes = 8;
        opts.eps_divisor = 5;
        const EpsColoringResult r = eps_edge_coloring(g, 96, Ratio(1, 3), opts);
        failures += check_proper_coloring(g, r.coloring).ok && check_complete_coloring(g, r.coloring).ok ? 0 : 1;
        for (const PhaseRun& run : r.runs) {
            ++phase_runs;
            over_budget += run.colors_used <= run.steps ? 0 : 1;
        }
    }
    // Default schedule on the random corpus shapes.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(40 + seed * 5, 200 + seed * 40, seed);
        const EpsColoringResult r = eps_edge_coloring(g, g.max_degree(), Ratio(1, 4));
        failures += check_proper_coloring(g, r.coloring).ok && check_complete_coloring(g, r.coloring).ok ? 0 : 1;
        for (const PhaseRun& run : r.runs) {
            ++phase_runs;
            over_budget += run.colors_used <= run.steps ? 0 : 1;
        }
    }
    // Informational: n = 256, Δ̂ near 24.
    const Graph g = bench::generate("dregular:256,24", 1).graph;
    const Ratio eps(1, 2);
    const EpsColoringResult info = eps_edge_coloring(g, g.max_degree(), eps);
    failures += check_proper_coloring(g, info.coloring).ok && check_complete_coloring(g, info.coloring).ok ? 0 : 1;

    Outcome o;
    o.ok = failures == 0 && over_budget == 0 && phase_runs > 0;
    std::ostringstream d;
    d << "24 runs, " << failures << " improper/incomplete, " << phase_runs << " phase runs, " << over_budget
      << " over T_i; informational n=256 D=" << g.max_degree() << ": " << info.colors_used << " colors vs (1+eps)D = "
      << info.color_bound << " (precondition " << (info.precondition_met ? "met" : "not met") << ")";
    o.detail = d.str();
    return o;
}

// --- 10 -----------------------------------------------------------------------

Outcome ledger_consistency() {
    std::size_t failures = 0;
    std::size_t runs = 0;
    const std::vector<bench::Algorithm> algorithms{bench::Algorithm::greedy_baseline, bench::Algorithm::threehalves,
                                                   bench::Algorithm::eps, bench::Algorithm::full,
                                                   bench::Algorithm::tight};
    for (const char* spec : {"gnm:60,300", "dregular:64,20", "gnm:200,800", "dregular:100,96"}) {
        const Graph g = bench::generate(spec, 2).graph;
        for (bench::Algorithm a : algorithms) {
            bench::RunConfig cfg;
            cfg.algorithm = a;
            cfg.eps = Ratio(1, 4);
            cfg.input = spec;
            const bench::RunResult r = bench::run(g, cfg);
            ++runs;
            const bool within = r.ledger.depth <= r.ledger.headline_rounds * (1 + kHeadlineSlack) &&
                                r.ledger.depth <= r.ledger.work;
            failures += within ? 0 : 1;
        }
    }

    CostParams mm;
    mm.n = 256;
    CostParams hyper;
    hyper.r = 2;
    hyper.log2_gamma = 4;
    hyper.n = 256;
    CostParams w;
    w.eps = 0.5;
    w.delta = 4;
    w.n = 256;
    // Independent arithmetic: log³256 = 512; 2²·log₂(256·16)·log₂256·log₂⁴16 = 4·12·8·256.
    const double expected_mm = 8.0 * 8 * 8;
    const double expected_hyper = 4.0 * 12 * 8 * 256;
    // 1/ε² + (1/ε)·M(2, 4², 256)·log n + log³ n
    const double expected_weighted = 4 + 2 * expected_hyper * 8 + expected_mm;
    const bool spot = price(Primitive::maximal_matching, mm) == expected_mm &&
                      price(Primitive::hypergraph_mm, hyper) == expected_hyper && expected_hyper == 98304 &&
                      price(Primitive::weighted_matching, w) == expected_weighted;
    Outcome o;
    o.ok = failures == 0 && spot;
    o.detail = std::to_string(runs) + " runs, " + std::to_string(failures) + " ledger depth above headline; spot prices " +
               (spot ? "match (512, 98304, 1573380)" : "differ");
    return o;
}

// --- 11 -----------------------------------------------------------------------

Outcome determinism(const std::vector<Graph>& corpus) {
    std::size_t json_diffs = 0;
    std::size_t coloring_diffs = 0;
    std::size_t exec_diffs = 0;
    std::size_t runs = 0;
    const std::vector<bench::Algorithm> algorithms{bench::Algorithm::greedy_baseline, bench::Algorithm::threehalves,
                                                   bench::Algorithm::eps, bench::Algorithm::full,
                                                   bench::Algorithm::tight};
    auto compare = [&](const Graph& g, bench::RunConfig cfg) {
        const bench::RunResult first = bench::run(g, cfg);
        const bench::RunResult second = bench::run(g, cfg);
        ++runs;
        json_diffs += bench::to_json(first, false).dump() == bench::to_json(second, false).dump() ? 0 : 1;
        coloring_diffs += first.coloring == second.coloring ? 0 : 1;
        cfg.options.exec = Exec::parallel;
        const bench::RunResult par = bench::run(g, cfg);
        const bool same = par.coloring == first.coloring && par.ledger.work == first.ledger.work &&
                          par.ledger.depth == first.ledger.depth;
        exec_diffs += same ? 0 : 1;
    };
    for (std::size_t i = 0; i < corpus.size(); i += 10) {
        for (bench::Algorithm a : algorithms) {
            bench::RunConfig cfg;
            cfg.algorithm = a;
            cfg.eps = Ratio(1, 2);
            cfg.input = "corpus:" + std::to_string(i);
            compare(corpus[i], cfg);
        }
    }
    {
        const Graph g = bench::generate("dregular:100,96", 1).graph;
        bench::RunConfig cfg;
        cfg.algorithm = bench::Algorithm::eps;
        cfg.eps = Ratio(1, 3);
        cfg.options.schedule_nodes = 8;
        cfg.options.eps_divisor = 5;
        compare(g, cfg);
        cfg.algorithm = bench::Algorithm::full;
        cfg.eps = Ratio(1, 2);
        cfg.options.forced_split_depth = 2;
        cfg.options.split_constant = 0;
        compare(g, cfg);
    }
    // Weighted matching and pervasive matchings repeat bit for bit as well.
    std::size_t matching_diffs = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto gen = bench::generate("weighted:50:gnm:14,40", seed);
        WeightedMatchingOptions par;
        par.exec = Exec::parallel;
        matching_diffs += approx_weighted_matching(*gen.weighted, Ratio(1, 4)) ==
                                  approx_weighted_matching(*gen.weighted, Ratio(1, 4), par)
                              ? 0
                              : 1;
        const Graph g = random_graph(60, 180, seed);
        PervasiveOptions pserial;
        PervasiveOptions pparallel;
        pparallel.exec = Exec::parallel;
        pparallel.matching.exec = Exec::parallel;
        matching_diffs += pervasive_matching(g, g.max_degree(), 3, Ratio(1, 2), pserial) ==
                                  pervasive_matching(g, g.max_degree(), 3, Ratio(1, 2), pparallel)
                              ? 0
                              : 1;
    }
    Outcome o;
    o.ok = json_diffs + coloring_diffs + exec_diffs + matching_diffs == 0;
    o.detail = std::to_string(runs) + " repeated runs; JSON diffs " + std::to_string(json_diffs) +
               ", coloring diffs " + std::to_string(coloring_diffs) + ", serial/parallel diffs " +
               std::to_string(exec_diffs) + ", matching serial/parallel diffs " + std::to_string(matching_diffs);
    return o;
}

} // namespace

int main() {
    const std::vector<Graph> corpus = coloring_corpus();
    struct Criterion {
        const char* name;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria{
        {"1 three-halves color bound", [&] { return three_halves_bound(corpus); }},
        {"2 (3)-graph extraction", [&] { return extraction_properties(corpus); }},
        {"3 weighted matching approximation", weighted_approximation},
        {"4 matching combination", combination_properties},
        {"5 pervasive matching fractions", pervasive_fractions},
        {"6 skewed bipartite maximum matching", bipartite_maximum},
        {"7 degree split and leaf palettes", split_and_palettes},
        {"8 degree census", census_bound_holds},
        {"9 eps coloring desk-scale substitute", eps_coloring_substitute},
        {"10 ledger consistency", ledger_consistency},
        {"11 determinism", [&] { return determinism(corpus); }},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s criterion %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
