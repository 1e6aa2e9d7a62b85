#include "edgecolor/round_ledger.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace edgecolor {

namespace {

constexpr std::array<std::pair<std::string_view, Primitive>, 11> kNames{{
    {"maximal_matching", Primitive::maximal_matching},
    {"hypergraph_mm", Primitive::hypergraph_mm},
    {"weighted_matching", Primitive::weighted_matching},
    {"hit_matching", Primitive::hit_matching},
    {"combine_matchings", Primitive::combine_matchings},
    {"pervasive_matching", Primitive::pervasive_matching},
    {"bipartite_max_matching", Primitive::bipartite_max_matching},
    {"degree_split", Primitive::degree_split},
    {"three_coloring", Primitive::three_coloring},
    {"cole_vishkin", Primitive::cole_vishkin},
    {"sequential_greedy", Primitive::sequential_greedy},
}};

void require_positive(double value, std::string_view what, Primitive p) {
    if (!(value > 0)) {
        throw UsageError(std::string(to_string(p)) + " needs " + std::string(what) + " > 0");
    }
}

double cube(double x) { return x * x * x; }

// ⌈1/ε⌉ without the float noise of 1/0.1 = 10.000000000000002.
double ceil_inverse_real(double eps) { return std::ceil(1.0 / eps - 1e-9); }

} // namespace

std::string_view to_string(Primitive p) {
    for (const auto& [name, prim] : kNames) {
        if (prim == p) {
            return name;
        }
    }
    return "unknown";
}

Primitive parse_primitive(std::string_view name) {
    for (const auto& [text, prim] : kNames) {
        if (text == name) {
            return prim;
        }
    }
    throw UsageError("unknown primitive '" + std::string(name) + "'");
}

double log2_clamped(double x) { return x <= 1 ? 0.0 : std::log2(x); }

double iterated_log2(double n) {
    double rounds = 0;
    while (n > 1) {
        n = std::log2(n);
        ++rounds;
    }
    return rounds;
}

double hypergraph_matching_rounds(double r, double log2_gamma, double n) {
    const double log_n = log2_clamped(n);
    return r * r * (log_n + log2_gamma) * log_n * std::pow(log2_gamma, 4);
}

double weighted_matching_rounds(double eps, double delta, double n) {
    const double inv = ceil_inverse_real(eps);
    const double log_n = log2_clamped(n);
    return 1.0 / (eps * eps) + (1.0 / eps) * hypergraph_matching_rounds(inv, inv * log2_clamped(delta), n) * log_n +
           cube(log_n);
}

double price(Primitive p, const CostParams& c) {
    switch (p) {
    case Primitive::maximal_matching:
    case Primitive::three_coloring:
        require_positive(c.n, "n", p);
        return cube(log2_clamped(c.n));
    case Primitive::hypergraph_mm:
        require_positive(c.n, "n", p);
        require_positive(c.r, "r", p);
        return hypergraph_matching_rounds(c.r, c.log2_gamma, c.n);
    case Primitive::weighted_matching:
    case Primitive::hit_matching:
        require_positive(c.n, "n", p);
        require_positive(c.eps, "eps", p);
        require_positive(c.delta, "delta", p);
        return weighted_matching_rounds(c.eps, c.delta, c.n);
    case Primitive::combine_matchings:
        require_positive(c.k, "k", p);
        return c.k;
    case Primitive::pervasive_matching:
        require_positive(c.n, "n", p);
        require_positive(c.eps, "eps", p);
        require_positive(c.delta, "delta", p);
        return c.t / c.eps + weighted_matching_rounds(c.eps / 2, c.delta, c.n);
    case Primitive::bipartite_max_matching: {
        require_positive(c.n, "n", p);
        require_positive(c.d, "d", p);
        const double length = c.d * log2_clamped(c.n);
        return length * hypergraph_matching_rounds(length, length * log2_clamped(c.d), c.n);
    }
    case Primitive::degree_split: {
        require_positive(c.n, "n", p);
        require_positive(c.gamma, "gamma", p);
        const double inv = 1.0 / c.gamma;
        return inv * std::max(1.0, log2_clamped(inv)) * log2_clamped(c.n) *
               std::max(1.0, log2_clamped(log2_clamped(inv)));
    }
    case Primitive::cole_vishkin:
        require_positive(c.n, "n", p);
        return iterated_log2(c.n);
    case Primitive::sequential_greedy:
        return c.m;
    }
    throw UsageError("unknown primitive");
}

double price(std::string_view primitive, const CostParams& params) { return price(parse_primitive(primitive), params); }

double RoundLedger::charge(Primitive p, const CostParams& params) {
    const double rounds = price(p, params);
    entries_.push_back({p, params, rounds, 0});
    work_ += rounds;
    depth_ += rounds;
    return rounds;
}

void RoundLedger::merge_parallel(const std::vector<RoundLedger>& parts) {
    const std::size_t group = next_group_++;
    double deepest = 0;
    for (const RoundLedger& part : parts) {
        for (LedgerEntry entry : part.entries_) {
            entry.group = group;
            entries_.push_back(entry);
        }
        notes_.insert(notes_.end(), part.notes_.begin(), part.notes_.end());
        work_ += part.work_;
        deepest = std::max(deepest, part.depth_);
    }
    depth_ += deepest;
}

Headline headline_eps_coloring(double delta, double eps, double n) {
    const double log_n = log2_clamped(n);
    return {"delta * (log n / eps^2 + M_W(eps/2))",
            delta * (log_n / (eps * eps) + weighted_matching_rounds(eps / 2, delta, n))};
}

Headline headline_three_halves(double delta, double n) {
    const double length = delta * log2_clamped(n);
    return {"delta^2 * log n * M(delta log n, delta^(delta log n)) + log* n",
            delta * delta * log2_clamped(n) *
                    hypergraph_matching_rounds(length, length * log2_clamped(delta), n) +
                iterated_log2(n)};
}

Headline headline_full_coloring(double delta, double eps, double n, std::size_t split_depth, double gamma,
                                double leaf_delta, bool dispatched_to_three_halves) {
    if (dispatched_to_three_halves) {
        return headline_three_halves(delta, n);
    }
    CostParams split;
    split.n = n;
    split.gamma = gamma;
    const Headline leaf = headline_eps_coloring(leaf_delta, eps / 4, n);
    return {"h * split(gamma) + " + leaf.formula + " [leaf, eps/4]",
            static_cast<double>(split_depth) * price(Primitive::degree_split, split) + leaf.rounds};
}

Headline headline_greedy(double m) { return {"m", m}; }

LedgerSummary report(const RoundLedger& ledger, const std::optional<Headline>& headline) {
    LedgerSummary s;
    for (const LedgerEntry& e : ledger.entries()) {
        const std::string name(to_string(e.primitive));
        s.subtotals[name] += e.rounds;
        s.counts[name] += 1;
    }
    s.work = ledger.work();
    s.depth = ledger.depth();
    s.notes.assign(ledger.notes().begin(), ledger.notes().end());
    if (headline) {
        s.headline_formula = headline->formula;
        s.headline_rounds = headline->rounds;
    }
    return s;
}

} // namespace edgecolor
