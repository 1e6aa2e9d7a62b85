#include "edgecolor/coloring.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace edgecolor {

namespace {

constexpr double kE = std::numbers::e;

double schedule_log_n(const Graph& g, const ColoringOptions& options) {
    const std::size_t n = options.schedule_nodes == 0 ? g.node_count() : options.schedule_nodes;
    return std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
}

PervasiveOptions pervasive_options(const ColoringOptions& options) {
    PervasiveOptions p;
    p.matching.limits = options.limits;
    p.exec = options.exec;
    return p;
}

void copy_colors(const Graph& from, const EdgeColoring& part, const Graph& into, EdgeColoring& out, Color offset) {
    for (EdgeId id = 0; id < from.edge_count(); ++id) {
        if (part.is_colored(id)) {
            const Edge& e = from.edge(id);
            out.assign(*into.find_edge(e.u, e.v), part.color(id) + offset);
        }
    }
}

} // namespace

std::size_t reduction_steps(const Ratio& eps, double log_n) {
    return static_cast<std::size_t>(std::ceil(log_n / (4 * kE * static_cast<double>(eps.value())) - 1e-12));
}

PhaseSchedule PhaseSchedule::make(const Ratio& eps, double log_n, std::int64_t divisor) {
    if (!eps.in_open_unit_interval()) {
        throw UsageError("phase schedule needs 0 < eps < 1, got " + to_string(eps));
    }
    PhaseSchedule s;
    s.eps_prime = eps / divisor;
    Ratio current = s.eps_prime;
    for (std::size_t i = 0; i < 64; ++i) {
        s.eps.push_back(current);
        s.thresholds.push_back(2 * log_n / static_cast<double>(current.value()));
        s.steps.push_back(reduction_steps(current, log_n));
        const Ratio next = current * Ratio(2, 1);
        if (static_cast<double>(next.value()) >= 1 / (4 * kE)) {
            s.last = i;
            break;
        }
        current = next;
    }
    s.cleanup_colors = 2 * s.thresholds[s.last];
    return s;
}

double census_bound(std::size_t t, std::size_t i, const Ratio& eps, std::size_t n) {
    // C(t,i) as a double; exact enough for t ≤ 64
    double binom = 1;
    for (std::size_t j = 1; j <= i; ++j) {
        binom = binom * static_cast<double>(t - i + j) / static_cast<double>(j);
    }
    return binom * std::pow(2 * static_cast<double>(eps.value()), static_cast<double>(i)) * static_cast<double>(n);
}

PhaseResult reduce_degree_phase(const Graph& g, std::size_t delta, const Ratio& eps, std::size_t steps,
                                Color palette_base, const ColoringOptions& options) {
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double log_n = schedule_log_n(g, options);
    PhaseResult out;
    out.coloring = EdgeColoring(g.edge_count());
    out.precondition_met = static_cast<double>(delta) >= 2 * log_n / static_cast<double>(eps.value());
    out.guaranteed_max_degree =
        static_cast<double>(delta) - (1 - 4 * kE * static_cast<double>(eps.value())) * static_cast<double>(steps);

    auto census_row = [&](const Graph& current, std::size_t t) {
        std::vector<std::size_t> row(t + 1, 0);
        for (NodeId v = 0; v < current.node_count(); ++v) {
            const auto deg = static_cast<long>(current.degree(v));
            for (std::size_t i = 0; i <= t; ++i) {
                if (deg >= static_cast<long>(delta) - static_cast<long>(t) + static_cast<long>(i)) {
                    ++row[i];
                }
            }
        }
        return row;
    };

    Graph current = g;
    out.census.push_back(census_row(current, 0));
    const PervasiveOptions pervasive = pervasive_options(options);
    for (std::size_t t = 1; t <= steps && !current.empty(); ++t) {
        const Matching m = pervasive_matching(current, delta, t, eps, pervasive);
        if (options.ledger != nullptr) {
            CostParams c;
            c.n = std::exp2(log_n);
            c.delta = static_cast<double>(delta);
            c.eps = static_cast<double>(eps.value());
            c.t = static_cast<double>(t);
            options.ledger->charge(Primitive::pervasive_matching, c);
        }
        const Color color = palette_base + static_cast<Color>(t - 1);
        for (const Edge& e : m.edges()) {
            out.coloring.assign(*g.find_edge(e.u, e.v), color);
        }
        current = current.without_edges(m.edges());
        ++out.colors_used;
        out.census.push_back(census_row(current, t));
    }
    out.residual = std::move(current);
    return out;
}

EpsColoringResult eps_edge_coloring(const Graph& g, std::size_t delta, const Ratio& eps,
                                    const ColoringOptions& options) {
    if (!eps.in_open_unit_interval()) {
        throw UsageError("eps coloring needs 0 < eps < 1, got " + to_string(eps));
    }
    if (delta < g.max_degree()) {
        throw PreconditionError("declared degree bound " + std::to_string(delta) + " is below the maximum degree " +
                                std::to_string(g.max_degree()));
    }
    const double log_n = schedule_log_n(g, options);
    const double inv = 1 / static_cast<double>(eps.value());
    EpsColoringResult out;
    out.coloring = EdgeColoring(g.edge_count());
    out.schedule = PhaseSchedule::make(eps, log_n, options.eps_divisor);
    out.precondition_met = static_cast<double>(delta) >= options.split_constant * inv * std::log2(inv) * log_n;
    out.color_bound = (1 + static_cast<double>(eps.value())) * static_cast<double>(delta);

    Graph residual = g;
    Color next = 0;
    std::size_t bound = delta;
    for (std::size_t i = 0; i <= out.schedule.last && !residual.empty(); ++i) {
        const Ratio& eps_i = out.schedule.eps[i];
        const std::size_t steps = out.schedule.steps[i];
        const double shrink = (1 - 4 * kE * static_cast<double>(eps_i.value())) * static_cast<double>(steps);
        const auto reduction = static_cast<std::size_t>(std::max(0.0, std::floor(shrink)));
        while (static_cast<double>(bound) >= out.schedule.thresholds[i] && !residual.empty()) {
            if (reduction == 0) {
                break; // no guaranteed progress at this ε_i
            }
            PhaseRun run;
            run.phase = i;
            run.steps = steps;
            run.bound_before = static_cast<double>(bound);
            PhaseResult phase = reduce_degree_phase(residual, bound, eps_i, steps, next, options);
            copy_colors(residual, phase.coloring, g, out.coloring, 0);
            next += static_cast<Color>(phase.colors_used);
            run.colors_used = phase.colors_used;
            residual = std::move(phase.residual);
            const std::size_t promised = bound > reduction ? bound - reduction : 0;
            run.measured_after = residual.max_degree();
            run.guarantee_held = run.measured_after <= promised;
            bound = std::max(promised, run.measured_after);
            run.bound_after = static_cast<double>(bound);
            out.runs.push_back(run);
        }
    }

    out.cleanup_budget = 2 * static_cast<std::size_t>(std::ceil(out.schedule.thresholds[out.schedule.last])) - 1;
    while (!residual.empty()) {
        const Matching m = greedy_maximal_matching(residual);
        if (options.ledger != nullptr) {
            CostParams c;
            c.n = std::exp2(log_n);
            options.ledger->charge(Primitive::maximal_matching, c);
        }
        for (const Edge& e : m.edges()) {
            out.coloring.assign(*g.find_edge(e.u, e.v), next);
        }
        ++next;
        ++out.cleanup_matchings;
        residual = residual.without_edges(m.edges());
    }
    out.colors_used = out.coloring.palette_count();
    return out;
}

} // namespace edgecolor
