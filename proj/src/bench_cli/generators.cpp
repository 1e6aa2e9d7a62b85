#include "edgecolor/bench.hpp"

#include "edgecolor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace edgecolor::bench {

namespace {

constexpr int kRetries = 200;

std::vector<std::size_t> parse_args(std::string_view kind, std::string_view args, std::size_t expected) {
    std::vector<std::size_t> out;
    while (!args.empty()) {
        const auto comma = args.find(',');
        const std::string_view token = args.substr(0, comma);
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size()) {
            throw UsageError("generator " + std::string(kind) + ": bad number '" + std::string(token) + "'");
        }
        out.push_back(value);
        args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    }
    if (out.size() != expected) {
        throw UsageError("generator " + std::string(kind) + " takes " + std::to_string(expected) + " arguments");
    }
    return out;
}

std::vector<Label> one_based(std::size_t n) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<Label>(i + 1);
    }
    return labels;
}

Graph make(std::size_t n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges), one_based(n));
}

Graph gnm(std::size_t n, std::size_t m, SplitMix64& rng) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > pairs) {
        throw UsageError("gnm: m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(pairs));
    }
    std::vector<Edge> edges;
    if (2 * m <= pairs) {
        std::set<Edge> seen;
        while (seen.size() < m) {
            const auto a = static_cast<NodeId>(rng.below(n));
            const auto b = static_cast<NodeId>(rng.below(n));
            if (a != b) {
                seen.insert(make_edge(a, b));
            }
        }
        edges.assign(seen.begin(), seen.end());
    } else {
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = a + 1; b < n; ++b) {
                edges.push_back({a, b});
            }
        }
        rng.shuffle(edges);
        edges.resize(m);
    }
    return make(n, std::move(edges));
}

std::optional<std::vector<Edge>> configuration_model(std::size_t n, std::size_t d, SplitMix64& rng) {
    std::vector<NodeId> points;
    for (NodeId v = 0; v < n; ++v) {
        points.insert(points.end(), d, v);
    }
    rng.shuffle(points);
    std::set<Edge> seen;
    for (std::size_t i = 0; i < points.size(); i += 2) {
        if (points[i] == points[i + 1] || !seen.insert(make_edge(points[i], points[i + 1])).second) {
            return std::nullopt;
        }
    }
    return std::vector<Edge>(seen.begin(), seen.end());
}

// Circulant d-regular graph on a shuffled node order, then 10·m random
// degree-preserving double-edge swaps.
std::vector<Edge> circulant_with_swaps(std::size_t n, std::size_t d, SplitMix64& rng) {
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) {
        order[v] = v;
    }
    rng.shuffle(order);
    std::set<Edge> present;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 1; k <= d / 2; ++k) {
            present.insert(make_edge(order[i], order[(i + k) % n]));
        }
        if (d % 2 == 1 && i < n / 2) {
            present.insert(make_edge(order[i], order[i + n / 2]));
        }
    }
    std::vector<Edge> edges(present.begin(), present.end());
    const std::size_t swaps = 10 * edges.size();
    for (std::size_t s = 0; s < swaps; ++s) {
        const std::size_t i = rng.below(edges.size());
        const std::size_t j = rng.below(edges.size());
        Edge a = edges[i];
        Edge b = edges[j];
        if (rng.below(2) == 1) {
            std::swap(b.u, b.v);
        }
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
            continue;
        }
        const Edge x = make_edge(a.u, b.u);
        const Edge y = make_edge(a.v, b.v);
        if (present.count(x) != 0 || present.count(y) != 0) {
            continue;
        }
        present.erase(edges[i]);
        present.erase(edges[j]);
        present.insert(x);
        present.insert(y);
        edges[i] = x;
        edges[j] = y;
    }
    return edges;
}

Graph dregular(std::size_t n, std::size_t d, SplitMix64& rng) {
    if (d >= n || (n * d) % 2 != 0) {
        throw UsageError("dregular: need d < n and n*d even, got n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    if (d == 0) {
        return make(n, {});
    }
    if (d <= 6) {
        for (int attempt = 0; attempt < kRetries; ++attempt) {
            if (auto edges = configuration_model(n, d, rng)) {
                return make(n, std::move(*edges));
            }
        }
    }
    return make(n, circulant_with_swaps(n, d, rng));
}

GeneratedGraph bipartite_skewed(std::size_t nu, std::size_t nv, std::size_t d, std::size_t f, SplitMix64& rng) {
    if (d <= f || d > nv || nu * d > nv * f) {
        throw UsageError("bipartite_skewed: need f < d <= nV and nU*d <= nV*f");
    }
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<std::size_t> load(nv, 0);
        std::vector<Edge> edges;
        bool stuck = false;
        for (NodeId u = 0; u < nu && !stuck; ++u) {
            std::vector<NodeId> open;
            for (NodeId v = 0; v < nv; ++v) {
                if (load[v] < f) {
                    open.push_back(v);
                }
            }
            if (open.size() < d) {
                stuck = true;
                break;
            }
            rng.shuffle(open);
            for (std::size_t k = 0; k < d; ++k) {
                ++load[open[k]];
                edges.push_back({u, static_cast<NodeId>(nu + open[k])});
            }
        }
        if (!stuck) {
            GeneratedGraph out;
            out.graph = make(nu + nv, std::move(edges));
            for (NodeId u = 0; u < nu; ++u) {
                out.left.push_back(u);
            }
            return out;
        }
    }
    throw GeneratorError("bipartite_skewed: retry budget of " + std::to_string(kRetries) + " exhausted");
}

} // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) {
        x = next();
    }
    return x % bound;
}

GeneratedGraph generate(std::string_view spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError("generator spec '" + std::string(spec) + "' lacks ':'");
    }
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view args = spec.substr(colon + 1);
    SplitMix64 rng(seed);

    if (kind == "weighted") {
        const auto inner_colon = args.find(':');
        if (inner_colon == std::string_view::npos) {
            throw UsageError("weighted spec is weighted:R:<graph spec>");
        }
        const std::size_t ratio = parse_args(kind, args.substr(0, inner_colon), 1)[0];
        if (ratio == 0) {
            throw UsageError("weighted: R must be positive");
        }
        GeneratedGraph out = generate(args.substr(inner_colon + 1), seed);
        std::vector<Weight> weights(out.graph.edge_count());
        SplitMix64 wrng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
        for (Weight& w : weights) {
            w = static_cast<Weight>(1 + wrng.below(ratio));
        }
        out.weighted = WeightedGraph(out.graph, std::move(weights));
        return out;
    }
    GeneratedGraph out;
    if (kind == "gnm") {
        const auto a = parse_args(kind, args, 2);
        out.graph = gnm(a[0], a[1], rng);
    } else if (kind == "dregular") {
        const auto a = parse_args(kind, args, 2);
        out.graph = dregular(a[0], a[1], rng);
    } else if (kind == "bipartite_skewed") {
        const auto a = parse_args(kind, args, 4);
        out = bipartite_skewed(a[0], a[1], a[2], a[3], rng);
    } else if (kind == "path" || kind == "cycle") {
        const std::size_t n = parse_args(kind, args, 1)[0];
        std::vector<Edge> edges;
        for (NodeId v = 0; v + 1 < n; ++v) {
            edges.push_back({v, v + 1});
        }
        if (kind == "cycle") {
            if (n < 3) {
                throw UsageError("cycle needs n >= 3");
            }
            edges.push_back({0, static_cast<NodeId>(n - 1)});
        }
        out.graph = make(n, std::move(edges));
    } else {
        throw UsageError("unknown generator '" + std::string(kind) + "'");
    }
    return out;
}

} // namespace edgecolor::bench
