// edgecolor: generate graphs, run coloring drivers, verify colorings, compare runs.

#include "edgecolor/bench.hpp"
#include "edgecolor/edge_list_io.hpp"
#include "edgecolor/errors.hpp"
#include "edgecolor/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

using namespace edgecolor;

namespace {

struct Common {
    std::string input;
    std::string spec;
    std::uint64_t seed = 0;
    std::string algo = "threehalves";
    std::string eps = "1/2";
    std::size_t delta = 0;
    std::string out;
    std::string coloring;
    std::string format = "json";
    std::string assert_mode = "hard";
    bool parallel = false;
    std::size_t max_length = 2;
    std::int64_t eps_divisor = 120;
    double split_constant = 360;
    long split_depth = -1;
};

Graph load(const Common& c, std::string& name) {
    if (!c.input.empty() == !c.spec.empty()) {
        throw UsageError("give exactly one of --input or --gen");
    }
    if (!c.input.empty()) {
        name = c.input;
        return read_edge_list_file(c.input).graph;
    }
    name = c.spec + "@" + std::to_string(c.seed);
    return bench::generate(c.spec, c.seed).graph;
}

bench::RunConfig make_config(const Common& c, const std::string& algo, const std::string& name) {
    bench::RunConfig cfg;
    cfg.algorithm = bench::parse_algorithm(algo);
    cfg.eps = parse_ratio(c.eps);
    cfg.seed = c.seed;
    cfg.input = name;
    if (c.delta > 0) {
        cfg.delta = c.delta;
    }
    cfg.assert_mode = c.assert_mode == "report" ? bench::AssertMode::report : bench::AssertMode::hard;
    cfg.options.exec = c.parallel ? Exec::parallel : Exec::serial;
    cfg.options.limits.max_length = c.max_length;
    cfg.options.eps_divisor = c.eps_divisor;
    cfg.options.split_constant = c.split_constant;
    if (c.split_depth >= 0) {
        cfg.options.forced_split_depth = static_cast<std::size_t>(c.split_depth);
    }
    return cfg;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

void print_witness(const Verdict& v) {
    std::cerr << "validator " << v.check << " failed: " << v.detail << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed edge-coloring drivers with round accounting"};
    app.require_subcommand(1);
    Common c;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--input", c.input, "edge-list file");
        sub->add_option("--gen", c.spec, "generator spec, e.g. gnm:50,100");
        sub->add_option("--seed", c.seed, "generator seed");
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--eps", c.eps, "epsilon as a decimal or p/q");
        sub->add_option("--delta", c.delta, "declared degree bound (default: measured)");
        sub->add_option("--assert", c.assert_mode, "hard or report")->check(CLI::IsMember({"hard", "report"}));
        sub->add_flag("--parallel", c.parallel, "OpenMP kernels");
        sub->add_option("--max-length", c.max_length, "augmentation length cap");
        sub->add_option("--eps-divisor", c.eps_divisor, "eps' = eps / divisor");
        sub->add_option("--split-constant", c.split_constant, "c in the split threshold");
        sub->add_option("--split-depth", c.split_depth, "force the split depth");
    };

    auto* gen = app.add_subcommand("generate", "write a generated graph as an edge list");
    gen->add_option("--gen,--spec", c.spec, "generator spec")->required();
    gen->add_option("--seed", c.seed, "generator seed");
    gen->add_option("--out", c.out, "output path (default stdout)");

    auto* color = app.add_subcommand("color", "run one algorithm and emit its result");
    add_source(color);
    add_run(color);
    color->add_option("--algo", c.algo, "eps|threehalves|full|tight|greedy-baseline");
    color->add_option("--out", c.out, "result JSON path (default stdout)");
    color->add_option("--coloring", c.coloring, "write 'u v color' lines here");
    color->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "re-validate a coloring file against a graph file");
    verify->add_option("--input", c.input, "edge-list file")->required();
    verify->add_option("--coloring", c.coloring, "coloring file")->required();
    std::size_t max_colors = 0;
    verify->add_option("--max-colors", max_colors, "also require at most this many colors");

    auto* bench_cmd = app.add_subcommand("bench", "run several algorithms on one input and compare");
    add_source(bench_cmd);
    add_run(bench_cmd);
    std::vector<std::string> algos{"greedy-baseline", "threehalves", "eps"};
    bench_cmd->add_option("--algo", algos, "algorithms to compare")->delimiter(',');
    bench_cmd->add_option("--out", c.out, "output path (default stdout)");
    bench_cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const bench::GeneratedGraph g = bench::generate(c.spec, c.seed);
            std::ostringstream text;
            if (g.weighted) {
                write_edge_list(text, *g.weighted);
            } else {
                write_edge_list(text, g.graph);
            }
            emit(c.out, text.str());
            return 0;
        }
        if (verify->parsed()) {
            const Graph g = read_edge_list_file(c.input).graph;
            std::ifstream in(c.coloring);
            if (!in) {
                throw UsageError("cannot read " + c.coloring);
            }
            const EdgeColoring col = read_coloring(in, g);
            nlohmann::ordered_json j;
            const Verdict proper = check_proper_coloring(g, col);
            const Verdict complete = check_complete_coloring(g, col);
            j["proper_coloring"] = proper.ok;
            j["complete"] = complete.ok;
            j["colors_used"] = col.palette_count();
            bool ok = proper.ok && complete.ok;
            if (max_colors > 0) {
                j["within_max_colors"] = col.palette_count() <= max_colors;
                ok = ok && col.palette_count() <= max_colors;
            }
            std::cout << j.dump(2) << '\n';
            if (!proper) {
                print_witness(proper);
            }
            if (!complete) {
                print_witness(complete);
            }
            return ok ? 0 : 1;
        }

        std::string name;
        const Graph g = load(c, name);
        if (color->parsed()) {
            const bench::RunResult r = bench::run(g, make_config(c, c.algo, name));
            if (!c.coloring.empty()) {
                std::ofstream f(c.coloring);
                write_coloring(f, g, r.coloring);
            }
            if (c.format == "csv") {
                emit(c.out, bench::compare_csv(std::span(&r, 1)));
            } else {
                emit(c.out, bench::to_json(r).dump(2) + "\n");
            }
            if (!r.proper) {
                print_witness(r.proper);
            }
            const bool hard = r.config.assert_mode == bench::AssertMode::hard;
            return hard && !r.passed() ? 1 : 0;
        }
        std::vector<bench::RunResult> results;
        for (const std::string& a : algos) {
            results.push_back(bench::run(g, make_config(c, a, name)));
        }
        if (c.format == "csv") {
            emit(c.out, bench::compare_csv(results));
        } else {
            nlohmann::ordered_json all = nlohmann::ordered_json::array();
            for (const auto& r : results) {
                all.push_back(bench::to_json(r));
            }
            emit(c.out, all.dump(2) + "\n");
        }
        bool ok = true;
        for (const auto& r : results) {
            ok = ok && (r.config.assert_mode == bench::AssertMode::report || r.passed());
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
