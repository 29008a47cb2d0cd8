#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nerveforge/acceptance.h"
#include "nerveforge/cyclebuild.h"
#include "nerveforge/errors.h"
#include "nerveforge/graph.h"
#include "nerveforge/io.h"
#include "nerveforge/nerve.h"
#include "nerveforge/randgen.h"
#include "nerveforge/search.h"
#include "nerveforge/subsetfind.h"
#include "nerveforge/svg.h"
#include "nerveforge/treebuild.h"

using namespace nerveforge;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

uint64_t default_seed() {
    if (const char* env = std::getenv("NERVE_FORGE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0;
}

// Shared input options: a file, a named builtin, or seeded random generation.
struct PointSource {
    std::string path;
    std::string builtin;
    int random_count = 0;
    std::string mode = "uniform-box";
    int dim = 2;
    uint64_t seed = default_seed();

    void attach(CLI::App* cmd) {
        cmd->add_option("--points", path, "point file (JSON)");
        cmd->add_option("--builtin", builtin, "built-in point set name");
        cmd->add_option("--random", random_count, "generate this many random points");
        cmd->add_option("--mode", mode,
                        "random mode: uniform-box, convex-position, moment-curve");
        cmd->add_option("--dim", dim, "dimension for random generation");
        cmd->add_option("--seed", seed, "seed (default: NERVE_FORGE_SEED env var, else 0)");
    }

    PointSet resolve(std::string* described = nullptr) const {
        int given = (!path.empty()) + (!builtin.empty()) + (random_count > 0);
        if (given != 1)
            throw PreconditionError("give exactly one of --points, --builtin, --random");
        if (!path.empty()) {
            if (described) *described = "file:" + path;
            return load_points(path);
        }
        if (!builtin.empty()) {
            if (described) *described = "builtin:" + builtin;
            return builtin_config(builtin).points;
        }
        if (described)
            *described = "random:" + std::to_string(random_count) + ":" + mode + ":d" +
                         std::to_string(dim) + ":s" + std::to_string(seed);
        return random_points(random_count, dim, seed, random_mode_from_name(mode));
    }
};

// "path:4", "star:5", "cycle:6", or a graph file path.
GraphSpec resolve_graph(const std::string& target) {
    auto colon = target.find(':');
    if (colon != std::string::npos) {
        std::string kind = target.substr(0, colon);
        int n = std::atoi(target.c_str() + colon + 1);
        if (n < 1) throw PreconditionError("bad vertex count in --target " + target);
        if (kind == "path") return GraphSpec::path(n);
        if (kind == "star") return GraphSpec::star(n);
        if (kind == "cycle") return GraphSpec::cycle(n);
        throw PreconditionError("unknown target shorthand \"" + kind + "\" (path|star|cycle)");
    }
    return load_graph(target);
}

void finish(RunReport& report, const Timer& timer, const std::string& report_path) {
    report.elapsed_seconds = timer.secs();
    std::string text = report.json();
    std::cout << text;
    if (!report_path.empty()) write_file(report_path, text);
}

int outcome_code(const RunReport& report) {
    if (report.outcome == "ok") return 0;
    if (report.outcome == "not-found") return 2;
    return 1;
}

std::string ramsey_note(int subset_size, int d) {
    return "existence of a usable subset of size " + std::to_string(subset_size) +
           " is guaranteed only at hypergraph-Ramsey scale R_" + std::to_string(d + 1) + "(" +
           std::to_string(subset_size) + "); the search stays within the given points";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic partitions of point sets with prescribed hull "
                 "intersection graphs"};
    app.require_subcommand(1);

    // construct ---------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a partition realizing a graph");
    std::string c_kind;
    construct->add_option("kind", c_kind, "tree|cycle|star|caterpillar")
        ->required()
        ->check(CLI::IsMember({"tree", "cycle", "star", "caterpillar"}));
    std::string c_target, c_out, c_report, c_svg;
    uint64_t c_budget = 200'000'000;
    bool c_relaxed = false;
    PointSource c_src;
    c_src.attach(construct);
    construct->add_option("--target", c_target, "graph: path:N, star:N, cycle:N, or a file")
        ->required();
    construct->add_option("--out", c_out, "write the partition JSON here");
    construct->add_option("--report", c_report, "write the run report here");
    construct->add_option("--svg", c_svg, "render the result (planar input only)");
    construct->add_option("--budget", c_budget, "subset-search budget for the tree pipeline");
    construct->add_flag("--relaxed", c_relaxed, "cycle: accept the smaller n(d+1)+1 point count");

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a partition against a target graph");
    std::string v_points, v_partition, v_target, v_report;
    verify->add_option("--points", v_points)->required();
    verify->add_option("--partition", v_partition)->required();
    verify->add_option("--target", v_target, "graph: path:N, star:N, cycle:N, or a file")
        ->required();
    verify->add_option("--report", v_report, "write the run report here");

    // search ------------------------------------------------------------
    auto* search = app.add_subcommand("search", "scan all partitions for an induced graph");
    std::string s_target, s_out, s_report;
    uint64_t s_budget = 50'000'000;
    int s_threads = 0;
    bool s_no_prune = false, s_audit = false;
    PointSource s_src;
    s_src.attach(search);
    search->add_option("--target", s_target)->required();
    search->add_option("--out", s_out, "write the found partition here");
    search->add_option("--report", s_report);
    search->add_option("--budget", s_budget, "cap on complete partitions visited");
    search->add_option("--threads", s_threads, "worker threads (0 = serial)");
    search->add_flag("--no-prune", s_no_prune, "disable partial-graph pruning");
    search->add_flag("--audit", s_audit, "re-run on permuted input and compare");

    // nerve -------------------------------------------------------------
    auto* nerve = app.add_subcommand("nerve", "emit the intersection graph and nerve faces");
    std::string n_points, n_partition, n_out;
    int n_max_face = 0;
    nerve->add_option("--points", n_points)->required();
    nerve->add_option("--partition", n_partition)->required();
    nerve->add_option("--out", n_out, "write the JSON here instead of stdout");
    nerve->add_option("--max-face", n_max_face, "largest face size to report (0 = no bound)");

    // subset ------------------------------------------------------------
    auto* subset = app.add_subcommand("subset", "find a convex or cyclic subconfiguration");
    std::string sub_kind, sub_out, sub_report;
    int sub_size = 0;
    uint64_t sub_budget = 200'000'000;
    PointSource sub_src;
    sub_src.attach(subset);
    subset->add_option("kind", sub_kind, "convex|cyclic")
        ->required()
        ->check(CLI::IsMember({"convex", "cyclic"}));
    subset->add_option("--size", sub_size, "subset size")->required();
    subset->add_option("--out", sub_out, "write the index list here");
    subset->add_option("--report", sub_report);
    subset->add_option("--budget", sub_budget);

    // render ------------------------------------------------------------
    auto* render = app.add_subcommand("render", "draw points and part hulls as SVG");
    std::string r_points, r_partition, r_out;
    bool r_project = false;
    uint64_t r_seed = default_seed();
    render->add_option("--points", r_points)->required();
    render->add_option("--partition", r_partition)->required();
    render->add_option("--out", r_out)->required();
    render->add_flag("--project", r_project, "project higher-dimensional input to the plane");
    render->add_option("--seed", r_seed, "projection seed");

    // random ------------------------------------------------------------
    auto* random = app.add_subcommand("random", "generate a seeded random point set");
    std::string rnd_out, rnd_mode = "uniform-box";
    int rnd_count = 0, rnd_dim = 2;
    uint64_t rnd_seed = default_seed();
    random->add_option("--count", rnd_count)->required();
    random->add_option("--dim", rnd_dim);
    random->add_option("--mode", rnd_mode);
    random->add_option("--seed", rnd_seed);
    random->add_option("--out", rnd_out, "write the point set here instead of stdout");

    // acceptance --------------------------------------------------------
    auto* acceptance = app.add_subcommand("acceptance", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            Timer timer;
            RunReport report;
            report.command = "construct " + c_kind;
            GraphSpec target = resolve_graph(c_target);
            std::string src_desc;
            PointSet ps = c_src.resolve(&src_desc);
            report.inputs_digest = digest_bytes(points_json(ps) + graph_json(target) + src_desc);
            Partition part;
            try {
                if (c_kind == "tree") {
                    PipelineResult res = tverberg_tree_pipeline(ps, target, c_budget);
                    part = res.partition;
                    report.detail = "route: " + res.route;
                } else if (c_kind == "cycle") {
                    part = cycle_partition(target, ps, c_src.seed, c_relaxed).partition;
                } else if (c_kind == "star") {
                    part = star_partition_2d(target, ps).partition;
                } else {
                    part = caterpillar_partition(target, ps).partition;
                }
            } catch (const SubsetNotFoundError& e) {
                report.outcome = "not-found";
                report.detail =
                    std::string(e.what()) + "; " + ramsey_note(e.attempted_size, ps.dim);
                finish(report, timer, c_report);
                return 2;
            }
            report.partition = part;
            GraphSpec got = intersection_graph(ps, part);
            bool ok = got.n == target.n && got.edges == target.edges &&
                      graphs_isomorphic(got, target).has_value();
            report.verification = ok ? "pass" : "fail";
            report.outcome = ok ? "ok" : "error";
            if (!c_out.empty()) save_partition(part, c_out);
            if (!c_svg.empty()) emit_svg(ps, part, c_svg);
            finish(report, timer, c_report);
            return ok ? 0 : 1;
        }

        if (verify->parsed()) {
            Timer timer;
            RunReport report;
            report.command = "verify";
            PointSet ps = load_points(v_points);
            Partition part = load_partition(v_partition);
            GraphSpec target = resolve_graph(v_target);
            part.validate(ps);
            report.inputs_digest =
                digest_bytes(points_json(ps) + partition_json(part) + graph_json(target));
            GraphSpec got = intersection_graph(ps, part);
            bool iso = graphs_isomorphic(got, target).has_value();
            report.partition = part;
            report.verification = iso ? "pass" : "fail";
            report.outcome = iso ? "ok" : "not-found";
            if (!iso) report.detail = "intersection graph is not isomorphic to the target";
            finish(report, timer, v_report);
            return outcome_code(report);
        }

        if (search->parsed()) {
            Timer timer;
            RunReport report;
            report.command = "search";
            GraphSpec target = resolve_graph(s_target);
            std::string src_desc;
            PointSet ps = s_src.resolve(&src_desc);
            report.inputs_digest = digest_bytes(points_json(ps) + graph_json(target) + src_desc);
            SearchOptions opt;
            opt.budget = s_budget;
            opt.prune = !s_no_prune;
            opt.audit = s_audit;
            opt.threads = s_threads;
            SearchResult res = is_partition_induced(ps, target, opt);
            std::ostringstream stats;
            stats << "leaves: " << res.stats.leaves << ", nodes: " << res.stats.nodes
                  << ", pruned: " << res.stats.pruned
                  << ", hull queries: " << res.stats.hull_queries;
            report.detail = stats.str();
            if (res.found()) {
                report.partition = res.partition;
                GraphSpec got = intersection_graph(ps, *res.partition);
                report.verification = graphs_isomorphic(got, target).has_value() ? "pass" : "fail";
                report.outcome = report.verification == "pass" ? "ok" : "error";
                if (!s_out.empty()) save_partition(*res.partition, s_out);
            } else {
                report.outcome = "not-found";
            }
            finish(report, timer, s_report);
            return outcome_code(report);
        }

        if (nerve->parsed()) {
            PointSet ps = load_points(n_points);
            Partition part = load_partition(n_partition);
            part.validate(ps);
            GraphSpec g = intersection_graph(ps, part);
            NerveComplex complex = nerve_complex(ps, part, n_max_face);
            std::ostringstream out;
            out << "{\"graph\":" << graph_json(g) << ",\"faces\":[";
            for (size_t i = 0; i < complex.faces.size(); ++i) {
                if (i) out << ",";
                out << "[";
                for (size_t j = 0; j < complex.faces[i].size(); ++j) {
                    if (j) out << ",";
                    out << complex.faces[i][j];
                }
                out << "]";
            }
            out << "]}\n";
            if (!n_out.empty())
                write_file(n_out, out.str());
            else
                std::cout << out.str();
            return 0;
        }

        if (subset->parsed()) {
            Timer timer;
            RunReport report;
            report.command = "subset " + sub_kind;
            std::string src_desc;
            PointSet ps = sub_src.resolve(&src_desc);
            report.inputs_digest = digest_bytes(points_json(ps) + src_desc);
            IndexList found;
            try {
                found = sub_kind == "convex" ? find_convex_subset_2d(ps, sub_size, sub_budget)
                                             : find_cyclic_subpolytope(ps, sub_size, sub_budget);
            } catch (const NotFoundError& e) {
                report.outcome = "not-found";
                report.detail = std::string(e.what()) + "; " + ramsey_note(sub_size, ps.dim);
                finish(report, timer, sub_report);
                return 2;
            }
            report.outcome = "ok";
            std::ostringstream idx;
            idx << "{\"indices\":[";
            for (size_t i = 0; i < found.size(); ++i) {
                if (i) idx << ",";
                idx << found[i];
            }
            idx << "]}\n";
            report.detail = idx.str();
            if (!sub_out.empty()) write_file(sub_out, idx.str());
            finish(report, timer, sub_report);
            return 0;
        }

        if (render->parsed()) {
            PointSet ps = load_points(r_points);
            Partition part = load_partition(r_partition);
            if (r_project && ps.dim > 2) ps = project_generic(ps, r_seed).first;
            emit_svg(ps, part, r_out);
            return 0;
        }

        if (random->parsed()) {
            PointSet ps = random_points(rnd_count, rnd_dim, rnd_seed, random_mode_from_name(rnd_mode));
            std::string text = points_json(ps);
            if (!rnd_out.empty())
                write_file(rnd_out, text);
            else
                std::cout << text << "\n";
            return 0;
        }

        if (acceptance->parsed()) {
            int failed = run_acceptance(std::cout);
            return failed == 0 ? 0 : 1;
        }
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 2;
    } catch (const SubsetNotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
