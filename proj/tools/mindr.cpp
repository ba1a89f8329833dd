// Command-line front end: validate, solve, gen, eval, preprocess, reduce.
//
// Exit codes: 0 success, 2 input error, 3 the exact algorithm failed
// (instance not decomposable), 4 resource cap exceeded.
// Human-readable chatter goes to stderr; machine-readable artifacts go to
// --out or stdout, so pipelines stay clean.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mindr/mindr.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mindr::InputError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_artifact(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mindr::InputError("cannot write file: " + out_path);
    out << content;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

/// Drops every set whose fair subset is not inside the largest connected
/// component, mirroring the preprocessing rule for annotated instances.
mindr::MindrInstance drop_missing_fair_sets(const mindr::MindrInstance& inst) {
    auto report = mindr::validate(inst);
    if (report.fair_in_largest_component.empty()) return inst;
    mindr::MindrInstance out;
    out.graph = inst.graph;
    out.anchors = inst.anchors;
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
        if (report.fair_in_largest_component[i]) {
            out.sets.push_back(inst.sets[i]);
            out.fair.push_back(inst.fair[i]);
        } else {
            ++dropped;
        }
    }
    if (out.sets.empty()) {
        throw mindr::InputError("all sets dropped: no fair subset lies in the largest component");
    }
    if (dropped > 0) {
        std::cerr << "dropped " << dropped << " set(s) whose fair subset is outside the largest component\n";
    }
    return out;
}

struct SolveConfig {
    std::string instance_path;
    std::string algorithm;
    std::string connect = "none";
    std::uint64_t seed = 0;
    std::uint64_t cap = 1'000'000;
    double damping = 0.85;
    double pr_tol = 1e-9;
    int pr_iters = 200;
    std::string out_path;
    bool drop_missing_fair = false;
};

void run_solve(const SolveConfig& config) {
    mindr::MindrInstance inst = mindr::parse_instance(read_file(config.instance_path));
    if (config.drop_missing_fair) inst = drop_missing_fair_sets(inst);
    if (config.connect == "maximal") {
        inst = mindr::connect_maximal(inst);
    } else if (config.connect == "minimal") {
        inst = mindr::connect_minimal(inst);
    }

    mindr::Solution solution;
    if (config.algorithm == "decomposable") {
        auto report = mindr::validate(inst);
        if (!report.decomposable) {
            throw mindr::NotDecomposableError("instance is not decomposable");
        }
        solution = mindr::solve_decomposable(inst);
    } else if (config.algorithm == "spanning-tree") {
        solution = mindr::solve_spanning_tree(inst);
    } else if (config.algorithm == "hitting") {
        solution = mindr::solve_hitting(inst);
    } else if (config.algorithm == "greedy") {
        mindr::RandomSource rng(config.seed);
        solution = mindr::solve_greedy(inst, rng);
    } else if (config.algorithm == "degree") {
        solution = mindr::solve_degree(inst);
    } else if (config.algorithm == "pagerank") {
        mindr::PageRankOptions opts{config.damping, config.pr_tol, config.pr_iters};
        solution = mindr::solve_pagerank(inst, opts);
    } else if (config.algorithm == "brute") {
        solution = mindr::solve_bruteforce(inst, {config.cap});
    } else {
        throw mindr::InputError("unknown algorithm: " + config.algorithm);
    }
    write_artifact(config.out_path, mindr::serialize_solution(solution));
    std::cerr << config.algorithm << " cost " << solution.cost << "\n";
}

struct GenConfig {
    std::string kind;
    int n = 0;
    int k = 1;
    int set_size = 1;
    std::uint64_t seed = 0;
    double overlap = 0.0;
    std::uint64_t edges = 0;
    std::string out_path;
};

void run_gen(const GenConfig& config) {
    mindr::MindrInstance inst;
    if (config.kind == "decomposable") {
        mindr::DecomposableGenOptions opts;
        opts.n = config.n;
        opts.k = config.k;
        opts.set_size = config.set_size;
        opts.seed = config.seed;
        opts.edge_target = static_cast<std::size_t>(config.edges);
        inst = mindr::gen_decomposable(opts);
    } else if (config.kind == "general") {
        mindr::GeneralGenOptions opts;
        opts.n = config.n;
        opts.k = config.k;
        opts.set_size = config.set_size;
        opts.seed = config.seed;
        opts.overlap = config.overlap;
        inst = mindr::gen_general(opts);
    } else {
        throw mindr::InputError("unknown kind: " + config.kind);
    }
    write_artifact(config.out_path, mindr::serialize_instance(inst));
}

struct EvalConfig {
    std::string instance_path;
    std::vector<std::string> solution_paths;
    std::string out_path;
    bool drop_missing_fair = false;
};

void run_eval(const EvalConfig& config) {
    mindr::MindrInstance inst = mindr::parse_instance(read_file(config.instance_path));
    if (config.drop_missing_fair) inst = drop_missing_fair_sets(inst);
    std::vector<mindr::AlgorithmRun> runs;
    for (const std::string& path : config.solution_paths) {
        mindr::AlgorithmRun run;
        run.algorithm = std::filesystem::path(path).stem().string();
        run.solution = mindr::parse_solution(read_file(path));
        runs.push_back(std::move(run));
    }
    std::string id = std::filesystem::path(config.instance_path).stem().string();
    auto report = mindr::evaluate_instance(id, inst, runs);
    std::vector<mindr::EvalReport> reports{report};
    write_artifact(config.out_path, mindr::report_csv(reports));
    std::cerr << mindr::report_text(report);
}

void run_preprocess(const std::string& arcs_path, const std::string& out_path,
                    const std::string& map_path) {
    std::istringstream stream(read_file(arcs_path));
    std::vector<std::pair<std::int64_t, std::int64_t>> arcs;
    std::int64_t u, v;
    while (stream >> u >> v) arcs.emplace_back(u, v);
    if (!stream.eof()) throw mindr::InputError("preprocess: trailing junk in arc list");
    auto result = mindr::preprocess_graph(arcs);
    std::ostringstream graph_out;
    graph_out << "n " << result.graph.vertex_count() << "\n";
    for (const mindr::Edge& e : result.graph.edges()) {
        graph_out << "e " << e.u << " " << e.v << "\n";
    }
    std::ostringstream map_out;
    for (std::size_t id = 0; id < result.original_id.size(); ++id) {
        map_out << id << " " << result.original_id[id] << "\n";
    }
    if (map_path.empty()) {
        for (std::size_t id = 0; id < result.original_id.size(); ++id) {
            graph_out << "# map " << id << " " << result.original_id[id] << "\n";
        }
        write_artifact(out_path, graph_out.str());
    } else {
        write_artifact(out_path, graph_out.str());
        write_artifact(map_path, map_out.str());
    }
    std::cerr << "kept " << result.graph.vertex_count() << " vertices, "
              << result.graph.edge_count() << " edges\n";
}

void run_reduce(const std::string& maxcrs_path, const std::string& out_path) {
    mindr::MaxCrsInstance mc = mindr::parse_maxcrs(read_file(maxcrs_path));
    mindr::MindrInstance inst = mindr::reduce_to_mindir(mc);
    write_artifact(out_path, mindr::serialize_instance(inst));
}

void run_validate(const std::string& instance_path) {
    mindr::MindrInstance inst = mindr::parse_instance(read_file(instance_path));
    auto report = mindr::validate(inst);
    std::ostringstream out;
    out << "connected_graph: " << bool_word(report.connected_graph) << "\n";
    out << "sets_connected:";
    for (bool b : report.sets_connected) out << " " << bool_word(b);
    out << "\n";
    out << "sets_disjoint: " << bool_word(report.sets_disjoint) << "\n";
    out << "cross_biconnected_clean: " << bool_word(report.cross_biconnected_clean) << "\n";
    out << "decomposable: " << bool_word(report.decomposable) << "\n";
    if (!report.fair_in_largest_component.empty()) {
        out << "fair_in_largest_component:";
        for (bool b : report.fair_in_largest_component) out << " " << bool_word(b);
        out << "\n";
    }
    std::cout << out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MinDR toolkit: exact and heuristic selection of one vertex per candidate "
                 "set minimizing the total pairwise graph distance"};
    app.require_subcommand(1);

    std::string validate_instance;
    auto* cmd_validate = app.add_subcommand("validate", "check instance structure");
    cmd_validate->add_option("instance", validate_instance, "instance file")->required();

    SolveConfig solve_config;
    auto* cmd_solve = app.add_subcommand("solve", "run one algorithm on an instance");
    cmd_solve->add_option("instance", solve_config.instance_path, "instance file")->required();
    cmd_solve->add_option("--alg", solve_config.algorithm, "algorithm")
        ->required()
        ->check(CLI::IsMember({"decomposable", "spanning-tree", "hitting", "greedy", "degree",
                               "pagerank", "brute"}));
    cmd_solve->add_option("--connect", solve_config.connect, "connection transform")
        ->check(CLI::IsMember({"none", "maximal", "minimal"}));
    cmd_solve->add_option("--seed", solve_config.seed, "random seed (greedy)");
    cmd_solve->add_option("--cap", solve_config.cap, "brute-force tuple cap");
    cmd_solve->add_option("--damping", solve_config.damping, "PageRank damping");
    cmd_solve->add_option("--pr-tol", solve_config.pr_tol, "PageRank L1 tolerance");
    cmd_solve->add_option("--pr-iters", solve_config.pr_iters, "PageRank iteration cap");
    cmd_solve->add_option("--out", solve_config.out_path, "solution file (default stdout)");
    cmd_solve->add_flag("--drop-missing-fair", solve_config.drop_missing_fair,
                        "drop sets whose fair subset is outside the largest component");

    GenConfig gen_config;
    auto* cmd_gen = app.add_subcommand("gen", "generate a synthetic instance");
    cmd_gen->add_option("--kind", gen_config.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"decomposable", "general"}));
    cmd_gen->add_option("--n", gen_config.n, "vertex count")->required();
    cmd_gen->add_option("--k", gen_config.k, "set count")->required();
    cmd_gen->add_option("--set-size", gen_config.set_size, "candidate set size")->required();
    cmd_gen->add_option("--seed", gen_config.seed, "random seed");
    cmd_gen->add_option("--overlap", gen_config.overlap, "overlap probability (general kind)");
    cmd_gen->add_option("--edges", gen_config.edges, "edge budget (decomposable kind)");
    cmd_gen->add_option("--out", gen_config.out_path, "instance file (default stdout)");

    EvalConfig eval_config;
    auto* cmd_eval = app.add_subcommand("eval", "compare solution files on one instance");
    cmd_eval->add_option("instance", eval_config.instance_path, "instance file")->required();
    cmd_eval->add_option("solutions", eval_config.solution_paths, "solution files")
        ->required()
        ->expected(-1);
    cmd_eval->add_option("--out", eval_config.out_path, "CSV report (default stdout)");
    cmd_eval->add_flag("--drop-missing-fair", eval_config.drop_missing_fair,
                       "drop sets whose fair subset is outside the largest component");

    std::string pre_arcs, pre_out, pre_map;
    auto* cmd_pre = app.add_subcommand("preprocess",
                                       "symmetrize an arc list and keep the largest component");
    cmd_pre->add_option("arcs", pre_arcs, "whitespace-separated arc list")->required();
    cmd_pre->add_option("--out", pre_out, "graph section output (default stdout)");
    cmd_pre->add_option("--map", pre_map, "id map output (default: comments in --out)");

    std::string reduce_in, reduce_out;
    auto* cmd_reduce = app.add_subcommand("reduce", "turn a MaxCRS file into an instance");
    cmd_reduce->add_option("maxcrs", reduce_in, "MaxCRS file")->required();
    cmd_reduce->add_option("--out", reduce_out, "instance file (default stdout)");

    cmd_validate->callback([&] { run_validate(validate_instance); });
    cmd_solve->callback([&] { run_solve(solve_config); });
    cmd_gen->callback([&] { run_gen(gen_config); });
    cmd_eval->callback([&] { run_eval(eval_config); });
    cmd_pre->callback([&] { run_preprocess(pre_arcs, pre_out, pre_map); });
    cmd_reduce->callback([&] { run_reduce(reduce_in, reduce_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mindr::NotDecomposableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mindr::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const mindr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
