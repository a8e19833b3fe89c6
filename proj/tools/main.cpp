// pcrp: solve, analyze, generate and verify path-cover instances with
// required pairs. Reports are line-oriented `key value` text on stdout
// (--json switches to one object); timings go to stderr so identical runs
// produce identical files.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcrp/cover.hpp"
#include "pcrp/generator.hpp"
#include "pcrp/instance.hpp"
#include "pcrp/maxrpsp.hpp"
#include "pcrp/overlap.hpp"
#include "pcrp/reductions.hpp"

namespace {

using nlohmann::json;
using namespace pcrp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct Report {
    bool as_json = false;
    json object = json::object();
    std::ostringstream lines;

    void add(const std::string& key, const json& value) {
        object[key] = value;
        lines << key << " " << flat(value) << "\n";
    }

    static std::string flat(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string out;
            for (const auto& item : v) {
                if (!out.empty()) out += " ";
                out += flat(item);
            }
            return out;
        }
        return v.dump();
    }

    void print() const {
        if (as_json)
            std::cout << object.dump(2) << "\n";
        else
            std::cout << lines.str();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
    out << content;
}

json pair_list(const std::vector<RequiredPair>& pairs) {
    json arr = json::array();
    for (const auto& p : pairs) arr.push_back(json::array({p.a, p.b}));
    return arr;
}

// Loads an instance for solving: cyclic inputs are condensed first, pairs
// remapped; a pair collapsing into one vertex is dropped as always covered.
PcrpInstance load_for_solve(const std::string& path, Report& report) {
    RawInstance raw = parse_raw_instance(slurp(path));
    try {
        Dag dag(raw.digraph.vertex_count, raw.digraph.arcs, raw.digraph.source,
                raw.digraph.sink);
        return PcrpInstance::make(std::move(dag), std::move(raw.pairs));
    } catch (const Error& e) {
        if (e.code() != errc::cycle_detected) throw;
    }
    auto [dag, map] = collapse_sccs(raw.digraph);
    int dropped = 0;
    std::vector<RequiredPair> pairs;
    for (const auto& p : raw.pairs) {
        if (map[p.a] == map[p.b])
            ++dropped;
        else
            pairs.push_back({map[p.a], map[p.b]});
    }
    report.add("scc_collapsed", 1);
    report.add("collapsed_vertex_count", dag.vertex_count());
    if (dropped > 0) report.add("pairs_dropped_by_collapse", dropped);
    return PcrpInstance::make(std::move(dag), std::move(pairs));
}

void emit_solution(const std::vector<StPath>& paths, const std::string& out_path,
                   Report& report) {
    std::string text = write_solution(paths);
    if (out_path.empty()) {
        report.add("solution", "inline");
        report.print();
        std::cout << text;
    } else {
        spill(out_path, text);
        report.add("solution", out_path);
        report.print();
    }
}

int cmd_solve(const std::string& instance_path, const std::string& out_path, bool use_exact,
              int kmax, std::uint64_t budget, bool as_json) {
    Report report;
    report.as_json = as_json;
    PcrpInstance inst = load_for_solve(instance_path, report);
    for (const auto& w : inst.warnings()) report.add("warning", w);

    for (const auto& p : inst.pairs()) {
        if (!coverable(p, inst.reach())) {
            report.add("infeasible", 1);
            report.add("reason", "uncoverable pair (" + std::to_string(p.a) + "," +
                                     std::to_string(p.b) + ")");
            report.print();
            return kExitInfeasible;
        }
    }

    std::vector<StPath> paths;
    std::string stage;
    if (auto one = solve_1pcrp(inst)) {
        stage = "1pcrp";
        paths = {*one};
    } else if (auto two = solve_2pcrp(inst)) {
        stage = "2pcrp";
        paths = two->paths;
    } else if (use_exact) {
        if (auto exact = exact_minpcrp(inst, kmax, budget)) {
            stage = "exact";
            paths = *exact;
        }
    }
    if (paths.empty()) {
        stage = "greedy";
        paths = greedy_minpcrp(inst);
    }

    report.add("stage", stage);
    report.add("k", paths.size());
    report.add("verified",
               verify_solution(inst, paths, VerifyMode::cover_all).valid() ? 1 : 0);
    emit_solution(paths, out_path, report);
    return kExitOk;
}

int cmd_maxrpsp(const std::string& instance_path, bool emit_witness, bool brute,
                std::uint64_t budget, bool as_json) {
    Report report;
    report.as_json = as_json;
    PcrpInstance inst = read_instance_file(instance_path);
    for (const auto& w : inst.warnings()) report.add("warning", w);

    if (brute) {
        report.add("method", "brute");
        report.add("optimum", max_rpsp_bruteforce(inst, budget));
        report.print();
        return kExitOk;
    }

    MaxRpspResult res = max_rpsp_dp(inst);
    report.add("method", "dp");
    report.add("optimum", res.optimum);
    report.add("p", res.max_overlap_degree);
    report.add("states", res.state_count);
    report.add("state_bound", res.state_bound);
    if (res.dropped_uncoverable > 0)
        report.add("dropped_uncoverable", res.dropped_uncoverable);
    if (emit_witness) {
        report.object["witness"] = json(res.witness.vertices);
        report.object["covered"] = pair_list(res.covered);
        for (const auto& p : res.covered)
            report.lines << "covered " << p.a << " " << p.b << "\n";
    }
    report.print();
    // the witness itself goes out in the solution format, verifier-ready
    if (emit_witness && !as_json) std::cout << write_solution({{res.witness}});
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               const std::string& mode, bool as_json) {
    Report report;
    report.as_json = as_json;
    PcrpInstance inst = read_instance_file(instance_path);
    std::vector<StPath> paths = parse_solution(slurp(solution_path));
    VerifyMode vm = mode == "pairs-only" ? VerifyMode::pairs_only : VerifyMode::cover_all;
    auto result = verify_solution(inst, paths, vm);
    report.add("valid", result.valid() ? 1 : 0);
    report.add("uncovered_vertices", json(result.uncovered_vertices));
    report.add("uncovered_pairs", pair_list(result.uncovered_pairs));
    report.print();
    return result.valid() ? kExitOk : kExitInfeasible;
}

int cmd_stats(const std::string& instance_path, bool as_json) {
    Report report;
    report.as_json = as_json;
    PcrpInstance inst = read_instance_file(instance_path);
    report.add("n", inst.dag().vertex_count());
    report.add("arcs", inst.dag().arcs().size());
    report.add("pairs", inst.pairs().size());

    const auto& pairs = inst.pairs();
    int alternated_count = 0, nested_count = 0, uncoverable_count = 0;
    std::vector<int> degree(pairs.size(), 0);
    for (const auto& p : pairs)
        if (!coverable(p, inst.reach())) ++uncoverable_count;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!coverable(pairs[i], inst.reach())) continue;
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (!coverable(pairs[j], inst.reach())) continue;
            OverlapKind kind = classify_overlap(pairs[i], pairs[j], inst.reach());
            if (kind == OverlapKind::alternated) ++alternated_count;
            if (kind == OverlapKind::nested_first_inner ||
                kind == OverlapKind::nested_second_inner)
                ++nested_count;
            if (is_overlap(kind)) {
                ++degree[i];
                ++degree[j];
            }
        }
    }
    int p = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    report.add("p", p);
    std::map<int, int> histogram;
    for (int d : degree) ++histogram[d];
    for (const auto& [d, count] : histogram)
        report.add("degree_" + std::to_string(d), count);
    report.add("alternated", alternated_count);
    report.add("nested", nested_count);
    if (uncoverable_count > 0) report.add("uncoverable", uncoverable_count);
    report.print();
    return kExitOk;
}

int cmd_gen(const std::string& kind, const std::string& out_path, int n, int layers,
            double density, int pair_count, int overlap, int gn, double gp, int h,
            std::uint64_t seed, bool as_json) {
    Report report;
    report.as_json = as_json;

    if (kind == "random") {
        RandomInstanceParams params{{n, layers, density}, pair_count, {}};
        if (overlap >= 0) params.max_overlap_degree = overlap;
        PcrpInstance inst = random_instance(params, seed);
        spill(out_path, write_instance(inst));
        report.add("kind", kind);
        report.add("seed", seed);
        report.add("instance", out_path);
        report.add("n", inst.dag().vertex_count());
        report.add("arcs", inst.dag().arcs().size());
        report.add("pairs", inst.pairs().size());
    } else if (kind == "from-3col") {
        UndirectedGraph g = random_connected_graph(gn, gp, seed);
        ThreeColReduction red = gen_3pcrp(g);
        spill(out_path, write_instance(red.instance));
        spill(out_path + ".map", write_3col_map(red));
        report.add("kind", kind);
        report.add("seed", seed);
        report.add("instance", out_path);
        report.add("map", out_path + ".map");
        report.add("graph_n", gn);
        report.add("graph_edges", g.edges.size());
        report.add("n", red.instance.dag().vertex_count());
        report.add("pairs", red.instance.pairs().size());
    } else if (kind == "from-clique") {
        UndirectedGraph g = random_connected_graph(gn, gp, seed);
        CliqueReduction red = gen_krpsp(g, h);
        spill(out_path, write_instance(red.instance));
        spill(out_path + ".map", write_clique_map(red));
        report.add("kind", kind);
        report.add("seed", seed);
        report.add("instance", out_path);
        report.add("map", out_path + ".map");
        report.add("graph_n", gn);
        report.add("graph_edges", g.edges.size());
        report.add("h", h);
        report.add("n", red.instance.dag().vertex_count());
        report.add("pairs", red.instance.pairs().size());
    } else {
        fail(errc::parse_error, "unknown gen kind '" + kind + "'");
    }
    report.print();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path cover with required pairs"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object instead of key-value lines");

    std::string instance_path, solution_path, out_path, mode = "cover-all";
    std::string gen_kind;
    bool use_exact = false, emit_witness = false, brute = false;
    int kmax = 6;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    int n = 12, layers = 0, pair_count = 4, overlap = -1, gn = 5, h = 3;
    double density = 0.3, gp = 0.5;

    auto* solve = app.add_subcommand("solve", "cover all vertices and pairs");
    solve->add_option("instance", instance_path)->required();
    solve->add_option("-o,--output", out_path, "solution file");
    solve->add_flag("--exact", use_exact, "try the exact solver before greedy");
    solve->add_option("--kmax", kmax, "exact solver path limit");
    solve->add_option("--budget", budget, "st-path enumeration budget");

    auto* maxr = app.add_subcommand("maxrpsp", "one path covering the most pairs");
    maxr->add_option("instance", instance_path)->required();
    maxr->add_flag("--emit-witness", emit_witness, "print the path and its pairs");
    maxr->add_flag("--brute", brute, "exhaustive path search instead of the dp");
    maxr->add_option("--budget", budget, "st-path enumeration budget");

    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->add_option("kind", gen_kind, "random | from-3col | from-clique")->required();
    gen->add_option("-o,--output", out_path, "instance file")->required();
    gen->add_option("--seed", seed);
    gen->add_option("--n", n, "vertex count (random)");
    gen->add_option("--layers", layers, "layer count, 0 = one per vertex (random)");
    gen->add_option("--density", density, "arc probability (random)");
    gen->add_option("--pairs", pair_count, "required pair count (random)");
    gen->add_option("--overlap", overlap, "cap on the overlap degree, -1 = none (random)");
    gen->add_option("--gn", gn, "source graph vertices (from-3col, from-clique)");
    gen->add_option("--gp", gp, "source graph edge probability");
    gen->add_option("--copies", h, "clique size h, one layer per copy (from-clique)");

    auto* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("solution", solution_path)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"cover-all", "pairs-only"}));

    auto* stats = app.add_subcommand("stats", "overlap structure of an instance");
    stats->add_option("instance", instance_path)->required();

    CLI11_PARSE(app, argc, argv);

    const auto started = std::chrono::steady_clock::now();
    int code = kExitError;
    try {
        if (*solve)
            code = cmd_solve(instance_path, out_path, use_exact, kmax, budget, as_json);
        else if (*maxr)
            code = cmd_maxrpsp(instance_path, emit_witness, brute, budget, as_json);
        else if (*gen)
            code = cmd_gen(gen_kind, out_path, n, layers, density, pair_count, overlap, gn,
                           gp, h, seed, as_json);
        else if (*verify)
            code = cmd_verify(instance_path, solution_path, mode, as_json);
        else if (*stats)
            code = cmd_stats(instance_path, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    const auto elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "wall_ms "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
              << "\n";
    return code;
}
