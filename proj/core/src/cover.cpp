#include "pcrp/cover.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "pcrp/maxrpsp.hpp"

namespace pcrp {

namespace {

// Hopcroft-Karp on the bipartite graph with an edge (u, v) whenever u
// strictly reaches v, both restricted to `subset`. Deterministic: adjacency
// is scanned in ascending id order.
struct Matching {
    std::vector<int> succ;  // u -> matched successor or -1
    std::vector<int> pred;  // v -> matched predecessor or -1
    int size = 0;
};

Matching maximum_comparability_matching(const ReachabilityIndex& reach,
                                        const std::vector<Vertex>& subset) {
    const int k = static_cast<int>(subset.size());
    std::vector<int> local(reach.size(), -1);
    for (int i = 0; i < k; ++i) local[subset[i]] = i;

    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
        reach.matrix().for_each_in_row(subset[i], [&](int v) {
            if (v != subset[i] && local[v] != -1) adj[i].push_back(local[v]);
        });
    }

    std::vector<int> match_l(k, -1), match_r(k, -1), layer(k);
    const int kInf = std::numeric_limits<int>::max();

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < k; ++u) {
            layer[u] = match_l[u] == -1 ? 0 : kInf;
            if (layer[u] == 0) q.push(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) {
                    found = true;
                } else if (layer[w] == kInf) {
                    layer[w] = layer[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (layer[w] == layer[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        layer[u] = kInf;
        return false;
    };

    Matching result;
    result.size = 0;
    while (bfs()) {
        for (int u = 0; u < k; ++u)
            if (match_l[u] == -1 && dfs(u)) ++result.size;
    }

    result.succ.assign(reach.size(), -1);
    result.pred.assign(reach.size(), -1);
    for (int u = 0; u < k; ++u) {
        if (match_l[u] != -1) {
            result.succ[subset[u]] = subset[match_l[u]];
            result.pred[subset[match_l[u]]] = subset[u];
        }
    }
    return result;
}

// Dilworth: chains over `subset`, as few as the maximum matching allows.
std::vector<std::vector<Vertex>> chain_decomposition(const ReachabilityIndex& reach,
                                                     const std::vector<Vertex>& subset) {
    Matching m = maximum_comparability_matching(reach, subset);
    std::vector<std::vector<Vertex>> chains;
    for (Vertex head : subset) {
        if (m.pred[head] != -1) continue;
        std::vector<Vertex> chain;
        for (Vertex v = head; v != -1; v = m.succ[v]) chain.push_back(v);
        chains.push_back(std::move(chain));
    }
    return chains;
}

}  // namespace

std::vector<StPath> min_path_cover(const Dag& dag) {
    ReachabilityIndex reach = transitive_closure(dag);
    std::vector<Vertex> all(dag.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::vector<StPath> paths;
    for (const auto& chain : chain_decomposition(reach, all))
        paths.push_back(stitch_chain(dag, reach, chain));
    return paths;
}

std::optional<StPath> solve_1pcrp(const PcrpInstance& inst) {
    const auto& seq = inst.topo().sequence;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!inst.reach().reachable(seq[i], seq[i + 1])) return std::nullopt;
    for (const auto& p : inst.pairs())
        if (!coverable(p, inst.reach())) return std::nullopt;
    // consecutive comparable vertices in a topological order are joined by an arc
    return StPath{seq};
}

PairCompatGraph pair_compat_graph(const PcrpInstance& inst) {
    const auto& pairs = inst.pairs();
    for (const auto& p : pairs)
        if (!coverable(p, inst.reach()))
            fail(errc::infeasible,
                 "uncoverable pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")");

    const int m = static_cast<int>(pairs.size());
    PairCompatGraph graph{m, BitMatrix(m)};
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<Vertex> u{pairs[i].a, pairs[i].b, pairs[j].a, pairs[j].b};
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            if (is_chain(u, inst.reach())) {
                graph.adjacency.set(i, j);
                graph.adjacency.set(j, i);
            }
        }
    }
    return graph;
}

namespace {

StPath path_through_pairs(const PcrpInstance& inst, const std::vector<int>& pair_indices) {
    std::vector<Vertex> members;
    for (int idx : pair_indices) {
        members.push_back(inst.pairs()[idx].a);
        members.push_back(inst.pairs()[idx].b);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto chain = is_chain(members, inst.reach());
    if (!chain) throw std::logic_error("compatible pair class is not a chain");
    return stitch_chain(inst.dag(), inst.reach(), *chain);
}

}  // namespace

std::optional<TwoPathSolution> solve_2pcrp(const PcrpInstance& inst) {
    for (const auto& p : inst.pairs())
        if (!coverable(p, inst.reach()))
            fail(errc::infeasible,
                 "uncoverable pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")");

    if (auto single = solve_1pcrp(inst))
        return TwoPathSolution{{*single, *single}, 1};

    PcrpInstance aug = augment_trivial_pairs(inst);
    PairCompatGraph compat = pair_compat_graph(aug);
    const int m = compat.pair_count;

    // two-color the complement without materializing it: scan the shrinking
    // unvisited pool against compatibility rows
    std::vector<int> color(m, -1);
    std::vector<int> unvisited;
    for (int i = 0; i < m; ++i) unvisited.push_back(i);
    std::queue<int> frontier;
    while (!unvisited.empty() || !frontier.empty()) {
        if (frontier.empty()) {
            int seed = unvisited.front();
            unvisited.erase(unvisited.begin());
            color[seed] = 0;
            frontier.push(seed);
        }
        int v = frontier.front();
        frontier.pop();
        for (std::size_t at = 0; at < unvisited.size();) {
            int w = unvisited[at];
            if (!compat.compatible(v, w)) {
                color[w] = 1 - color[v];
                unvisited.erase(unvisited.begin() + static_cast<long>(at));
                frontier.push(w);
            } else {
                ++at;
            }
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!compat.compatible(i, j) && color[i] == color[j]) return std::nullopt;

    std::vector<int> class0, class1;
    for (int i = 0; i < m; ++i) (color[i] == 0 ? class0 : class1).push_back(i);

    TwoPathSolution solution;
    solution.paths.push_back(path_through_pairs(aug, class0));
    solution.paths.push_back(path_through_pairs(aug, class1));
    solution.path_count = 2;
    if (!verify_solution(inst, solution.paths, VerifyMode::cover_all).valid())
        throw std::logic_error("two-path construction failed verification");
    return solution;
}

namespace {

// Exact k-coloring by DSATUR-ordered backtracking with new-color symmetry
// breaking. Adjacency is the complement of `compat`.
bool color_complement(const PairCompatGraph& compat, int k, std::vector<int>& color) {
    const int m = compat.pair_count;
    color.assign(m, -1);

    std::vector<int> degree(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && !compat.compatible(i, j)) ++degree[i];

    std::function<bool(int, int)> go = [&](int colored, int used) {
        if (colored == m) return true;
        int pick = -1, pick_sat = -1;
        std::vector<char> sat_colors(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < m; ++i) {
            if (color[i] != -1) continue;
            int sat = 0;
            std::vector<char> seen(static_cast<std::size_t>(k), 0);
            for (int j = 0; j < m; ++j)
                if (j != i && !compat.compatible(i, j) && color[j] != -1 && !seen[color[j]]) {
                    seen[color[j]] = 1;
                    ++sat;
                }
            if (pick == -1 || sat > pick_sat ||
                (sat == pick_sat && degree[i] > degree[pick])) {
                pick = i;
                pick_sat = sat;
                sat_colors = seen;
            }
        }
        const int try_up_to = std::min(k - 1, used);  // at most one brand-new color
        for (int c = 0; c <= try_up_to; ++c) {
            if (c < static_cast<int>(sat_colors.size()) && sat_colors[c]) continue;
            color[pick] = c;
            if (go(colored + 1, std::max(used, c + 1))) return true;
            color[pick] = -1;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

std::optional<std::vector<StPath>> exact_minpcrp(const PcrpInstance& inst, int k_max,
                                                 std::uint64_t budget) {
    for (const auto& p : inst.pairs())
        if (!coverable(p, inst.reach())) return std::nullopt;
    if (k_max < 1) return std::nullopt;

    const std::uint64_t cap =
        budget == ~std::uint64_t{0} ? budget : budget + 1;
    if (count_st_paths(inst.dag(), cap) > budget)
        fail(errc::path_budget_exceeded,
             "instance has more than " + std::to_string(budget) + " st-paths");

    PcrpInstance aug = augment_trivial_pairs(inst);
    PairCompatGraph compat = pair_compat_graph(aug);
    const int m = compat.pair_count;

    if (m == 0) {
        std::vector<StPath> paths{stitch_chain(inst.dag(), inst.reach(), {})};
        return paths;
    }

    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> color;
        if (!color_complement(compat, k, color)) continue;
        std::vector<std::vector<int>> classes(k);
        for (int i = 0; i < m; ++i) classes[color[i]].push_back(i);
        std::vector<StPath> paths;
        for (const auto& cls : classes) paths.push_back(path_through_pairs(aug, cls));
        if (!verify_solution(inst, paths, VerifyMode::cover_all).valid())
            throw std::logic_error("clique-partition construction failed verification");
        return paths;
    }
    return std::nullopt;
}

std::vector<StPath> greedy_minpcrp(const PcrpInstance& inst) {
    for (const auto& p : inst.pairs())
        if (!coverable(p, inst.reach()))
            fail(errc::infeasible,
                 "uncoverable pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")");

    std::vector<StPath> paths;
    std::vector<RequiredPair> residual = inst.pairs();
    while (!residual.empty()) {
        PcrpInstance sub =
            PcrpInstance::make_with_caches(inst.dag(), residual, inst.reach());
        MaxRpspResult best = max_rpsp_dp(sub);
        if (best.optimum <= 0) throw std::logic_error("coverable pair admits no path");
        std::vector<char> on_path(inst.dag().vertex_count(), 0);
        for (Vertex v : best.witness.vertices) on_path[v] = 1;
        std::erase_if(residual,
                      [&](const RequiredPair& p) { return on_path[p.a] && on_path[p.b]; });
        paths.push_back(std::move(best.witness));
    }

    std::vector<char> covered(inst.dag().vertex_count(), 0);
    for (const auto& path : paths)
        for (Vertex v : path.vertices) covered[v] = 1;
    std::vector<Vertex> uncovered;
    for (Vertex v = 0; v < inst.dag().vertex_count(); ++v)
        if (!covered[v]) uncovered.push_back(v);

    if (paths.empty() || !uncovered.empty()) {
        if (uncovered.empty()) {
            paths.push_back(stitch_chain(inst.dag(), inst.reach(), {}));
        } else {
            for (const auto& chain : chain_decomposition(inst.reach(), uncovered))
                paths.push_back(stitch_chain(inst.dag(), inst.reach(), chain));
        }
    }
    if (!verify_solution(inst, paths, VerifyMode::cover_all).valid())
        throw std::logic_error("greedy cover failed verification");
    return paths;
}

std::string write_solution(std::span<const StPath> paths) {
    std::ostringstream out;
    out << "k " << paths.size() << "\n";
    for (const auto& path : paths) {
        for (std::size_t i = 0; i < path.vertices.size(); ++i)
            out << (i ? " " : "") << path.vertices[i];
        out << "\n";
    }
    return out.str();
}

std::vector<StPath> parse_solution(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string head;
    std::size_t count = 0;
    if (!(in >> head >> count) || head != "k")
        fail(errc::parse_error, "expected 'k <count>' header in solution");
    std::string line;
    std::getline(in, line);
    std::vector<StPath> paths;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        StPath p;
        Vertex v;
        while (ls >> v) p.vertices.push_back(v);
        if (!ls.eof())
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad vertex id");
        if (!p.vertices.empty()) paths.push_back(std::move(p));
    }
    if (paths.size() != count)
        fail(errc::parse_error, "solution header promises " + std::to_string(count) +
                                    " paths, found " + std::to_string(paths.size()));
    return paths;
}

}  // namespace pcrp
