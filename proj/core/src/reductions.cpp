#include "pcrp/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcrp {

UndirectedGraph UndirectedGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail(errc::validation_error, "negative vertex count");
    UndirectedGraph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::validation_error, "edge endpoint out of range");
        if (u == v) fail(errc::validation_error, "self-loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adjacency.resize(n);
    for (const auto& [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
    return g;
}

bool UndirectedGraph::adjacent(int u, int v) const {
    const auto& row = adjacency[u];
    return std::binary_search(row.begin(), row.end(), v);
}

bool UndirectedGraph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n;
}

// ---------------------------------------------------------------------------

const Gadget& ThreeColReduction::gadget(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& g : gadgets)
        if (g.i == i && g.j == j) return g;
    throw std::logic_error("no gadget for the given vertex pair");
}

std::vector<Vertex> ThreeColReduction::copies_of(int v) const {
    std::vector<Vertex> out;
    for (const auto& g : gadgets) {
        if (g.i == v) out.push_back(g.copy_i);
        if (g.j == v) out.push_back(g.copy_j);
    }
    return out;
}

ThreeColReduction gen_3pcrp(const UndirectedGraph& g) {
    if (g.n < 2) fail(errc::validation_error, "need at least two vertices");
    if (!g.connected()) fail(errc::disconnected, "source graph is not connected");

    std::vector<Gadget> gadgets;
    int base = 1;  // 0 is the global source
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            Gadget ga;
            ga.i = i;
            ga.j = j;
            ga.for_edge = g.adjacent(i, j);
            ga.entry = base;
            ga.copy_i = base + 1;
            ga.copy_j = base + 2;
            ga.bypass = base + 3;
            ga.exit = base + 4;
            base += 5;
            gadgets.push_back(ga);
        }
    }
    const Vertex source = 0;
    const Vertex sink = base;
    const int vertex_count = base + 1;

    std::vector<Arc> arcs;
    for (const auto& ga : gadgets) {
        arcs.emplace_back(ga.entry, ga.copy_i);
        arcs.emplace_back(ga.entry, ga.bypass);
        arcs.emplace_back(ga.bypass, ga.exit);
        if (ga.for_edge) {
            arcs.emplace_back(ga.entry, ga.copy_j);
            arcs.emplace_back(ga.copy_i, ga.exit);
            arcs.emplace_back(ga.copy_j, ga.exit);
        } else {
            arcs.emplace_back(ga.copy_i, ga.copy_j);
            arcs.emplace_back(ga.copy_j, ga.exit);
        }
    }
    arcs.emplace_back(source, gadgets.front().entry);
    for (std::size_t k = 0; k + 1 < gadgets.size(); ++k)
        arcs.emplace_back(gadgets[k].exit, gadgets[k + 1].entry);
    arcs.emplace_back(gadgets.back().exit, sink);

    std::vector<RequiredPair> pairs;
    for (const auto& ga : gadgets)
        if (ga.for_edge) pairs.push_back({source, ga.bypass});

    ThreeColReduction red{
        PcrpInstance::make(Dag(vertex_count, std::move(arcs), source, sink), {}),
        std::move(gadgets), g.n};
    for (int v = 0; v < g.n; ++v) {
        std::vector<Vertex> copies = red.copies_of(v);
        for (std::size_t a = 0; a < copies.size(); ++a)
            for (std::size_t b = a + 1; b < copies.size(); ++b)
                pairs.push_back({copies[a], copies[b]});
    }
    red.instance = PcrpInstance::make_with_caches(red.instance.dag(), std::move(pairs),
                                                  red.instance.reach());
    return red;
}

std::array<StPath, 3> coloring_to_paths(const UndirectedGraph& g,
                                        const std::vector<int>& coloring,
                                        const ThreeColReduction& red) {
    if (static_cast<int>(coloring.size()) != g.n)
        fail(errc::improper_coloring, "coloring size does not match the graph");
    for (int c : coloring)
        if (c < 0 || c > 2) fail(errc::improper_coloring, "color out of range");
    for (const auto& [u, v] : g.edges)
        if (coloring[u] == coloring[v])
            fail(errc::improper_coloring, "edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ") is monochromatic");

    std::array<StPath, 3> paths;
    for (int c = 0; c < 3; ++c) {
        std::vector<Vertex> anchors;
        for (const auto& ga : red.gadgets) {
            if (coloring[ga.i] == c) anchors.push_back(ga.copy_i);
            if (coloring[ga.j] == c) anchors.push_back(ga.copy_j);
            if (coloring[ga.i] != c && coloring[ga.j] != c) anchors.push_back(ga.bypass);
        }
        paths[c] = stitch_chain(red.instance.dag(), red.instance.reach(), anchors);
    }
    if (!verify_solution(red.instance, paths, VerifyMode::cover_all).valid())
        throw std::logic_error("coloring produced a non-covering path triple");
    return paths;
}

std::vector<int> paths_to_coloring(const UndirectedGraph& g, const ThreeColReduction& red,
                                   std::span<const StPath> paths) {
    if (paths.size() != 3) fail(errc::invalid_cover, "expected exactly three paths");
    if (!verify_solution(red.instance, paths, VerifyMode::cover_all).valid())
        fail(errc::invalid_cover, "paths do not cover all vertices and pairs");

    std::vector<int> coloring(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        std::vector<Vertex> copies = red.copies_of(v);
        for (int x = 0; x < 3 && coloring[v] == -1; ++x) {
            bool all = std::all_of(copies.begin(), copies.end(),
                                   [&](Vertex c) { return paths[x].contains(c); });
            if (all) coloring[v] = x;
        }
        // a vertex with a single copy is pinned by whichever path visits it
        for (int x = 0; x < 3 && coloring[v] == -1; ++x)
            if (std::any_of(copies.begin(), copies.end(),
                            [&](Vertex c) { return paths[x].contains(c); }))
                coloring[v] = x;
        if (coloring[v] == -1)
            fail(errc::invalid_cover, "no path fixes a color for vertex " + std::to_string(v));
    }
    for (const auto& [u, v] : g.edges)
        if (coloring[u] == coloring[v])
            fail(errc::invalid_cover, "recovered coloring is improper");
    return coloring;
}

// ---------------------------------------------------------------------------

int CliqueReduction::original_of(Vertex id) const {
    if (id == 0 || id == 1 + h * graph_n) return -1;
    return static_cast<int>((id - 1) % graph_n);
}

int CliqueReduction::layer_of(Vertex id) const {
    if (id == 0 || id == 1 + h * graph_n) return -1;
    return static_cast<int>((id - 1) / graph_n) + 1;
}

CliqueReduction gen_krpsp(const UndirectedGraph& g, int h) {
    if (h < 2) fail(errc::validation_error, "need h >= 2");
    if (g.n == 0) fail(errc::disconnected_output, "empty source graph yields no st-path");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0)
            fail(errc::disconnected_output,
                 "vertex " + std::to_string(v) + " has no neighbor; layered copies dangle");

    CliqueReduction red{PcrpInstance::make(Dag(1, {}, 0, 0), {}), h, g.n};

    const Vertex source = 0;
    const Vertex sink = 1 + h * g.n;
    std::vector<Arc> arcs;
    for (int v = 0; v < g.n; ++v) {
        arcs.emplace_back(source, red.copy_id(v, 1));
        arcs.emplace_back(red.copy_id(v, h), sink);
    }
    for (int z = 1; z < h; ++z) {
        for (const auto& [u, v] : g.edges) {
            arcs.emplace_back(red.copy_id(u, z), red.copy_id(v, z + 1));
            arcs.emplace_back(red.copy_id(v, z), red.copy_id(u, z + 1));
        }
    }

    std::vector<RequiredPair> pairs;
    for (const auto& [u, v] : g.edges)
        for (int x = 1; x < h; ++x)
            for (int y = x + 1; y <= h; ++y) {
                pairs.push_back({red.copy_id(u, x), red.copy_id(v, y)});
                pairs.push_back({red.copy_id(v, x), red.copy_id(u, y)});
            }

    red.instance = PcrpInstance::make(Dag(sink + 1, std::move(arcs), source, sink),
                                      std::move(pairs));
    return red;
}

StPath clique_to_path(const UndirectedGraph& g, const CliqueReduction& red,
                      std::span<const int> clique) {
    if (static_cast<int>(clique.size()) != red.h)
        fail(errc::not_a_clique, "expected " + std::to_string(red.h) + " vertices");
    std::vector<int> sorted(clique.begin(), clique.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::not_a_clique, "repeated vertex");
    for (int v : sorted)
        if (v < 0 || v >= g.n) fail(errc::not_a_clique, "vertex out of range");
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            if (!g.adjacent(sorted[a], sorted[b]))
                fail(errc::not_a_clique, "vertices " + std::to_string(sorted[a]) + " and " +
                                             std::to_string(sorted[b]) + " are not adjacent");

    StPath path;
    path.vertices.push_back(red.instance.dag().source());
    for (int z = 1; z <= red.h; ++z) path.vertices.push_back(red.copy_id(sorted[z - 1], z));
    path.vertices.push_back(red.instance.dag().sink());
    validate_st_path(red.instance.dag(), path, "clique path");
    return path;
}

std::vector<int> path_to_clique(const UndirectedGraph& g, const CliqueReduction& red,
                                const StPath& path) {
    validate_st_path(red.instance.dag(), path, "path");
    int covered = 0;
    for (const auto& p : red.instance.pairs())
        if (path.contains(p.a) && path.contains(p.b)) ++covered;
    const int wanted = red.h * (red.h - 1) / 2;
    if (covered < wanted)
        fail(errc::not_enough_pairs, "path covers " + std::to_string(covered) +
                                         " pairs, needs " + std::to_string(wanted));

    std::vector<int> clique;
    for (Vertex v : path.vertices) {
        int orig = red.original_of(v);
        if (orig != -1) clique.push_back(orig);
    }
    std::sort(clique.begin(), clique.end());
    clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
    if (static_cast<int>(clique.size()) != red.h)
        fail(errc::not_a_clique, "path repeats a source vertex");
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (!g.adjacent(clique[a], clique[b]))
                fail(errc::not_a_clique, "extracted set is not a clique");
    return clique;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<int>> brute_3coloring(const UndirectedGraph& g, int limit) {
    if (g.n > limit)
        fail(errc::size_limit_exceeded,
             std::to_string(g.n) + " vertices exceeds the limit " + std::to_string(limit));

    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(g.n, -1);
    std::function<bool(int, int)> go = [&](int at, int used) {
        if (at == g.n) return true;
        int v = order[at];
        for (int c = 0; c <= std::min(2, used); ++c) {
            bool ok = std::none_of(g.adjacency[v].begin(), g.adjacency[v].end(),
                                   [&](int w) { return color[w] == c; });
            if (!ok) continue;
            color[v] = c;
            if (go(at + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    return color;
}

namespace {

// greedy coloring upper bound on the clique number of the candidate set
int coloring_bound(const UndirectedGraph& g, const std::vector<int>& candidates) {
    std::vector<int> color(candidates.size(), -1);
    int used = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<char> taken(static_cast<std::size_t>(used + 1), 0);
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(candidates[i], candidates[j]) && color[j] >= 0)
                taken[color[j]] = 1;
        int c = 0;
        while (c < used && taken[c]) ++c;
        color[i] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

}  // namespace

std::vector<int> brute_max_clique(const UndirectedGraph& g, int limit) {
    if (g.n > limit)
        fail(errc::size_limit_exceeded,
             std::to_string(g.n) + " vertices exceeds the limit " + std::to_string(limit));

    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> best, current;
    std::function<void(const std::vector<int>&)> expand = [&](const std::vector<int>& cand) {
        if (current.size() > best.size()) best = current;
        if (cand.empty()) return;
        if (current.size() + coloring_bound(g, cand) <= best.size()) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (current.size() + (cand.size() - k) <= best.size()) return;
            int v = cand[k];
            std::vector<int> next;
            for (std::size_t j = k + 1; j < cand.size(); ++j)
                if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    };
    expand(order);
    std::sort(best.begin(), best.end());
    return best;
}

// ---------------------------------------------------------------------------

std::string write_3col_map(const ThreeColReduction& red) {
    std::ostringstream out;
    out << "map3c 1\n";
    out << "n " << red.graph_n << "\n";
    out << "# g <i> <j> <config> <entry> <copy_i> <copy_j> <bypass> <exit>\n";
    for (const auto& ga : red.gadgets)
        out << "g " << ga.i << " " << ga.j << " " << (ga.for_edge ? 1 : 2) << " " << ga.entry
            << " " << ga.copy_i << " " << ga.copy_j << " " << ga.bypass << " " << ga.exit
            << "\n";
    return out.str();
}

std::string write_clique_map(const CliqueReduction& red) {
    std::ostringstream out;
    out << "mapclq 1\n";
    out << "n " << red.graph_n << " h " << red.h << "\n";
    out << "# v <vertex> <layer> <id>\n";
    for (int z = 1; z <= red.h; ++z)
        for (int v = 0; v < red.graph_n; ++v)
            out << "v " << v << " " << z << " " << red.copy_id(v, z) << "\n";
    return out.str();
}

}  // namespace pcrp
