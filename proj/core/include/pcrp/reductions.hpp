#ifndef PCRP_REDUCTIONS_HPP
#define PCRP_REDUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcrp/instance.hpp"

namespace pcrp {

struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;       // normalized u < v, deduplicated
    std::vector<std::vector<int>> adjacency;      // sorted

    static UndirectedGraph make(int n, std::vector<std::pair<int, int>> edges);

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool connected() const;
};

// ---------------------------------------------------------------------------
// 3-Coloring <-> 3 covering paths

/// Five-vertex block standing for one unordered vertex pair {i, j} of the
/// source graph. Edge blocks put the three middle vertices in parallel;
/// non-edge blocks chain the two copies so one path can take both.
struct Gadget {
    int i = 0, j = 0;
    bool for_edge = false;
    Vertex entry = 0, copy_i = 0, copy_j = 0, bypass = 0, exit = 0;
};

struct ThreeColReduction {
    PcrpInstance instance;
    std::vector<Gadget> gadgets;  // lexicographic (i, j) order
    int graph_n = 0;

    const Gadget& gadget(int i, int j) const;
    /// Copies of source vertex v, one per gadget containing v, in gadget order.
    std::vector<Vertex> copies_of(int v) const;
};

/// Builds the path-cover instance whose 3-path solutions correspond to proper
/// 3-colorings of g. Throws Disconnected if g is not connected; needs n >= 2.
ThreeColReduction gen_3pcrp(const UndirectedGraph& g);

/// Maps a proper 3-coloring (colors 0..2) to three covering paths.
/// Throws ImproperColoring.
std::array<StPath, 3> coloring_to_paths(const UndirectedGraph& g,
                                        const std::vector<int>& coloring,
                                        const ThreeColReduction& red);

/// Maps three covering paths back to a proper 3-coloring.
/// Throws InvalidCover when the paths do not cover everything.
std::vector<int> paths_to_coloring(const UndirectedGraph& g, const ThreeColReduction& red,
                                   std::span<const StPath> paths);

// ---------------------------------------------------------------------------
// h-Clique <-> single path covering C(h,2) pairs

struct CliqueReduction {
    PcrpInstance instance;
    int h = 0;
    int graph_n = 0;

    /// Copy of source vertex v in layer z (1-based).
    Vertex copy_id(int v, int z) const { return 1 + (z - 1) * graph_n + v; }
    /// Source vertex of a copy id, or -1 for the endpoints.
    int original_of(Vertex id) const;
    int layer_of(Vertex id) const;
};

/// Layered instance with h copies of every vertex; a path covers C(h,2)
/// required pairs iff it walks an h-clique. Throws DisconnectedOutput when
/// some vertex has no neighbor (the layered graph then fails validation).
CliqueReduction gen_krpsp(const UndirectedGraph& g, int h);

/// Path through one copy of each clique vertex per layer, ascending ids.
/// Throws NotAClique.
StPath clique_to_path(const UndirectedGraph& g, const CliqueReduction& red,
                      std::span<const int> clique);

/// Extracts the clique from a path covering at least C(h,2) pairs.
/// Throws NotEnoughPairs / NotAClique.
std::vector<int> path_to_clique(const UndirectedGraph& g, const CliqueReduction& red,
                                const StPath& path);

// ---------------------------------------------------------------------------
// Source-problem oracles

/// Exhaustive proper 3-coloring, or nullopt. Throws SizeLimitExceeded when
/// g has more than `limit` vertices.
std::optional<std::vector<int>> brute_3coloring(const UndirectedGraph& g, int limit = 16);

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
/// Throws SizeLimitExceeded when g has more than `limit` vertices.
std::vector<int> brute_max_clique(const UndirectedGraph& g, int limit = 24);

// ---------------------------------------------------------------------------
// Sidecar mapping files for generated instances

std::string write_3col_map(const ThreeColReduction& red);
std::string write_clique_map(const CliqueReduction& red);

}  // namespace pcrp

#endif
