#ifndef PCRP_COVER_HPP
#define PCRP_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcrp/bitmatrix.hpp"
#include "pcrp/instance.hpp"

namespace pcrp {

/// Minimum-cardinality set of st-paths covering every vertex. Size equals
/// vertex_count minus a maximum matching in the bipartite comparability
/// graph; chains are stitched into st-paths.
std::vector<StPath> min_path_cover(const Dag& dag);

/// Single covering path, which exists iff reachability totally orders the
/// vertices. Covers every coverable pair; nullopt if some pair is uncoverable.
std::optional<StPath> solve_1pcrp(const PcrpInstance& inst);

/// Undirected graph over the required pairs: an edge joins two pairs iff one
/// st-path covers both (their vertex union is a reachability chain).
struct PairCompatGraph {
    int pair_count = 0;
    BitMatrix adjacency;

    bool compatible(int i, int j) const { return adjacency.get(i, j); }
};

/// Throws Infeasible if some pair is uncoverable. The instance should
/// already be augmented.
PairCompatGraph pair_compat_graph(const PcrpInstance& inst);

struct TwoPathSolution {
    std::vector<StPath> paths;  // two entries; identical when one path suffices
    int path_count = 2;         // 1 when the single-path case applied
};

/// Two st-paths covering all vertices and all pairs, when they exist. The
/// complement of the pair-compatibility graph (after trivial-pair
/// augmentation) is two-colored without being materialized. Throws Infeasible
/// if some pair is uncoverable.
std::optional<TwoPathSolution> solve_2pcrp(const PcrpInstance& inst);

/// Smallest k ≤ k_max and k st-paths covering all vertices and pairs, or
/// nullopt. Exact. Throws PathBudgetExceeded when the instance has more than
/// `budget` st-paths.
std::optional<std::vector<StPath>> exact_minpcrp(const PcrpInstance& inst, int k_max = 6,
                                                 std::uint64_t budget = 1'000'000);

/// Heuristic: repeatedly take a path covering the most not-yet-covered pairs,
/// then finish uncovered vertices with a restricted minimum path cover. No
/// optimality claim. Throws Infeasible if some pair is uncoverable.
std::vector<StPath> greedy_minpcrp(const PcrpInstance& inst);

/// Solution text format: a `k <count>` line, then one line of space-separated
/// vertex ids per path.
std::string write_solution(std::span<const StPath> paths);
std::vector<StPath> parse_solution(std::string_view text);

}  // namespace pcrp

#endif
