#ifndef PCRP_PATHS_HPP
#define PCRP_PATHS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pcrp/dag.hpp"

namespace pcrp {

/// Source-to-sink path, stored as its vertex sequence.
struct StPath {
    std::vector<Vertex> vertices;

    bool operator==(const StPath&) const = default;
    bool contains(Vertex v) const;
};

/// Throws MalformedPath unless the sequence starts at the source, ends at the
/// sink, follows arcs and repeats no vertex. `label` names the path in errors.
void validate_st_path(const Dag& dag, const StPath& path, const std::string& label = "path");
bool is_valid_st_path(const Dag& dag, const StPath& path);

/// If the vertices are pairwise comparable, returns them in reachability
/// order; otherwise nullopt. Input must not contain duplicates.
std::optional<std::vector<Vertex>> is_chain(std::span<const Vertex> vertices,
                                            const ReachabilityIndex& reach);

/// Builds the st-path through `anchors` (in order). Deterministic: each hop
/// follows the successor of smallest topological rank that still reaches the
/// current target. Consecutive equal anchors are allowed. Throws NotReachable.
StPath stitch_chain(const Dag& dag, const ReachabilityIndex& reach,
                    std::span<const Vertex> anchors);

/// Yields every st-path in lexicographic order of successor ids. Returns
/// false from `fn` to stop early. Throws PathBudgetExceeded once more than
/// `limit` paths have been produced.
void for_each_st_path(const Dag& dag, std::uint64_t limit,
                      const std::function<bool(const StPath&)>& fn);

std::vector<StPath> enumerate_st_paths(const Dag& dag, std::uint64_t limit);

/// Number of distinct st-paths, saturated at `cap`.
std::uint64_t count_st_paths(const Dag& dag, std::uint64_t cap);

}  // namespace pcrp

#endif
