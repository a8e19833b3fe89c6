#include "pcrp/paths.hpp"

#include <algorithm>
#include <string>

namespace pcrp {

bool StPath::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void validate_st_path(const Dag& dag, const StPath& path, const std::string& label) {
    if (path.vertices.empty()) fail(errc::malformed_path, label + " is empty");
    if (path.vertices.front() != dag.source())
        fail(errc::malformed_path, label + " does not start at the source");
    if (path.vertices.back() != dag.sink())
        fail(errc::malformed_path, label + " does not end at the sink");
    std::vector<char> seen(dag.vertex_count(), 0);
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        Vertex v = path.vertices[i];
        if (v < 0 || v >= dag.vertex_count())
            fail(errc::malformed_path, label + " contains an unknown vertex id");
        if (seen[v]) fail(errc::malformed_path, label + " repeats vertex " + std::to_string(v));
        seen[v] = 1;
        if (i > 0 && !dag.has_arc(path.vertices[i - 1], v))
            fail(errc::malformed_path, label + " uses missing arc (" +
                                           std::to_string(path.vertices[i - 1]) + "," +
                                           std::to_string(v) + ")");
    }
}

bool is_valid_st_path(const Dag& dag, const StPath& path) {
    try {
        validate_st_path(dag, path);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::optional<std::vector<Vertex>> is_chain(std::span<const Vertex> vertices,
                                            const ReachabilityIndex& reach) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!reach.comparable(vertices[i], vertices[j])) return std::nullopt;

    // pairwise comparability makes strict reachability a total order here
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
        return reach.strictly_reaches(a, b);
    });
    return sorted;
}

StPath stitch_chain(const Dag& dag, const ReachabilityIndex& reach,
                    std::span<const Vertex> anchors) {
    std::vector<Vertex> targets;
    Vertex from = dag.source();
    for (Vertex a : anchors) {
        if (!reach.reachable(from, a))
            fail(errc::not_reachable,
                 "no path from " + std::to_string(from) + " to " + std::to_string(a));
        if (targets.empty() || targets.back() != a) targets.push_back(a);
        from = a;
    }
    if (!reach.reachable(from, dag.sink()))
        fail(errc::not_reachable,
             "no path from " + std::to_string(from) + " to the sink");
    if (targets.empty() || targets.back() != dag.sink()) targets.push_back(dag.sink());

    const auto& pos = dag.topo().position;
    StPath path;
    Vertex at = dag.source();
    path.vertices.push_back(at);
    for (Vertex target : targets) {
        while (at != target) {
            Vertex best = -1;
            for (Vertex w : dag.successors(at)) {
                if (!reach.reachable(w, target)) continue;
                if (best == -1 || pos[w] < pos[best]) best = w;
            }
            if (best == -1)
                fail(errc::not_reachable, "stitch lost the target " + std::to_string(target));
            path.vertices.push_back(best);
            at = best;
        }
    }
    return path;
}

void for_each_st_path(const Dag& dag, std::uint64_t limit,
                      const std::function<bool(const StPath&)>& fn) {
    // successor lists are sorted, so depth-first emission is lexicographic
    StPath current;
    std::uint64_t produced = 0;
    std::vector<std::size_t> next_child;
    current.vertices.push_back(dag.source());
    next_child.push_back(0);

    while (!next_child.empty()) {
        Vertex v = current.vertices.back();
        if (v == dag.sink()) {
            if (++produced > limit)
                fail(errc::path_budget_exceeded,
                     "more than " + std::to_string(limit) + " st-paths");
            if (!fn(current)) return;
            current.vertices.pop_back();
            next_child.pop_back();
            continue;
        }
        std::size_t& child = next_child.back();
        if (child < dag.successors(v).size()) {
            Vertex w = dag.successors(v)[child++];
            current.vertices.push_back(w);
            next_child.push_back(0);
        } else {
            current.vertices.pop_back();
            next_child.pop_back();
        }
    }
}

std::vector<StPath> enumerate_st_paths(const Dag& dag, std::uint64_t limit) {
    std::vector<StPath> paths;
    for_each_st_path(dag, limit, [&](const StPath& p) {
        paths.push_back(p);
        return true;
    });
    return paths;
}

std::uint64_t count_st_paths(const Dag& dag, std::uint64_t cap) {
    const std::uint64_t kMax = ~std::uint64_t{0};
    std::vector<std::uint64_t> ways(dag.vertex_count(), 0);
    ways[dag.source()] = 1;
    for (Vertex v : dag.topo().sequence) {
        if (ways[v] == 0) continue;
        std::uint64_t w = std::min(ways[v], cap);
        for (Vertex u : dag.successors(v)) {
            ways[u] = (ways[u] > kMax - w) ? kMax : ways[u] + w;
            ways[u] = std::min(ways[u], cap);
        }
    }
    // a degenerate single-vertex graph has the one-vertex path
    if (dag.source() == dag.sink()) return std::min<std::uint64_t>(1, cap);
    return std::min(ways[dag.sink()], cap);
}

}  // namespace pcrp
