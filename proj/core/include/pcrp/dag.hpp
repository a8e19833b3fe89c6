#ifndef PCRP_DAG_HPP
#define PCRP_DAG_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcrp/bitmatrix.hpp"
#include "pcrp/errors.hpp"

namespace pcrp {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Unvalidated arc-list graph, possibly cyclic. Input to collapse_sccs and
/// the lenient readers; everything else works on Dag.
struct Digraph {
    int vertex_count = 0;
    Vertex source = 0;
    Vertex sink = 0;
    std::vector<Arc> arcs;
};

/// One fixed topological order. position[v] is v's rank.
struct TopoOrder {
    std::vector<int> position;      // vertex -> rank
    std::vector<Vertex> sequence;   // rank -> vertex
};

/// Transitive closure over a Dag. reach(u,u) is true by convention.
class ReachabilityIndex {
public:
    ReachabilityIndex() = default;
    explicit ReachabilityIndex(BitMatrix closure) : closure_(std::move(closure)) {}

    int size() const { return closure_.size(); }
    bool reachable(Vertex u, Vertex v) const { return closure_.get(u, v); }
    bool comparable(Vertex u, Vertex v) const { return closure_.get(u, v) || closure_.get(v, u); }
    /// reachable and distinct
    bool strictly_reaches(Vertex u, Vertex v) const { return u != v && closure_.get(u, v); }

    const BitMatrix& matrix() const { return closure_; }

private:
    BitMatrix closure_;
};

/// Acyclic digraph with designated source and sink and dense 0-based ids.
/// Construction rejects self-loops, out-of-range ids and cycles; the
/// source-reaches-all / all-reach-sink invariant is checked separately at
/// instance load (validate_st_connectivity).
class Dag {
public:
    Dag(int vertex_count, std::vector<Arc> arcs, Vertex source, Vertex sink);

    int vertex_count() const { return n_; }
    Vertex source() const { return source_; }
    Vertex sink() const { return sink_; }

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Vertex>& successors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& predecessors(Vertex v) const { return in_[v]; }
    bool has_arc(Vertex u, Vertex v) const;

    const TopoOrder& topo() const { return topo_; }

private:
    int n_;
    Vertex source_;
    Vertex sink_;
    std::vector<Arc> arcs_;                 // sorted, deduplicated
    std::vector<std::vector<Vertex>> out_;  // sorted adjacency
    std::vector<std::vector<Vertex>> in_;
    TopoOrder topo_;
};

/// Kahn's algorithm, ties broken by ascending vertex id.
/// Throws CycleDetected on a cycle.
TopoOrder topological_sort(int vertex_count, std::span<const Arc> arcs);
inline TopoOrder topological_sort(const Dag& dag) { return dag.topo(); }

ReachabilityIndex transitive_closure(const Dag& dag);

struct CollapseResult {
    Dag dag;
    std::vector<Vertex> vertex_map;  // original vertex -> collapsed vertex
};

/// Condensation: each strongly connected component becomes one vertex.
/// Collapsed ids are numbered by first appearance in ascending original id.
CollapseResult collapse_sccs(const Digraph& input);

struct ContractResult {
    Dag dag;
    std::vector<Vertex> vertex_map;  // original vertex -> new vertex, -1 for the removed one
};

/// Removes v, connecting every in-neighbor to every out-neighbor.
/// Throws ContractEndpoint if v is the source or the sink.
ContractResult contract_vertex(const Dag& dag, Vertex v);

/// Throws ValidationError unless the source reaches every vertex and every
/// vertex reaches the sink.
void validate_st_connectivity(const Dag& dag, const ReachabilityIndex& reach);

}  // namespace pcrp

#endif
