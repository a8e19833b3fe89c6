#include "pcrp/dag.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pcrp {

TopoOrder topological_sort(int vertex_count, std::span<const Arc> arcs) {
    std::vector<std::vector<Vertex>> out(vertex_count);
    std::vector<int> indeg(vertex_count, 0);
    for (const auto& [u, v] : arcs) {
        out[u].push_back(v);
        ++indeg[v];
    }

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < vertex_count; ++v)
        if (indeg[v] == 0) ready.push(v);

    TopoOrder order;
    order.position.assign(vertex_count, -1);
    order.sequence.reserve(vertex_count);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.position[v] = static_cast<int>(order.sequence.size());
        order.sequence.push_back(v);
        for (Vertex w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.sequence.size()) != vertex_count)
        fail(errc::cycle_detected, "arc set contains a directed cycle");
    return order;
}

Dag::Dag(int vertex_count, std::vector<Arc> arcs, Vertex source, Vertex sink)
    : n_(vertex_count), source_(source), sink_(sink), arcs_(std::move(arcs)) {
    if (n_ <= 0) fail(errc::validation_error, "vertex count must be positive");
    if (source_ < 0 || source_ >= n_) fail(errc::validation_error, "source id out of range");
    if (sink_ < 0 || sink_ >= n_) fail(errc::validation_error, "sink id out of range");
    for (const auto& [u, v] : arcs_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            fail(errc::validation_error, "arc endpoint out of range");
        if (u == v) fail(errc::validation_error, "self-loop arc (" + std::to_string(u) + ")");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    out_.resize(n_);
    in_.resize(n_);
    for (const auto& [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    topo_ = topological_sort(n_, arcs_);
}

bool Dag::has_arc(Vertex u, Vertex v) const {
    const auto& s = out_[u];
    return std::binary_search(s.begin(), s.end(), v);
}

ReachabilityIndex transitive_closure(const Dag& dag) {
    const int n = dag.vertex_count();
    BitMatrix m(n);
    const auto& seq = dag.topo().sequence;
    for (int r = n - 1; r >= 0; --r) {
        Vertex v = seq[r];
        m.set(v, v);
        for (Vertex w : dag.successors(v)) m.or_row_into(w, v);
    }
    return ReachabilityIndex(std::move(m));
}

namespace {

// Iterative Tarjan. Components are renumbered by first appearance in
// ascending original vertex id so acyclic inputs map to the identity.
std::vector<int> strongly_connected_components(int n, const std::vector<std::vector<Vertex>>& out,
                                               int& component_count) {
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    int next_index = 0;
    component_count = 0;

    struct Frame {
        Vertex v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (child < out[v].size()) {
                Vertex w = out[v][child++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        Vertex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = v;  // provisional label: the root vertex
                        if (w == v) break;
                    }
                }
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }

    std::vector<int> renumber(n, -1);
    std::vector<int> result(n);
    for (Vertex v = 0; v < n; ++v) {
        int root = comp[v];
        if (renumber[root] == -1) renumber[root] = component_count++;
        result[v] = renumber[root];
    }
    return result;
}

}  // namespace

CollapseResult collapse_sccs(const Digraph& input) {
    const int n = input.vertex_count;
    if (n <= 0) fail(errc::validation_error, "vertex count must be positive");
    std::vector<std::vector<Vertex>> out(n);
    for (const auto& [u, v] : input.arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::validation_error, "arc endpoint out of range");
        if (u != v) out[u].push_back(v);
    }

    int comp_count = 0;
    std::vector<int> comp = strongly_connected_components(n, out, comp_count);

    std::vector<Arc> quotient_arcs;
    for (const auto& [u, v] : input.arcs)
        if (comp[u] != comp[v]) quotient_arcs.emplace_back(comp[u], comp[v]);
    std::sort(quotient_arcs.begin(), quotient_arcs.end());
    quotient_arcs.erase(std::unique(quotient_arcs.begin(), quotient_arcs.end()),
                        quotient_arcs.end());

    Dag dag(comp_count, std::move(quotient_arcs), comp[input.source], comp[input.sink]);
    return CollapseResult{std::move(dag), std::move(comp)};
}

ContractResult contract_vertex(const Dag& dag, Vertex v) {
    if (v == dag.source() || v == dag.sink())
        fail(errc::contract_endpoint, "cannot contract vertex " + std::to_string(v));
    if (v < 0 || v >= dag.vertex_count()) fail(errc::validation_error, "vertex out of range");

    const int n = dag.vertex_count();
    std::vector<Vertex> map(n);
    for (Vertex w = 0; w < n; ++w) map[w] = w < v ? w : w - 1;
    map[v] = -1;

    std::vector<Arc> arcs;
    for (const auto& [a, b] : dag.arcs())
        if (a != v && b != v) arcs.emplace_back(map[a], map[b]);
    for (Vertex a : dag.predecessors(v))
        for (Vertex b : dag.successors(v)) arcs.emplace_back(map[a], map[b]);

    Dag contracted(n - 1, std::move(arcs), map[dag.source()], map[dag.sink()]);
    return ContractResult{std::move(contracted), std::move(map)};
}

void validate_st_connectivity(const Dag& dag, const ReachabilityIndex& reach) {
    for (Vertex v = 0; v < dag.vertex_count(); ++v) {
        if (!reach.reachable(dag.source(), v))
            fail(errc::validation_error,
                 "source does not reach vertex " + std::to_string(v));
        if (!reach.reachable(v, dag.sink()))
            fail(errc::validation_error,
                 "vertex " + std::to_string(v) + " does not reach sink");
    }
}

}  // namespace pcrp
