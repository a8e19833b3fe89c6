#include "pcrp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pcrp/overlap.hpp"

namespace pcrp {

Dag random_dag(const RandomDagParams& params, std::uint64_t seed) {
    const int n = params.n;
    if (n < 2) fail(errc::validation_error, "need at least two vertices");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    int layer_count = params.layers > 0 ? std::min(params.layers, n) : n;
    if (layer_count < 2) layer_count = 2;

    // vertex 0 is the source in layer 0, vertex n-1 the sink in the last layer
    std::vector<int> layer(n);
    layer[0] = 0;
    layer[n - 1] = layer_count - 1;
    std::uniform_int_distribution<int> mid(
        layer_count > 2 ? 1 : 0, layer_count > 2 ? layer_count - 2 : layer_count - 1);
    for (int v = 1; v + 1 < n; ++v) layer[v] = mid(rng);

    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (layer[u] < layer[v] && coin(rng) < params.density) arcs.emplace_back(u, v);

    // fallback arcs keep every vertex on some source-to-sink route
    std::vector<int> by_layer_rank(n);
    std::iota(by_layer_rank.begin(), by_layer_rank.end(), 0);
    std::stable_sort(by_layer_rank.begin(), by_layer_rank.end(),
                     [&](int a, int b) { return layer[a] < layer[b]; });
    std::vector<int> rank_of(n);
    for (int r = 0; r < n; ++r) rank_of[by_layer_rank[r]] = r;

    std::vector<char> has_in(n, 0), has_out(n, 0);
    for (const auto& [u, v] : arcs) {
        has_out[u] = 1;
        has_in[v] = 1;
    }
    auto pick_earlier = [&](int v) {
        std::vector<int> options;
        for (int u = 0; u < n; ++u)
            if (layer[u] < layer[v]) options.push_back(u);
        return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    };
    auto pick_later = [&](int v) {
        std::vector<int> options;
        for (int u = 0; u < n; ++u)
            if (layer[u] > layer[v]) options.push_back(u);
        return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    };
    for (int r = 0; r < n; ++r) {
        int v = by_layer_rank[r];
        if (v != 0 && layer[v] > 0 && !has_in[v]) {
            arcs.emplace_back(pick_earlier(v), v);
            has_in[v] = 1;
        }
        if (v != n - 1 && layer[v] < layer_count - 1 && !has_out[v]) {
            arcs.emplace_back(v, pick_later(v));
            has_out[v] = 1;
        }
    }
    // vertices sharing the first or last layer with the endpoints still need hooks
    for (int v = 1; v + 1 < n; ++v) {
        if (layer[v] == 0 && !has_in[v]) arcs.emplace_back(0, v);
        if (layer[v] == layer_count - 1 && !has_out[v]) arcs.emplace_back(v, n - 1);
    }

    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Dag(n, std::move(arcs), 0, n - 1);
}

PcrpInstance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
    Dag dag = random_dag(params.dag, seed);
    ReachabilityIndex reach = transitive_closure(dag);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const int n = dag.vertex_count();
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<RequiredPair> pairs;
    auto try_add = [&](RequiredPair p) {
        if (p.a == p.b) return;
        if (p.a == dag.source() || p.b == dag.source()) return;
        if (p.a == dag.sink() || p.b == dag.sink()) return;
        if (!reach.comparable(p.a, p.b)) return;
        if (reach.strictly_reaches(p.b, p.a)) std::swap(p.a, p.b);
        for (const auto& q : pairs)
            if (q == p) return;
        pairs.push_back(p);
        if (params.max_overlap_degree) {
            PcrpInstance probe = PcrpInstance::make_with_caches(dag, pairs, reach);
            if (max_overlap_degree(probe) > *params.max_overlap_degree) pairs.pop_back();
        }
    };

    const int attempts = params.pair_count * 40 + 40;
    for (int t = 0; t < attempts && static_cast<int>(pairs.size()) < params.pair_count; ++t)
        try_add({pick(rng), pick(rng)});

    return PcrpInstance::make_with_caches(std::move(dag), std::move(pairs), std::move(reach));
}

UndirectedGraph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) fail(errc::validation_error, "need at least one vertex");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) edges.emplace_back(u, v);
    return UndirectedGraph::make(n, std::move(edges));
}

PcrpInstance serial_blocks_instance(int p, int n) {
    if (p < 0) fail(errc::validation_error, "negative overlap target");
    const int m = p + 1;       // pairs per block
    const int span = 2 * m;    // vertices per block
    if (n < span + 2) fail(errc::validation_error, "graph too small for one block");

    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
    Dag dag(n, std::move(arcs), 0, n - 1);

    std::vector<RequiredPair> pairs;
    const int blocks = (n - 2) / span;
    for (int b = 0; b < blocks; ++b) {
        const int base = 1 + b * span;
        for (int k = 0; k < m; ++k) pairs.push_back({base + k, base + m + k});
    }
    return PcrpInstance::make(std::move(dag), std::move(pairs));
}

}  // namespace pcrp
