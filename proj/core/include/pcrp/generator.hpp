#ifndef PCRP_GENERATOR_HPP
#define PCRP_GENERATOR_HPP

#include <cstdint>
#include <optional>

#include "pcrp/instance.hpp"
#include "pcrp/reductions.hpp"

namespace pcrp {

struct RandomDagParams {
    int n = 10;
    int layers = 0;        // 0: one layer per vertex (general DAG shape)
    double density = 0.3;  // probability per forward candidate arc
};

/// Seeded layered DAG. Fallback arcs along the layer order keep the
/// source-reaches-all / all-reach-sink invariant.
Dag random_dag(const RandomDagParams& params, std::uint64_t seed);

struct RandomInstanceParams {
    RandomDagParams dag;
    int pair_count = 4;
    std::optional<int> max_overlap_degree;  // reject pairs pushing the degree above this
};

PcrpInstance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

/// Seeded connected graph: a random spanning tree plus independent edges.
UndirectedGraph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

/// Chain instance made of consecutive blocks, each holding p+1 mutually
/// alternated pairs, so the maximum overlap degree is exactly p (given at
/// least one full block). Deterministic.
PcrpInstance serial_blocks_instance(int p, int n);

}  // namespace pcrp

#endif
