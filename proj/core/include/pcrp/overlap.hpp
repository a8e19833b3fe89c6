#ifndef PCRP_OVERLAP_HPP
#define PCRP_OVERLAP_HPP

#include <vector>

#include "pcrp/instance.hpp"

namespace pcrp {

enum class OverlapKind {
    none,
    alternated,
    nested_second_inner,  // the second argument nests inside the first
    nested_first_inner,
};

inline bool is_overlap(OverlapKind k) { return k != OverlapKind::none; }

/// Inner nests inside outer: some path realizes
/// ⟨outer.a, inner.a, inner.b, outer.b⟩ with outer.a strictly before inner.a.
/// Pairs must be oriented (first endpoint reaches the second).
bool nested_in(const RequiredPair& inner, const RequiredPair& outer,
               const ReachabilityIndex& reach);

/// Some path realizes the strictly interleaved order ⟨a₁, b₁, a₂, b₂⟩ in
/// either role assignment.
bool alternated(const RequiredPair& p, const RequiredPair& q, const ReachabilityIndex& reach);

bool overlaps(const RequiredPair& p, const RequiredPair& q, const ReachabilityIndex& reach);

/// Classifies two distinct coverable pairs. Alternated wins when both an
/// alternated and a nested order are realizable (the degree only needs the
/// boolean). Throws NotCoverable if either pair is uncoverable.
OverlapKind classify_overlap(const RequiredPair& p, const RequiredPair& q,
                             const ReachabilityIndex& reach);

/// Number of other pairs overlapping pairs[index]. All pairs must be coverable.
int overlap_degree(std::size_t index, const PcrpInstance& inst);
int max_overlap_degree(const PcrpInstance& inst);

/// Pair order compatible with the topological order: ascending topo rank of
/// the second endpoint, ties broken by DESCENDING rank of the first endpoint
/// (inner pair first), then input order. Rank 0 is the fictitious ⟨⊥, s⟩ pair.
struct PairOrdering {
    std::vector<int> rank_to_pair;  // rank (1-based) -> index into inst.pairs()
    std::vector<int> pair_to_rank;  // pair index -> rank

    int pair_count() const { return static_cast<int>(rank_to_pair.size()) - 1; }
    int pair_at(int rank) const { return rank_to_pair[rank]; }
};

PairOrdering order_pairs(const PcrpInstance& inst);

/// OP set of the pair at `rank`: vertices of pairs overlapping it from which
/// its second endpoint is reachable, plus its own first endpoint. Sorted by
/// topological rank. Rank 0 yields the empty set.
std::vector<Vertex> op_set(int rank, const PcrpInstance& inst, const PairOrdering& ordering);

}  // namespace pcrp

#endif
