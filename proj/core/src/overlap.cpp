#include "pcrp/overlap.hpp"

#include <algorithm>
#include <numeric>

namespace pcrp {

bool nested_in(const RequiredPair& inner, const RequiredPair& outer,
               const ReachabilityIndex& reach) {
    if (inner == outer) return false;
    return reach.strictly_reaches(outer.a, inner.a) && reach.reachable(inner.b, outer.b);
}

namespace {

bool alternated_role(const RequiredPair& first, const RequiredPair& second,
                     const ReachabilityIndex& reach) {
    return reach.strictly_reaches(first.a, second.a) &&
           reach.strictly_reaches(second.a, first.b) &&
           reach.strictly_reaches(first.b, second.b);
}

}  // namespace

bool alternated(const RequiredPair& p, const RequiredPair& q, const ReachabilityIndex& reach) {
    return alternated_role(p, q, reach) || alternated_role(q, p, reach);
}

bool overlaps(const RequiredPair& p, const RequiredPair& q, const ReachabilityIndex& reach) {
    return alternated(p, q, reach) || nested_in(p, q, reach) || nested_in(q, p, reach);
}

OverlapKind classify_overlap(const RequiredPair& p, const RequiredPair& q,
                             const ReachabilityIndex& reach) {
    if (!coverable(p, reach))
        fail(errc::not_coverable, "pair (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                                      ") lies on no path");
    if (!coverable(q, reach))
        fail(errc::not_coverable, "pair (" + std::to_string(q.a) + "," + std::to_string(q.b) +
                                      ") lies on no path");
    if (alternated(p, q, reach)) return OverlapKind::alternated;
    if (nested_in(q, p, reach)) return OverlapKind::nested_second_inner;
    if (nested_in(p, q, reach)) return OverlapKind::nested_first_inner;
    return OverlapKind::none;
}

int overlap_degree(std::size_t index, const PcrpInstance& inst) {
    const auto& pairs = inst.pairs();
    int degree = 0;
    for (std::size_t j = 0; j < pairs.size(); ++j)
        if (j != index && overlaps(pairs[index], pairs[j], inst.reach())) ++degree;
    return degree;
}

int max_overlap_degree(const PcrpInstance& inst) {
    int best = 0;
    for (std::size_t i = 0; i < inst.pairs().size(); ++i)
        best = std::max(best, overlap_degree(i, inst));
    return best;
}

PairOrdering order_pairs(const PcrpInstance& inst) {
    const auto& pairs = inst.pairs();
    const auto& pos = inst.topo().position;

    std::vector<int> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (pos[pairs[x].b] != pos[pairs[y].b]) return pos[pairs[x].b] < pos[pairs[y].b];
        return pos[pairs[x].a] > pos[pairs[y].a];
    });

    PairOrdering ordering;
    ordering.rank_to_pair.assign(pairs.size() + 1, -1);
    ordering.pair_to_rank.assign(pairs.size(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) {
        ordering.rank_to_pair[r + 1] = order[r];
        ordering.pair_to_rank[order[r]] = static_cast<int>(r) + 1;
    }
    return ordering;
}

std::vector<Vertex> op_set(int rank, const PcrpInstance& inst, const PairOrdering& ordering) {
    if (rank == 0) return {};
    const auto& pairs = inst.pairs();
    const RequiredPair& pair = pairs[ordering.pair_at(rank)];
    const auto& reach = inst.reach();

    std::vector<Vertex> members;
    auto add = [&](Vertex v) {
        if (reach.reachable(v, pair.b) &&
            std::find(members.begin(), members.end(), v) == members.end())
            members.push_back(v);
    };
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (static_cast<int>(j) == ordering.pair_at(rank)) continue;
        if (!overlaps(pair, pairs[j], reach)) continue;
        add(pairs[j].a);
        add(pairs[j].b);
    }
    if (std::find(members.begin(), members.end(), pair.a) == members.end())
        members.push_back(pair.a);

    const auto& pos = inst.topo().position;
    std::sort(members.begin(), members.end(), [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
    return members;
}

}  // namespace pcrp
