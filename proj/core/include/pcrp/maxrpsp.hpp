#ifndef PCRP_MAXRPSP_HPP
#define PCRP_MAXRPSP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pcrp/instance.hpp"
#include "pcrp/overlap.hpp"

namespace pcrp {

/// Prepared view over an instance for the single-path solver: uncoverable
/// pairs dropped, pairs ordered, OP sets and nesting lists precomputed.
struct MaxRpspContext {
    PcrpInstance work;                         // coverable pairs only
    PairOrdering ordering;                     // ranks over work.pairs()
    std::vector<std::vector<Vertex>> op_sets;  // by rank, topologically sorted
    std::vector<std::vector<int>> nested_ranks;  // by rank: h==rank or pair_h nested in pair_rank
    int max_overlap_degree = 0;
    int dropped_uncoverable = 0;

    const RequiredPair& pair_at_rank(int rank) const {
        return work.pairs()[ordering.pair_at(rank)];
    }
    /// Second endpoint of the pair at `rank`; the fictitious rank 0 ends at
    /// the source.
    Vertex end_of_rank(int rank) const {
        return rank == 0 ? work.dag().source() : pair_at_rank(rank).b;
    }
};

MaxRpspContext prepare_maxrpsp(const PcrpInstance& inst);

/// S and S_other agree when they contain the same subset of
/// OP(rank) ∩ OP(rank_other).
bool agreement(const MaxRpspContext& ctx, int rank, std::span<const Vertex> S, int rank_other,
               std::span<const Vertex> S_other);

/// Pairs (as ranks) newly accounted for when a path reaches the end of pair
/// `rank` covering S, extending a path that covered S_prev at `rank_prev`:
/// pairs nested in `rank` (itself included) whose first endpoint is in S and
/// whose second endpoint is in (S \ S_prev), the pair's own endpoint counting
/// as newly covered unless it already appears in S_prev.
std::vector<int> ov(const MaxRpspContext& ctx, int rank, std::span<const Vertex> S,
                    std::span<const Vertex> S_prev);

/// True iff some path from the end of `rank_from` to the end of `rank_to`
/// covers every vertex of S \ S_prev.
bool feasible_extension(const MaxRpspContext& ctx, int rank_from, int rank_to,
                        std::span<const Vertex> S, std::span<const Vertex> S_prev);

struct MaxRpspResult {
    int optimum = 0;
    StPath witness;
    std::vector<RequiredPair> covered;  // pairs covered by the witness
    std::size_t state_count = 0;        // materialized DP states
    std::uint64_t state_bound = 0;      // Σ 2^|OP(i)|, saturated
    int max_overlap_degree = 0;
    int dropped_uncoverable = 0;
};

/// Dynamic program over (pair rank, covered OP-subset) states, parameterized
/// by the maximum overlap degree. Exact; witness reconstructed through
/// back-pointers and verified before returning.
MaxRpspResult max_rpsp_dp(const PcrpInstance& inst);

/// Exhaustive maximum over all st-paths. Throws PathBudgetExceeded when the
/// instance has more than `budget` paths.
int max_rpsp_bruteforce(const PcrpInstance& inst, std::uint64_t budget);

}  // namespace pcrp

#endif
