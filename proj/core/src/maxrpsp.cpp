#include "pcrp/maxrpsp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace pcrp {

MaxRpspContext prepare_maxrpsp(const PcrpInstance& inst) {
    std::vector<RequiredPair> keep;
    int dropped = 0;
    for (const auto& p : inst.pairs()) {
        if (coverable(p, inst.reach()))
            keep.push_back(p);
        else
            ++dropped;
    }

    MaxRpspContext ctx{
        PcrpInstance::make_with_caches(inst.dag(), std::move(keep), inst.reach()),
        {}, {}, {}, 0, dropped};
    ctx.ordering = order_pairs(ctx.work);

    const int m = ctx.ordering.pair_count();
    ctx.op_sets.resize(m + 1);
    ctx.nested_ranks.resize(m + 1);
    for (int r = 1; r <= m; ++r) {
        ctx.op_sets[r] = op_set(r, ctx.work, ctx.ordering);
        ctx.nested_ranks[r].push_back(r);
        for (int h = 1; h <= m; ++h) {
            if (h == r) continue;
            if (nested_in(ctx.pair_at_rank(h), ctx.pair_at_rank(r), ctx.work.reach()))
                ctx.nested_ranks[r].push_back(h);
        }
    }
    ctx.max_overlap_degree = max_overlap_degree(ctx.work);
    return ctx;
}

namespace {

bool set_contains(std::span<const Vertex> set, Vertex v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace

bool agreement(const MaxRpspContext& ctx, int rank, std::span<const Vertex> S, int rank_other,
               std::span<const Vertex> S_other) {
    for (Vertex v : ctx.op_sets[rank]) {
        if (!set_contains(ctx.op_sets[rank_other], v)) continue;
        if (set_contains(S, v) != set_contains(S_other, v)) return false;
    }
    return true;
}

std::vector<int> ov(const MaxRpspContext& ctx, int rank, std::span<const Vertex> S,
                    std::span<const Vertex> S_prev) {
    const Vertex end = ctx.end_of_rank(rank);
    const bool end_is_new = !set_contains(S_prev, end);
    std::vector<int> counted;
    for (int h : ctx.nested_ranks[rank]) {
        const RequiredPair& pair = ctx.pair_at_rank(h);
        if (!set_contains(S, pair.a)) continue;
        bool second_new = (set_contains(S, pair.b) && !set_contains(S_prev, pair.b)) ||
                          (pair.b == end && end_is_new);
        if (second_new) counted.push_back(h);
    }
    return counted;
}

bool feasible_extension(const MaxRpspContext& ctx, int rank_from, int rank_to,
                        std::span<const Vertex> S, std::span<const Vertex> S_prev) {
    const auto& reach = ctx.work.reach();
    const Vertex from = ctx.end_of_rank(rank_from);
    const Vertex to = ctx.end_of_rank(rank_to);
    if (!reach.reachable(from, to)) return false;

    std::vector<Vertex> diff;
    for (Vertex v : S)
        if (!set_contains(S_prev, v)) diff.push_back(v);
    for (Vertex v : diff)
        if (!reach.reachable(from, v) || !reach.reachable(v, to)) return false;
    for (std::size_t i = 0; i < diff.size(); ++i)
        for (std::size_t j = i + 1; j < diff.size(); ++j)
            if (!reach.comparable(diff[i], diff[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The dynamic program. Subsets are bitmasks over the vertex universe.

namespace {

using Word = std::uint64_t;

struct MaskOps {
    std::size_t words;

    std::vector<Word> empty() const { return std::vector<Word>(words, 0); }
    static bool get(const std::vector<Word>& m, Vertex v) {
        return (m[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }
    static void set(std::vector<Word>& m, Vertex v) {
        m[static_cast<std::size_t>(v) / 64] |= Word{1} << (v % 64);
    }
    bool is_subset(const std::vector<Word>& a, const std::vector<Word>& b) const {
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }
    bool disjoint(const std::vector<Word>& a, const std::vector<Word>& b) const {
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & b[w]) return false;
        return true;
    }
};

struct MaskHash {
    std::size_t operator()(const std::vector<Word>& m) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Word w : m) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

struct State {
    std::vector<Word> mask;
    int value = 0;
    int back_rank = -1;
    int back_index = -1;
};

struct RankStates {
    std::vector<State> states;
    std::unordered_map<std::vector<Word>, int, MaskHash> index;
};

// (value, source rank, source mask) preference: larger value, then smaller
// rank, then lexicographically smaller mask.
bool better_source(int value_a, int rank_a, const std::vector<Word>& mask_a, int value_b,
                   int rank_b, const std::vector<Word>& mask_b) {
    if (value_a != value_b) return value_a > value_b;
    if (rank_a != rank_b) return rank_a < rank_b;
    return mask_a < mask_b;
}

std::uint64_t saturating_shift(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits);
}

}  // namespace

MaxRpspResult max_rpsp_dp(const PcrpInstance& inst) {
    MaxRpspContext ctx = prepare_maxrpsp(inst);
    const int m = ctx.ordering.pair_count();
    const int n = ctx.work.dag().vertex_count();
    const auto& reach = ctx.work.reach();
    const auto& pos = ctx.work.topo().position;
    MaskOps ops{static_cast<std::size_t>(n + 63) / 64};

    std::uint64_t state_bound = 0;
    for (int r = 1; r <= m; ++r) {
        std::uint64_t add = saturating_shift(ctx.op_sets[r].size());
        state_bound = (state_bound > ~std::uint64_t{0} - add) ? ~std::uint64_t{0}
                                                              : state_bound + add;
    }
    state_bound = std::max<std::uint64_t>(state_bound, 1);

    std::vector<std::vector<Word>> op_masks(m + 1, ops.empty());
    for (int r = 1; r <= m; ++r)
        for (Vertex v : ctx.op_sets[r]) MaskOps::set(op_masks[r], v);

    std::vector<RankStates> table(m + 1);
    table[0].states.push_back(State{ops.empty(), 0, -1, -1});
    table[0].index.emplace(table[0].states[0].mask, 0);

    // best state per rank, by the source-preference order
    std::vector<int> best_of_rank(m + 1, -1);
    best_of_rank[0] = 0;

    auto ov_count = [&](int rank_i, const std::vector<Word>& S, const std::vector<Word>& S_prev,
                        Vertex end_i) {
        const bool end_new = !MaskOps::get(S_prev, end_i);
        int count = 0;
        for (int h : ctx.nested_ranks[rank_i]) {
            const RequiredPair& pair = ctx.pair_at_rank(h);
            if (!MaskOps::get(S, pair.a)) continue;
            if ((MaskOps::get(S, pair.b) && !MaskOps::get(S_prev, pair.b)) ||
                (pair.b == end_i && end_new))
                ++count;
        }
        return count;
    };

    auto update_target = [&](int rank_i, const std::vector<Word>& S, int value, int back_rank,
                             int back_index) {
        auto& slot = table[rank_i];
        auto it = slot.index.find(S);
        const auto& back_mask = table[back_rank].states[back_index].mask;
        if (it == slot.index.end()) {
            slot.states.push_back(State{S, value, back_rank, back_index});
            slot.index.emplace(S, static_cast<int>(slot.states.size()) - 1);
            return;
        }
        State& cur = slot.states[it->second];
        const auto& cur_back = table[cur.back_rank].states[cur.back_index].mask;
        if (better_source(value, back_rank, back_mask, cur.value, cur.back_rank, cur_back)) {
            cur.value = value;
            cur.back_rank = back_rank;
            cur.back_index = back_index;
        }
    };

    // chain-subset enumeration over candidates sorted by topological rank;
    // fn receives the mask of the chosen chain
    auto for_each_chain = [&](const std::vector<Vertex>& candidates, Vertex forced_last,
                              auto&& fn) {
        std::vector<Word> mask = ops.empty();
        std::vector<Vertex> taken;
        auto rec = [&](auto&& self, std::size_t at) -> void {
            if (at == candidates.size()) {
                if (forced_last != -1 && (taken.empty() || taken.back() != forced_last)) return;
                fn(mask, taken);
                return;
            }
            Vertex v = candidates[at];
            self(self, at + 1);  // skip v
            if (taken.empty() || reach.reachable(taken.back(), v)) {
                taken.push_back(v);
                MaskOps::set(mask, v);
                self(self, at + 1);
                taken.pop_back();
                mask[static_cast<std::size_t>(v) / 64] &= ~(Word{1} << (v % 64));
            }
        };
        rec(rec, 0);
    };

    for (int i = 1; i <= m; ++i) {
        const Vertex end_i = ctx.end_of_rank(i);
        const bool end_in_op = MaskOps::get(op_masks[i], end_i);

        // pass 1: sources with OP sets disjoint from OP(i); their best state
        // serves every chain subset of OP(i)
        std::vector<int> disjoint_sources;
        for (int j = 0; j < i; ++j) {
            if (best_of_rank[j] < 0) continue;
            if (j > 0 && nested_in(ctx.pair_at_rank(j), ctx.pair_at_rank(i), reach)) continue;
            if (!reach.reachable(ctx.end_of_rank(j), end_i)) continue;
            if (!ops.disjoint(op_masks[j], op_masks[i])) continue;
            if (MaskOps::get(op_masks[j], end_i)) continue;
            disjoint_sources.push_back(j);
        }
        if (!disjoint_sources.empty()) {
            for_each_chain(ctx.op_sets[i], end_in_op ? end_i : Vertex{-1},
                           [&](const std::vector<Word>& S, const std::vector<Vertex>& taken) {
                               Vertex first = taken.empty() ? end_i : taken.front();
                               int chosen = -1;
                               for (int j : disjoint_sources) {
                                   if (!reach.reachable(ctx.end_of_rank(j), first)) continue;
                                   if (chosen == -1) {
                                       chosen = j;
                                       continue;
                                   }
                                   const State& a = table[j].states[best_of_rank[j]];
                                   const State& b = table[chosen].states[best_of_rank[chosen]];
                                   if (better_source(a.value, j, a.mask, b.value, chosen, b.mask))
                                       chosen = j;
                               }
                               if (chosen == -1) return;
                               const State& src = table[chosen].states[best_of_rank[chosen]];
                               int value = src.value + ov_count(i, S, src.mask, end_i);
                               update_target(i, S, value, chosen, best_of_rank[chosen]);
                           });
        }

        // pass 2: sources whose OP set meets OP(i); agreement pins the shared
        // part per state, free bits range over chains of OP(i) \ OP(j)
        for (int j = 0; j < i; ++j) {
            if (table[j].states.empty()) continue;
            if (j > 0 && nested_in(ctx.pair_at_rank(j), ctx.pair_at_rank(i), reach)) continue;
            const Vertex end_j = ctx.end_of_rank(j);
            if (!reach.reachable(end_j, end_i)) continue;
            if (ops.disjoint(op_masks[j], op_masks[i]) && !MaskOps::get(op_masks[j], end_i))
                continue;  // handled by pass 1

            std::vector<Vertex> free_candidates;
            for (Vertex v : ctx.op_sets[i])
                if (!MaskOps::get(op_masks[j], v) && reach.reachable(end_j, v))
                    free_candidates.push_back(v);
            const bool end_free = end_in_op && !MaskOps::get(op_masks[j], end_i);

            for (std::size_t si = 0; si < table[j].states.size(); ++si) {
                const State& src = table[j].states[si];  // stable: updates touch rank i only
                if (end_in_op && !end_free && !MaskOps::get(src.mask, end_i))
                    continue;  // endpoint must be carried in from the shared part
                std::vector<Word> forced = ops.empty();
                for (std::size_t w = 0; w < ops.words; ++w)
                    forced[w] = src.mask[w] & op_masks[i][w];

                for_each_chain(free_candidates, end_free ? end_i : Vertex{-1},
                               [&](const std::vector<Word>& D, const std::vector<Vertex>&) {
                                   std::vector<Word> S = forced;
                                   for (std::size_t w = 0; w < ops.words; ++w) S[w] |= D[w];
                                   int value = src.value + ov_count(i, S, src.mask, end_i);
                                   update_target(i, S, value, j, static_cast<int>(si));
                               });
            }
        }

        for (std::size_t k = 0; k < table[i].states.size(); ++k) {
            if (best_of_rank[i] < 0) {
                best_of_rank[i] = static_cast<int>(k);
                continue;
            }
            const State& a = table[i].states[k];
            const State& b = table[i].states[best_of_rank[i]];
            if (better_source(a.value, i, a.mask, b.value, i, b.mask))
                best_of_rank[i] = static_cast<int>(k);
        }
    }

    // answer: best value over all states
    int best_rank = 0, best_index = 0;
    for (int r = 0; r <= m; ++r) {
        if (best_of_rank[r] < 0) continue;
        const State& cand = table[r].states[best_of_rank[r]];
        const State& cur = table[best_rank].states[best_index];
        if (cand.value > cur.value) {
            best_rank = r;
            best_index = best_of_rank[r];
        }
    }

    std::size_t state_count = 0;
    for (int r = 1; r <= m; ++r) state_count += table[r].states.size();
    if (state_count > state_bound)
        throw std::logic_error("materialized DP states exceed the OP-set bound");

    // witness: splice the newly covered chain of every hop, then stitch
    std::vector<Vertex> anchors;
    {
        std::vector<std::pair<int, int>> hops;  // (rank, state index), source first
        for (int r = best_rank, idx = best_index; r != -1;) {
            hops.emplace_back(r, idx);
            const State& s = table[r].states[idx];
            int pr = s.back_rank;
            idx = s.back_index;
            r = pr;
        }
        std::reverse(hops.begin(), hops.end());
        for (std::size_t h = 1; h < hops.size(); ++h) {
            const State& cur = table[hops[h].first].states[hops[h].second];
            const State& prev = table[hops[h - 1].first].states[hops[h - 1].second];
            std::vector<Vertex> fresh;
            for (Vertex v = 0; v < n; ++v)
                if (MaskOps::get(cur.mask, v) && !MaskOps::get(prev.mask, v))
                    fresh.push_back(v);
            std::sort(fresh.begin(), fresh.end(),
                      [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
            anchors.insert(anchors.end(), fresh.begin(), fresh.end());
            Vertex end = ctx.end_of_rank(hops[h].first);
            if (anchors.empty() || anchors.back() != end) anchors.push_back(end);
        }
    }

    MaxRpspResult result;
    result.witness = stitch_chain(ctx.work.dag(), reach, anchors);
    result.optimum = table[best_rank].states[best_index].value;
    result.state_count = state_count;
    result.state_bound = state_bound;
    result.max_overlap_degree = ctx.max_overlap_degree;
    result.dropped_uncoverable = ctx.dropped_uncoverable;

    for (const auto& pair : ctx.work.pairs())
        if (result.witness.contains(pair.a) && result.witness.contains(pair.b))
            result.covered.push_back(pair);
    if (static_cast<int>(result.covered.size()) != result.optimum)
        throw std::logic_error("witness covers " + std::to_string(result.covered.size()) +
                               " pairs but the table claims " + std::to_string(result.optimum));
    return result;
}

int max_rpsp_bruteforce(const PcrpInstance& inst, std::uint64_t budget) {
    int best = 0;
    std::vector<char> on_path(inst.dag().vertex_count(), 0);
    for_each_st_path(inst.dag(), budget, [&](const StPath& path) {
        std::fill(on_path.begin(), on_path.end(), 0);
        for (Vertex v : path.vertices) on_path[v] = 1;
        int covered = 0;
        for (const auto& p : inst.pairs())
            if (on_path[p.a] && on_path[p.b]) ++covered;
        best = std::max(best, covered);
        return true;
    });
    return best;
}

}  // namespace pcrp
