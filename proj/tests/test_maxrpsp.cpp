#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pcrp/generator.hpp"
#include "pcrp/maxrpsp.hpp"
#include "pcrp/reductions.hpp"
#include "random_suite.hpp"

using namespace pcrp;

namespace {

PcrpInstance chain_instance(int n, std::vector<RequiredPair> pairs) {
    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
    return PcrpInstance::make(Dag(n, std::move(arcs), 0, n - 1), std::move(pairs));
}

int rank_of_pair(const MaxRpspContext& ctx, RequiredPair p) {
    for (int r = 1; r <= ctx.ordering.pair_count(); ++r)
        if (ctx.pair_at_rank(r) == p) return r;
    throw std::logic_error("pair not found");
}

}  // namespace

TEST_SUITE("maxrpsp") {

TEST_CASE("subsets over disjoint op sets always agree") {
    auto inst = chain_instance(7, {{1, 2}, {4, 5}});
    auto ctx = prepare_maxrpsp(inst);
    CHECK(agreement(ctx, 1, std::vector<Vertex>{1}, 2, std::vector<Vertex>{4}));
}

TEST_CASE("equal subsets of the shared op part agree") {
    auto inst = chain_instance(6, {{1, 3}, {2, 4}});
    auto ctx = prepare_maxrpsp(inst);
    CHECK(agreement(ctx, 1, std::vector<Vertex>{1, 2}, 2, std::vector<Vertex>{1, 2}));
}

TEST_CASE("subsets differing inside the shared op part disagree") {
    auto inst = chain_instance(6, {{1, 3}, {2, 4}});
    auto ctx = prepare_maxrpsp(inst);
    CHECK_FALSE(agreement(ctx, 1, std::vector<Vertex>{1, 2}, 2, std::vector<Vertex>{1}));
}

TEST_CASE("no pairs are newly accounted when nothing new is covered") {
    auto inst = chain_instance(6, {{1, 3}, {2, 4}});
    auto ctx = prepare_maxrpsp(inst);
    int r = rank_of_pair(ctx, {2, 4});
    CHECK(ov(ctx, r, std::vector<Vertex>{1}, std::vector<Vertex>{1}).empty());
}

TEST_CASE("an isolated pair is accounted through its own endpoint") {
    auto inst = chain_instance(4, {{1, 2}});
    auto ctx = prepare_maxrpsp(inst);
    CHECK(ov(ctx, 1, std::vector<Vertex>{1}, {}) == std::vector<int>{1});
}

TEST_CASE("a nested pair and its outer pair are both accounted at the outer end") {
    auto inst = chain_instance(6, {{1, 4}, {2, 3}});
    auto ctx = prepare_maxrpsp(inst);
    int outer = rank_of_pair(ctx, {1, 4});
    auto got = ov(ctx, outer, std::vector<Vertex>{1, 2, 3}, {});
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<int>{rank_of_pair(ctx, {2, 3}), outer});
}

TEST_CASE("an extension with nothing new to cover only needs reachability") {
    auto inst = chain_instance(6, {{1, 3}, {2, 4}});
    auto ctx = prepare_maxrpsp(inst);
    CHECK(feasible_extension(ctx, 1, 2, std::vector<Vertex>{1}, std::vector<Vertex>{1}));
}

TEST_CASE("an extension cannot cover vertices behind its start") {
    // two parallel branches; the second pair's vertex is off the first branch
    auto inst = PcrpInstance::make(Dag(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, 0, 4),
                                   {{1, 3}, {2, 4}});
    auto ctx = prepare_maxrpsp(inst);
    int r1 = rank_of_pair(ctx, {1, 3});
    int r2 = rank_of_pair(ctx, {2, 4});
    CHECK_FALSE(feasible_extension(ctx, r1, r2, std::vector<Vertex>{2}, {}));
}

TEST_CASE("extension feasibility matches the path enumeration oracle") {
    std::mt19937_64 rng(41);
    int exercised = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto inst = random_instance({{9, 4, 0.35}, 5, {}}, seed);
        auto ctx = prepare_maxrpsp(inst);
        const int m = ctx.ordering.pair_count();
        if (m < 2) continue;
        auto paths = enumerate_st_paths(inst.dag(), 1 << 20);
        for (int round = 0; round < 8; ++round) {
            int rj = 1 + static_cast<int>(rng() % m);
            int ri = 1 + static_cast<int>(rng() % m);
            if (rj >= ri) continue;
            // random subsets of the op sets
            std::vector<Vertex> S, Sp;
            for (Vertex v : ctx.op_sets[ri])
                if (rng() % 2) S.push_back(v);
            for (Vertex v : ctx.op_sets[rj])
                if (rng() % 2) Sp.push_back(v);
            std::vector<Vertex> diff;
            for (Vertex v : S)
                if (std::find(Sp.begin(), Sp.end(), v) == Sp.end()) diff.push_back(v);
            Vertex from = ctx.end_of_rank(rj), to = ctx.end_of_rank(ri);
            bool witnessed = std::any_of(paths.begin(), paths.end(), [&](const StPath& p) {
                auto at = [&](Vertex v) {
                    auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
                    return it == p.vertices.end()
                               ? -1
                               : static_cast<int>(it - p.vertices.begin());
                };
                int f = at(from), t = at(to);
                if (f < 0 || t < 0 || f > t) return false;
                return std::all_of(diff.begin(), diff.end(), [&](Vertex v) {
                    int x = at(v);
                    return x >= f && x <= t;
                });
            });
            CHECK(feasible_extension(ctx, rj, ri, S, Sp) == witnessed);
            ++exercised;
        }
    }
    CHECK(exercised > 200);
}

TEST_CASE("a chain path collects every pair along it") {
    auto res = max_rpsp_dp(chain_instance(6, {{1, 3}, {2, 4}, {1, 4}}));
    CHECK(res.optimum == 3);
    CHECK(res.covered.size() == 3);
}

TEST_CASE("parallel branches admit only one pair per path") {
    auto inst = PcrpInstance::make(
        Dag(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, 0, 4),
        {{0, 1}, {0, 2}, {0, 3}});
    auto res = max_rpsp_dp(inst);
    CHECK(res.optimum == 1);
}

TEST_CASE("the triangle clique instance yields three covered pairs") {
    auto g = UndirectedGraph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    auto red = gen_krpsp(g, 3);
    auto res = max_rpsp_dp(red.instance);
    CHECK(res.optimum == 3);
}

TEST_CASE("uncoverable pairs are dropped with a note, not counted") {
    auto inst = PcrpInstance::make(Dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3),
                                   {{1, 2}, {0, 3}});
    auto res = max_rpsp_dp(inst);
    CHECK(res.dropped_uncoverable == 1);
    CHECK(res.optimum == 1);
}

TEST_CASE("dp equals exhaustive search on a large random suite") {
    int run = 0;
    for (std::uint64_t index = 0; run < 600; ++index) {
        auto inst = suite::mixed_instance(index);
        if (count_st_paths(inst.dag(), 100001) > 100000) continue;
        ++run;
        auto res = max_rpsp_dp(inst);
        int brute = max_rpsp_bruteforce(inst, 100000);
        INFO("index ", index, " instance:\n", write_instance(inst));
        REQUIRE(res.optimum == brute);
    }
}

TEST_CASE("adding a pair never decreases the optimum") {
    std::mt19937_64 rng(59);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto inst = random_instance({{10, 4, 0.35}, 5, {}}, seed);
        auto base = max_rpsp_dp(inst);
        Vertex a = static_cast<Vertex>(rng() % 10);
        Vertex b = static_cast<Vertex>(rng() % 10);
        if (a == b) continue;
        auto pairs = inst.pairs();
        if (std::any_of(pairs.begin(), pairs.end(), [&](const RequiredPair& p) {
                return (p.a == a && p.b == b) || (p.a == b && p.b == a);
            }))
            continue;
        pairs.push_back({a, b});
        auto extended =
            PcrpInstance::make_with_caches(inst.dag(), std::move(pairs), inst.reach());
        CHECK(max_rpsp_dp(extended).optimum >= base.optimum);
    }
}

TEST_CASE("witnesses are valid paths covering exactly the claimed pairs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto inst = random_instance({{11, 5, 0.3}, 6, {}}, seed);
        auto res = max_rpsp_dp(inst);
        CHECK(is_valid_st_path(inst.dag(), res.witness));
        int covered = 0;
        for (const auto& p : inst.pairs())
            if (res.witness.contains(p.a) && res.witness.contains(p.b)) ++covered;
        CHECK(covered == res.optimum);
        CHECK(res.state_count <= res.state_bound);
    }
}

TEST_CASE("serial blocks keep the per-pair state count flat") {
    const int p = 3;
    double first_ratio = 0.0;
    for (int n : {50, 100, 200}) {
        auto inst = serial_blocks_instance(p, n);
        CHECK(max_overlap_degree(inst) == p);
        auto res = max_rpsp_dp(inst);
        CHECK(res.optimum == static_cast<int>(inst.pairs().size()));
        double ratio = static_cast<double>(res.state_count) /
                       static_cast<double>(inst.pairs().size());
        if (first_ratio == 0.0)
            first_ratio = ratio;
        else
            CHECK(ratio <= first_ratio * 1.3);
    }
}

TEST_CASE("exhaustive search respects its path budget") {
    // 2^6 = 64 paths
    std::vector<Arc> arcs;
    int at = 0;
    for (int k = 0; k < 6; ++k) {
        arcs.emplace_back(at, at + 1);
        arcs.emplace_back(at, at + 2);
        arcs.emplace_back(at + 1, at + 3);
        arcs.emplace_back(at + 2, at + 3);
        at += 3;
    }
    auto inst = PcrpInstance::make(Dag(19, std::move(arcs), 0, 18), {});
    CHECK_THROWS_AS(max_rpsp_bruteforce(inst, 63), Error);
    CHECK(max_rpsp_bruteforce(inst, 64) == 0);
}

}  // TEST_SUITE
