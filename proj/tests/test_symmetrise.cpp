#include "cherrylab/symmetrise.hpp"

#include <stdexcept>

#include "cherrylab/colouring.hpp"
#include "cherrylab/extremal.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cherrylab;

namespace {

void check_trace_invariants(const ColouredGraph& g, const SymmetriseResult& res) {
    std::int64_t prev = res.trace.cherries_before;
    for (const auto& s : res.trace.steps) {
        std::int64_t delta = s.cherries_after - prev;
        CHECK(delta >= 0);
        // step lower bounds: picked keeps its pattern only when winning k-fold
        if (s.cloned_to == s.picked) {
            CHECK(s.gain_picked == delta);
            CHECK(4 * delta >= static_cast<std::int64_t>(s.k) * (s.k + 1) * s.in_nbhd_symdiff);
        } else {
            CHECK(s.gain_first == delta);
            CHECK(4 * delta >= static_cast<std::int64_t>(s.k + 1) * s.in_nbhd_symdiff);
        }
        prev = s.cherries_after;
    }
    CHECK(cherry_count(res.graph) == prev);
    CHECK(prev >= res.trace.cherries_before);
    CHECK(is_full_blue_clone_clique(res.graph, res.block));
    (void)g;
}

}  // namespace

TEST_CASE("is_full_blue_clone_clique") {
    CHECK(is_full_blue_clone_clique(extremal_colouring(4), {0, 1, 2}));
    CHECK_FALSE(is_full_blue_clone_clique(ColouredGraph::all_blue(3), {0, 1}));
    auto g = ColouredGraph::all_blue(3);
    g.set_red(2, 0);
    g.set_red(2, 1);
    CHECK(is_full_blue_clone_clique(g, {0, 1}));
    CHECK_THROWS_AS(is_full_blue_clone_clique(g, {}), std::invalid_argument);
}

TEST_CASE("clone_graph") {
    SplitMix64 rng(9);
    auto g = testutil::random_colouring(6, rng);
    auto c = clone_graph(g, {1, 4}, 1);
    CHECK(c.is_blue(1, 4));
    for (int t = 0; t < 6; ++t) {
        if (t == 1 || t == 4) continue;
        CHECK(c.at(4, t) == g.at(1, t));
    }
    CHECK(clone_graph(c, {1, 4}, 1) == c);  // idempotent
    CHECK(clone_graph(ColouredGraph::all_blue(4), {0, 1, 2, 3}, 2) ==
          ColouredGraph::all_blue(4));
    CHECK_THROWS_AS(clone_graph(g, {1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(clone_graph(g, {1, 4}, 2), std::invalid_argument);
}

TEST_CASE("symmetrise_from absorbs an all-blue graph whole") {
    auto res = symmetrise_from(ColouredGraph::all_blue(5), 0);
    CHECK(res.block == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(res.trace.cherries_before == 0);
    CHECK(cherry_count(res.graph) == 0);
}

TEST_CASE("symmetrise_from keeps extremal blocks intact") {
    auto g = extremal_colouring(7);  // blocks 5,2
    auto res = symmetrise_from(g, 0);
    CHECK(res.block == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(res.graph == g);
    for (const auto& s : res.trace.steps) {
        CHECK(s.gain_picked == 0);
        CHECK(s.gain_first == 0);
        CHECK(s.in_nbhd_symdiff == 0);
    }
}

TEST_CASE("incremental and reference implementations agree exactly") {
    SplitMix64 rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(13));
        auto g = testutil::random_colouring(n, rng);
        int x = static_cast<int>(rng.below(n));
        Selector sel = (trial % 3 == 0) ? Selector::seeded_random(trial)
                                        : Selector::first_index();
        auto a = symmetrise_from(g, x, sel);
        auto b = reference::symmetrise_from(g, x, sel);
        CHECK(a.graph == b.graph);
        CHECK(a.block == b.block);
        REQUIRE(a.trace.steps.size() == b.trace.steps.size());
        for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
            const auto &sa = a.trace.steps[i], &sb = b.trace.steps[i];
            CHECK(sa.picked == sb.picked);
            CHECK(sa.gain_picked == sb.gain_picked);
            CHECK(sa.gain_first == sb.gain_first);
            CHECK(sa.cloned_to == sb.cloned_to);
            CHECK(sa.cherries_after == sb.cherries_after);
            CHECK(sa.in_nbhd_symdiff == sb.in_nbhd_symdiff);
        }
        check_trace_invariants(g, a);
    }
}

TEST_CASE("prefer-set selector stays inside the target while possible") {
    auto g = ColouredGraph::all_blue(6);
    auto res = symmetrise_from(g, 0, Selector::prefer_set({5, 4, 3}));
    REQUIRE(res.trace.steps.size() == 5);
    CHECK(res.trace.steps[0].picked == 5);
    CHECK(res.trace.steps[1].picked == 4);
    CHECK(res.trace.steps[2].picked == 3);
}

TEST_CASE("full_symmetrise recovers extremal blocks") {
    for (int n : {4, 7, 12}) {
        auto g = extremal_colouring(n);
        auto res = full_symmetrise(g);
        CHECK(res.graph == g);
        auto prof = optimal_profile(n);
        REQUIRE(res.partition.blocks.size() == prof.parts.size());
        for (std::size_t i = 0; i < prof.parts.size(); ++i)
            CHECK(static_cast<int>(res.partition.blocks[i].size()) == prof.parts[i]);
    }
    auto blue = full_symmetrise(ColouredGraph::all_blue(5));
    CHECK(blue.partition.blocks.size() == 1);
}

TEST_CASE("full_symmetrise then reorient hits the block formula") {
    auto ft = f_table(30);
    SplitMix64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(19));
        auto g = testutil::random_colouring(n, rng);
        std::int64_t c0 = cherry_count(g);
        auto res = full_symmetrise(g);
        std::int64_t c1 = cherry_count(res.graph);
        CHECK(c1 >= c0);
        for (const auto& q : res.partition.blocks)
            CHECK(is_full_blue_clone_clique(res.graph, q));
        auto re = reorient_to_larger(res.graph, res.partition);
        std::int64_t c2 = cherry_count(re);
        CHECK(c2 >= c1);
        std::int64_t formula = 0;
        const auto& bs = res.partition.blocks;
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j)
                formula += static_cast<std::int64_t>(bs[i].size()) *
                           (static_cast<std::int64_t>(bs[i].size()) - 1) / 2 *
                           static_cast<std::int64_t>(bs[j].size());
        CHECK(c2 == formula);
        CHECK(c2 <= ft.f[n]);
    }
}

TEST_CASE("reorient examples") {
    auto g31 = extremal_colouring(4);
    ClonePartition p{{{0, 1, 2}, {3}}};
    CHECK(reorient_to_larger(g31, p) == g31);
    CHECK(cherry_count(reorient_to_larger(g31, p)) == 3);

    // two blocks of two: formula gives C(2,2 parts)... 1 * 2 = 2
    auto g = ColouredGraph::all_blue(4);
    for (int u : {0, 1})
        for (int v : {2, 3}) g.set_red(u, v);
    ClonePartition p22{{{0, 1}, {2, 3}}};
    auto re = reorient_to_larger(g, p22);
    CHECK(cherry_count(re) == 2);

    ClonePartition single{{{0, 1, 2, 3}}};
    CHECK(cherry_count(reorient_to_larger(ColouredGraph::all_blue(4), single)) == 0);

    ClonePartition bad{{{0, 1}, {2}}};
    CHECK_THROWS_AS(reorient_to_larger(g31, bad), std::invalid_argument);
}
