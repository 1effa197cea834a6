#include <algorithm>
#include <set>

#include "cherrylab/hypergraph.hpp"
#include "cherrylab/oracle.hpp"
#include "cherrylab/pairwalk.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cherrylab;

namespace {
const Hypergraph3 kEdge = make_hypergraph(3, {{0, 1, 2}});
}

TEST_CASE("pair digraph of a single edge is two directed triangles") {
    auto pd = build_pair_digraph(kEdge);
    CHECK(pd.nodes.size() == 6);
    auto arc = [&](int a, int b, int c, int d) {
        const auto& s = pd.succ[pd.id(a, b)];
        return std::find(s.begin(), s.end(), pd.id(c, d)) != s.end();
    };
    CHECK(arc(0, 1, 1, 2));
    CHECK(arc(1, 2, 2, 0));
    CHECK(arc(2, 0, 0, 1));
    CHECK(arc(1, 0, 0, 2));
    CHECK(arc(0, 2, 2, 1));
    CHECK(arc(2, 1, 1, 0));
    for (const auto& s : pd.succ) CHECK(s.size() == 1);
}

TEST_CASE("pair digraph edge cases") {
    CHECK(build_pair_digraph(make_hypergraph(4, {})).nodes.empty());
    auto pd = build_pair_digraph(tight_cycle(5));
    CHECK(pd.nodes.size() == 20);
    // consecutive pairs sit in two edges, skip pairs in one; 6 arcs per edge
    std::size_t arcs = 0;
    for (const auto& s : pd.succ) {
        CHECK((s.size() == 1 || s.size() == 2));
        arcs += s.size();
    }
    CHECK(arcs == 30);
}

TEST_CASE("is_pseudocycle") {
    CHECK(is_pseudocycle(tight_cycle(5), {0, 1, 2, 3, 4}));
    CHECK(is_pseudocycle(kEdge, {0, 1, 2}));
    CHECK_FALSE(is_pseudocycle(tight_cycle(5), {0, 1, 2, 3}));
    CHECK_FALSE(is_pseudocycle(kEdge, {0, 1, 1}));
    CHECK_THROWS_AS(is_pseudocycle(kEdge, {0, 1}), std::invalid_argument);
}

TEST_CASE("tilde") {
    auto k4 = complete3(4);
    auto t = tilde(k4, Pseudopath{{0, 1, 2, 3}});
    CHECK(t.seq == std::vector<int>{2, 3, 1, 2, 0, 1});
    CHECK(is_pseudopath(k4, t.seq));
    auto t2 = tilde(kEdge, Pseudopath{{0, 1, 2}});
    CHECK(t2.seq == std::vector<int>{1, 2, 0, 1});
    CHECK_THROWS_AS(tilde(kEdge, Pseudopath{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(tilde(kEdge, Pseudopath{{0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("tilde contract on random pseudopaths") {
    SplitMix64 rng(31337);
    int sampled = 0;
    while (sampled < 50) {
        int n = 4 + static_cast<int>(rng.below(4));
        auto h = testutil::random_hypergraph(n, 60, rng);
        auto pd = build_pair_digraph(h);
        if (pd.nodes.empty()) continue;
        // random walk of a few steps
        int cur = static_cast<int>(rng.below(pd.nodes.size()));
        std::vector<int> seq{pd.nodes[cur].first, pd.nodes[cur].second};
        for (int step = 0; step < 1 + static_cast<int>(rng.below(5)); ++step) {
            const auto& s = pd.succ[cur];
            if (s.empty()) break;
            cur = s[rng.below(s.size())];
            seq.push_back(pd.nodes[cur].second);
        }
        if (seq.size() < 3) continue;
        ++sampled;
        int k = static_cast<int>(seq.size());
        auto t = tilde(h, Pseudopath{seq});
        REQUIRE(is_pseudopath(h, t.seq));
        CHECK(static_cast<int>(t.seq.size()) == 2 * k - 2);
        CHECK(t.seq[0] == seq[k - 2]);
        CHECK(t.seq[1] == seq[k - 1]);
        CHECK(t.seq[2 * k - 4] == seq[0]);
        CHECK(t.seq[2 * k - 3] == seq[1]);
        // applying it twice gets back to the original endpoints
        auto tt = tilde(h, t);
        CHECK(tt.seq[0] == seq[0]);
        CHECK(tt.seq[1] == seq[1]);
    }
}

TEST_CASE("shortest_pseudopath") {
    auto p = shortest_pseudopath(kEdge, 0, 1, 2, 0);
    REQUIRE(p.has_value());
    CHECK(p->seq == std::vector<int>{0, 1, 2, 0});
    auto self = shortest_pseudopath(kEdge, 0, 1, 0, 1);
    REQUIRE(self.has_value());
    CHECK(self->seq == std::vector<int>{0, 1});
    CHECK_FALSE(shortest_pseudopath(kEdge, 0, 1, 1, 0).has_value());
    CHECK_THROWS_AS(shortest_pseudopath(kEdge, 0, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("shortest_pseudopath minimality against all-pairs distances") {
    SplitMix64 rng(271828);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        auto h = testutil::random_hypergraph(n, 45, rng);
        auto pd = build_pair_digraph(h);
        int v = static_cast<int>(pd.nodes.size());
        if (v == 0) continue;
        const int inf = 1 << 20;
        std::vector<std::vector<int>> dist(v, std::vector<int>(v, inf));
        for (int i = 0; i < v; ++i) dist[i][i] = 0;
        for (int i = 0; i < v; ++i)
            for (int j : pd.succ[i]) dist[i][j] = 1;
        for (int k = 0; k < v; ++k)
            for (int i = 0; i < v; ++i)
                for (int j = 0; j < v; ++j)
                    dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j) {
                auto [fx, fy] = pd.nodes[i];
                auto [tx, ty] = pd.nodes[j];
                auto p = shortest_pseudopath(h, fx, fy, tx, ty);
                if (dist[i][j] == inf) {
                    CHECK_FALSE(p.has_value());
                } else {
                    REQUIRE(p.has_value());
                    CHECK(static_cast<int>(p->seq.size()) == dist[i][j] + 2);
                    CHECK(is_pseudopath(h, p->seq));
                    CHECK(p->seq.front() == fx);
                    CHECK(p->seq[1] == fy);
                    CHECK(p->seq[p->seq.size() - 2] == tx);
                    CHECK(p->seq.back() == ty);
                }
            }
    }
}

TEST_CASE("detect_odd_pseudocycle examples") {
    auto c5 = detect_odd_pseudocycle(tight_cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->length() == 5);
    CHECK(is_pseudocycle(tight_cycle(5), c5->seq));

    CHECK_FALSE(detect_odd_pseudocycle(kEdge).has_value());

    auto k4 = detect_odd_pseudocycle(complete3(4));
    REQUIRE(k4.has_value());
    CHECK(k4->length() == 4);
    CHECK(is_pseudocycle(complete3(4), k4->seq));

    CHECK_FALSE(detect_odd_pseudocycle(tight_cycle(6)).has_value());
    CHECK_FALSE(detect_odd_pseudocycle(make_hypergraph(2, {})).has_value());
}

TEST_CASE("detect agrees with sequence-level brute force") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        auto h = testutil::random_hypergraph(n, 35, rng);
        auto got = detect_odd_pseudocycle(h);
        auto want = oracle::shortest_odd_bruteforce(h, 15);
        if (want.has_value()) {
            REQUIRE(got.has_value());
            CHECK(got->length() == *want);
            CHECK(got->length() % 3 != 0);
            CHECK(is_pseudocycle(h, got->seq));
        } else {
            CHECK_FALSE(got.has_value());
        }
    }
}

TEST_CASE("walk counts match raw sequence enumeration") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));  // up to 6
        auto h = testutil::random_hypergraph(n, 45, rng);
        auto pd = build_pair_digraph(h);
        for (int len = 3; len <= (n <= 5 ? 9 : 7); ++len)
            CHECK(count_closed_walks(pd, len) == oracle::count_pseudocycles(h, len));
    }
}

TEST_CASE("diameter examples") {
    CHECK(diameter(kEdge).value == 4);
    CHECK_FALSE(diameter(kEdge).vacuous);
    auto empty = diameter(make_hypergraph(4, {}));
    CHECK(empty.value == 2);
    CHECK(empty.vacuous);
    CHECK(diameter(tight_cycle(5)).value == 7);
    CHECK(diameter(tight_cycle(5)).value == oracle::diameter_bruteforce(tight_cycle(5)).value);
}

TEST_CASE("diameter agrees with brute force and is jobs-independent") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto h = testutil::random_hypergraph(n, 40, rng);
        auto serial = diameter(h, 1);
        auto par = diameter(h, 4);
        auto brute = oracle::diameter_bruteforce(h);
        CHECK(serial.value == brute.value);
        CHECK(serial.value == par.value);
        CHECK(serial.vacuous == brute.vacuous);
    }
}

TEST_CASE("trim_small_codegree") {
    CHECK(trim_small_codegree(kEdge, 2).edges.empty());
    CHECK(trim_small_codegree(complete3(4), 2).edges == complete3(4).edges);
    auto c5 = tight_cycle(5);
    CHECK(trim_small_codegree(c5, 1).edges == c5.edges);
    CHECK_THROWS_AS(trim_small_codegree(c5, 0), std::invalid_argument);
}

TEST_CASE("trim fixpoint and deletion bound") {
    SplitMix64 rng(2323);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.below(5));
        auto h = testutil::random_hypergraph(n, 45, rng);
        int c = 1 + static_cast<int>(rng.below(3));
        auto t = trim_small_codegree(h, c);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int cd = codegree(t, u, v);
                CHECK((cd == 0 || cd >= c));
            }
        CHECK(static_cast<std::int64_t>(t.edge_count()) >=
              static_cast<std::int64_t>(h.edge_count()) -
                  static_cast<std::int64_t>(c) * n * (n - 1) / 2);
    }
}

TEST_CASE("extend_pseudocycle") {
    auto c5 = tight_cycle(5);
    CycleWitness base{{0, 1, 2, 3, 4}};
    auto e11 = extend_pseudocycle(c5, base, 11);
    CHECK(e11.seq == std::vector<int>{0, 1, 2, 0, 1, 2, 0, 1, 2, 3, 4});
    CHECK(is_pseudocycle(c5, e11.seq));
    auto e13 = extend_pseudocycle(c5, base, 13);
    CHECK(e13.seq == std::vector<int>{0, 1, 2, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4});
    CHECK(is_pseudocycle(c5, e13.seq));
    CHECK(extend_pseudocycle(c5, base, 5).seq == base.seq);
    CHECK_THROWS_AS(extend_pseudocycle(c5, base, 6), std::invalid_argument);
    CHECK_THROWS_AS(extend_pseudocycle(c5, base, 7), std::invalid_argument);
    CHECK_THROWS_AS(extend_pseudocycle(c5, CycleWitness{{0, 1, 3}}, 5),
                    std::invalid_argument);
}

TEST_CASE("extend_pseudocycle always validates at target length") {
    SplitMix64 rng(616);
    int done = 0;
    while (done < 30) {
        int n = 4 + static_cast<int>(rng.below(4));
        auto h = testutil::random_hypergraph(n, 40, rng);
        auto w = detect_odd_pseudocycle(h);
        if (!w) continue;
        ++done;
        long long l = w->length();
        for (long long m : {2 * l, 2 * l + 1, 2 * l + 2, 3 * l, 3 * l + 4}) {
            if (m % 3 != l % 3 && m % 3 != (2 * l) % 3) continue;
            if (m % 3 != l % 3 && m < 2 * l) continue;
            auto e = extend_pseudocycle(h, *w, m);
            CHECK(static_cast<long long>(e.seq.size()) == m);
            CHECK(is_pseudocycle(h, e.seq));
        }
    }
}
