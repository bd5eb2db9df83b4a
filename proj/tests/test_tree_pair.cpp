#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "barnette/alpha.hpp"
#include "barnette/tree_pair.hpp"

using namespace barnette;

TEST_CASE("auxiliary graph J of the octahedron is K4 on B ∪ W") {
    auto [g, col] = octahedron();
    AuxGraphJ j = build_auxiliary_J(g, col);
    CHECK(j.vertices == std::vector<int>{0, 1, 2, 3});
    for (int v : j.vertices) CHECK(j.adj[v].size() == 3);
    CHECK(j.max_degree() == 3); // < Delta^2/4 = 4
    for (int v : j.vertices) CHECK_FALSE(col.is_red(v));
}

TEST_CASE("greedy independent set") {
    auto [g, col] = octahedron();
    AuxGraphJ j = build_auxiliary_J(g, col);
    GreedyResult res = greedy_chromatic_independent_set(j);
    SUBCASE("K4 needs 4 colours and leaves a singleton class") {
        CHECK(res.colours_used == 4);
        CHECK(res.K == std::vector<int>{0});
    }
    SUBCASE("the size bound holds numerically: 1 > 2*6/16") {
        CHECK((double)res.K.size() > 2.0 * g.n / (g.max_degree() * g.max_degree()));
    }
    SUBCASE("edgeless J returns all of B ∪ W") {
        AuxGraphJ empty;
        empty.member.assign(6, 0);
        empty.adj.assign(6, {});
        empty.vertices = {0, 1, 2, 3};
        for (int v : empty.vertices) empty.member[v] = 1;
        GreedyResult r2 = greedy_chromatic_independent_set(empty);
        CHECK(r2.colours_used == 1);
        CHECK(r2.K == empty.vertices);
    }
}

TEST_CASE("greedy colour count stays within a quarter of Delta squared") {
    for (uint64_t seed : {31ull, 32ull, 33ull}) {
        auto inst = random_instance(8, seed);
        AuxGraphJ j = build_auxiliary_J(inst.g, inst.colouring);
        GreedyResult res = greedy_chromatic_independent_set(j);
        int dg = inst.g.max_degree();
        CHECK(4 * res.colours_used <= dg * dg);
        CHECK(4 * j.max_degree() < dg * dg);
    }
}

TEST_CASE("path_subgraph") {
    auto [g, col] = octahedron();
    SUBCASE("octahedron b1 minus r1 leaves the path w1-r2-w2") {
        CHECK(path_subgraph(g, 0, 4) == std::vector<int>{2, 3, 5});
    }
    SUBCASE("any degree-4 vertex leaves a 3-vertex path") {
        for (int v = 0; v < g.n; v++)
            for (int nv : g.rotation[v]) CHECK(path_subgraph(g, v, nv).size() == 3);
    }
    SUBCASE("a degree-6 vertex in a grown instance leaves a 5-vertex path") {
        auto inst = random_instance(1, 3);
        bool found = false;
        for (int v = 0; v < inst.g.n && !found; v++)
            if (inst.g.degree(v) == 6) {
                CHECK(path_subgraph(inst.g, v, inst.g.rotation[v][0]).size() == 5);
                found = true;
            }
        CHECK(found);
    }
    SUBCASE("a chorded neighbourhood raises NotAPath") {
        // two stacked tetrahedra: vertex 1 sees the separating triangle
        PlanarGraph st = build_graph({{1, 3, 2, 4}, {2, 3, 0, 4}, {0, 3, 1, 4}, {0, 1, 2}, {0, 2, 1}});
        try {
            path_subgraph(st, 0, 3);
            FAIL("expected NotAPath");
        } catch (const Error& e) {
            CHECK(e.code == Err::NotAPath);
        }
    }
}

TEST_CASE("star_subgraph") {
    auto [g, col] = octahedron();
    SUBCASE("black centre collects its white neighbours") {
        CHECK(star_subgraph(g, col, 0) == std::vector<int>{0, 2, 3});
    }
    SUBCASE("degree-4 centre has exactly 2 leaves") {
        for (int v = 0; v < 4; v++) CHECK(star_subgraph(g, col, v).size() == 3);
    }
    SUBCASE("red centre is rejected") {
        try {
            star_subgraph(g, col, 4);
            FAIL("expected CenterIsRed");
        } catch (const Error& e) {
            CHECK(e.code == Err::CenterIsRed);
        }
    }
}

TEST_CASE("check_bw_closed") {
    auto [g, col] = octahedron();
    SUBCASE("the empty pair is closed") {
        CHECK(check_bw_closed(g, col, {}).empty());
    }
    SUBCASE("a lone white vertex pulls in both black neighbours") {
        ClosedPair pair;
        pair.C = {2}; // w1
        auto viols = check_bw_closed(g, col, pair);
        REQUIRE(viols.size() == 2);
        CHECK(viols[0].vertex == 0);
        CHECK(viols[0].condition == 1);
        CHECK(viols[1].vertex == 1);
    }
}

TEST_CASE("seed_pair_thm13 on the octahedron, K={b1}") {
    auto [g, col] = octahedron();
    std::vector<int> K = {0};
    SUBCASE("STAR sends the star into D") {
        ChoiceVector cv;
        cv.items = {{0, {true, -1}}};
        ClosedPair pair = seed_pair_thm13(g, col, K, cv);
        CHECK(pair.C.empty());
        CHECK(pair.D == std::vector<int>{0, 2, 3});
        CHECK(check_bw_closed(g, col, pair).empty());
    }
    SUBCASE("PATH(r1) sends the path into D") {
        ChoiceVector cv;
        cv.items = {{0, {false, 4}}};
        ClosedPair pair = seed_pair_thm13(g, col, K, cv);
        CHECK(pair.C.empty());
        CHECK(pair.D == std::vector<int>{2, 3, 5});
    }
    SUBCASE("a degree-4 vertex has 3 legal choices") {
        CHECK(thm13_choice_count(g, K) == 3);
    }
    SUBCASE("an independence-violating K is rejected as SeedConflict") {
        ChoiceVector cv;
        cv.items = {{2, {true, -1}}, {3, {true, -1}}};
        try {
            seed_pair_thm13(g, col, {2, 3}, cv); // whites at distance 2
            FAIL("expected SeedConflict");
        } catch (const Error& e) {
            CHECK(e.code == Err::SeedConflict);
        }
    }
}

TEST_CASE("extend_cover") {
    auto [g, col] = octahedron();
    SUBCASE("hand-traced extension of (∅, {b1,w1,w2})") {
        ClosedPair pair;
        pair.D = {0, 2, 3};
        CoverPair cover = extend_cover(g, col, pair);
        CHECK(cover.X == std::vector<int>{1, 4, 5}); // path r1-b2-r2
        CHECK(cover.Y == std::vector<int>{0, 2, 3});
        CHECK(cover.connected_X);
        CHECK(cover.connected_Y);
    }
    SUBCASE("a pair already covering V(G) comes back unchanged") {
        ClosedPair pair;
        pair.C = {1, 4, 5};
        pair.D = {0, 2, 3};
        CoverPair cover = extend_cover(g, col, pair);
        CHECK(cover.X == pair.C);
        CHECK(cover.Y == pair.D);
    }
    SUBCASE("a non-closed input is rejected") {
        ClosedPair pair;
        pair.C = {2};
        try {
            extend_cover(g, col, pair);
            FAIL("expected NotClosedInput");
        } catch (const Error& e) {
            CHECK(e.code == Err::NotClosedInput);
        }
    }
}

TEST_CASE("enumerate_thm13_covers on the octahedron gives 3 distinct covers") {
    auto [g, col] = octahedron();
    AuxGraphJ j = build_auxiliary_J(g, col);
    GreedyResult res = greedy_chromatic_independent_set(j);
    auto covers = enumerate_thm13_covers(g, col, res.K);
    REQUIRE(covers.size() == 3);
    CHECK(covers.size() == thm13_choice_count(g, res.K));
    std::set<std::pair<std::vector<int>, std::vector<int>>> distinct;
    for (const auto& [cv, cover] : covers) distinct.insert({cover.X, cover.Y});
    CHECK(distinct.size() == 3);
    CHECK(covers[0].first.to_text() == "1:STAR");
    CHECK(covers[1].first.to_text() == "1:PATH:5");
    CHECK(covers[2].first.to_text() == "1:PATH:6");
}

TEST_CASE("every thm13 seed across instances is closed and extends to a partition") {
    for (uint64_t seed : {41ull, 42ull}) {
        auto inst = random_instance(6, seed);
        AuxGraphJ j = build_auxiliary_J(inst.g, inst.colouring);
        GreedyResult res = greedy_chromatic_independent_set(j);
        uint64_t want = thm13_choice_count(inst.g, res.K);
        uint64_t got = 0;
        for_each_thm13_cover(inst.g, inst.colouring, res.K, 1,
                             [&](uint64_t, const ChoiceVector&, const CoverPair& cover) {
                                 got++;
                                 CHECK(cover.X.size() + cover.Y.size() == (size_t)inst.g.n);
                             });
        CHECK(got == want);
    }
}

TEST_CASE("seed_pair_thm14") {
    auto [g, col] = octahedron();
    SUBCASE("empty L gives the empty pair") {
        ClosedPair pair = seed_pair_thm14(g, col, {}, {});
        CHECK(pair.C.empty());
        CHECK(pair.D.empty());
    }
    SUBCASE("single white vertex: C = P(w,n), D = S(n), closed") {
        ClosedPair pair = seed_pair_thm14(g, col, {2}, {{2, 4}});
        CHECK(pair.C == std::vector<int>{0, 1, 5});
        CHECK(pair.D == std::vector<int>{2, 3, 4});
        CHECK(check_bw_closed(g, col, pair).empty());
        CoverPair cover = extend_cover(g, col, pair);
        // white v: N(v) \ {n(v)} sits inside X, v on the other side
        for (int w : pair.C) CHECK(std::count(cover.X.begin(), cover.X.end(), w) == 1);
        CHECK(std::count(cover.Y.begin(), cover.Y.end(), 2) == 1);
    }
    SUBCASE("single black vertex: N(v) \\ {n(v)} lands in Y") {
        ClosedPair pair = seed_pair_thm14(g, col, {0}, {{0, 4}});
        CHECK(pair.D == std::vector<int>{2, 3, 5});
        CHECK(pair.C == std::vector<int>{0, 1, 4});
        CoverPair cover = extend_cover(g, col, pair);
        for (int w : pair.D) CHECK(std::count(cover.Y.begin(), cover.Y.end(), w) == 1);
    }
    SUBCASE("red vertex with black n(v) seeds D with S(n(v))") {
        ClosedPair pair = seed_pair_thm14(g, col, {4}, {{4, 0}});
        CHECK(pair.C.empty());
        CHECK(pair.D == std::vector<int>{0, 2, 3});
    }
    SUBCASE("distance violation") {
        try {
            seed_pair_thm14(g, col, {0, 1}, {{0, 4}, {1, 4}});
            FAIL("expected DistanceViolation");
        } catch (const Error& e) {
            CHECK(e.code == Err::DistanceViolation);
        }
    }
}

TEST_CASE("extension keeps the seed inside its side across a corpus") {
    for (uint64_t seed : {51ull, 52ull, 53ull}) {
        auto inst = random_instance(5, seed);
        AuxGraphJ j = build_auxiliary_J(inst.g, inst.colouring);
        GreedyResult res = greedy_chromatic_independent_set(j);
        for_each_thm13_cover(inst.g, inst.colouring, res.K, 1,
                             [&](uint64_t idx, const ChoiceVector& cv, const CoverPair& cover) {
                                 ClosedPair seeded = seed_pair_thm13(inst.g, inst.colouring, res.K, cv);
                                 std::set<int> x(cover.X.begin(), cover.X.end());
                                 std::set<int> y(cover.Y.begin(), cover.Y.end());
                                 for (int v : seeded.C) CHECK(x.count(v) == 1);
                                 for (int v : seeded.D) CHECK(y.count(v) == 1);
                                 (void)idx;
                             });
    }
}

TEST_CASE("red placement order does not affect validity") {
    // process a closed pair whose reds can go either way; validity (exact
    // acyclic partition) must hold regardless of the outcome order
    auto [g, col] = octahedron();
    ClosedPair pair;
    pair.D = {0, 2, 3};
    CoverPair cover = extend_cover(g, col, pair);
    std::vector<char> mx = mask_of(cover.X, g.n), my = mask_of(cover.Y, g.n);
    CHECK(induced_acyclic(g, mx));
    CHECK(induced_acyclic(g, my));
    CHECK(cover.X.size() + cover.Y.size() == (size_t)g.n);
}
