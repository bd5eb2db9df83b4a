#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <variant>

#include "barnette/alpha.hpp"
#include "barnette/oracle.hpp"
#include "barnette/stein.hpp"
#include "barnette/tree_pair.hpp"

using namespace barnette;

static std::vector<int> identity_face_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; i++) m[i] = i;
    return m;
}

TEST_CASE("the hand-traced octahedron cover cuts to a cube Hamilton cycle") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    CoverPair cover;
    cover.X = {1, 4, 5};
    cover.Y = {0, 2, 3};
    CHECK(cut_edges(g, cover).size() == 8);
    auto res = cover_to_dual_cycle(g, cover, cube, corr.dual_edge_of_primal);
    REQUIRE(std::holds_alternative<HamiltonCycle>(res));
    HamiltonCycle h = std::get<HamiltonCycle>(res);
    CHECK(h.edges.size() == 8);
    CHECK(verify_hamilton(cube, h));
}

TEST_CASE("parity: every triangle of an exact acyclic cover has exactly two cut edges") {
    for (uint64_t seed : {61ull, 62ull}) {
        auto inst = random_instance(4, seed);
        AuxGraphJ j = build_auxiliary_J(inst.g, inst.colouring);
        GreedyResult res = greedy_chromatic_independent_set(j);
        FaceSet faces = trace_faces(inst.g);
        for_each_thm13_cover(inst.g, inst.colouring, res.K, 1,
                             [&](uint64_t, const ChoiceVector&, const CoverPair& cover) {
                                 std::set<int> cut;
                                 for (int e : cut_edges(inst.g, cover)) cut.insert(e);
                                 for (int f = 0; f < faces.count(); f++) {
                                     int crossing = 0;
                                     for (int pos = 0; pos < 3; pos++)
                                         if (cut.count(faces.boundary_edge(inst.g, f, pos))) crossing++;
                                     CHECK(crossing == 2);
                                 }
                             });
    }
}

TEST_CASE("Stein equivalence on desk scale: connected sides iff a single cycle") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    CoverCounts counts = enumerate_cover_pairs(g);
    REQUIRE(counts.list_complete);
    for (const CoverPair& cover : counts.tree_pair_list) {
        auto res = cover_to_dual_cycle(g, cover, cube, corr.dual_edge_of_primal);
        CHECK(std::holds_alternative<HamiltonCycle>(res));
    }
}

TEST_CASE("cycle_to_cover inverts cover_to_dual_cycle on every cube cycle") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    auto cycles = enumerate_hamilton_cycles(cube);
    REQUIRE(cycles.size() == 6);
    for (const HamiltonCycle& h : cycles) {
        CoverPair cover = cycle_to_cover(cube, h, g, corr.primal_vertex_of_dual_face);
        CHECK(cover.X.size() + cover.Y.size() == 6);
        CHECK(cover.connected_X);
        CHECK(cover.connected_Y);
        auto res = cover_to_dual_cycle(g, cover, cube, corr.dual_edge_of_primal);
        REQUIRE(std::holds_alternative<HamiltonCycle>(res));
        CHECK(std::get<HamiltonCycle>(res) == h);
    }
}

TEST_CASE("region assignment puts the lowest dual vertex into X") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    for (const HamiltonCycle& h : enumerate_hamilton_cycles(cube)) {
        CoverPair cover = cycle_to_cover(cube, h, g, corr.primal_vertex_of_dual_face);
        REQUIRE(!cover.X.empty());
        CHECK(cover.X.front() == 0);
    }
}

TEST_CASE("verify_hamilton") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    auto cycles = enumerate_hamilton_cycles(cube);
    SUBCASE("a real cycle verifies") {
        CHECK(verify_hamilton(cube, cycles[0]));
    }
    SUBCASE("two disjoint 4-faces form a 2-factor, not a Hamilton cycle") {
        ClassReport rep = classify(cube);
        REQUIRE(rep.two_factor_faces.size() == 2);
        FaceSet faces = trace_faces(cube);
        HamiltonCycle fake;
        for (int f : rep.two_factor_faces)
            for (int pos = 0; pos < 4; pos++) {
                auto [u, v] = cube.edges[faces.boundary_edge(cube, f, pos)];
                fake.edges.push_back({u, v});
            }
        std::sort(fake.edges.begin(), fake.edges.end());
        CHECK(fake.edges.size() == 8);
        CHECK_FALSE(verify_hamilton(cube, fake));
        try {
            cycle_to_cover(cube, fake, g, corr.primal_vertex_of_dual_face);
            FAIL("expected NotHamiltonian");
        } catch (const Error& e) {
            CHECK(e.code == Err::NotHamiltonian);
        }
    }
    SUBCASE("seven edges are not enough") {
        HamiltonCycle h = cycles[0];
        h.edges.pop_back();
        CHECK_FALSE(verify_hamilton(cube, h));
    }
}

TEST_CASE("covers map to equal cycles iff their cuts are equal") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    CoverCounts counts = enumerate_cover_pairs(g);
    std::set<std::vector<int>> cuts;
    std::set<HamiltonCycle> cycles;
    for (const CoverPair& cover : counts.tree_pair_list) {
        cuts.insert(cut_edges(g, cover));
        auto res = cover_to_dual_cycle(g, cover, cube, corr.dual_edge_of_primal);
        cycles.insert(std::get<HamiltonCycle>(res));
    }
    CHECK(cuts.size() == cycles.size());
}

TEST_CASE("degree violation is reported for a non-partition-consistent input") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    CoverPair bad;
    bad.X = {0};
    bad.Y = {1, 2, 3, 4, 5};
    // Y induces cycles, so some triangle is monochromatic and its dual vertex
    // sees fewer than 2 cut edges
    try {
        cover_to_dual_cycle(g, bad, cube, corr.dual_edge_of_primal);
        FAIL("expected DegreeViolation");
    } catch (const Error& e) {
        CHECK(e.code == Err::DegreeViolation);
    }
}
