#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "barnette/alpha.hpp"
#include "barnette/oracle.hpp"
#include "helpers.hpp"

using namespace barnette;

TEST_CASE("hamilton cycle counts on small graphs") {
    SUBCASE("cube has 6") {
        auto [g, col] = octahedron();
        auto [cube, corr] = dual_graph(g);
        CHECK(enumerate_hamilton_cycles(cube).size() == 6);
    }
    SUBCASE("K4 has 3") {
        CHECK(enumerate_hamilton_cycles(testgraphs::k4()).size() == 3);
    }
    SUBCASE("C4 has 1") {
        PlanarGraph c4 = testgraphs::from_1based({{2, 4}, {1, 3}, {2, 4}, {3, 1}});
        CHECK(enumerate_hamilton_cycles(c4).size() == 1);
    }
    SUBCASE("cap") {
        auto inst = random_instance(18, 5); // 42 vertices
        try {
            enumerate_hamilton_cycles(inst.g, {.hamilton_vertex_cap = 40, .cover_vertex_cap = 24});
            FAIL("expected CapExceeded");
        } catch (const Error& e) {
            CHECK(e.code == Err::CapExceeded);
        }
    }
}

TEST_CASE("cover sweep on the octahedron") {
    auto [g, col] = octahedron();
    CoverCounts counts = enumerate_cover_pairs(g);
    CHECK(counts.tree_pairs == 6); // must match the cube's Hamilton count
    CHECK(counts.acyclic_pairs >= counts.tree_pairs);
    CHECK(counts.list_complete);
    CHECK(counts.tree_pair_list.size() == 6);
    SUBCASE("cap") {
        auto inst = random_instance(10, 5); // 26 vertices
        CHECK_THROWS_AS(enumerate_cover_pairs(inst.g), Error);
    }
}

TEST_CASE("Stein bijection at desk scale: tree pairs equal dual Hamilton cycles") {
    for (int ops : {0, 1, 2, 3}) {
        auto inst = random_instance(ops, 70 + ops);
        auto [p, corr] = dual_graph(inst.g);
        CoverCounts counts = enumerate_cover_pairs(inst.g);
        auto cycles = enumerate_hamilton_cycles(p);
        CHECK(counts.tree_pairs == cycles.size());
    }
}

TEST_CASE("hamilton_lower_bound") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    SUBCASE("cube value: 3^(12/16)") {
        double b = hamilton_lower_bound(cube);
        CHECK(b == doctest::Approx(2.2795).epsilon(1e-4));
        CHECK(b == doctest::Approx(std::pow(3.0, 0.75)));
        CHECK(required_cycles(b) == 3);
    }
    SUBCASE("the dual-side formula agrees: faces of P vs vertices of G") {
        FaceSet fp = trace_faces(cube);
        CHECK(fp.count() == g.n);
        CHECK(fp.max_length() == g.max_degree());
        CHECK(hamilton_lower_bound_faces(fp.count(), fp.max_length()) ==
              hamilton_lower_bound_faces(g.n, g.max_degree()));
    }
    SUBCASE("doubling the face count squares the bound") {
        double b1 = hamilton_lower_bound_faces(6, 4);
        double b2 = hamilton_lower_bound_faces(12, 4);
        CHECK(b2 == doctest::Approx(b1 * b1));
    }
}

TEST_CASE("verify_theorem11 on the cube") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    BoundReport rep = verify_theorem11(cube);
    CHECK(rep.pass);
    CHECK(rep.required == 3);
    CHECK(rep.k_size == 1);
    CHECK(rep.choice_product == 3);
    CHECK(rep.constructive_distinct == 3);
    CHECK(rep.collisions == 0);
    CHECK(rep.non_hamilton_covers == 0);
    CHECK(rep.oracle_ran);
    CHECK(rep.oracle_cycles == 6);
    CHECK(rep.oracle_contains_constructive);
    REQUIRE(rep.oracle_cycles_up_to_auto.has_value());
    CHECK(*rep.oracle_cycles_up_to_auto == 1); // all six are equivalent under the cube's symmetries
    std::string text = rep.to_text();
    CHECK(text.find("bound=2.279507\n") != std::string::npos);
    CHECK(text.find("pass=true\n") != std::string::npos);
}

TEST_CASE("verify_theorem11 on a seeded instance") {
    auto inst = random_instance(5, 99);
    auto [p, corr] = dual_graph(inst.g);
    BoundReport rep = verify_theorem11(p);
    CHECK(rep.pass);
    CHECK(rep.collisions == 0);
    CHECK((long long)rep.constructive_distinct >= rep.required);
}

TEST_CASE("verify_theorem11 precondition: the 2-factor must exist") {
    PlanarGraph g = testgraphs::glued_octahedra();
    auto [p, corr] = dual_graph(g); // cubic bipartite, no 4-face 2-factor
    try {
        verify_theorem11(p);
        FAIL("expected Precondition");
    } catch (const Error& e) {
        CHECK(e.code == Err::Precondition);
    }
}

TEST_CASE("verify_theorem12 on the cube with a single face") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    FaceSet fs = trace_faces(cube);
    for (int f = 0; f < fs.count(); f++)
        for (int pos = 0; pos < fs.length(f); pos++) {
            Thm12Report rep = verify_theorem12(cube, {f}, {pos});
            CHECK(rep.pass);
            CHECK(rep.hamiltonian);
            CHECK(rep.boundary_ok);
            CHECK(rep.placement_ok);
        }
}

TEST_CASE("verify_theorem12 distance guard") {
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    try {
        verify_theorem12(cube, {0, 1}, {0, 0});
        FAIL("expected DistanceViolation");
    } catch (const Error& e) {
        CHECK(e.code == Err::DistanceViolation);
    }
}

TEST_CASE("constructive cycles all appear in the exhaustive set (|G| <= 12)") {
    for (int ops : {0, 1, 2, 3}) {
        auto inst = random_instance(ops, 80 + ops);
        auto [p, corr] = dual_graph(inst.g);
        BoundReport rep = verify_theorem11(p);
        CHECK(rep.oracle_ran);
        CHECK(rep.oracle_contains_constructive);
        CHECK(rep.pass);
    }
}

TEST_CASE("check_invariant_i on the octahedron") {
    auto [g, col] = octahedron();
    CHECK(check_invariant_i(g, col)); // 4 > 3
}

TEST_CASE("automorphisms of small graphs") {
    CHECK(automorphisms(testgraphs::k4()).size() == 24);
    auto [g, col] = octahedron();
    auto [cube, corr] = dual_graph(g);
    CHECK(automorphisms(cube).size() == 48);
}
