#pragma once

#include <string>
#include <vector>

#include "barnette/planar_core.hpp"

namespace barnette {

enum class Colour : unsigned char { B = 0, W = 1, R = 2 };

inline const char* colour_name(Colour c) { return c == Colour::B ? "B" : c == Colour::W ? "W" : "R"; }

// Proper 3-colouring of a plane triangulation. Until canonicalised, the
// numeric classes carry no B/W/R meaning beyond "three independent classes".
struct TriColouring {
    std::vector<Colour> colour;

    Colour operator()(int v) const { return colour[v]; }
    std::vector<int> cls(Colour c) const;
    bool is_red(int v) const { return colour[v] == Colour::R; }
};

// Seeds one triangle with the three colours and propagates across
// edge-adjacent faces; conflict means the triangulation is not Eulerian.
TriColouring three_colour(const PlanarGraph& g);
TriColouring three_colour_from(const PlanarGraph& g, const FaceSet& faces, int seed_face);

// The class consisting solely of degree-4 vertices (lowest class id wins a
// tie); throws NoAllDegree4Class when G is not in E(4).
Colour red_class(const PlanarGraph& g, const TriColouring& col);

// Relabels so the all-degree-4 class is R and B is the class holding the
// lowest-id non-red vertex. Deterministic output for golden tests.
TriColouring canonicalise_colouring(const PlanarGraph& g, const TriColouring& col);

// three_colour + canonicalise in one step for E(4) inputs.
TriColouring colour_e4(const PlanarGraph& g);

struct ClassReport {
    bool is_cubic = false;
    bool is_bipartite = false;
    bool is_3_connected = false;
    bool is_plane = true; // certified by build_graph
    bool has_4face_2factor = false;
    bool is_triangulation = false;
    bool is_eulerian = false;
    bool is_E4 = false;

    std::vector<int> odd_cycle;        // when not bipartite
    std::vector<int> small_cut;        // when not 3-connected
    std::vector<int> two_factor_faces; // chosen 4-faces, when present
    std::vector<int> red_vertices;     // the all-degree-4 class, when E(4)

    std::string to_text() const; // flat key=value block, stable key order
};

ClassReport classify(const PlanarGraph& g);

} // namespace barnette
