#pragma once

#include <vector>

#include "barnette/planar_core.hpp"

namespace testgraphs {

// 1-based rotation tables, converted on build.
inline barnette::PlanarGraph from_1based(const std::vector<std::vector<int>>& table) {
    std::vector<std::vector<int>> t(table.size());
    for (size_t v = 0; v < table.size(); v++)
        for (int w : table[v]) t[v].push_back(w - 1);
    return barnette::build_graph(t);
}

inline barnette::PlanarGraph triangle() {
    return from_1based({{2, 3}, {3, 1}, {1, 2}});
}

inline barnette::PlanarGraph k4() {
    return from_1based({{2, 4, 3}, {3, 4, 1}, {1, 4, 2}, {1, 2, 3}});
}

// two tetrahedra glued on a triangle (K5 minus an edge); has the separating
// triangle {1,2,3}
inline barnette::PlanarGraph stacked_tetrahedra() {
    return from_1based({
        {2, 4, 3, 5},
        {3, 4, 1, 5},
        {1, 4, 2, 5},
        {1, 2, 3},
        {1, 3, 2},
    });
}

inline barnette::PlanarGraph icosahedron() {
    return from_1based({
        {2, 3, 4, 5, 6},
        {1, 6, 7, 8, 3},
        {1, 2, 8, 9, 4},
        {1, 3, 9, 10, 5},
        {1, 4, 10, 11, 6},
        {1, 5, 11, 7, 2},
        {2, 6, 11, 12, 8},
        {3, 2, 7, 12, 9},
        {4, 3, 8, 12, 10},
        {5, 4, 9, 12, 11},
        {6, 5, 10, 12, 7},
        {11, 10, 9, 8, 7},
    });
}

// two octahedra glued along a face: Eulerian triangulation, every colour
// class holds a degree-6 vertex, so it is not in E(4)
inline barnette::PlanarGraph glued_octahedra() {
    return from_1based({
        {3, 6, 4, 5, 8, 9},
        {5, 4, 6, 3},
        {5, 2, 6, 1, 9, 7},
        {1, 6, 2, 5},
        {1, 4, 2, 3, 7, 8},
        {1, 3, 2, 4},
        {3, 9, 8, 5},
        {5, 7, 9, 1},
        {8, 7, 3, 1},
    });
}

} // namespace testgraphs
