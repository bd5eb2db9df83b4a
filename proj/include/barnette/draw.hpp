#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barnette/e4.hpp"
#include "barnette/planar_core.hpp"
#include "barnette/stein.hpp"
#include "barnette/tree_pair.hpp"

namespace barnette {

struct DrawOverlay {
    std::optional<TriColouring> colouring;
    std::optional<HamiltonCycle> cycle;
    std::optional<CoverPair> cover;
};

std::string to_dot(const PlanarGraph& g, const DrawOverlay& overlay = {});

// Straight-line plane drawing via the barycentric embedding: the first traced
// face is pinned to a regular polygon, interior vertices solve the averaging
// system (dense elimination, residual <= 1e-9). Requires 3-connectivity; the
// output is checked for proper segment crossings.
std::string to_svg(const PlanarGraph& g, const DrawOverlay& overlay = {});

// exposed for tests
std::vector<std::pair<double, double>> tutte_coordinates(const PlanarGraph& g);

} // namespace barnette
