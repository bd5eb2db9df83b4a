#pragma once

#include <string>
#include <variant>
#include <vector>

#include "barnette/planar_core.hpp"
#include "barnette/tree_pair.hpp"

namespace barnette {

// Canonical form: sorted list of sorted endpoint pairs in the cubic graph.
struct HamiltonCycle {
    std::vector<std::pair<int, int>> edges;

    std::string to_cyc1() const; // "CYC1 <count>" header + sorted u-v tokens
    static HamiltonCycle parse_cyc1(const std::string& text);

    bool operator==(const HamiltonCycle& o) const { return edges == o.edges; }
    bool operator<(const HamiltonCycle& o) const { return edges < o.edges; }
};

// Diagnostic for covers whose cut is a 2-factor with several components.
struct CycleCover {
    std::vector<std::vector<std::pair<int, int>>> cycles;
};

// Edge ids of G crossing the cover partition.
std::vector<int> cut_edges(const PlanarGraph& g, const CoverPair& cover);

// Maps the X-Y cut to dual edges. Every dual vertex must see exactly degree 2
// (each triangle of G has a 2-1 colour split); a single cycle is the Stein
// direction, several components come back as a CycleCover.
std::variant<HamiltonCycle, CycleCover> cover_to_dual_cycle(const PlanarGraph& g, const CoverPair& cover,
                                                            const PlanarGraph& dual,
                                                            const std::vector<int>& g_edge_to_dual_edge);

// Inverse direction: the cycle cuts the sphere in two; faces inside each
// region form the cover sides. face_to_g_vertex maps a face index of p to the
// corresponding vertex of the triangulation g (identity when g = dual(p)).
CoverPair cycle_to_cover(const PlanarGraph& p, const HamiltonCycle& cycle, const PlanarGraph& g,
                         const std::vector<int>& face_to_g_vertex);

bool verify_hamilton(const PlanarGraph& p, const HamiltonCycle& cycle);

HamiltonCycle cycle_from_dual_edges(const PlanarGraph& dual, const std::vector<int>& dual_edge_ids);

} // namespace barnette
