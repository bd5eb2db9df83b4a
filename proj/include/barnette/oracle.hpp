#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barnette/e4.hpp"
#include "barnette/planar_core.hpp"
#include "barnette/stein.hpp"
#include "barnette/tree_pair.hpp"

namespace barnette {

struct OracleCaps {
    int hamilton_vertex_cap = 40;
    int cover_vertex_cap = 24;
};

// Exhaustive Hamilton-cycle enumeration by backtracking from vertex 1 with
// the orientation fixed by the smaller second vertex. Results are canonical
// edge sets in lexicographic discovery order, deduplicated as a safety net.
std::vector<HamiltonCycle> enumerate_hamilton_cycles_serial(const PlanarGraph& p, const OracleCaps& caps = {});

// Same output, prefix-parallel over OpenMP threads.
std::vector<HamiltonCycle> enumerate_hamilton_cycles(const PlanarGraph& p, const OracleCaps& caps = {}, int jobs = 1);

struct CoverCounts {
    uint64_t acyclic_pairs = 0; // unordered {X,Y}, both sides acyclic
    uint64_t tree_pairs = 0;    // both sides also connected
    bool list_complete = false;
    std::vector<CoverPair> tree_pair_list; // sorted by sweep mask when complete
};

// Sweeps all 2^(n-1) unordered bipartitions (vertex 1 pinned to X).
CoverCounts enumerate_cover_pairs_serial(const PlanarGraph& g, const OracleCaps& caps = {},
                                         size_t list_limit = 1u << 20);
CoverCounts enumerate_cover_pairs(const PlanarGraph& g, const OracleCaps& caps = {}, int jobs = 1,
                                  size_t list_limit = 1u << 20);

// 3^(2|P*|/Delta^2(P*)) from the face vector of p.
double hamilton_lower_bound(const PlanarGraph& p);
double hamilton_lower_bound_faces(int face_count, int max_face_len);

// ceil with a small epsilon so borderline floats do not misclassify
long long required_cycles(double bound);

struct BoundReport {
    int n = 0, m = 0;
    int faces = 0, max_face_len = 0;
    int dual_n = 0;
    double bound = 0.0;
    long long required = 0;
    int k_size = 0;
    int greedy_colours = 0;
    int delta_j = 0;
    uint64_t choice_product = 0;
    uint64_t constructive_distinct = 0;
    uint64_t collisions = 0;
    uint64_t non_hamilton_covers = 0;
    bool oracle_ran = false;
    uint64_t oracle_cycles = 0;
    bool oracle_contains_constructive = true;
    std::optional<uint64_t> oracle_cycles_up_to_auto;
    bool pass = false;

    std::string to_text() const;
};

// Full Theorem 1.1 pipeline on a cubic input with a facial-4-cycle 2-factor:
// dual, colour, auxiliary graph, greedy independent set, all seeded covers,
// dual cycles, dedupe, bound comparison, and the exhaustive-oracle cross
// check when the dual cap allows it.
BoundReport verify_theorem11(const PlanarGraph& p, const OracleCaps& caps = {}, int jobs = 1);

struct Thm12Report {
    std::vector<int> faces;        // face indices of p
    std::vector<int> chosen_edges; // edge ids of p
    int min_face_distance = 0;
    bool hamiltonian = false;
    bool boundary_ok = false;
    bool placement_ok = false;
    std::vector<bool> chosen_on_cycle;
    HamiltonCycle cycle;
    bool pass = false;

    std::string to_text(const PlanarGraph& p) const;
};

// Theorem 1.2 check: faces pairwise further than 4 apart, one chosen edge per
// face (position within the boundary walk); the emitted Hamilton cycle must
// contain every other boundary edge of each face.
Thm12Report verify_theorem12(const PlanarGraph& p, const std::vector<int>& faces_m,
                             const std::vector<int>& chosen_pos, int jobs = 1);

// |B ∪ W| > |G| / 2
bool check_invariant_i(const PlanarGraph& g, const TriColouring& col);

// All adjacency-preserving vertex bijections; intended for n <= 12.
std::vector<std::vector<int>> automorphisms(const PlanarGraph& g);

uint64_t count_cycles_up_to_automorphism(const PlanarGraph& g, const std::vector<HamiltonCycle>& cycles);

} // namespace barnette
