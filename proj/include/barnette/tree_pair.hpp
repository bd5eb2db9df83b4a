#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "barnette/e4.hpp"
#include "barnette/planar_core.hpp"

namespace barnette {

// Disjoint induced acyclic subgraphs satisfying the (black,white)-closed
// absorption conditions. Vertex lists sorted ascending.
struct ClosedPair {
    std::vector<int> C, D;
};

// Exact partition of V(G) into two induced acyclic subgraphs.
struct CoverPair {
    std::vector<int> X, Y;
    bool connected_X = false;
    bool connected_Y = false;

    bool operator==(const CoverPair& o) const { return X == o.X && Y == o.Y; }
};

// Per-vertex seed choice: the star around v, or the path N(v) minus one red
// neighbour. deg(v)/2 + 1 legal choices per vertex.
struct Choice {
    bool star = true;
    int red_neighbor = -1; // meaningful when !star
};

struct ChoiceVector {
    std::vector<std::pair<int, Choice>> items; // keyed by K vertex, ascending

    std::string to_text() const; // "v:STAR" / "v:PATH:r" tokens, 1-based
    bool operator==(const ChoiceVector& o) const;
};

struct Violation {
    int vertex;
    int condition; // 1 or 2
    int witness;   // the C/D vertex that forces absorption
};

// G[B∪W] plus an edge between same-coloured vertices at graph distance 2.
// Adjacency indexed by G vertex id; only member entries populated.
struct AuxGraphJ {
    std::vector<int> vertices; // sorted members (B∪W)
    std::vector<char> member;
    std::vector<std::vector<int>> adj;

    int max_degree() const;
};

AuxGraphJ build_auxiliary_J(const PlanarGraph& g, const TriColouring& col);

struct GreedyResult {
    std::vector<int> K; // largest greedy colour class, sorted
    int colours_used = 0;
};

// Greedy colouring in ascending vertex-id order; K is the largest class
// (lowest colour wins ties).
GreedyResult greedy_chromatic_independent_set(const AuxGraphJ& j);

// N(v) \ {nv}; the induced subgraph must be a path (the neighbour cycle minus
// one vertex). Sorted vertex set.
std::vector<int> path_subgraph(const PlanarGraph& g, int v, int nv);

// {v} ∪ (N(v) ∩ W) for black v, {v} ∪ (N(v) ∩ B) for white v.
std::vector<int> star_subgraph(const PlanarGraph& g, const TriColouring& col, int v);

// Star with an explicit leaf colour; the centre may be red (Theorem 1.4 use).
std::vector<int> star_with_leaves(const PlanarGraph& g, const TriColouring& col, int center, Colour leaves);

ClosedPair seed_pair_thm13(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K,
                           const ChoiceVector& choices);

// n maps each v in L to a chosen neighbour; L needs pairwise distance >= 5.
ClosedPair seed_pair_thm14(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& L,
                           const std::map<int, int>& n);

// Empty list iff the pair is (black,white)-closed.
std::vector<Violation> check_bw_closed(const PlanarGraph& g, const TriColouring& col, const ClosedPair& pair);

// The extension procedure: bulk black/white absorption, then red vertices in
// ascending id order (ties go to the first side). Acyclicity is asserted
// after every step; a failure would falsify the underlying lemma and is
// raised as ExtensionFailure.
CoverPair extend_cover(const PlanarGraph& g, const TriColouring& col, const ClosedPair& pair);

uint64_t thm13_choice_count(const PlanarGraph& g, const std::vector<int>& K);

ChoiceVector decode_choice(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K, uint64_t index);

// All ∏(deg/2+1) choice vectors with their extended covers, in choice-index
// order. jobs > 1 splits the index range across OpenMP threads; the output is
// identical to the serial run.
std::vector<std::pair<ChoiceVector, CoverPair>> enumerate_thm13_covers(const PlanarGraph& g, const TriColouring& col,
                                                                       const std::vector<int>& K, int jobs = 1);

// Serial reference for the enumeration kernel.
std::vector<std::pair<ChoiceVector, CoverPair>> enumerate_thm13_covers_serial(const PlanarGraph& g,
                                                                              const TriColouring& col,
                                                                              const std::vector<int>& K);

// Chunked driver shared by both paths; chunks arrive in index order.
void for_each_thm13_cover(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K, int jobs,
                          const std::function<void(uint64_t, const ChoiceVector&, const CoverPair&)>& sink);

std::string cover_to_text(const CoverPair& cover); // two sorted id lists

} // namespace barnette
