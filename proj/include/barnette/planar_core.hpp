#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "barnette/error.hpp"

namespace barnette {

// Plane graph stored as a rotation system: for every vertex the clockwise
// cyclic order of its neighbours. Vertices are 0-based ints internally; all
// text formats use 1-based ids. Immutable after build_graph; every operation
// below is a pure function, so concurrent readers are fine.
struct PlanarGraph {
    int n = 0;
    std::vector<std::vector<int>> rotation;
    // Undirected edges in lexicographic order (first < second); the position
    // in this vector is the stable edge id.
    std::vector<std::pair<int, int>> edges;

    int m() const { return (int)edges.size(); }
    int degree(int v) const { return (int)rotation[v].size(); }
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }
    int edge_id(int u, int v) const; // -1 if not an edge
    int max_degree() const;

    // index of u within rotation[v]
    int rot_index(int v, int u) const;

  private:
    friend PlanarGraph build_graph(const std::vector<std::vector<int>>&);
    std::vector<std::vector<std::pair<int, int>>> nbr_index_; // (nbr, edge id), sorted
};

// Validates simplicity, symmetry, connectivity and the Euler relation (via a
// face trace), so a successfully built PlanarGraph certifies a sphere
// embedding.
PlanarGraph build_graph(const std::vector<std::vector<int>>& rotation_table);

struct FaceSet {
    // walk[f] is the cyclic vertex sequence of face f; boundary edge i of the
    // walk joins walk[f][i] and walk[f][(i+1) % len].
    std::vector<std::vector<int>> walk;
    std::vector<std::array<int, 2>> edge_faces; // per edge id, both sides
    std::vector<std::vector<int>> vertex_faces; // sorted, deduplicated

    int count() const { return (int)walk.size(); }
    int length(int f) const { return (int)walk[f].size(); }
    int max_length() const;
    int boundary_edge(const PlanarGraph& g, int f, int pos) const;
    bool is_triangulation() const;
};

FaceSet trace_faces(const PlanarGraph& g);

struct DualCorrespondence {
    // Face i of the primal is vertex i of the dual.
    std::vector<int> dual_edge_of_primal;
    std::vector<int> primal_edge_of_dual;
    // Face j of the dual corresponds to this primal vertex.
    std::vector<int> primal_vertex_of_dual_face;
};

// Dual must be simple (throws DualNotSimple on bridges or doubly shared
// faces); always holds for the 3-connected inputs used here.
std::pair<PlanarGraph, DualCorrespondence> dual_graph(const PlanarGraph& g);

int vertex_distance(const PlanarGraph& g, int u, int v);

// Shortest face-sequence length; equals BFS distance in the dual because
// shortest dual paths are induced.
int face_distance(const PlanarGraph& g, const FaceSet& faces, int f, int h);

// Rotation order at v; on a 4-connected triangulation this is exactly the
// cycle induced by N(v) (chords raise InducedCycleViolation).
std::vector<int> neighbor_cycle(const PlanarGraph& g, int v);

// Brute-force cut enumeration, k <= 4. Doubles as an oracle at desk scale.
bool vertex_connectivity_at_least(const PlanarGraph& g, int k);

// ROT1 text format. parse/emit round-trip byte-exactly.
std::string emit_rot1(const PlanarGraph& g);
PlanarGraph parse_rot1(const std::string& text);

// --- small shared utilities -------------------------------------------------

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; i++) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if already joined
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Induced-subgraph predicates over a membership mask (mask.size() == n).
bool induced_acyclic(const PlanarGraph& g, const std::vector<char>& in);
bool induced_connected(const PlanarGraph& g, const std::vector<char>& in); // empty set counts as connected
bool connected_within(const PlanarGraph& g, const std::vector<char>& in, int a, int b);

std::vector<char> mask_of(const std::vector<int>& vertices, int n);

} // namespace barnette
