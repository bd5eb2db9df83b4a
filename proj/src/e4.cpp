#include "barnette/e4.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace barnette {

std::vector<int> TriColouring::cls(Colour c) const {
    std::vector<int> out;
    for (int v = 0; v < (int)colour.size(); v++)
        if (colour[v] == c) out.push_back(v);
    return out;
}

TriColouring three_colour_from(const PlanarGraph& g, const FaceSet& faces, int seed_face) {
    if (!faces.is_triangulation() || g.n < 4)
        throw Error(Err::Precondition, "three_colour needs a plane triangulation");

    std::vector<int> col(g.n, -1);
    const auto& seed = faces.walk[seed_face];
    col[seed[0]] = 0;
    col[seed[1]] = 1;
    col[seed[2]] = 2;

    // walk the dual: a new face shares an edge (two coloured vertices) with a
    // processed one, so the third colour is forced
    std::vector<char> done(faces.count(), 0);
    std::queue<int> q;
    q.push(seed_face);
    done[seed_face] = 1;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& w = faces.walk[f];
        int known = 0, missing = -1;
        int a = -1, b = -1;
        for (int i = 0; i < 3; i++) {
            if (col[w[i]] >= 0) {
                known++;
                (a < 0 ? a : b) = col[w[i]];
            } else
                missing = i;
        }
        if (known < 2) throw Error(Err::Internal, "face reached with fewer than two coloured vertices");
        if (known == 2) {
            if (a == b) throw Error(Err::NotThreeColourable, "propagation conflict at a face");
            col[w[missing]] = 3 - a - b;
        } else {
            if (col[w[0]] == col[w[1]] || col[w[0]] == col[w[2]] || col[w[1]] == col[w[2]])
                throw Error(Err::NotThreeColourable, "propagation conflict at a face");
        }
        for (int i = 0; i < 3; i++) {
            int e = faces.boundary_edge(g, f, i);
            auto [a, b] = faces.edge_faces[e];
            int other = (a == f) ? b : a;
            if (!done[other]) {
                done[other] = 1;
                q.push(other);
            }
        }
    }
    for (int v = 0; v < g.n; v++)
        if (col[v] < 0) throw Error(Err::Internal, "uncoloured vertex after propagation");
    for (auto [u, v] : g.edges)
        if (col[u] == col[v]) throw Error(Err::NotThreeColourable, "edge with equal endpoint colours");

    TriColouring out;
    out.colour.resize(g.n);
    for (int v = 0; v < g.n; v++) out.colour[v] = (Colour)col[v];
    return out;
}

TriColouring three_colour(const PlanarGraph& g) {
    FaceSet faces = trace_faces(g);
    return three_colour_from(g, faces, 0);
}

Colour red_class(const PlanarGraph& g, const TriColouring& col) {
    for (int c = 0; c < 3; c++) {
        bool all4 = true, any = false;
        for (int v = 0; v < g.n; v++)
            if ((int)col.colour[v] == c) {
                any = true;
                if (g.degree(v) != 4) all4 = false;
            }
        if (any && all4) return (Colour)c;
    }
    throw Error(Err::NoAllDegree4Class, "no colour class consists solely of degree-4 vertices");
}

TriColouring canonicalise_colouring(const PlanarGraph& g, const TriColouring& col) {
    Colour r = red_class(g, col);
    int lowest_non_red = -1;
    for (int v = 0; v < g.n; v++)
        if (col.colour[v] != r) {
            lowest_non_red = v;
            break;
        }
    if (lowest_non_red < 0) throw Error(Err::Internal, "single-class colouring");
    Colour b = col.colour[lowest_non_red];
    TriColouring out;
    out.colour.resize(g.n);
    for (int v = 0; v < g.n; v++) {
        Colour c = col.colour[v];
        out.colour[v] = (c == r) ? Colour::R : (c == b) ? Colour::B : Colour::W;
    }
    return out;
}

TriColouring colour_e4(const PlanarGraph& g) { return canonicalise_colouring(g, three_colour(g)); }

// exact cover of all vertices by facial 4-cycles, first-fail vertex ordering
static bool cover_4faces(const PlanarGraph& g, const FaceSet& faces, const std::vector<int>& quads,
                         const std::vector<std::vector<int>>& at_vertex, std::vector<char>& covered,
                         std::vector<char>& used, std::vector<int>& chosen) {
    int best = -1, best_count = -1;
    for (int v = 0; v < g.n; v++) {
        if (covered[v]) continue;
        int cnt = 0;
        for (int qi : at_vertex[v]) {
            bool free = true;
            for (int u : faces.walk[quads[qi]])
                if (covered[u]) free = false;
            if (free) cnt++;
        }
        if (best < 0 || cnt < best_count) {
            best = v;
            best_count = cnt;
            if (cnt == 0) return false;
        }
    }
    if (best < 0) return true; // everything covered
    for (int qi : at_vertex[best]) {
        if (used[qi]) continue;
        bool free = true;
        for (int u : faces.walk[quads[qi]])
            if (covered[u]) free = false;
        if (!free) continue;
        used[qi] = 1;
        for (int u : faces.walk[quads[qi]]) covered[u] = 1;
        chosen.push_back(qi);
        if (cover_4faces(g, faces, quads, at_vertex, covered, used, chosen)) return true;
        chosen.pop_back();
        for (int u : faces.walk[quads[qi]]) covered[u] = 0;
        used[qi] = 0;
    }
    return false;
}

static bool bipartite_check(const PlanarGraph& g, std::vector<int>& odd_cycle) {
    std::vector<int> side(g.n, -1), parent(g.n, -1);
    std::queue<int> q;
    side[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation[v]) {
            if (side[w] < 0) {
                side[w] = side[v] ^ 1;
                parent[w] = v;
                q.push(w);
            } else if (side[w] == side[v]) {
                // walk both BFS branches up to the meeting point
                std::vector<int> pa, pb;
                int a = v, b = w;
                std::vector<char> on_a(g.n, 0);
                for (int x = a; x >= 0; x = parent[x]) {
                    pa.push_back(x);
                    on_a[x] = 1;
                }
                int meet = -1;
                for (int x = b; x >= 0; x = parent[x]) {
                    pb.push_back(x);
                    if (on_a[x]) {
                        meet = x;
                        break;
                    }
                }
                odd_cycle.clear();
                for (int x : pa) {
                    odd_cycle.push_back(x);
                    if (x == meet) break;
                }
                for (int i = (int)pb.size() - 2; i >= 0; i--) odd_cycle.push_back(pb[i]);
                return false;
            }
        }
    }
    return true;
}

static std::vector<int> find_small_cut(const PlanarGraph& g) {
    for (int k = 1; k <= 2; k++) {
        std::vector<char> removed(g.n, 0);
        if (k == 1) {
            for (int a = 0; a < g.n; a++) {
                removed.assign(g.n, 0);
                removed[a] = 1;
                std::vector<char> in(g.n, 1);
                in[a] = 0;
                if (!induced_connected(g, in)) return {a};
            }
        } else {
            for (int a = 0; a < g.n; a++)
                for (int b = a + 1; b < g.n; b++) {
                    std::vector<char> in(g.n, 1);
                    in[a] = in[b] = 0;
                    if (!induced_connected(g, in)) return {a, b};
                }
        }
    }
    return {};
}

ClassReport classify(const PlanarGraph& g) {
    ClassReport rep;
    FaceSet faces = trace_faces(g);

    rep.is_cubic = true;
    rep.is_eulerian = true;
    for (int v = 0; v < g.n; v++) {
        if (g.degree(v) != 3) rep.is_cubic = false;
        if (g.degree(v) % 2 != 0) rep.is_eulerian = false;
    }
    rep.is_bipartite = bipartite_check(g, rep.odd_cycle);
    rep.is_3_connected = vertex_connectivity_at_least(g, 3);
    if (!rep.is_3_connected) rep.small_cut = find_small_cut(g);
    rep.is_triangulation = faces.is_triangulation() && g.n >= 4;

    if (rep.is_cubic) {
        std::vector<int> quads;
        for (int f = 0; f < faces.count(); f++)
            if (faces.length(f) == 4) quads.push_back(f);
        std::vector<std::vector<int>> at_vertex(g.n);
        bool every_vertex_on_quad = true;
        for (int v = 0; v < g.n; v++) {
            for (int qi = 0; qi < (int)quads.size(); qi++)
                for (int u : faces.walk[quads[qi]])
                    if (u == v) at_vertex[v].push_back(qi);
            if (at_vertex[v].empty()) every_vertex_on_quad = false;
        }
        if (every_vertex_on_quad && g.n % 4 == 0) {
            std::vector<char> covered(g.n, 0), used(quads.size(), 0);
            std::vector<int> chosen;
            if (cover_4faces(g, faces, quads, at_vertex, covered, used, chosen)) {
                rep.has_4face_2factor = true;
                for (int qi : chosen) rep.two_factor_faces.push_back(quads[qi]);
                std::sort(rep.two_factor_faces.begin(), rep.two_factor_faces.end());
            }
        }
    }

    if (rep.is_triangulation) {
        try {
            TriColouring col = three_colour_from(g, faces, 0);
            Colour r = red_class(g, col);
            rep.is_E4 = true;
            rep.red_vertices = col.cls(r);
        } catch (const Error& e) {
            if (e.code != Err::NotThreeColourable && e.code != Err::NoAllDegree4Class) throw;
        }
    }
    return rep;
}

static void put_flag(std::ostringstream& out, const char* key, bool v) {
    out << key << "=" << (v ? "true" : "false") << "\n";
}

static void put_ids(std::ostringstream& out, const char* key, const std::vector<int>& ids) {
    out << key << "=";
    for (size_t i = 0; i < ids.size(); i++) out << (i ? " " : "") << (ids[i] + 1);
    out << "\n";
}

std::string ClassReport::to_text() const {
    std::ostringstream out;
    put_flag(out, "is_cubic", is_cubic);
    put_flag(out, "is_bipartite", is_bipartite);
    put_flag(out, "is_3_connected", is_3_connected);
    put_flag(out, "is_plane", is_plane);
    put_flag(out, "has_4face_2factor", has_4face_2factor);
    put_flag(out, "is_triangulation", is_triangulation);
    put_flag(out, "is_eulerian", is_eulerian);
    put_flag(out, "is_E4", is_E4);
    if (!is_bipartite) put_ids(out, "witness_odd_cycle", odd_cycle);
    if (!is_3_connected) put_ids(out, "witness_small_cut", small_cut);
    if (has_4face_2factor) put_ids(out, "witness_two_factor_faces", two_factor_faces);
    if (is_E4) put_ids(out, "witness_red_class", red_vertices);
    return out.str();
}

} // namespace barnette
