#include "barnette/planar_core.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace barnette {

const char* err_name(Err e) {
    switch (e) {
        case Err::NonSimple: return "NonSimple";
        case Err::NotSymmetric: return "NotSymmetric";
        case Err::NotConnected: return "NotConnected";
        case Err::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case Err::DualNotSimple: return "DualNotSimple";
        case Err::InducedCycleViolation: return "InducedCycleViolation";
        case Err::NotThreeColourable: return "NotThreeColourable";
        case Err::NoAllDegree4Class: return "NoAllDegree4Class";
        case Err::InvalidAlphaTriple: return "InvalidAlphaTriple";
        case Err::NotAPath: return "NotAPath";
        case Err::CenterIsRed: return "CenterIsRed";
        case Err::SeedConflict: return "SeedConflict";
        case Err::DistanceViolation: return "DistanceViolation";
        case Err::ExtensionFailure: return "ExtensionFailure";
        case Err::NotClosedInput: return "NotClosedInput";
        case Err::DegreeViolation: return "DegreeViolation";
        case Err::NotHamiltonian: return "NotHamiltonian";
        case Err::CapExceeded: return "CapExceeded";
        case Err::PipelineFailure: return "PipelineFailure";
        case Err::NotThreeConnected: return "NotThreeConnected";
        case Err::ParseError: return "ParseError";
        case Err::Precondition: return "Precondition";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

int PlanarGraph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return -1;
    const auto& lst = nbr_index_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::make_pair(v, -1));
    if (it != lst.end() && it->first == v) return it->second;
    return -1;
}

int PlanarGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; v++) d = std::max(d, degree(v));
    return d;
}

int PlanarGraph::rot_index(int v, int u) const {
    const auto& r = rotation[v];
    for (int i = 0; i < (int)r.size(); i++)
        if (r[i] == u) return i;
    return -1;
}

PlanarGraph build_graph(const std::vector<std::vector<int>>& rotation_table) {
    PlanarGraph g;
    g.n = (int)rotation_table.size();
    if (g.n < 2) throw Error(Err::Precondition, "need at least 2 vertices");
    g.rotation = rotation_table;

    for (int v = 0; v < g.n; v++) {
        std::vector<int> seen = g.rotation[v];
        std::sort(seen.begin(), seen.end());
        for (size_t i = 0; i < seen.size(); i++) {
            int w = seen[i];
            if (w < 0 || w >= g.n)
                throw Error(Err::ParseError, "neighbor id out of range at vertex " + std::to_string(v + 1));
            if (w == v) throw Error(Err::NonSimple, "loop at vertex " + std::to_string(v + 1));
            if (i > 0 && seen[i] == seen[i - 1])
                throw Error(Err::NonSimple, "parallel edge at vertex " + std::to_string(v + 1));
        }
        if (seen.empty()) throw Error(Err::NotConnected, "isolated vertex " + std::to_string(v + 1));
    }
    for (int v = 0; v < g.n; v++)
        for (int w : g.rotation[v]) {
            bool back = false;
            for (int x : g.rotation[w])
                if (x == v) back = true;
            if (!back)
                throw Error(Err::NotSymmetric, "edge " + std::to_string(v + 1) + "-" +
                                                   std::to_string(w + 1) + " listed at one endpoint only");
        }

    // edge ids: lexicographic over (min,max)
    for (int v = 0; v < g.n; v++)
        for (int w : g.rotation[v])
            if (v < w) g.edges.emplace_back(v, w);
    std::sort(g.edges.begin(), g.edges.end());
    g.nbr_index_.assign(g.n, {});
    for (int e = 0; e < (int)g.edges.size(); e++) {
        auto [u, v] = g.edges[e];
        g.nbr_index_[u].emplace_back(v, e);
        g.nbr_index_[v].emplace_back(u, e);
    }
    for (auto& lst : g.nbr_index_) std::sort(lst.begin(), lst.end());

    // connectivity
    std::vector<char> vis(g.n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation[v])
            if (!vis[w]) {
                vis[w] = 1;
                reached++;
                q.push(w);
            }
    }
    if (reached != g.n) throw Error(Err::NotConnected, "graph is not connected");

    // Euler relation via face trace certifies the sphere embedding
    FaceSet fs = trace_faces(g);
    if (g.n - g.m() + fs.count() != 2)
        throw Error(Err::NotPlanarEmbedding, "rotation system traces " + std::to_string(fs.count()) +
                                                 " faces, Euler relation fails");
    return g;
}

int FaceSet::max_length() const {
    int d = 0;
    for (const auto& w : walk) d = std::max(d, (int)w.size());
    return d;
}

int FaceSet::boundary_edge(const PlanarGraph& g, int f, int pos) const {
    const auto& w = walk[f];
    int len = (int)w.size();
    int e = g.edge_id(w[pos % len], w[(pos + 1) % len]);
    if (e < 0) throw Error(Err::Internal, "face walk contains a non-edge");
    return e;
}

bool FaceSet::is_triangulation() const {
    for (const auto& w : walk)
        if (w.size() != 3) return false;
    return true;
}

FaceSet trace_faces(const PlanarGraph& g) {
    // directed edge = (v, slot in rotation[v]); next along a face keeps the
    // face on one fixed side: (u->v) continues to (v -> successor of u in
    // rotation[v]).
    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; v++) offset[v + 1] = offset[v] + g.degree(v);
    int total = offset[g.n];

    std::vector<int> rev_slot(total); // slot of v within rotation[w] for directed (v,i)->w
    for (int v = 0; v < g.n; v++)
        for (int i = 0; i < g.degree(v); i++) {
            int w = g.rotation[v][i];
            rev_slot[offset[v] + i] = g.rot_index(w, v);
        }

    FaceSet fs;
    fs.edge_faces.assign(g.m(), {-1, -1});
    fs.vertex_faces.assign(g.n, {});
    std::vector<int> face_of(total, -1);

    for (int v = 0; v < g.n; v++) {
        for (int i = 0; i < g.degree(v); i++) {
            int start = offset[v] + i;
            if (face_of[start] >= 0) continue;
            int f = fs.count();
            std::vector<int> wk;
            int cv = v, ci = i;
            do {
                int de = offset[cv] + ci;
                face_of[de] = f;
                wk.push_back(cv);
                int w = g.rotation[cv][ci];
                int j = (rev_slot[de] + 1) % g.degree(w);
                cv = w;
                ci = j;
            } while (!(cv == v && ci == i));
            fs.walk.push_back(std::move(wk));
        }
    }
    for (int e = 0; e < g.m(); e++) {
        auto [u, v] = g.edges[e];
        int iu = g.rot_index(u, v);
        int iv = g.rot_index(v, u);
        fs.edge_faces[e] = {face_of[offset[u] + iu], face_of[offset[v] + iv]};
    }
    for (int f = 0; f < fs.count(); f++)
        for (int v : fs.walk[f]) fs.vertex_faces[v].push_back(f);
    for (auto& lst : fs.vertex_faces) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return fs;
}

std::pair<PlanarGraph, DualCorrespondence> dual_graph(const PlanarGraph& g) {
    FaceSet fs = trace_faces(g);
    int F = fs.count();

    // simplicity of the dual: no bridge (both sides equal), no pair of faces
    // sharing two edges
    std::vector<std::vector<int>> seen(F);
    for (int e = 0; e < g.m(); e++) {
        auto [f, h] = fs.edge_faces[e];
        if (f == h)
            throw Error(Err::DualNotSimple, "bridge edge " + std::to_string(g.edges[e].first + 1) + "-" +
                                                std::to_string(g.edges[e].second + 1) + " gives a dual loop");
        int a = std::min(f, h), b = std::max(f, h);
        for (int prev : seen[a])
            if (prev == b)
                throw Error(Err::DualNotSimple, "faces share two edges, dual has a parallel edge");
        seen[a].push_back(b);
    }

    // dual rotation at face f: faces across the boundary edges, in walk order
    std::vector<std::vector<int>> rot(F);
    for (int f = 0; f < F; f++) {
        int len = fs.length(f);
        rot[f].reserve(len);
        for (int i = 0; i < len; i++) {
            int e = fs.boundary_edge(g, f, i);
            auto [a, b] = fs.edge_faces[e];
            rot[f].push_back(a == f ? b : a);
        }
    }
    PlanarGraph d = build_graph(rot);

    DualCorrespondence corr;
    corr.dual_edge_of_primal.assign(g.m(), -1);
    corr.primal_edge_of_dual.assign(d.m(), -1);
    for (int e = 0; e < g.m(); e++) {
        auto [f, h] = fs.edge_faces[e];
        int de = d.edge_id(f, h);
        if (de < 0) throw Error(Err::Internal, "dual edge lookup failed");
        corr.dual_edge_of_primal[e] = de;
        corr.primal_edge_of_dual[de] = e;
    }

    // face j of the dual <-> the primal vertex its boundary walks around
    FaceSet dfs = trace_faces(d);
    if (dfs.count() != g.n) throw Error(Err::Internal, "dual face count != primal vertex count");
    corr.primal_vertex_of_dual_face.assign(dfs.count(), -1);
    for (int j = 0; j < dfs.count(); j++) {
        int e1 = corr.primal_edge_of_dual[dfs.boundary_edge(d, j, 0)];
        int e2 = corr.primal_edge_of_dual[dfs.boundary_edge(d, j, 1)];
        auto [a, b] = g.edges[e1];
        auto [c, dd] = g.edges[e2];
        int v = (a == c || a == dd) ? a : b;
        if (!((v == c || v == dd) && (v == a || v == b)))
            throw Error(Err::Internal, "dual face does not walk around a single primal vertex");
        corr.primal_vertex_of_dual_face[j] = v;
    }
    return {std::move(d), std::move(corr)};
}

int vertex_distance(const PlanarGraph& g, int u, int v) {
    if (u == v) return 0;
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int w : g.rotation[x])
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                if (w == v) return dist[w];
                q.push(w);
            }
    }
    throw Error(Err::Internal, "vertex_distance on disconnected graph");
}

int face_distance(const PlanarGraph& g, const FaceSet& faces, int f, int h) {
    if (f == h) return 0;
    int F = faces.count();
    std::vector<std::vector<int>> adj(F);
    for (int e = 0; e < g.m(); e++) {
        auto [a, b] = faces.edge_faces[e];
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<int> dist(F, -1);
    std::queue<int> q;
    dist[f] = 0;
    q.push(f);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == h) return dist[y];
                q.push(y);
            }
    }
    throw Error(Err::Internal, "face_distance: face adjacency disconnected");
}

std::vector<int> neighbor_cycle(const PlanarGraph& g, int v) {
    const auto& r = g.rotation[v];
    int d = (int)r.size();
    if (d < 3) throw Error(Err::Precondition, "neighbor_cycle needs degree >= 3");
    for (int i = 0; i < d; i++)
        if (!g.adjacent(r[i], r[(i + 1) % d]))
            throw Error(Err::InducedCycleViolation,
                        "rotation neighbours " + std::to_string(r[i] + 1) + "," +
                            std::to_string(r[(i + 1) % d] + 1) + " of vertex " + std::to_string(v + 1) +
                            " are not adjacent (not a triangulation around v)");
    for (int i = 0; i < d; i++)
        for (int j = i + 2; j < d; j++) {
            if (i == 0 && j == d - 1) continue;
            if (g.adjacent(r[i], r[j]))
                throw Error(Err::InducedCycleViolation,
                            "chord " + std::to_string(r[i] + 1) + "-" + std::to_string(r[j] + 1) +
                                " in the neighbourhood of vertex " + std::to_string(v + 1));
        }
    return r;
}

static bool connected_without(const PlanarGraph& g, const std::vector<char>& removed) {
    int start = -1;
    int want = 0;
    for (int v = 0; v < g.n; v++)
        if (!removed[v]) {
            if (start < 0) start = v;
            want++;
        }
    if (start < 0) return true;
    std::vector<char> vis(g.n, 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int got = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation[v])
            if (!vis[w] && !removed[w]) {
                vis[w] = 1;
                got++;
                q.push(w);
            }
    }
    return got == want;
}

bool vertex_connectivity_at_least(const PlanarGraph& g, int k) {
    if (k < 1 || k > 4) throw Error(Err::Precondition, "supported k is 1..4");
    if (g.n <= k) return false;
    std::vector<char> removed(g.n, 0);
    // sizes 1..k-1; size 0 is connectivity, certified at build
    for (int a = 0; a < g.n && k >= 2; a++) {
        removed[a] = 1;
        if (!connected_without(g, removed)) return false;
        for (int b = a + 1; b < g.n && k >= 3; b++) {
            removed[b] = 1;
            if (!connected_without(g, removed)) return false;
            for (int c = b + 1; c < g.n && k >= 4; c++) {
                removed[c] = 1;
                if (!connected_without(g, removed)) return false;
                removed[c] = 0;
            }
            removed[b] = 0;
        }
        removed[a] = 0;
    }
    return true;
}

std::string emit_rot1(const PlanarGraph& g) {
    std::ostringstream out;
    out << "ROT1 " << g.n << " " << g.m() << "\n";
    for (int v = 0; v < g.n; v++) {
        out << (v + 1) << ":";
        for (int w : g.rotation[v]) out << " " << (w + 1);
        out << "\n";
    }
    return out.str();
}

// strict integer token (no signs, no leading junk)
static int parse_uint(const std::string& tok, const char* what) {
    if (tok.empty()) throw Error(Err::ParseError, std::string("empty ") + what);
    long long val = 0;
    for (char c : tok) {
        if (!std::isdigit((unsigned char)c)) throw Error(Err::ParseError, std::string("bad ") + what + " '" + tok + "'");
        val = val * 10 + (c - '0');
        if (val > 1000000) throw Error(Err::ParseError, std::string(what) + " out of range");
    }
    return (int)val;
}

PlanarGraph parse_rot1(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    if (!cur.empty()) lines.push_back(cur); // tolerate missing final newline
    if (lines.empty()) throw Error(Err::ParseError, "empty ROT1 input");

    std::istringstream hdr(lines[0]);
    std::string magic, ntok, mtok, extra;
    hdr >> magic >> ntok >> mtok;
    if (hdr >> extra) throw Error(Err::ParseError, "trailing tokens in ROT1 header");
    if (magic != "ROT1") throw Error(Err::ParseError, "missing ROT1 header");
    int n = parse_uint(ntok, "vertex count");
    int m = parse_uint(mtok, "edge count");
    if ((int)lines.size() != n + 1) throw Error(Err::ParseError, "expected " + std::to_string(n) + " rotation lines");

    std::vector<std::vector<int>> table(n);
    for (int v = 0; v < n; v++) {
        const std::string& line = lines[v + 1];
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(Err::ParseError, "missing ':' on line " + std::to_string(v + 2));
        if (parse_uint(line.substr(0, colon), "vertex label") != v + 1)
            throw Error(Err::ParseError, "rotation lines must be in ascending vertex order");
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        while (rest >> tok) {
            int w = parse_uint(tok, "neighbor id");
            if (w < 1 || w > n) throw Error(Err::ParseError, "neighbor id out of range on line " + std::to_string(v + 2));
            table[v].push_back(w - 1);
        }
        if (!line.empty() && line.back() == ' ') throw Error(Err::ParseError, "trailing space on line " + std::to_string(v + 2));
    }
    PlanarGraph g = build_graph(table);
    if (g.m() != m) throw Error(Err::ParseError, "header edge count does not match rotation table");
    return g;
}

bool induced_acyclic(const PlanarGraph& g, const std::vector<char>& in) {
    Dsu dsu(g.n);
    for (int e = 0; e < g.m(); e++) {
        auto [u, v] = g.edges[e];
        if (in[u] && in[v] && !dsu.join(u, v)) return false;
    }
    return true;
}

bool induced_connected(const PlanarGraph& g, const std::vector<char>& in) {
    int start = -1, want = 0;
    for (int v = 0; v < g.n; v++)
        if (in[v]) {
            if (start < 0) start = v;
            want++;
        }
    if (want <= 1) return true;
    std::vector<char> vis(g.n, 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int got = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation[v])
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                got++;
                q.push(w);
            }
    }
    return got == want;
}

bool connected_within(const PlanarGraph& g, const std::vector<char>& in, int a, int b) {
    if (!in[a] || !in[b]) return false;
    if (a == b) return true;
    std::vector<char> vis(g.n, 0);
    std::queue<int> q;
    q.push(a);
    vis[a] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.rotation[v])
            if (in[w] && !vis[w]) {
                if (w == b) return true;
                vis[w] = 1;
                q.push(w);
            }
    }
    return false;
}

std::vector<char> mask_of(const std::vector<int>& vertices, int n) {
    std::vector<char> m(n, 0);
    for (int v : vertices) m[v] = 1;
    return m;
}

} // namespace barnette
