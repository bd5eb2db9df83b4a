#include "barnette/stein.hpp"

#include <algorithm>
#include <sstream>

namespace barnette {

std::vector<int> cut_edges(const PlanarGraph& g, const CoverPair& cover) {
    std::vector<int> side(g.n, -1);
    for (int v : cover.X) side[v] = 0;
    for (int v : cover.Y) side[v] = 1;
    for (int v = 0; v < g.n; v++)
        if (side[v] < 0) throw Error(Err::Precondition, "cover must partition all vertices");
    std::vector<int> out;
    for (int e = 0; e < g.m(); e++)
        if (side[g.edges[e].first] != side[g.edges[e].second]) out.push_back(e);
    return out;
}

HamiltonCycle cycle_from_dual_edges(const PlanarGraph& dual, const std::vector<int>& dual_edge_ids) {
    HamiltonCycle h;
    for (int e : dual_edge_ids) h.edges.push_back(dual.edges[e]);
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::variant<HamiltonCycle, CycleCover> cover_to_dual_cycle(const PlanarGraph& g, const CoverPair& cover,
                                                            const PlanarGraph& dual,
                                                            const std::vector<int>& g_edge_to_dual_edge) {
    std::vector<int> cut = cut_edges(g, cover);
    std::vector<std::vector<int>> incident(dual.n);
    for (int e : cut) {
        int de = g_edge_to_dual_edge[e];
        incident[dual.edges[de].first].push_back(dual.edges[de].second);
        incident[dual.edges[de].second].push_back(dual.edges[de].first);
    }
    for (int v = 0; v < dual.n; v++)
        if (incident[v].size() != 2)
            throw Error(Err::DegreeViolation, "dual vertex " + std::to_string(v + 1) + " has cut degree " +
                                                  std::to_string(incident[v].size()));

    // 2-regular: decompose into cycles by walking
    std::vector<char> used(dual.n, 0);
    CycleCover cc;
    for (int start = 0; start < dual.n; start++) {
        if (used[start]) continue;
        std::vector<std::pair<int, int>> cyc;
        int prev = -1, cur = start;
        do {
            used[cur] = 1;
            int next = (incident[cur][0] == prev) ? incident[cur][1] : incident[cur][0];
            cyc.push_back({std::min(cur, next), std::max(cur, next)});
            prev = cur;
            cur = next;
        } while (cur != start);
        std::sort(cyc.begin(), cyc.end());
        cc.cycles.push_back(std::move(cyc));
    }
    if (cc.cycles.size() == 1) {
        HamiltonCycle h;
        h.edges = std::move(cc.cycles[0]);
        return h;
    }
    return cc;
}

bool verify_hamilton(const PlanarGraph& p, const HamiltonCycle& cycle) {
    if ((int)cycle.edges.size() != p.n) return false;
    std::vector<std::vector<int>> inc(p.n);
    for (auto [u, v] : cycle.edges) {
        if (p.edge_id(u, v) < 0) return false;
        inc[u].push_back(v);
        inc[v].push_back(u);
    }
    for (int v = 0; v < p.n; v++)
        if (inc[v].size() != 2) return false;
    int prev = -1, cur = 0, steps = 0;
    do {
        int next = (inc[cur][0] == prev) ? inc[cur][1] : inc[cur][0];
        prev = cur;
        cur = next;
        steps++;
    } while (cur != 0 && steps <= p.n);
    return cur == 0 && steps == p.n;
}

CoverPair cycle_to_cover(const PlanarGraph& p, const HamiltonCycle& cycle, const PlanarGraph& g,
                         const std::vector<int>& face_to_g_vertex) {
    if (!verify_hamilton(p, cycle)) throw Error(Err::NotHamiltonian, "input is not a Hamilton cycle of the graph");
    FaceSet faces = trace_faces(p);
    std::vector<char> on_cycle(p.m(), 0);
    for (auto [u, v] : cycle.edges) on_cycle[p.edge_id(u, v)] = 1;

    // faces joined across non-cycle edges share a region; the cycle is a
    // closed curve, so exactly two regions remain
    Dsu dsu(faces.count());
    for (int e = 0; e < p.m(); e++)
        if (!on_cycle[e]) dsu.join(faces.edge_faces[e][0], faces.edge_faces[e][1]);

    int f0 = -1; // face of the lowest-id dual vertex goes to X
    for (int f = 0; f < faces.count(); f++)
        if (face_to_g_vertex[f] == 0) f0 = f;
    if (f0 < 0) throw Error(Err::Precondition, "face map does not cover dual vertex 1");
    int root_x = dsu.find(f0);

    CoverPair cover;
    int regions_seen = 0;
    std::vector<int> roots;
    for (int f = 0; f < faces.count(); f++) {
        int r = dsu.find(f);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
            roots.push_back(r);
            regions_seen++;
        }
        (r == root_x ? cover.X : cover.Y).push_back(face_to_g_vertex[f]);
    }
    if (regions_seen != 2) throw Error(Err::Internal, "Hamilton cycle split the sphere into != 2 regions");
    std::sort(cover.X.begin(), cover.X.end());
    std::sort(cover.Y.begin(), cover.Y.end());

    std::vector<char> mx = mask_of(cover.X, g.n), my = mask_of(cover.Y, g.n);
    if (!induced_acyclic(g, mx) || !induced_connected(g, mx) || !induced_acyclic(g, my) || !induced_connected(g, my))
        throw Error(Err::Internal, "cycle regions did not induce two trees");
    cover.connected_X = cover.connected_Y = true;
    return cover;
}

std::string HamiltonCycle::to_cyc1() const {
    std::ostringstream out;
    out << "CYC1 " << edges.size() << "\n";
    for (auto [u, v] : edges) out << (u + 1) << "-" << (v + 1) << "\n";
    return out.str();
}

HamiltonCycle HamiltonCycle::parse_cyc1(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error(Err::ParseError, "empty CYC1 input");
    std::istringstream hdr(line);
    std::string magic;
    long long count = -1;
    if (!(hdr >> magic >> count) || magic != "CYC1" || count < 0)
        throw Error(Err::ParseError, "missing CYC1 header");
    HamiltonCycle h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto dash = line.find('-');
        if (dash == std::string::npos) throw Error(Err::ParseError, "CYC1 edge token must be u-v");
        long long u = 0, v = 0;
        try {
            u = std::stoll(line.substr(0, dash));
            v = std::stoll(line.substr(dash + 1));
        } catch (...) {
            throw Error(Err::ParseError, "bad CYC1 edge token '" + line + "'");
        }
        if (u < 1 || v < 1 || u == v) throw Error(Err::ParseError, "CYC1 ids are distinct and 1-based");
        h.edges.push_back({(int)std::min(u, v) - 1, (int)std::max(u, v) - 1});
    }
    if ((long long)h.edges.size() != count) throw Error(Err::ParseError, "CYC1 header count mismatch");
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

} // namespace barnette
