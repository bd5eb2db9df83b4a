#include "barnette/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barnette {

namespace {

struct HamiltonSearch {
    const PlanarGraph& p;
    std::vector<char> visited;
    std::vector<int> path;
    std::vector<HamiltonCycle>& out;

    HamiltonSearch(const PlanarGraph& g, std::vector<HamiltonCycle>& sink) : p(g), out(sink) {
        visited.assign(p.n, 0);
    }

    bool unvisited_reachable() {
        // every unvisited vertex must still be reachable from the path head
        int head = path.back();
        std::vector<char> seen(p.n, 0);
        std::vector<int> stack = {head};
        seen[head] = 1;
        int want = p.n - (int)path.size();
        if (want == 0) return true;
        int got = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : p.rotation[v]) {
                if (seen[w]) continue;
                if (visited[w] && w != 0) continue;
                seen[w] = 1;
                if (!visited[w]) got++;
                stack.push_back(w);
            }
        }
        return got == want;
    }

    void record() {
        HamiltonCycle h;
        for (size_t i = 0; i < path.size(); i++) {
            int u = path[i], v = path[(i + 1) % path.size()];
            h.edges.push_back({std::min(u, v), std::max(u, v)});
        }
        std::sort(h.edges.begin(), h.edges.end());
        out.push_back(std::move(h));
    }

    void extend() {
        int v = path.back();
        if ((int)path.size() == p.n) {
            if (p.adjacent(v, 0) && path[1] < v) record(); // orientation guard: each cycle once
            return;
        }
        if (!unvisited_reachable()) return;
        std::vector<int> nbrs;
        for (auto w : p.rotation[v]) nbrs.push_back(w);
        std::sort(nbrs.begin(), nbrs.end());
        for (int w : nbrs) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            visited[w] = 0;
        }
    }

    // run the search below a fixed prefix (prefix[0] == 0)
    void run(const std::vector<int>& prefix) {
        path = prefix;
        for (int v : prefix) visited[v] = 1;
        extend();
        for (int v : prefix) visited[v] = 0;
    }
};

std::vector<std::vector<int>> hamilton_prefixes(const PlanarGraph& p, int depth) {
    std::vector<std::vector<int>> out, frontier = {{0}};
    for (int d = 1; d < depth; d++) {
        std::vector<std::vector<int>> next;
        for (const auto& pre : frontier) {
            std::vector<int> nbrs = p.rotation[pre.back()];
            std::sort(nbrs.begin(), nbrs.end());
            for (int w : nbrs) {
                if (std::find(pre.begin(), pre.end(), w) != pre.end()) continue;
                auto ext = pre;
                ext.push_back(w);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    out = std::move(frontier);
    return out;
}

void dedupe_sorted_guard(std::vector<HamiltonCycle>& cycles) {
    auto sorted = cycles;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Err::Internal, "backtracking produced a duplicate cycle");
}

} // namespace

std::vector<HamiltonCycle> enumerate_hamilton_cycles_serial(const PlanarGraph& p, const OracleCaps& caps) {
    if (p.n > caps.hamilton_vertex_cap)
        throw Error(Err::CapExceeded, "cycle enumeration capped at " + std::to_string(caps.hamilton_vertex_cap) +
                                          " vertices, got " + std::to_string(p.n));
    std::vector<HamiltonCycle> out;
    HamiltonSearch s(p, out);
    s.run({0});
    dedupe_sorted_guard(out);
    return out;
}

std::vector<HamiltonCycle> enumerate_hamilton_cycles(const PlanarGraph& p, const OracleCaps& caps, int jobs) {
    if (jobs <= 1) return enumerate_hamilton_cycles_serial(p, caps);
    if (p.n > caps.hamilton_vertex_cap)
        throw Error(Err::CapExceeded, "cycle enumeration capped at " + std::to_string(caps.hamilton_vertex_cap) +
                                          " vertices, got " + std::to_string(p.n));
    int depth = std::min(4, std::max(2, p.n - 1));
    auto prefixes = hamilton_prefixes(p, depth);
    std::vector<std::vector<HamiltonCycle>> parts(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < (long long)prefixes.size(); i++) {
        HamiltonSearch s(p, parts[i]);
        s.run(prefixes[i]);
    }
    std::vector<HamiltonCycle> out;
    for (auto& part : parts)
        for (auto& h : part) out.push_back(std::move(h));
    dedupe_sorted_guard(out);
    return out;
}

namespace {

// one sweep step: classify the bipartition encoded by mask (bit i-1 = vertex i
// joins X next to the pinned vertex 0)
struct SweepResult {
    bool acyclic = false;
    bool trees = false;
};

SweepResult classify_mask(const PlanarGraph& g, uint64_t mask, std::vector<int>& side, Dsu& dx, Dsu& dy) {
    side[0] = 0;
    for (int v = 1; v < g.n; v++) side[v] = (mask >> (v - 1)) & 1 ? 0 : 1;
    for (int v = 0; v < g.n; v++) dx.parent[v] = dy.parent[v] = v;
    int nx = 0, ny = 0;
    for (int v = 0; v < g.n; v++) (side[v] == 0 ? nx : ny)++;
    int joins_x = 0, joins_y = 0;
    for (auto [u, v] : g.edges) {
        if (side[u] != side[v]) continue;
        if (side[u] == 0) {
            if (!dx.join(u, v)) return {};
            joins_x++;
        } else {
            if (!dy.join(u, v)) return {};
            joins_y++;
        }
    }
    SweepResult r;
    r.acyclic = true;
    // forest with c components has n-c edges; connected <=> joins == n-1
    bool cx = nx == 0 || joins_x == nx - 1;
    bool cy = ny == 0 || joins_y == ny - 1;
    r.trees = cx && cy;
    return r;
}

CoverPair cover_from_mask(const PlanarGraph& g, uint64_t mask) {
    CoverPair c;
    c.X.push_back(0);
    for (int v = 1; v < g.n; v++)
        if ((mask >> (v - 1)) & 1)
            c.X.push_back(v);
        else
            c.Y.push_back(v);
    c.connected_X = c.connected_Y = true;
    return c;
}

} // namespace

CoverCounts enumerate_cover_pairs_serial(const PlanarGraph& g, const OracleCaps& caps, size_t list_limit) {
    if (g.n > caps.cover_vertex_cap)
        throw Error(Err::CapExceeded, "cover sweep capped at " + std::to_string(caps.cover_vertex_cap) +
                                          " vertices, got " + std::to_string(g.n));
    CoverCounts out;
    uint64_t total = 1ull << (g.n - 1);
    std::vector<int> side(g.n);
    Dsu dx(g.n), dy(g.n);
    for (uint64_t mask = 0; mask < total; mask++) {
        SweepResult r = classify_mask(g, mask, side, dx, dy);
        if (!r.acyclic) continue;
        out.acyclic_pairs++;
        if (r.trees) {
            out.tree_pairs++;
            if (out.tree_pair_list.size() < list_limit) out.tree_pair_list.push_back(cover_from_mask(g, mask));
        }
    }
    out.list_complete = out.tree_pair_list.size() == out.tree_pairs;
    return out;
}

CoverCounts enumerate_cover_pairs(const PlanarGraph& g, const OracleCaps& caps, int jobs, size_t list_limit) {
    if (jobs <= 1) return enumerate_cover_pairs_serial(g, caps, list_limit);
    if (g.n > caps.cover_vertex_cap)
        throw Error(Err::CapExceeded, "cover sweep capped at " + std::to_string(caps.cover_vertex_cap) +
                                          " vertices, got " + std::to_string(g.n));
    uint64_t total = 1ull << (g.n - 1);
    CoverCounts out;
    std::vector<uint64_t> tree_masks;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
#endif
    {
        std::vector<int> side(g.n);
        Dsu dx(g.n), dy(g.n);
        uint64_t acyc = 0;
        std::vector<uint64_t> local_trees;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long mask = 0; mask < (long long)total; mask++) {
            SweepResult r = classify_mask(g, (uint64_t)mask, side, dx, dy);
            if (!r.acyclic) continue;
            acyc++;
            if (r.trees) local_trees.push_back((uint64_t)mask);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            out.acyclic_pairs += acyc;
            tree_masks.insert(tree_masks.end(), local_trees.begin(), local_trees.end());
        }
    }
    std::sort(tree_masks.begin(), tree_masks.end());
    out.tree_pairs = tree_masks.size();
    for (uint64_t mask : tree_masks) {
        if (out.tree_pair_list.size() >= list_limit) break;
        out.tree_pair_list.push_back(cover_from_mask(g, mask));
    }
    out.list_complete = out.tree_pair_list.size() == out.tree_pairs;
    return out;
}

double hamilton_lower_bound_faces(int face_count, int max_face_len) {
    return std::pow(3.0, 2.0 * face_count / ((double)max_face_len * max_face_len));
}

double hamilton_lower_bound(const PlanarGraph& p) {
    FaceSet fs = trace_faces(p);
    return hamilton_lower_bound_faces(fs.count(), fs.max_length());
}

long long required_cycles(double bound) { return (long long)std::ceil(bound - 1e-9); }

bool check_invariant_i(const PlanarGraph& g, const TriColouring& col) {
    int bw = 0;
    for (int v = 0; v < g.n; v++)
        if (!col.is_red(v)) bw++;
    return 2 * bw > g.n;
}

BoundReport verify_theorem11(const PlanarGraph& p, const OracleCaps& caps, int jobs) {
    BoundReport rep;
    rep.n = p.n;
    rep.m = p.m();

    auto stage = [](const char* tag, auto&& fn) {
        try {
            return fn();
        } catch (const Error& e) {
            if (e.code == Err::Precondition) throw;
            throw Error(Err::PipelineFailure, std::string(tag) + ": " + e.what());
        }
    };

    ClassReport cls = classify(p);
    if (!cls.is_cubic || !cls.has_4face_2factor)
        throw Error(Err::Precondition, "input must be cubic with a 2-factor of facial 4-cycles");

    FaceSet fs = trace_faces(p);
    rep.faces = fs.count();
    rep.max_face_len = fs.max_length();
    rep.bound = hamilton_lower_bound_faces(rep.faces, rep.max_face_len);
    rep.required = required_cycles(rep.bound);

    auto [g, corr] = stage("dual", [&] { return dual_graph(p); });
    rep.dual_n = g.n;
    TriColouring col = stage("colour", [&] { return colour_e4(g); });
    AuxGraphJ j = stage("auxiliary", [&] { return build_auxiliary_J(g, col); });
    rep.delta_j = j.max_degree();
    GreedyResult greedy = stage("greedy", [&] { return greedy_chromatic_independent_set(j); });
    rep.k_size = (int)greedy.K.size();
    rep.greedy_colours = greedy.colours_used;

    int dg = g.max_degree();
    if (4 * greedy.colours_used > dg * dg)
        throw Error(Err::PipelineFailure, "greedy colour count exceeds a quarter of Delta squared");

    rep.choice_product = thm13_choice_count(g, greedy.K);
    std::map<HamiltonCycle, uint64_t> seen;
    stage("enumerate", [&] {
        for_each_thm13_cover(g, col, greedy.K, jobs, [&](uint64_t, const ChoiceVector&, const CoverPair& cover) {
            auto res = cover_to_dual_cycle(g, cover, p, corr.primal_edge_of_dual);
            if (std::holds_alternative<HamiltonCycle>(res)) {
                HamiltonCycle h = std::get<HamiltonCycle>(res);
                if (!verify_hamilton(p, h)) throw Error(Err::Internal, "constructed cycle fails verify_hamilton");
                seen[h]++;
            } else {
                rep.non_hamilton_covers++;
            }
        });
        return 0;
    });
    rep.constructive_distinct = seen.size();
    for (auto& [h, cnt] : seen) rep.collisions += cnt - 1;

    rep.pass = (long long)rep.constructive_distinct >= rep.required;
    if (p.n <= caps.hamilton_vertex_cap) {
        auto oracle = stage("oracle", [&] { return enumerate_hamilton_cycles(p, caps, jobs); });
        rep.oracle_ran = true;
        rep.oracle_cycles = oracle.size();
        std::set<HamiltonCycle> all(oracle.begin(), oracle.end());
        for (auto& [h, cnt] : seen)
            if (!all.count(h)) rep.oracle_contains_constructive = false;
        if (!rep.oracle_contains_constructive || rep.oracle_cycles < rep.constructive_distinct) rep.pass = false;
        if (p.n <= 12) rep.oracle_cycles_up_to_auto = count_cycles_up_to_automorphism(p, oracle);
    }
    return rep;
}

static int opposite_neighbor(const PlanarGraph& g, int v, int u) {
    if (g.degree(v) != 4) throw Error(Err::Precondition, "opposite neighbour needs degree 4");
    int i = g.rot_index(v, u);
    return g.rotation[v][(i + 2) % 4];
}

Thm12Report verify_theorem12(const PlanarGraph& p, const std::vector<int>& faces_m, const std::vector<int>& chosen_pos,
                             int jobs) {
    (void)jobs;
    if (faces_m.size() != chosen_pos.size())
        throw Error(Err::Precondition, "one chosen edge position per face required");
    FaceSet fs = trace_faces(p);
    Thm12Report rep;
    rep.faces = faces_m;
    for (size_t i = 0; i < faces_m.size(); i++) {
        int f = faces_m[i];
        if (f < 0 || f >= fs.count()) throw Error(Err::Precondition, "face index out of range");
        if (chosen_pos[i] < 0 || chosen_pos[i] >= fs.length(f))
            throw Error(Err::Precondition, "chosen edge position out of range");
        rep.chosen_edges.push_back(fs.boundary_edge(p, f, chosen_pos[i]));
    }

    rep.min_face_distance = faces_m.size() < 2 ? 0 : 1 << 30;
    for (size_t i = 0; i < faces_m.size(); i++)
        for (size_t k = i + 1; k < faces_m.size(); k++) {
            int d = face_distance(p, fs, faces_m[i], faces_m[k]);
            rep.min_face_distance = std::min(rep.min_face_distance, d);
            if (d <= 4)
                throw Error(Err::DistanceViolation, "faces " + std::to_string(faces_m[i] + 1) + "," +
                                                        std::to_string(faces_m[k] + 1) + " are at distance " +
                                                        std::to_string(d));
        }

    auto [g, corr] = dual_graph(p);
    TriColouring col = colour_e4(g);

    // face f of p is vertex f of g; a chosen edge points at the neighbour
    // across the dual edge. For a red dual vertex the seed star must sit at
    // the opposite neighbour so the emitted cycle misses only the chosen edge.
    std::vector<int> L;
    std::map<int, int> n;
    for (size_t i = 0; i < faces_m.size(); i++) {
        int v = faces_m[i];
        int ge = corr.dual_edge_of_primal[rep.chosen_edges[i]];
        auto [a, b] = g.edges[ge];
        int u = (a == v) ? b : a;
        if (!((a == v) || (b == v))) throw Error(Err::Internal, "chosen edge is not on the face");
        L.push_back(v);
        n[v] = col.is_red(v) ? opposite_neighbor(g, v, u) : u;
    }

    ClosedPair seed = seed_pair_thm14(g, col, L, n);
    CoverPair cover = extend_cover(g, col, seed);
    auto res = cover_to_dual_cycle(g, cover, p, corr.primal_edge_of_dual);
    rep.hamiltonian = std::holds_alternative<HamiltonCycle>(res);
    if (rep.hamiltonian) {
        rep.cycle = std::get<HamiltonCycle>(res);
        if (!verify_hamilton(p, rep.cycle)) throw Error(Err::Internal, "pipeline emitted a non-cycle");
    }

    rep.boundary_ok = rep.hamiltonian;
    rep.placement_ok = true;
    if (rep.hamiltonian) {
        std::set<std::pair<int, int>> on_cycle(rep.cycle.edges.begin(), rep.cycle.edges.end());
        for (size_t i = 0; i < faces_m.size(); i++) {
            int f = faces_m[i];
            bool chosen_found = false;
            for (int pos = 0; pos < fs.length(f); pos++) {
                int e = fs.boundary_edge(p, f, pos);
                bool on = on_cycle.count(p.edges[e]) > 0;
                if (e == rep.chosen_edges[i]) {
                    chosen_found = true;
                    continue; // the chosen edge may go either way
                }
                if (!on) rep.boundary_ok = false;
            }
            if (!chosen_found) throw Error(Err::Internal, "chosen edge missing from its face walk");
            rep.chosen_on_cycle.push_back(on_cycle.count(p.edges[rep.chosen_edges[i]]) > 0);
        }

        // proof-side placement: N(v)\{n(v)} sits in X for white v, in Y for
        // black v; for red v the separated set is N(v) minus the chosen
        // neighbour (the star grew around its opposite)
        std::vector<char> mx = mask_of(cover.X, g.n);
        for (size_t i = 0; i < L.size(); i++) {
            int v = L[i];
            int ge = corr.dual_edge_of_primal[rep.chosen_edges[i]];
            auto [a, b] = g.edges[ge];
            int u = (a == v) ? b : a;
            bool set_in_x; // the side that must hold N(v) \ {u}
            if (col.colour[v] == Colour::W)
                set_in_x = true;
            else if (col.colour[v] == Colour::B)
                set_in_x = false;
            else
                set_in_x = col.colour[n[v]] == Colour::W; // red v: star side holds the set
            for (int w : g.rotation[v]) {
                if (w == u) continue;
                if ((bool)mx[w] != set_in_x) rep.placement_ok = false;
            }
            if ((bool)mx[v] == set_in_x) rep.placement_ok = false; // v sits on the other side
        }
    }
    rep.pass = rep.hamiltonian && rep.boundary_ok && rep.placement_ok;
    return rep;
}

std::vector<std::vector<int>> automorphisms(const PlanarGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n, -1);
    std::vector<char> used(g.n, 0);

    // map vertices in id order, prune by degree and adjacency to earlier ids
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            out.push_back(perm);
            return;
        }
        for (int img = 0; img < g.n; img++) {
            if (used[img] || g.degree(img) != g.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; w++)
                if (g.adjacent(v, w) != g.adjacent(img, perm[w])) ok = false;
            if (!ok) continue;
            perm[v] = img;
            used[img] = 1;
            rec(v + 1);
            used[img] = 0;
            perm[v] = -1;
        }
    };
    rec(0);
    return out;
}

uint64_t count_cycles_up_to_automorphism(const PlanarGraph& g, const std::vector<HamiltonCycle>& cycles) {
    auto autos = automorphisms(g);
    std::set<HamiltonCycle> reps;
    for (const auto& h : cycles) {
        HamiltonCycle best = h;
        for (const auto& perm : autos) {
            HamiltonCycle img;
            for (auto [u, v] : h.edges) img.edges.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
            std::sort(img.edges.begin(), img.edges.end());
            if (img < best) best = img;
        }
        reps.insert(best);
    }
    return reps.size();
}

static std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string BoundReport::to_text() const {
    std::ostringstream out;
    out << "theorem=1.1\n";
    out << "n=" << n << "\nm=" << m << "\n";
    out << "faces=" << faces << "\nmax_face_len=" << max_face_len << "\n";
    out << "dual_n=" << dual_n << "\n";
    out << "bound=" << fmt_double(bound) << "\nrequired=" << required << "\n";
    out << "delta_j=" << delta_j << "\ngreedy_colours=" << greedy_colours << "\nk_size=" << k_size << "\n";
    out << "choice_product=" << choice_product << "\n";
    out << "constructive_distinct=" << constructive_distinct << "\n";
    out << "collisions=" << collisions << "\n";
    out << "non_hamilton_covers=" << non_hamilton_covers << "\n";
    out << "oracle_ran=" << (oracle_ran ? "true" : "false") << "\n";
    if (oracle_ran) {
        out << "oracle_cycles=" << oracle_cycles << "\n";
        out << "oracle_contains_constructive=" << (oracle_contains_constructive ? "true" : "false") << "\n";
        if (oracle_cycles_up_to_auto) out << "oracle_cycles_up_to_auto=" << *oracle_cycles_up_to_auto << "\n";
    }
    out << "pass=" << (pass ? "true" : "false") << "\n";
    return out.str();
}

std::string Thm12Report::to_text(const PlanarGraph& p) const {
    std::ostringstream out;
    out << "theorem=1.2\n";
    out << "faces=";
    for (size_t i = 0; i < faces.size(); i++) out << (i ? " " : "") << (faces[i] + 1);
    out << "\nchosen_edges=";
    for (size_t i = 0; i < chosen_edges.size(); i++) {
        auto [u, v] = p.edges[chosen_edges[i]];
        out << (i ? " " : "") << (u + 1) << "-" << (v + 1);
    }
    out << "\nmin_face_distance=" << min_face_distance << "\n";
    out << "hamiltonian=" << (hamiltonian ? "true" : "false") << "\n";
    out << "boundary_ok=" << (boundary_ok ? "true" : "false") << "\n";
    out << "placement_ok=" << (placement_ok ? "true" : "false") << "\n";
    out << "chosen_on_cycle=";
    for (size_t i = 0; i < chosen_on_cycle.size(); i++) out << (i ? " " : "") << (chosen_on_cycle[i] ? "true" : "false");
    out << "\npass=" << (pass ? "true" : "false") << "\n";
    return out.str();
}

} // namespace barnette
