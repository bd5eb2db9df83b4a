#include "barnette/tree_pair.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barnette {

int AuxGraphJ::max_degree() const {
    int d = 0;
    for (int v : vertices) d = std::max(d, (int)adj[v].size());
    return d;
}

AuxGraphJ build_auxiliary_J(const PlanarGraph& g, const TriColouring& col) {
    AuxGraphJ j;
    j.member.assign(g.n, 0);
    j.adj.assign(g.n, {});
    for (int v = 0; v < g.n; v++)
        if (!col.is_red(v)) {
            j.member[v] = 1;
            j.vertices.push_back(v);
        }

    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (j.member[u] && j.member[v]) edges.insert({u, v});
    // same-coloured pairs at distance 2 (same colour implies non-adjacent, so
    // a common neighbour means distance exactly 2)
    for (int a : j.vertices)
        for (int w : g.rotation[a])
            for (int b : g.rotation[w])
                if (b != a && col.colour[b] == col.colour[a]) edges.insert({std::min(a, b), std::max(a, b)});

    for (auto [u, v] : edges) {
        j.adj[u].push_back(v);
        j.adj[v].push_back(u);
    }
    for (int v : j.vertices) std::sort(j.adj[v].begin(), j.adj[v].end());

    int dg = g.max_degree();
    if (4 * j.max_degree() >= dg * dg)
        throw Error(Err::Internal, "auxiliary graph exceeds the quarter-Delta-squared degree bound");
    return j;
}

GreedyResult greedy_chromatic_independent_set(const AuxGraphJ& j) {
    GreedyResult res;
    std::vector<int> colour(j.member.size(), -1);
    int used = 0;
    for (int v : j.vertices) {
        std::vector<char> taken(used + 1, 0);
        for (int w : j.adj[v])
            if (colour[w] >= 0) taken[colour[w]] = 1;
        int c = 0;
        while (c < (int)taken.size() && taken[c]) c++;
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    res.colours_used = used;
    std::vector<std::vector<int>> classes(used);
    for (int v : j.vertices) classes[colour[v]].push_back(v);
    int best = 0;
    for (int c = 1; c < used; c++)
        if (classes[c].size() > classes[best].size()) best = c;
    res.K = classes[best];
    if ((uint64_t)res.K.size() * used < j.vertices.size())
        throw Error(Err::Internal, "largest greedy class smaller than |J|/colours");
    return res;
}

std::vector<int> path_subgraph(const PlanarGraph& g, int v, int nv) {
    int i = g.rot_index(v, nv);
    if (i < 0) throw Error(Err::Precondition, "nv must be a neighbour of v");
    std::vector<int> cyc = g.rotation[v];
    std::rotate(cyc.begin(), cyc.begin() + (i + 1) % (int)cyc.size(), cyc.end());
    cyc.pop_back(); // drop nv; what remains must induce a path in this order
    for (size_t a = 0; a + 1 < cyc.size(); a++)
        if (!g.adjacent(cyc[a], cyc[a + 1]))
            throw Error(Err::NotAPath, "neighbour cycle of " + std::to_string(v + 1) + " broken");
    for (size_t a = 0; a < cyc.size(); a++)
        for (size_t b = a + 2; b < cyc.size(); b++)
            if (g.adjacent(cyc[a], cyc[b]))
                throw Error(Err::NotAPath, "chord in N(" + std::to_string(v + 1) + ") \\ {n(v)}");
    std::sort(cyc.begin(), cyc.end());
    return cyc;
}

std::vector<int> star_with_leaves(const PlanarGraph& g, const TriColouring& col, int center, Colour leaves) {
    if (col.colour[center] == leaves) throw Error(Err::Precondition, "star centre has the leaf colour");
    std::vector<int> out = {center};
    for (int w : g.rotation[center])
        if (col.colour[w] == leaves) out.push_back(w);
    for (size_t a = 1; a < out.size(); a++)
        for (size_t b = a + 1; b < out.size(); b++)
            if (g.adjacent(out[a], out[b])) throw Error(Err::Internal, "star leaves adjacent");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> star_subgraph(const PlanarGraph& g, const TriColouring& col, int v) {
    if (col.is_red(v)) throw Error(Err::CenterIsRed, "star centre " + std::to_string(v + 1) + " is red");
    Colour leaves = col.colour[v] == Colour::B ? Colour::W : Colour::B;
    return star_with_leaves(g, col, v, leaves);
}

static std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

static void assert_seed(const PlanarGraph& g, const TriColouring& col, const ClosedPair& pair) {
    std::vector<char> mc = mask_of(pair.C, g.n), md = mask_of(pair.D, g.n);
    for (int v = 0; v < g.n; v++)
        if (mc[v] && md[v]) throw Error(Err::SeedConflict, "sides share vertex " + std::to_string(v + 1));
    if (!induced_acyclic(g, mc)) throw Error(Err::SeedConflict, "C is not acyclic");
    if (!induced_acyclic(g, md)) throw Error(Err::SeedConflict, "D is not acyclic");
    auto viols = check_bw_closed(g, col, pair);
    if (!viols.empty())
        throw Error(Err::SeedConflict, "pair is not (black,white)-closed at vertex " +
                                           std::to_string(viols.front().vertex + 1));
}

ClosedPair seed_pair_thm13(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K,
                           const ChoiceVector& choices) {
    if (choices.items.size() != K.size()) throw Error(Err::Precondition, "one choice per K vertex required");
    ClosedPair pair;
    for (size_t i = 0; i < K.size(); i++) {
        auto [v, choice] = choices.items[i];
        if (v != K[i]) throw Error(Err::Precondition, "choice keys must match K in order");
        if (col.is_red(v)) throw Error(Err::Precondition, "K must avoid the red class");
        std::vector<int> part;
        if (choice.star) {
            part = star_subgraph(g, col, v);
        } else {
            if (!col.is_red(choice.red_neighbor) || !g.adjacent(v, choice.red_neighbor))
                throw Error(Err::Precondition, "PATH choice needs a red neighbour of v");
            part = path_subgraph(g, v, choice.red_neighbor);
        }
        if (col.colour[v] == Colour::W)
            pair.C = sorted_union(std::move(pair.C), part);
        else
            pair.D = sorted_union(std::move(pair.D), part);
    }
    assert_seed(g, col, pair);
    return pair;
}

ClosedPair seed_pair_thm14(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& L,
                           const std::map<int, int>& n) {
    for (size_t i = 0; i < L.size(); i++)
        for (size_t j = i + 1; j < L.size(); j++)
            if (vertex_distance(g, L[i], L[j]) < 5)
                throw Error(Err::DistanceViolation, "vertices " + std::to_string(L[i] + 1) + "," +
                                                        std::to_string(L[j] + 1) + " are closer than 5");
    ClosedPair pair;
    for (int v : L) {
        auto it = n.find(v);
        if (it == n.end() || !g.adjacent(v, it->second))
            throw Error(Err::Precondition, "n(v) must be a chosen neighbour of v");
        int nv = it->second;
        switch (col.colour[v]) {
            case Colour::W:
                pair.C = sorted_union(std::move(pair.C), path_subgraph(g, v, nv));
                pair.D = sorted_union(std::move(pair.D), star_with_leaves(g, col, nv, Colour::W));
                break;
            case Colour::B:
                pair.D = sorted_union(std::move(pair.D), path_subgraph(g, v, nv));
                pair.C = sorted_union(std::move(pair.C), star_with_leaves(g, col, nv, Colour::B));
                break;
            case Colour::R:
                // R_b: black n(v), star goes to D; R_w: white n(v), star to C
                if (col.colour[nv] == Colour::B)
                    pair.D = sorted_union(std::move(pair.D), star_with_leaves(g, col, nv, Colour::W));
                else
                    pair.C = sorted_union(std::move(pair.C), star_with_leaves(g, col, nv, Colour::B));
                break;
        }
    }
    assert_seed(g, col, pair);
    return pair;
}

std::vector<Violation> check_bw_closed(const PlanarGraph& g, const TriColouring& col, const ClosedPair& pair) {
    std::vector<char> in_c = mask_of(pair.C, g.n), in_d = mask_of(pair.D, g.n);
    std::vector<Violation> out;
    for (int v = 0; v < g.n; v++) {
        if (col.colour[v] == Colour::B && !in_c[v]) {
            for (int w : g.rotation[v]) {
                if (!in_c[w]) continue;
                bool white = col.colour[w] == Colour::W;
                bool red = col.colour[w] == Colour::R;
                if (white || (red && !in_d[v])) {
                    out.push_back({v, 1, w});
                    break;
                }
            }
        }
        if (col.colour[v] == Colour::W && !in_d[v]) {
            for (int w : g.rotation[v]) {
                if (!in_d[w]) continue;
                bool black = col.colour[w] == Colour::B;
                bool red = col.colour[w] == Colour::R;
                if (black || (red && !in_c[v])) {
                    out.push_back({v, 2, w});
                    break;
                }
            }
        }
    }
    return out;
}

CoverPair extend_cover(const PlanarGraph& g, const TriColouring& col, const ClosedPair& pair) {
    std::vector<char> in_x = mask_of(pair.C, g.n), in_y = mask_of(pair.D, g.n);
    for (int v = 0; v < g.n; v++)
        if (in_x[v] && in_y[v]) throw Error(Err::NotClosedInput, "input sides intersect");
    if (!induced_acyclic(g, in_x) || !induced_acyclic(g, in_y))
        throw Error(Err::NotClosedInput, "input sides must be acyclic");
    if (!check_bw_closed(g, col, pair).empty())
        throw Error(Err::NotClosedInput, "input pair is not (black,white)-closed");

    // step 1: sweep the remaining black vertices into X, white into Y
    for (int v = 0; v < g.n; v++) {
        if (in_x[v] || in_y[v]) continue;
        if (col.colour[v] == Colour::B) in_x[v] = 1;
        if (col.colour[v] == Colour::W) in_y[v] = 1;
    }
    if (!induced_acyclic(g, in_x)) throw Error(Err::ExtensionFailure, "black sweep broke acyclicity of X");
    if (!induced_acyclic(g, in_y)) throw Error(Err::ExtensionFailure, "white sweep broke acyclicity of Y");

    // step 2: place each remaining red vertex; a red vertex has exactly two
    // black and two white neighbours
    for (int v = 0; v < g.n; v++) {
        if (in_x[v] || in_y[v] || col.colour[v] != Colour::R) continue;
        std::vector<int> bx, wy;
        for (int w : g.rotation[v]) {
            if (col.colour[w] == Colour::B && in_x[w]) bx.push_back(w);
            if (col.colour[w] == Colour::W && in_y[w]) wy.push_back(w);
        }
        bool blacks_joined = bx.size() == 2 && connected_within(g, in_x, bx[0], bx[1]);
        bool whites_joined = wy.size() == 2 && connected_within(g, in_y, wy[0], wy[1]);
        if (blacks_joined)
            in_y[v] = 1;
        else if (whites_joined)
            in_x[v] = 1;
        else
            in_x[v] = 1; // the lemma leaves this free; first side, fixed
        if (!induced_acyclic(g, in_x) || !induced_acyclic(g, in_y))
            throw Error(Err::ExtensionFailure, "placing red vertex " + std::to_string(v + 1) + " created a cycle");
    }

    CoverPair cover;
    for (int v = 0; v < g.n; v++) {
        if (in_x[v] == in_y[v]) throw Error(Err::Internal, "extension did not produce an exact partition");
        (in_x[v] ? cover.X : cover.Y).push_back(v);
    }
    for (int v : pair.C)
        if (!in_x[v]) throw Error(Err::Internal, "C not contained in X");
    for (int v : pair.D)
        if (!in_y[v]) throw Error(Err::Internal, "D not contained in Y");
    cover.connected_X = induced_connected(g, in_x);
    cover.connected_Y = induced_connected(g, in_y);
    return cover;
}

static std::vector<int> red_neighbors_sorted(const PlanarGraph& g, const TriColouring& col, int v) {
    std::vector<int> reds;
    for (int w : g.rotation[v])
        if (col.is_red(w)) reds.push_back(w);
    std::sort(reds.begin(), reds.end());
    return reds;
}

uint64_t thm13_choice_count(const PlanarGraph& g, const std::vector<int>& K) {
    uint64_t total = 1;
    for (int v : K) {
        uint64_t c = (uint64_t)g.degree(v) / 2 + 1;
        if (total > (uint64_t)1 << 40) throw Error(Err::CapExceeded, "choice space too large");
        total *= c;
    }
    return total;
}

ChoiceVector decode_choice(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K, uint64_t index) {
    ChoiceVector cv;
    cv.items.resize(K.size());
    // K[0] is the most significant digit, so ascending index is lexicographic
    uint64_t rest = index;
    for (int i = (int)K.size() - 1; i >= 0; i--) {
        int v = K[i];
        auto reds = red_neighbors_sorted(g, col, v);
        uint64_t base = reds.size() + 1;
        uint64_t digit = rest % base;
        rest /= base;
        Choice ch;
        if (digit == 0) {
            ch.star = true;
        } else {
            ch.star = false;
            ch.red_neighbor = reds[digit - 1];
        }
        cv.items[i] = {v, ch};
    }
    if (rest != 0) throw Error(Err::Precondition, "choice index out of range");
    return cv;
}

void for_each_thm13_cover(const PlanarGraph& g, const TriColouring& col, const std::vector<int>& K, int jobs,
                          const std::function<void(uint64_t, const ChoiceVector&, const CoverPair&)>& sink) {
    for (int v : K) {
        auto reds = red_neighbors_sorted(g, col, v);
        if ((int)reds.size() != g.degree(v) / 2)
            throw Error(Err::Internal, "red neighbour count differs from deg/2");
    }
    uint64_t total = thm13_choice_count(g, K);
    auto eval = [&](uint64_t i) {
        ChoiceVector cv = decode_choice(g, col, K, i);
        CoverPair cover = extend_cover(g, col, seed_pair_thm13(g, col, K, cv));
        return std::make_pair(std::move(cv), std::move(cover));
    };
    if (jobs <= 1) {
        for (uint64_t i = 0; i < total; i++) {
            auto [cv, cover] = eval(i);
            sink(i, cv, cover);
        }
        return;
    }
    const uint64_t chunk = 4096;
    for (uint64_t lo = 0; lo < total; lo += chunk) {
        uint64_t hi = std::min(total, lo + chunk);
        std::vector<std::pair<ChoiceVector, CoverPair>> buf(hi - lo);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
#endif
        for (long long i = (long long)lo; i < (long long)hi; i++) buf[i - lo] = eval((uint64_t)i);
        for (uint64_t i = lo; i < hi; i++) sink(i, buf[i - lo].first, buf[i - lo].second);
    }
}

std::vector<std::pair<ChoiceVector, CoverPair>> enumerate_thm13_covers_serial(const PlanarGraph& g,
                                                                              const TriColouring& col,
                                                                              const std::vector<int>& K) {
    std::vector<std::pair<ChoiceVector, CoverPair>> out;
    for_each_thm13_cover(g, col, K, 1,
                         [&](uint64_t, const ChoiceVector& cv, const CoverPair& cover) { out.emplace_back(cv, cover); });
    return out;
}

std::vector<std::pair<ChoiceVector, CoverPair>> enumerate_thm13_covers(const PlanarGraph& g, const TriColouring& col,
                                                                       const std::vector<int>& K, int jobs) {
    std::vector<std::pair<ChoiceVector, CoverPair>> out;
    for_each_thm13_cover(g, col, K, jobs,
                         [&](uint64_t, const ChoiceVector& cv, const CoverPair& cover) { out.emplace_back(cv, cover); });
    return out;
}

std::string ChoiceVector::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < items.size(); i++) {
        if (i) out << " ";
        out << (items[i].first + 1) << ":";
        if (items[i].second.star)
            out << "STAR";
        else
            out << "PATH:" << (items[i].second.red_neighbor + 1);
    }
    return out.str();
}

bool ChoiceVector::operator==(const ChoiceVector& o) const {
    if (items.size() != o.items.size()) return false;
    for (size_t i = 0; i < items.size(); i++) {
        if (items[i].first != o.items[i].first) return false;
        if (items[i].second.star != o.items[i].second.star) return false;
        if (!items[i].second.star && items[i].second.red_neighbor != o.items[i].second.red_neighbor) return false;
    }
    return true;
}

std::string cover_to_text(const CoverPair& cover) {
    std::ostringstream out;
    out << "X=";
    for (size_t i = 0; i < cover.X.size(); i++) out << (i ? " " : "") << (cover.X[i] + 1);
    out << "\nY=";
    for (size_t i = 0; i < cover.Y.size(); i++) out << (i ? " " : "") << (cover.Y[i] + 1);
    out << "\nconnected_X=" << (cover.connected_X ? "true" : "false");
    out << "\nconnected_Y=" << (cover.connected_Y ? "true" : "false") << "\n";
    return out.str();
}

} // namespace barnette
