#include "barnette/alpha.hpp"

#include <algorithm>
#include <sstream>

namespace barnette {

std::pair<PlanarGraph, TriColouring> octahedron() {
    // 1-based layout: 1,2 black (antipodal), 3,4 white, 5,6 red poles.
    std::vector<std::vector<int>> table = {
        {2, 5, 3, 4}, // 1: 3 6 4 5
        {4, 3, 5, 2}, // 2: 5 4 6 3
        {4, 1, 5, 0}, // 3: 5 2 6 1
        {0, 5, 1, 4}, // 4: 1 6 2 5
        {0, 3, 1, 2}, // 5: 1 4 2 3
        {0, 2, 1, 3}, // 6: 1 3 2 4
    };
    PlanarGraph g = build_graph(table);
    TriColouring col;
    col.colour = {Colour::B, Colour::B, Colour::W, Colour::W, Colour::R, Colour::R};
    return {std::move(g), std::move(col)};
}

std::vector<AlphaOp> alpha_candidates(const PlanarGraph& g, const TriColouring& col) {
    std::vector<AlphaOp> out;
    for (int v = 0; v < g.n; v++) {
        if (col.is_red(v)) continue;
        std::vector<int> non_red;
        for (int w : g.rotation[v])
            if (!col.is_red(w)) non_red.push_back(w);
        std::sort(non_red.begin(), non_red.end());
        for (int s : non_red)
            for (int t : non_red)
                if (s != t) out.push_back({s, v, t});
    }
    if (out.empty()) throw Error(Err::Internal, "no alpha candidates on an E(4) instance");
    return out;
}

static void validate_surgery(const PlanarGraph& g, const TriColouring& col) {
    FaceSet faces = trace_faces(g);
    if (!faces.is_triangulation()) throw Error(Err::Internal, "alpha surgery broke the triangulation");
    for (auto [u, v] : g.edges)
        if (col.colour[u] == col.colour[v]) throw Error(Err::Internal, "alpha surgery broke the colouring");
    for (int v = 0; v < g.n; v++)
        if (col.is_red(v) && g.degree(v) != 4)
            throw Error(Err::Internal, "alpha surgery put a non-degree-4 vertex in R");
}

std::pair<PlanarGraph, TriColouring> apply_alpha(const PlanarGraph& g, const TriColouring& col, const AlphaOp& op) {
    auto bad = [&](const std::string& why) { return Error(Err::InvalidAlphaTriple, why); };
    if (op.v < 0 || op.v >= g.n || op.s < 0 || op.s >= g.n || op.t < 0 || op.t >= g.n)
        throw bad("vertex id out of range");
    if (col.is_red(op.v) || col.is_red(op.s) || col.is_red(op.t)) throw bad("path svt must avoid the red class");
    if (op.s == op.t) throw bad("s and t must differ");
    if (!g.adjacent(op.s, op.v) || !g.adjacent(op.t, op.v)) throw bad("s,t must be neighbours of v");

    // neighbour cycle of v rotated to start at s
    std::vector<int> cyc = g.rotation[op.v];
    int d = (int)cyc.size();
    std::rotate(cyc.begin(), cyc.begin() + g.rot_index(op.v, op.s), cyc.end());
    int kt = -1;
    for (int i = 0; i < d; i++)
        if (cyc[i] == op.t) kt = i;
    if (kt % 2 != 0 || kt == 0)
        throw Error(Err::Internal, "t sits at an even cycle position; colouring invariant broken");

    int x = g.n, u = g.n + 1, y = g.n + 2;
    std::vector<std::vector<int>> table(g.n + 3);
    for (int w = 0; w < g.n; w++) table[w] = g.rotation[w];

    table[x].assign(cyc.begin(), cyc.begin() + kt + 1); // v1..vk
    table[x].push_back(u);
    table[u] = {cyc[0], x, cyc[kt], y};
    table[y].assign(cyc.begin() + kt, cyc.end()); // vk..vd
    table[y].push_back(cyc[0]);
    table[y].push_back(u);

    auto flank = [&](int w) { // sanity: rotation of w shows (succ, v, pred) of the cycle
        const auto& r = g.rotation[w];
        int i = g.rot_index(w, op.v);
        return std::make_pair(r[((i - 1) % (int)r.size() + (int)r.size()) % r.size()], r[(i + 1) % r.size()]);
    };
    auto [p1, n1] = flank(cyc[0]);
    if (p1 != cyc[1] || n1 != cyc[d - 1]) throw Error(Err::Internal, "rotation consistency broken at s");
    auto [pk, nk] = flank(cyc[kt]);
    if (pk != cyc[(kt + 1) % d] || nk != cyc[kt - 1]) throw Error(Err::Internal, "rotation consistency broken at t");

    auto replace_slot = [&](int w, std::initializer_list<int> repl) {
        auto& r = table[w];
        int i = g.rot_index(w, op.v);
        r.erase(r.begin() + i);
        r.insert(r.begin() + i, repl);
    };
    replace_slot(cyc[0], {x, u, y});  // between v2 and vd
    replace_slot(cyc[kt], {y, u, x}); // between v(k+1) and v(k-1)
    for (int i = 1; i < kt; i++) replace_slot(cyc[i], {x});
    for (int i = kt + 1; i < d; i++) replace_slot(cyc[i], {y});

    // delete v, compact ids > v downward
    table.erase(table.begin() + op.v);
    for (auto& r : table)
        for (int& w : r)
            if (w > op.v) w--;

    TriColouring ncol;
    ncol.colour.reserve(g.n + 2);
    for (int w = 0; w < g.n; w++)
        if (w != op.v) ncol.colour.push_back(col.colour[w]);
    ncol.colour.push_back(col.colour[op.v]); // x
    ncol.colour.push_back(Colour::R);        // u
    ncol.colour.push_back(col.colour[op.v]); // y

    PlanarGraph ng = build_graph(table);
    validate_surgery(ng, ncol);
    return {std::move(ng), std::move(ncol)};
}

GeneratedInstance random_instance(int ops, uint64_t seed) {
    Xorshift64Star rng(seed);
    GeneratedInstance inst;
    auto [g, col] = octahedron();
    inst.g = std::move(g);
    inst.colouring = std::move(col);
    inst.history.seed = seed;
    for (int i = 0; i < ops; i++) {
        auto cands = alpha_candidates(inst.g, inst.colouring);
        AlphaOp op = cands[rng.uniform(cands.size())];
        auto [ng, ncol] = apply_alpha(inst.g, inst.colouring, op);
        inst.g = std::move(ng);
        inst.colouring = std::move(ncol);
        inst.history.ops.push_back(op);
    }
    return inst;
}

GeneratedInstance replay(const GenerationHistory& history) {
    GeneratedInstance inst;
    auto [g, col] = octahedron();
    inst.g = std::move(g);
    inst.colouring = std::move(col);
    inst.history = history;
    for (const AlphaOp& op : history.ops) {
        auto [ng, ncol] = apply_alpha(inst.g, inst.colouring, op);
        inst.g = std::move(ng);
        inst.colouring = std::move(ncol);
    }
    return inst;
}

std::string GenerationHistory::to_alpha1() const {
    std::ostringstream out;
    out << "BASE octahedron\n";
    for (const AlphaOp& op : ops) out << (op.s + 1) << " " << (op.v + 1) << " " << (op.t + 1) << "\n";
    return out.str();
}

GenerationHistory GenerationHistory::parse_alpha1(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "BASE octahedron")
        throw Error(Err::ParseError, "ALPHA1 must start with 'BASE octahedron'");
    GenerationHistory h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long s, v, t;
        std::string extra;
        if (!(ls >> s >> v >> t) || (ls >> extra))
            throw Error(Err::ParseError, "ALPHA1 line must hold exactly one 's v t' triple");
        if (s < 1 || v < 1 || t < 1) throw Error(Err::ParseError, "ALPHA1 ids are 1-based");
        h.ops.push_back({(int)s - 1, (int)v - 1, (int)t - 1});
    }
    return h;
}

} // namespace barnette
