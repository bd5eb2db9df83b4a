#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barnette/e4.hpp"
#include "barnette/planar_core.hpp"

namespace barnette {

// Replace non-red v by the path x-u-y across the chord s,t of its neighbour
// cycle. s,v,t are 0-based vertex ids, s,t in N(v), all non-red.
struct AlphaOp {
    int s, v, t;
};

// xorshift64* with rejection sampling; pinned so that (ops, seed) replays
// byte-exactly everywhere.
struct Xorshift64Star {
    uint64_t state;
    explicit Xorshift64Star(uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}
    uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ull;
    }
    uint64_t uniform(uint64_t k) { // k >= 1
        uint64_t limit = UINT64_MAX - UINT64_MAX % k;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % k;
    }
};

struct GenerationHistory {
    uint64_t seed = 0;
    std::vector<AlphaOp> ops;

    std::string to_alpha1() const; // "BASE octahedron" header + one "s v t" per line
    static GenerationHistory parse_alpha1(const std::string& text);
};

struct GeneratedInstance {
    PlanarGraph g;
    TriColouring colouring;
    GenerationHistory history;
};

// The 6-vertex base instance with fixed ids: B={1,2}, W={3,4}, R={5,6} in
// 1-based labels (antipodal pairs).
std::pair<PlanarGraph, TriColouring> octahedron();

// All triples (s,v,t) with v non-red, s,t distinct non-red neighbours of v,
// ordered lexicographically by (v,s,t). Never empty on a valid E(4) instance.
std::vector<AlphaOp> alpha_candidates(const PlanarGraph& g, const TriColouring& col);

// Local surgery; n grows by 2, u joins R with degree 4, x,y inherit v's
// colour. Result is revalidated (Euler, proper colouring, all-deg-4 R).
std::pair<PlanarGraph, TriColouring> apply_alpha(const PlanarGraph& g, const TriColouring& col, const AlphaOp& op);

GeneratedInstance random_instance(int ops, uint64_t seed);
GeneratedInstance replay(const GenerationHistory& history);

} // namespace barnette
