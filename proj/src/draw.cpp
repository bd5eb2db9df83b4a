#include "barnette/draw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace barnette {

static std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string to_dot(const PlanarGraph& g, const DrawOverlay& overlay) {
    std::set<std::pair<int, int>> on_cycle;
    if (overlay.cycle)
        for (auto e : overlay.cycle->edges) on_cycle.insert(e);
    std::vector<int> side(g.n, -1);
    if (overlay.cover) {
        for (int v : overlay.cover->X) side[v] = 0;
        for (int v : overlay.cover->Y) side[v] = 1;
    }

    std::ostringstream out;
    out << "graph g {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.n; v++) {
        out << "  " << (v + 1);
        std::vector<std::string> attrs;
        if (overlay.colouring) {
            switch (overlay.colouring->colour[v]) {
                case Colour::B: attrs.push_back("style=filled fillcolor=black fontcolor=white class=B"); break;
                case Colour::W: attrs.push_back("style=filled fillcolor=white class=W"); break;
                case Colour::R: attrs.push_back("style=filled fillcolor=red class=R"); break;
            }
        }
        if (side[v] == 0) attrs.push_back("shape=box");
        if (!attrs.empty()) {
            out << " [";
            for (size_t i = 0; i < attrs.size(); i++) out << (i ? " " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges) {
        out << "  " << (u + 1) << " -- " << (v + 1);
        if (on_cycle.count({u, v})) out << " [penwidth=3 color=blue]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<std::pair<double, double>> tutte_coordinates(const PlanarGraph& g) {
    if (!vertex_connectivity_at_least(g, 3))
        throw Error(Err::NotThreeConnected, "barycentric drawing needs a 3-connected graph");
    FaceSet fs = trace_faces(g);
    const auto& outer = fs.walk[0];
    int L = (int)outer.size();

    std::vector<std::pair<double, double>> pos(g.n, {0.0, 0.0});
    std::vector<char> fixed(g.n, 0);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < L; i++) {
        double ang = -pi / 2 + 2 * pi * i / L;
        pos[outer[i]] = {500 + 400 * std::cos(ang), 500 + 400 * std::sin(ang)};
        fixed[outer[i]] = 1;
    }

    std::vector<int> interior, index(g.n, -1);
    for (int v = 0; v < g.n; v++)
        if (!fixed[v]) {
            index[v] = (int)interior.size();
            interior.push_back(v);
        }
    int k = (int)interior.size();
    if (k > 0) {
        // deg(v) x_v - sum of interior neighbours = sum of fixed neighbours
        std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
        std::vector<double> bx(k, 0.0), by(k, 0.0);
        for (int i = 0; i < k; i++) {
            int v = interior[i];
            a[i][i] = g.degree(v);
            for (int w : g.rotation[v]) {
                if (fixed[w]) {
                    bx[i] += pos[w].first;
                    by[i] += pos[w].second;
                } else
                    a[i][index[w]] -= 1.0;
            }
        }
        auto a0 = a;
        auto bx0 = bx, by0 = by;
        // Gaussian elimination with partial pivoting
        for (int c = 0; c < k; c++) {
            int piv = c;
            for (int r = c + 1; r < k; r++)
                if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
            std::swap(a[c], a[piv]);
            std::swap(bx[c], bx[piv]);
            std::swap(by[c], by[piv]);
            if (std::fabs(a[c][c]) < 1e-12) throw Error(Err::Internal, "singular barycentric system");
            for (int r = 0; r < k; r++) {
                if (r == c) continue;
                double f = a[r][c] / a[c][c];
                if (f == 0.0) continue;
                for (int cc = c; cc < k; cc++) a[r][cc] -= f * a[c][cc];
                bx[r] -= f * bx[c];
                by[r] -= f * by[c];
            }
        }
        std::vector<double> x(k), y(k);
        for (int i = 0; i < k; i++) {
            x[i] = bx[i] / a[i][i];
            y[i] = by[i] / a[i][i];
        }
        for (int i = 0; i < k; i++) {
            double rx = -bx0[i], ry = -by0[i];
            for (int jj = 0; jj < k; jj++) {
                rx += a0[i][jj] * x[jj];
                ry += a0[i][jj] * y[jj];
            }
            if (std::fabs(rx) > 1e-9 || std::fabs(ry) > 1e-9)
                throw Error(Err::Internal, "barycentric residual above tolerance");
        }
        for (int i = 0; i < k; i++) pos[interior[i]] = {x[i], y[i]};
    }
    return pos;
}

static bool proper_crossing(std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c,
                            std::pair<double, double> d) {
    auto orient = [](auto p, auto q, auto r) {
        double det = (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
        if (det > 1e-9) return 1;
        if (det < -1e-9) return -1;
        return 0;
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::string to_svg(const PlanarGraph& g, const DrawOverlay& overlay) {
    auto pos = tutte_coordinates(g);
    for (int e = 0; e < g.m(); e++)
        for (int f = e + 1; f < g.m(); f++) {
            auto [a, b] = g.edges[e];
            auto [c, d] = g.edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            if (proper_crossing(pos[a], pos[b], pos[c], pos[d]))
                throw Error(Err::Internal, "drawing has a segment crossing");
        }

    std::set<std::pair<int, int>> on_cycle;
    if (overlay.cycle)
        for (auto e : overlay.cycle->edges) on_cycle.insert(e);
    std::vector<int> side(g.n, -1);
    if (overlay.cover) {
        for (int v : overlay.cover->X) side[v] = 0;
        for (int v : overlay.cover->Y) side[v] = 1;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (auto [u, v] : g.edges) {
        bool hot = on_cycle.count({u, v}) > 0;
        out << "  <line x1=\"" << num(pos[u].first) << "\" y1=\"" << num(pos[u].second) << "\" x2=\""
            << num(pos[v].first) << "\" y2=\"" << num(pos[v].second) << "\" stroke=\""
            << (hot ? "#1f77b4" : "#555555") << "\" stroke-width=\"" << (hot ? 5 : 2) << "\"/>\n";
    }
    for (int v = 0; v < g.n; v++) {
        std::string fill = "#cccccc";
        if (overlay.colouring) {
            switch (overlay.colouring->colour[v]) {
                case Colour::B: fill = "#222222"; break;
                case Colour::W: fill = "#ffffff"; break;
                case Colour::R: fill = "#d62728"; break;
            }
        }
        if (side[v] == 0) fill = "#2ca02c";
        if (side[v] == 1) fill = "#ff7f0e";
        out << "  <circle cx=\"" << num(pos[v].first) << "\" cy=\"" << num(pos[v].second)
            << "\" r=\"12\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << num(pos[v].first) << "\" y=\"" << num(pos[v].second + 4)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << (v + 1) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace barnette
