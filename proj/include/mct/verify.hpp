#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mct/graph.hpp"

namespace mct {

struct PreconditionViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-color triangle tallies. Each triangle contributes to the census of
// each color on its edges: delta1[i] counts triangles with exactly one
// edge of color i, delta2[i] those with exactly two. Three edges of one
// color cannot happen, the classes being 5-cycles, so
// 3 * triangle_count = sum_i (delta1[i] + 2 delta2[i]).
struct TriangleCensus {
    std::vector<long long> delta1;
    std::vector<long long> delta2;
    long long triangle_count = 0;
    long long multicolored_count = 0;
    std::optional<std::array<int, 3>> first_multicolored;
};

inline TriangleCensus triangle_census(const ColoredGraph& g) {
    TriangleCensus census;
    census.delta1.assign(g.k(), 0);
    census.delta2.assign(g.k(), 0);
    for (const Edge& e : g.edges()) {
        g.neighbors(e.u).for_each_common(g.neighbors(e.v), [&](int w) {
            if (w <= e.v) return; // count each triangle at its least edge
            ++census.triangle_count;
            int c1 = g.edge_color(e.u, e.v);
            int c2 = g.edge_color(e.u, w);
            int c3 = g.edge_color(e.v, w);
            if (c1 != c2 && c2 != c3 && c1 != c3) {
                ++census.multicolored_count;
                if (!census.first_multicolored)
                    census.first_multicolored = {{e.u, e.v, w}};
            }
            if (c1 == c2) {
                census.delta2[c1]++;
                census.delta1[c3]++;
            } else if (c1 == c3) {
                census.delta2[c1]++;
                census.delta1[c2]++;
            } else if (c2 == c3) {
                census.delta2[c2]++;
                census.delta1[c1]++;
            } else {
                census.delta1[c1]++;
                census.delta1[c2]++;
                census.delta1[c3]++;
            }
        });
    }
    return census;
}

// One row of the per-color degree-sum inequality
// sum_{v in C_i} d(v) <= 2n + 2 delta2_i + delta1_i.
struct ColorDegreeRow {
    int color = 0;
    long long lhs = 0;
    long long rhs = 0;
    long long slack = 0;
    bool pass = false;
};

inline std::vector<ColorDegreeRow> check_kovacs_nagy(const ColoredGraph& g,
                                                     const TriangleCensus& census) {
    if (census.multicolored_count > 0)
        throw PreconditionViolatedError(
            "degree-sum inequality is only claimed for multicolored-triangle-free graphs");
    std::vector<ColorDegreeRow> rows;
    rows.reserve(g.k());
    for (int c = 0; c < g.k(); ++c) {
        ColorDegreeRow row;
        row.color = c;
        for (int v : g.classes()[c]) row.lhs += g.degree(v);
        row.rhs = 2LL * g.n() + 2 * census.delta2[c] + census.delta1[c];
        row.slack = row.rhs - row.lhs;
        row.pass = row.slack >= 0;
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<ColorDegreeRow> check_kovacs_nagy(const ColoredGraph& g) {
    return check_kovacs_nagy(g, triangle_census(g));
}

// S = sum_i sum_{v in C_i} d(v) computed over classes must equal
// sum_v d(v)^2 / 2 computed over vertices: v lies in d(v)/2 classes.
struct DoubleCountResult {
    long long by_cycles = 0;
    long long by_degrees = 0;
    bool equal = false;
};

inline DoubleCountResult double_count_check(const ColoredGraph& g) {
    DoubleCountResult r;
    for (const CycleTuple& cls : g.classes())
        for (int v : cls) r.by_cycles += g.degree(v);
    long long sq = 0;
    for (int v = 0; v < g.n(); ++v)
        sq += static_cast<long long>(g.degree(v)) * g.degree(v);
    r.by_degrees = sq / 2; // every degree is even, so sq is divisible by 2
    r.equal = r.by_cycles == r.by_degrees;
    return r;
}

struct VerifyReport {
    bool valid = false;
    int n = 0;
    int k = 0;
    long long edges = 0;
    std::optional<std::array<int, 3>> multicolored_triangle;
    std::vector<int> neighborhood_violations; // v with e(N(v)) > floor(3 d(v)/2)
    bool kn_checked = false;
    std::vector<int> kn_violations;
    std::vector<ColorDegreeRow> kn_rows;
    bool double_count_ok = false;
    TriangleCensus census;
};

// Full certification of an in-memory decomposition (the decomposition
// invariants themselves hold by construction of ColoredGraph). valid means
// no multicolored triangle. The neighborhood and degree-sum bounds are
// theorems for such graphs, so any violation listed here disproves either
// the input's validity or the implementation.
inline VerifyReport verify(const ColoredGraph& g) {
    VerifyReport rep;
    rep.n = g.n();
    rep.k = g.k();
    rep.edges = g.edge_count();
    rep.census = triangle_census(g);
    rep.multicolored_triangle = rep.census.first_multicolored;

    for (int v = 0; v < g.n(); ++v)
        if (g.edges_inside_neighborhood(v) > 3LL * g.degree(v) / 2)
            rep.neighborhood_violations.push_back(v);

    if (rep.census.multicolored_count == 0) {
        rep.kn_checked = true;
        rep.kn_rows = check_kovacs_nagy(g, rep.census);
        for (const ColorDegreeRow& row : rep.kn_rows)
            if (!row.pass) rep.kn_violations.push_back(row.color);
    }

    rep.double_count_ok = double_count_check(g).equal;
    rep.valid = rep.census.multicolored_count == 0;
    return rep;
}

} // namespace mct
