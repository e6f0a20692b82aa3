#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mct/extremal.hpp"
#include "mct/graph.hpp"
#include "mct/partition.hpp"
#include "mct/solver.hpp"

namespace mct {

struct BadNError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PackingNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowupGraph {
    ColoredGraph graph;
    BlowupPartition partition;
};

namespace detail {

// Vertices of part p occupy a contiguous block; label l in 1..a_p maps to
// offset_p + l - 1.
struct PartLayout {
    PartSizes sizes;
    std::array<long long, 5> offset{};

    explicit PartLayout(const PartSizes& a) : sizes(a) {
        long long off = 0;
        for (int p = 0; p < 5; ++p) {
            offset[p] = off;
            off += a[p];
        }
    }
    int n() const { return static_cast<int>(offset[4] + sizes[4]); }
    int vertex(int part, long long label) const { // label 1-based
        return static_cast<int>(offset[part] + label - 1);
    }
    BlowupPartition partition() const {
        BlowupPartition bp;
        bp.part_of.resize(n());
        for (int p = 0; p < 5; ++p)
            for (long long l = 0; l < sizes[p]; ++l)
                bp.part_of[offset[p] + l] = p;
        return bp;
    }
    std::vector<Edge> all_blowup_edges() const {
        std::vector<Edge> edges;
        for (int p = 0; p < 5; ++p) {
            int q = (p + 1) % 5;
            for (long long i = 0; i < sizes[p]; ++i)
                for (long long j = 0; j < sizes[q]; ++j)
                    edges.push_back(make_edge(vertex(p, i + 1), vertex(q, j + 1)));
        }
        return edges;
    }
};

// The cycle family v_i^1 v_j^2 v_i^3 v_j^4 v_{i+j}^5 with the fifth label
// reduced mod a_5 into 1..a_5. Edge-disjoint for i in 1..I, j in 1..J
// whenever I and J are both at most a_5.
inline CycleTuple family_cycle(const PartLayout& lay, const std::array<int, 5>& parts,
                               long long i, long long j) {
    long long m5 = lay.sizes[parts[4]];
    long long fifth = (i + j - 1) % m5 + 1;
    return {lay.vertex(parts[0], i), lay.vertex(parts[1], j), lay.vertex(parts[2], i),
            lay.vertex(parts[3], j), lay.vertex(parts[4], fifth)};
}

// Try the explicit family on each rotation/reflection of the pentagon;
// returns the classes when some orientation attains b(a).
inline std::optional<std::vector<CycleTuple>> explicit_packing(const PartLayout& lay,
                                                               long long target) {
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int rot = 0; rot < 5; ++rot) {
            std::array<int, 5> parts{};
            for (int p = 0; p < 5; ++p) {
                int raw = reflect ? (rot - p + 10) % 5 : (rot + p) % 5;
                parts[p] = raw;
            }
            long long I = std::min(lay.sizes[parts[0]], lay.sizes[parts[2]]);
            long long J = std::min(lay.sizes[parts[1]], lay.sizes[parts[3]]);
            long long m5 = lay.sizes[parts[4]];
            I = std::min(I, m5);
            J = std::min(J, m5);
            if (I * J < target) continue;
            std::vector<CycleTuple> classes;
            for (long long i = 1; i <= I && std::ssize(classes) < target; ++i)
                for (long long j = 1; j <= J && std::ssize(classes) < target; ++j)
                    classes.push_back(family_cycle(lay, parts, i, j));
            return classes;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Subgraph of the blow-up C5(A_1,...,A_5) with exactly b(a) edge-disjoint
// 5-cycle classes. Equal parts use the explicit v_i^1 v_j^2 v_i^3 v_j^4
// v_{i+j}^5 labeling; other shapes first try that family across pentagon
// symmetries and otherwise fall back to exact search over the blow-up's
// edges (the blow-up is triangle-free, so the search is a pure packing).
inline BlowupGraph blowup_packing(const PartSizes& a,
                                  uint64_t search_budget = 50'000'000) {
    for (long long ai : a)
        if (ai < 1) throw std::invalid_argument("blowup_packing: all parts must be nonempty");
    long long target = b_value(a);
    detail::PartLayout lay(a);

    if (auto classes = detail::explicit_packing(lay, target))
        return {ColoredGraph(lay.n(), std::move(*classes)), lay.partition()};

    SearchOptions opts;
    opts.restrict_to_edges = lay.all_blowup_edges();
    opts.node_budget = search_budget;
    opts.stop_at = static_cast<int>(target);
    SolveResult r = solve_exact(lay.n(), opts);
    if (r.k_star < target || !r.witness)
        throw PackingNotFoundError(
            "no packing with " + std::to_string(target) + " classes found (got " +
            std::to_string(r.k_star) + (r.complete ? ", search complete" : ", budget exhausted") +
            ")");
    return {std::move(*r.witness), lay.partition()};
}

// Balanced blow-up packing on n vertices perturbed so that, per residue
// class i, the cycle v_i^1 v_i^2 v_i^3 v_i^4 v_{2i}^5 is replaced by
// v_i^1 v_i^3 v_i^2 v_i^4 v_{2i}^5. The swap removes v_i^1 v_i^2 and
// v_i^3 v_i^4 and adds the crossing edges v_i^1 v_i^3 and v_i^2 v_i^4,
// which form a matching of size 2q. No multicolored triangle arises.
inline BlowupGraph perturbed_construction(long long n) {
    if (n % 5 != 0 || n / 5 < 2)
        throw BadNError("perturbed_construction: n must be a multiple of 5 with n/5 >= 2");
    long long q = n / 5;
    detail::PartLayout lay(PartSizes{q, q, q, q, q});
    std::array<int, 5> parts{0, 1, 2, 3, 4};
    std::vector<CycleTuple> classes;
    classes.reserve(q * q);
    for (long long i = 1; i <= q; ++i)
        for (long long j = 1; j <= q; ++j) {
            if (i == j) {
                long long fifth = (2 * i - 1) % q + 1;
                classes.push_back({lay.vertex(0, i), lay.vertex(2, i), lay.vertex(1, i),
                                   lay.vertex(3, i), lay.vertex(4, fifth)});
            } else {
                classes.push_back(detail::family_cycle(lay, parts, i, j));
            }
        }
    return {ColoredGraph(lay.n(), std::move(classes)), lay.partition()};
}

// m copies of K5 sharing one hub vertex, each copy 2-colored so that both
// color classes are 5-cycles. The hub has degree 4m and exactly 6m edges
// inside its neighborhood, meeting the 3d(v)/2 bound with equality.
inline ColoredGraph k5_star(int m) {
    if (m < 1) throw std::invalid_argument("k5_star: need at least one blade");
    std::vector<CycleTuple> classes;
    classes.reserve(2 * m);
    for (int b = 0; b < m; ++b) {
        int x1 = 4 * b + 1, x2 = 4 * b + 2, x3 = 4 * b + 3, x4 = 4 * b + 4;
        classes.push_back({0, x1, x2, x3, x4});
        classes.push_back({0, x2, x4, x1, x3});
    }
    return ColoredGraph(4 * m + 1, std::move(classes));
}

} // namespace mct
