#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "mct/graph.hpp"

namespace mct {

// Assignment of every vertex to one of the five blow-up parts (0-based
// internally; certificate files use 1..5). An edge is structured when its
// endpoints sit in consecutive parts mod 5; everything else, including
// edges inside a part and across a diagonal, is unstructured.
struct BlowupPartition {
    std::vector<int> part_of;

    int part(int v) const { return part_of[v]; }

    std::array<long long, 5> part_sizes() const {
        std::array<long long, 5> s{};
        for (int p : part_of) s[p]++;
        return s;
    }

    bool structured(int u, int v) const {
        int d = part_of[u] - part_of[v];
        if (d < 0) d = -d;
        return d == 1 || d == 4;
    }
};

inline void check_partition(const BlowupPartition& p, const ColoredGraph& g) {
    if (static_cast<int>(p.part_of.size()) != g.n())
        throw std::invalid_argument("partition does not cover the vertex set");
    for (int x : p.part_of)
        if (x < 0 || x >= 5) throw std::invalid_argument("part index out of range");
}

inline long long structured_edge_count(const ColoredGraph& g, const BlowupPartition& p) {
    long long s = 0;
    for (const Edge& e : g.edges())
        if (p.structured(e.u, e.v)) ++s;
    return s;
}

} // namespace mct
