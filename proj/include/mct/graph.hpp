#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mct/bitset.hpp"

namespace mct {

using CycleTuple = std::array<int, 5>;

struct Edge {
    int u = 0, v = 0; // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Invalid-certificate conditions. Everything mathematically wrong with an
// input decomposition derives from ValidationError; syntax problems in
// certificate files use ParseError (certificate.hpp) instead.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadClassError : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateEdgeError : ValidationError {
    using ValidationError::ValidationError;
};
struct PatternTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Union of k edge-disjoint 5-cycles on vertices 0..n-1; class i is the set
// of edges x_j x_{j+1} (indices mod 5) of the i-th tuple and doubles as
// color i. Construction validates every decomposition invariant and builds
// the derived adjacency bitsets and the edge -> color table; instances are
// immutable afterwards and safe to share across threads.
class ColoredGraph {
public:
    ColoredGraph(int n, std::vector<CycleTuple> classes)
        : n_(n), classes_(std::move(classes)) {
        if (n_ < 0) throw BadClassError("vertex count must be nonnegative");
        adj_.assign(n_, Bitset(n_));
        degree_.assign(n_, 0);
        edge_color_.assign(size_t(n_) * (n_ - 1) / 2, -1);
        edges_.reserve(classes_.size() * 5);
        for (size_t c = 0; c < classes_.size(); ++c) {
            const CycleTuple& t = classes_[c];
            for (int i = 0; i < 5; ++i) {
                if (t[i] < 0 || t[i] >= n_)
                    throw BadClassError("class " + std::to_string(c) +
                                        ": vertex " + std::to_string(t[i]) +
                                        " out of range");
                for (int j = i + 1; j < 5; ++j)
                    if (t[i] == t[j])
                        throw BadClassError("class " + std::to_string(c) +
                                            ": repeated vertex " +
                                            std::to_string(t[i]));
            }
            for (int i = 0; i < 5; ++i) {
                Edge e = make_edge(t[i], t[(i + 1) % 5]);
                size_t idx = tri_index(e.u, e.v);
                if (edge_color_[idx] != -1)
                    throw DuplicateEdgeError(
                        "edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} lies in classes " +
                        std::to_string(edge_color_[idx]) + " and " +
                        std::to_string(c));
                edge_color_[idx] = static_cast<int>(c);
                adj_[e.u].set(e.v);
                adj_[e.v].set(e.u);
                ++degree_[e.u];
                ++degree_[e.v];
                edges_.push_back(e);
            }
        }
    }

    int n() const { return n_; }
    int k() const { return static_cast<int>(classes_.size()); }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    const std::vector<CycleTuple>& classes() const { return classes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return degree_[v]; }

    bool has_edge(int u, int v) const {
        return u != v && adj_[u].test(v);
    }

    // Color of edge {u,v}; -1 if absent.
    int edge_color(int u, int v) const {
        if (u == v) return -1;
        if (u > v) std::swap(u, v);
        return edge_color_[tri_index(u, v)];
    }

    // Number of edges of G with both endpoints in N(v). Never exceeds
    // floor(3 d(v)/2) on a decomposition without a multicolored triangle.
    long long edges_inside_neighborhood(int v) const {
        long long twice = 0;
        const Bitset& nv = adj_[v];
        nv.for_each([&](int u) { twice += adj_[u].and_count(nv); });
        return twice / 2;
    }

private:
    size_t tri_index(int u, int v) const { // u < v
        return size_t(v) * (v - 1) / 2 + u;
    }

    int n_;
    std::vector<CycleTuple> classes_;
    std::vector<Bitset> adj_;
    std::vector<int> degree_;
    std::vector<int32_t> edge_color_;
    std::vector<Edge> edges_;
};

inline ColoredGraph build_colored_graph(int n, std::vector<CycleTuple> classes) {
    return ColoredGraph(n, std::move(classes));
}
inline int degree(const ColoredGraph& g, int v) { return g.degree(v); }
inline long long edges_inside_neighborhood(const ColoredGraph& g, int v) {
    return g.edges_inside_neighborhood(v);
}

// Small target graph for multicolored-subgraph detection; detection is
// exhaustive so the vertex count is capped.
struct PatternGraph {
    int m = 0;
    std::vector<std::pair<int, int>> edges;

    static PatternGraph triangle() { return {3, {{0, 1}, {1, 2}, {2, 0}}}; }
};

// Injective map from pattern vertices into G realizing every pattern edge
// with pairwise distinct colors, or nullopt. Plain backtracking; vertices
// are tried in pattern order, colors tracked in a used-flag array.
inline std::optional<std::vector<int>> find_multicolored_copy(
    const ColoredGraph& g, const PatternGraph& h) {
    if (h.m > 8) throw PatternTooLargeError("pattern has more than 8 vertices");
    for (auto [a, b] : h.edges)
        if (a < 0 || a >= h.m || b < 0 || b >= h.m || a == b)
            throw std::invalid_argument("pattern edge out of range or loop");
    if (h.m > g.n()) return std::nullopt;

    // Pattern edges incident to vertex i whose other endpoint precedes i.
    std::vector<std::vector<int>> back(h.m);
    for (auto [a, b] : h.edges) {
        back[std::max(a, b)].push_back(std::min(a, b));
    }

    std::vector<int> map(h.m, -1);
    std::vector<bool> vertex_used(g.n(), false);
    std::vector<bool> color_used(g.k(), false);

    auto extend = [&](auto&& self, int i) -> bool {
        if (i == h.m) return true;
        for (int v = 0; v < g.n(); ++v) {
            if (vertex_used[v]) continue;
            bool ok = true;
            std::vector<int> marked;
            for (int j : back[i]) {
                int u = map[j];
                int c = g.edge_color(u, v);
                if (c < 0 || color_used[c]) {
                    ok = false;
                    break;
                }
                color_used[c] = true;
                marked.push_back(c);
            }
            if (ok) {
                map[i] = v;
                vertex_used[v] = true;
                if (self(self, i + 1)) return true;
                vertex_used[v] = false;
                map[i] = -1;
            }
            for (int c : marked) color_used[c] = false;
        }
        return false;
    };
    if (extend(extend, 0)) return map;
    return std::nullopt;
}

} // namespace mct
