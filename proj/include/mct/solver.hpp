#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "mct/extremal.hpp"
#include "mct/graph.hpp"

namespace mct {

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    uint64_t node_budget = UINT64_MAX;
    int parallel_width = 1;
    bool symmetry_breaking = true;
    // Host edge set; all of K_n when absent. Used by the blow-up packing
    // fallback, which searches inside the blow-up's edges only.
    std::optional<std::vector<Edge>> restrict_to_edges;
    // Abort as soon as this many classes are packed. The caller asserts
    // this is a valid upper bound, so reaching it counts as complete.
    std::optional<int> stop_at;
};

struct SolveResult {
    int n = 0;
    int k_star = 0;
    std::optional<ColoredGraph> witness;
    uint64_t nodes_explored = 0;
    double runtime_seconds = 0.0;
    long long lower_bound_t = 0; // t(n); 0 for restricted hosts
    bool complete = true;
};

namespace detail {

struct HostGraph {
    int n = 0;
    std::vector<Edge> edges;        // dense edge ids are indices here
    std::vector<int32_t> edge_id;   // triangular, -1 = not a host edge
    std::vector<Bitset> adj;
    std::vector<int> host_degree;

    static size_t tri(int u, int v) { // u < v
        return size_t(v) * (v - 1) / 2 + u;
    }

    static HostGraph build(int n, const std::optional<std::vector<Edge>>& restrict_edges) {
        HostGraph h;
        h.n = n;
        h.edge_id.assign(size_t(n) * (n - 1) / 2, -1);
        h.adj.assign(n, Bitset(n));
        h.host_degree.assign(n, 0);
        auto add = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n || u == v)
                throw std::invalid_argument("host edge out of range");
            if (h.edge_id[tri(u, v)] != -1) return;
            h.edge_id[tri(u, v)] = static_cast<int32_t>(h.edges.size());
            h.edges.push_back({u, v});
            h.adj[u].set(v);
            h.adj[v].set(u);
            ++h.host_degree[u];
            ++h.host_degree[v];
        };
        if (restrict_edges) {
            for (const Edge& e : *restrict_edges) add(e.u, e.v);
        } else {
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) add(u, v);
        }
        return h;
    }
};

struct Candidate {
    CycleTuple tuple;
    std::array<int32_t, 5> edge_ids;
    Bitset edge_mask;
};

} // namespace detail

// All 5-cycles of the host, one canonical tuple each (least vertex first,
// second entry smaller than last), in lexicographic order.
inline std::vector<CycleTuple> enumerate_candidate_cycles(
    int n, const std::optional<std::vector<Edge>>& restrict_edges = std::nullopt) {
    detail::HostGraph host = detail::HostGraph::build(n, restrict_edges);
    std::vector<CycleTuple> out;
    for (int x = 0; x < n; ++x) {
        host.adj[x].for_each([&](int a) {
            if (a <= x) return;
            host.adj[a].for_each([&](int b) {
                if (b <= x || b == a) return;
                host.adj[b].for_each([&](int c) {
                    if (c <= x || c == a || c == b) return;
                    host.adj[c].for_each_common(host.adj[x], [&](int d) {
                        if (d <= a || d == b || d == c) return; // d>a: reflection canon, d>x implied
                        out.push_back({x, a, b, c, d});
                    });
                });
            });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Mutable packing state shared by the branch-and-bound phases. One
// instance per worker; the host and candidate list are shared read-only.
class PackState {
public:
    PackState(const HostGraph& host, const std::vector<Candidate>& cands)
        : host_(host), cands_(cands), used_(static_cast<int>(host.edges.size())),
          adj_(host.n, Bitset(host.n)),
          color_(size_t(host.n) * (host.n - 1) / 2, -1), avail_(host.host_degree) {
        for (int v = 0; v < host_.n; ++v) cap_ += avail_[v] / 2;
    }

    int k() const { return static_cast<int>(chosen_.size()); }
    const std::vector<int>& chosen() const { return chosen_; }

    bool conflicts(int idx) const {
        return used_.intersects(cands_[idx].edge_mask);
    }

    // Upper bound on the final class count from this state: every future
    // class keeps all degrees even, so at most floor(avail(v)/2) more
    // edge endpoints are usable at each vertex.
    int bound() const { return k() + cap_ / 5; }

    void push(int idx) {
        const Candidate& c = cands_[idx];
        int color = k();
        for (int i = 0; i < 5; ++i) {
            Edge e = edge_of(c, i);
            used_.set(c.edge_ids[i]);
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
            color_[HostGraph::tri(e.u, e.v)] = color;
            bump(e.u, -1);
            bump(e.v, -1);
        }
        chosen_.push_back(idx);
    }

    void pop() {
        int idx = chosen_.back();
        chosen_.pop_back();
        const Candidate& c = cands_[idx];
        for (int i = 0; i < 5; ++i) {
            Edge e = edge_of(c, i);
            used_.reset(c.edge_ids[i]);
            adj_[e.u].reset(e.v);
            adj_[e.v].reset(e.u);
            color_[HostGraph::tri(e.u, e.v)] = -1;
            bump(e.u, +1);
            bump(e.v, +1);
        }
    }

    // True iff the last pushed class closed a multicolored triangle. Only
    // triangles through the new edges can be new; two new edges share the
    // new color, so those triangles are never multicolored.
    bool last_class_made_multicolored() const {
        int idx = chosen_.back();
        const Candidate& c = cands_[idx];
        int newc = k() - 1;
        for (int i = 0; i < 5; ++i) {
            Edge e = edge_of(c, i);
            bool bad = false;
            adj_[e.u].for_each_common(adj_[e.v], [&](int w) {
                if (bad) return;
                int cu = color_[HostGraph::tri(std::min(e.u, w), std::max(e.u, w))];
                int cv = color_[HostGraph::tri(std::min(e.v, w), std::max(e.v, w))];
                if (cu != cv && cu != newc && cv != newc) bad = true;
            });
            if (bad) return true;
        }
        return false;
    }

    ColoredGraph to_graph() const {
        std::vector<CycleTuple> classes;
        classes.reserve(chosen_.size());
        for (int idx : chosen_) classes.push_back(cands_[idx].tuple);
        return ColoredGraph(host_.n, std::move(classes));
    }

private:
    Edge edge_of(const Candidate& c, int i) const {
        return make_edge(c.tuple[i], c.tuple[(i + 1) % 5]);
    }

    void bump(int v, int delta) {
        cap_ -= avail_[v] / 2;
        avail_[v] += delta;
        cap_ += avail_[v] / 2;
    }

    const HostGraph& host_;
    const std::vector<Candidate>& cands_;
    Bitset used_;
    std::vector<Bitset> adj_;
    std::vector<int16_t> color_;
    std::vector<int> avail_;
    int cap_ = 0;
    std::vector<int> chosen_;
};

struct SharedSearch {
    std::atomic<int> incumbent{0};
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> stop{false};
    uint64_t budget = UINT64_MAX;
    std::optional<int> stop_at;

    void raise(int k) {
        int cur = incumbent.load();
        while (k > cur && !incumbent.compare_exchange_weak(cur, k)) {
        }
        if (stop_at && incumbent.load() >= *stop_at) stop.store(true);
    }

    bool spend_node() {
        if (nodes.fetch_add(1) >= budget) {
            exhausted.store(true);
            stop.store(true);
            return false;
        }
        return true;
    }
};

// Phase-1 DFS: determines the optimum value. Prunes any state whose bound
// cannot exceed the incumbent.
inline void dfs_max(PackState& st, int from, int num_cands, SharedSearch& sh) {
    sh.raise(st.k());
    if (sh.stop.load(std::memory_order_relaxed)) return;
    if (st.bound() <= sh.incumbent.load(std::memory_order_relaxed)) return;
    for (int idx = from; idx < num_cands; ++idx) {
        if (sh.stop.load(std::memory_order_relaxed)) return;
        if (st.conflicts(idx)) continue;
        if (!sh.spend_node()) return;
        st.push(idx);
        if (st.last_class_made_multicolored()) {
            st.pop();
            continue;
        }
        dfs_max(st, idx + 1, num_cands, sh);
        st.pop();
        if (st.bound() <= sh.incumbent.load(std::memory_order_relaxed)) return;
    }
}

// Phase-2 DFS: first solution of exactly `target` classes in lexicographic
// candidate order. Deterministic regardless of how phase 1 was scheduled.
inline bool dfs_witness(PackState& st, int from, int num_cands, int target,
                        uint64_t budget, uint64_t& nodes) {
    if (st.k() == target) return true;
    if (st.bound() < target) return false;
    for (int idx = from; idx < num_cands; ++idx) {
        if (st.conflicts(idx)) continue;
        if (nodes++ >= budget) return false;
        st.push(idx);
        if (st.last_class_made_multicolored()) {
            st.pop();
            continue;
        }
        if (dfs_witness(st, idx + 1, num_cands, target, budget, nodes)) return true;
        st.pop();
    }
    return false;
}

inline std::vector<Candidate> make_candidates(const HostGraph& host,
                                              const std::vector<CycleTuple>& tuples) {
    std::vector<Candidate> cands;
    cands.reserve(tuples.size());
    for (const CycleTuple& t : tuples) {
        Candidate c;
        c.tuple = t;
        c.edge_mask = Bitset(static_cast<int>(host.edges.size()));
        for (int i = 0; i < 5; ++i) {
            Edge e = make_edge(t[i], t[(i + 1) % 5]);
            int32_t id = host.edge_id[HostGraph::tri(e.u, e.v)];
            c.edge_ids[i] = id;
            c.edge_mask.set(id);
        }
        cands.push_back(std::move(c));
    }
    return cands;
}

} // namespace detail

// Exact maximum number of edge-disjoint 5-cycles in the host (K_n, or the
// restricted edge set) whose union has no multicolored triangle.
//
// Phase 1 is a parallel branch-and-bound for the value; phase 2 re-derives
// the lexicographically least witness of that value sequentially, so the
// returned result is identical for every parallel_width.
inline SolveResult solve_exact(int n, const SearchOptions& opts = {}) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    if (n < 0) throw std::invalid_argument("solve_exact: negative n");
    if (opts.node_budget < 1) throw std::invalid_argument("node budget must be >= 1");

    detail::HostGraph host = detail::HostGraph::build(n, opts.restrict_to_edges);
    std::vector<CycleTuple> tuples = enumerate_candidate_cycles(n, opts.restrict_to_edges);
    std::vector<detail::Candidate> cands = detail::make_candidates(host, tuples);
    int m = static_cast<int>(cands.size());

    SolveResult res;
    res.n = n;
    if (!opts.restrict_to_edges) res.lower_bound_t = t_value(n).t;

    detail::SharedSearch sh;
    sh.budget = opts.node_budget;
    sh.stop_at = opts.stop_at;

    // Vertex symmetry breaking is only valid on the complete host: any
    // packing of K_n with k >= 1 relabels so its first class is candidate 0.
    bool fix_first = opts.symmetry_breaking && !opts.restrict_to_edges && m > 0;

    int width = std::max(1, opts.parallel_width);
    auto run_block = [&](int first_idx, int split_from, int worker, int stride) {
        detail::PackState st(host, cands);
        if (first_idx >= 0) st.push(first_idx);
        sh.raise(st.k());
        for (int idx = split_from + worker; idx < m; idx += stride) {
            if (sh.stop.load()) break;
            if (st.conflicts(idx)) continue;
            if (!sh.spend_node()) break;
            st.push(idx);
            if (!st.last_class_made_multicolored())
                detail::dfs_max(st, idx + 1, m, sh);
            st.pop();
            if (st.bound() <= sh.incumbent.load()) break;
        }
    };

    if (m > 0) {
        int split_from = fix_first ? 1 : 0;
        int root = fix_first ? 0 : -1;
        if (width == 1) {
            run_block(root, split_from, 0, 1);
        } else {
            std::vector<std::thread> workers;
            for (int w = 0; w < width; ++w)
                workers.emplace_back(run_block, root, split_from, w, width);
            for (auto& t : workers) t.join();
        }
    }
    res.k_star = sh.incumbent.load();
    res.complete = !sh.exhausted.load() ||
                   (opts.stop_at && res.k_star >= *opts.stop_at);
    res.nodes_explored = std::min<uint64_t>(sh.nodes.load(), opts.node_budget);

    // Canonical witness.
    if (res.k_star == 0) {
        res.witness = ColoredGraph(n, {});
    } else {
        detail::PackState st(host, cands);
        uint64_t wnodes = 0;
        int from = 0;
        if (fix_first) {
            st.push(0);
            from = 1;
        }
        if (detail::dfs_witness(st, from, m, res.k_star, opts.node_budget, wnodes)) {
            res.witness = st.to_graph();
        } else {
            res.complete = false; // witness re-derivation ran out of budget
        }
        res.nodes_explored += wnodes;
    }

    res.runtime_seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    return res;
}

// Independent correctness oracle for tiny n: exhaustive DFS over all
// edge-disjoint cycle subsets, with the graph rebuilt and every vertex
// triple re-examined from scratch at each visited subset. Shares no state
// or pruning machinery with solve_exact. Extending past a subset that
// already contains a multicolored triangle is pointless because adding
// classes never removes one.
inline int brute_force_oracle(int n) {
    if (n > 7) throw TooLargeError("brute_force_oracle: n must be at most 7");
    if (n < 5) return 0;

    // All 5-cycles as tuples: ascending 5-subsets, 12 arrangements each.
    std::vector<CycleTuple> cycles;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        int rest[4] = {b, c, d, e};
                        int perm[4] = {0, 1, 2, 3};
                        do {
                            if (perm[0] > perm[3]) continue;
                            cycles.push_back({a, rest[perm[0]], rest[perm[1]],
                                              rest[perm[2]], rest[perm[3]]});
                        } while (std::next_permutation(perm, perm + 4));
                    }

    int best = 0;
    std::vector<int> chosen;

    auto rebuild_and_check = [&]() -> bool {
        std::vector<std::vector<int>> color(n, std::vector<int>(n, -1));
        for (size_t ci = 0; ci < chosen.size(); ++ci) {
            const CycleTuple& t = cycles[chosen[ci]];
            for (int i = 0; i < 5; ++i) {
                int u = t[i], v = t[(i + 1) % 5];
                color[u][v] = color[v][u] = static_cast<int>(ci);
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l) {
                    if (color[i][j] < 0 || color[j][l] < 0 || color[i][l] < 0)
                        continue;
                    if (color[i][j] != color[j][l] && color[j][l] != color[i][l] &&
                        color[i][j] != color[i][l])
                        return false;
                }
        return true;
    };

    auto disjoint_from_chosen = [&](int idx) {
        for (int prev : chosen) {
            const CycleTuple& p = cycles[prev];
            const CycleTuple& q = cycles[idx];
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    int pu = p[i], pv = p[(i + 1) % 5];
                    int qu = q[j], qv = q[(j + 1) % 5];
                    if ((pu == qu && pv == qv) || (pu == qv && pv == qu))
                        return false;
                }
        }
        return true;
    };

    auto explore = [&](auto&& self, int from) -> void {
        if (!rebuild_and_check()) return;
        best = std::max(best, static_cast<int>(chosen.size()));
        for (int idx = from; idx < static_cast<int>(cycles.size()); ++idx) {
            if (!disjoint_from_chosen(idx)) continue;
            chosen.push_back(idx);
            self(self, idx + 1);
            chosen.pop_back();
        }
    };
    explore(explore, 0);
    return best;
}

} // namespace mct
