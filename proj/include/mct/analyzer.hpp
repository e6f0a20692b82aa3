#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "mct/extremal.hpp"
#include "mct/graph.hpp"
#include "mct/partition.hpp"
#include "mct/rational.hpp"
#include "mct/verify.hpp"

namespace mct {

struct AnalyzerConfig {
    Rational gamma{1, 16};          // degree-deviation window |d(v) - 2n/5| <= gamma n
    Rational good_threshold{7, 20}; // good vertices have d(v) >= threshold * n
};

inline void check_config(const AnalyzerConfig& cfg) {
    if (!(Rational(0) < cfg.gamma && cfg.gamma < Rational(1)))
        throw std::invalid_argument("gamma must lie strictly between 0 and 1");
    if (!(Rational(0) < cfg.good_threshold && cfg.good_threshold < Rational(1)))
        throw std::invalid_argument("good_threshold must lie strictly between 0 and 1");
}

// Degree deviations s_v = d(v) - 2e(G)/n, exact. Their sum vanishes
// identically; the sum of squares feeds the upper-bound bookkeeping.
struct DeviationStats {
    std::vector<Rational> s;
    Rational sum_s_sq;
};

inline DeviationStats deviation_stats(const ColoredGraph& g) {
    if (g.n() < 1) throw std::invalid_argument("deviation_stats: empty vertex set");
    DeviationStats st;
    Rational avg(2 * g.edge_count(), g.n());
    st.s.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) {
        Rational sv = Rational(g.degree(v)) - avg;
        st.sum_s_sq += sv * sv;
        st.s.push_back(sv);
    }
    return st;
}

// e(G) - max_v e(B_v), where B_v is the bipartite graph between N(v) and
// its complement. A 5-cycle is not bipartite, so every class keeps at
// least one edge outside any B_v: this is a certified upper bound on the
// class count of any edge-disjoint C5 decomposition of this graph.
inline long long vertex_split_bound(const ColoredGraph& g) {
    long long best_bv = 0;
    for (int v = 0; v < g.n(); ++v) {
        long long bv = 0;
        g.neighbors(v).for_each(
            [&](int u) { bv += g.neighbors(u).andnot_count(g.neighbors(v)); });
        best_bv = std::max(best_bv, bv);
    }
    return g.edge_count() - best_bv;
}

// f(x) = x - 4x^2/n^2 + 6x/n, strictly decreasing on
// [n^2/8 + 3n/4, binom(n,2)].
inline Rational f_eval(long long x, long long n) {
    if (n < 1) throw std::invalid_argument("f_eval: n must be positive");
    return Rational(x) - Rational(4 * x, n * n) * Rational(x) + Rational(6 * x, n);
}

struct GreatEdgeCount {
    Edge edge;
    long long count = 0;
};

struct BoundCheck {
    Rational value;
    Rational bound;
    bool pass = false;
    bool applicable = true; // false when there is nothing to measure
};

struct AnalysisReport {
    int n = 0;
    int k = 0;
    long long edges = 0;

    std::vector<Rational> s;
    Rational sum_s_sq;

    std::vector<int> vg;     // d(v) >= good_threshold * n
    std::vector<int> vgamma; // |d(v) - 2n/5| <= gamma * n

    std::array<long long, 5> part_sizes{};
    std::array<long long, 5> structured_counts{}; // e(A_i, A_{i+1})
    long long structured_total = 0;
    long long m_size = 0;
    std::vector<Edge> m_edges; // unstructured
    std::vector<Edge> l_edges; // unstructured with both ends good
    bool l_is_matching = true;

    std::vector<std::array<int, 5>> d_table; // d_j(v)
    std::vector<GreatEdgeCount> great_counts;

    long long split_bound = 0;
    TriangleCensus census;

    // Reported, not asserted: these inequalities are only guaranteed for
    // extremal graphs at large n. They are evaluated at the instance's
    // parameters, with the configured gamma standing in for the asymptotic
    // slack constants.
    BoundCheck vgamma_comp;          // |V_gamma^c| <= 8/gamma^2
    BoundCheck min_structured_check; // min_i e(A_i,A_{i+1}) >= n^2/25 - gamma n^2
    BoundCheck max_degree_check;     // max_v d(v) <= 2n/5 + gamma n
    BoundCheck min_great_check;      // min g_ab >= n/5 - 4 gamma n
    BoundCheck m_bound_check;        // |M| <= 2q + 2^6 gamma q
    long long part_size_min = 0;     // window: q - 15 < |A_j| <= q + 64
    long long part_size_max = 0;
    bool part_size_window_ok = false;
};

namespace detail {

inline std::vector<int> vertices_with_degree_at_least(const ColoredGraph& g,
                                                      const Rational& threshold_times_n) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (Rational(g.degree(v)) >= threshold_times_n) out.push_back(v);
    return out;
}

inline std::vector<bool> member_mask(int n, const std::vector<int>& verts) {
    std::vector<bool> mask(n, false);
    for (int v : verts) mask[v] = true;
    return mask;
}

} // namespace detail

// g_ab for every unstructured edge ab with both endpoints in V_gamma: the
// number of great classes (all five vertices in V_gamma) containing both a
// and b. Rows are sorted by edge.
inline std::vector<GreatEdgeCount> great_cycle_counts(const ColoredGraph& g,
                                                      const BlowupPartition& p,
                                                      const AnalyzerConfig& cfg) {
    check_partition(p, g);
    Rational target(2 * g.n(), 5);
    Rational radius = cfg.gamma * Rational(g.n());
    std::vector<bool> in_gamma(g.n(), false);
    for (int v = 0; v < g.n(); ++v)
        in_gamma[v] = (Rational(g.degree(v)) - target).abs() <= radius;

    std::vector<bool> great(g.k(), false);
    std::vector<std::vector<int>> classes_at(g.n());
    for (int c = 0; c < g.k(); ++c) {
        bool all = true;
        for (int v : g.classes()[c]) all = all && in_gamma[v];
        great[c] = all;
        for (int v : g.classes()[c]) classes_at[v].push_back(c);
    }

    std::vector<GreatEdgeCount> out;
    for (const Edge& e : g.edges()) {
        if (p.structured(e.u, e.v)) continue;
        if (!in_gamma[e.u] || !in_gamma[e.v]) continue;
        long long count = 0;
        for (int c : classes_at[e.u]) {
            if (!great[c]) continue;
            for (int v : g.classes()[c])
                if (v == e.v) {
                    ++count;
                    break;
                }
        }
        out.push_back({e, count});
    }
    std::sort(out.begin(), out.end(),
              [](const GreatEdgeCount& a, const GreatEdgeCount& b) { return a.edge < b.edge; });
    return out;
}

inline AnalysisReport structure_report(const ColoredGraph& g, const BlowupPartition& p,
                                       const AnalyzerConfig& cfg = {}) {
    check_partition(p, g);
    AnalysisReport rep;
    rep.n = g.n();
    rep.k = g.k();
    rep.edges = g.edge_count();

    if (g.n() >= 1) {
        DeviationStats dev = deviation_stats(g);
        rep.s = std::move(dev.s);
        rep.sum_s_sq = dev.sum_s_sq;
    }

    Rational n_rat(g.n());
    rep.vg = detail::vertices_with_degree_at_least(g, cfg.good_threshold * n_rat);
    Rational target(2 * g.n(), 5);
    Rational radius = cfg.gamma * n_rat;
    for (int v = 0; v < g.n(); ++v)
        if ((Rational(g.degree(v)) - target).abs() <= radius) rep.vgamma.push_back(v);

    rep.part_sizes = p.part_sizes();
    rep.d_table.assign(g.n(), {});
    for (const Edge& e : g.edges()) {
        rep.d_table[e.u][p.part(e.v)]++;
        rep.d_table[e.v][p.part(e.u)]++;
        if (p.structured(e.u, e.v)) {
            int pu = p.part(e.u), pv = p.part(e.v);
            int i = (pv == (pu + 1) % 5) ? pu : pv;
            rep.structured_counts[i]++;
            rep.structured_total++;
        } else {
            rep.m_edges.push_back(e);
        }
    }
    rep.m_size = static_cast<long long>(rep.m_edges.size());

    std::vector<bool> good = detail::member_mask(g.n(), rep.vg);
    std::vector<int> l_deg(g.n(), 0);
    for (const Edge& e : rep.m_edges)
        if (good[e.u] && good[e.v]) {
            rep.l_edges.push_back(e);
            l_deg[e.u]++;
            l_deg[e.v]++;
            if (l_deg[e.u] > 1 || l_deg[e.v] > 1) rep.l_is_matching = false;
        }

    rep.great_counts = great_cycle_counts(g, p, cfg);
    rep.split_bound = vertex_split_bound(g);
    rep.census = triangle_census(g);

    // Reported bound evaluations.
    long long q = g.n() / 5;
    Rational gamma = cfg.gamma;

    rep.vgamma_comp.value = Rational(g.n() - static_cast<long long>(rep.vgamma.size()));
    rep.vgamma_comp.bound = Rational(8) / (gamma * gamma);
    rep.vgamma_comp.pass = rep.vgamma_comp.value <= rep.vgamma_comp.bound;

    long long min_structured = *std::min_element(rep.structured_counts.begin(),
                                                 rep.structured_counts.end());
    rep.min_structured_check.value = Rational(min_structured);
    rep.min_structured_check.bound =
        Rational(static_cast<long long>(g.n()) * g.n(), 25) - gamma * n_rat * n_rat;
    rep.min_structured_check.pass = rep.min_structured_check.value >= rep.min_structured_check.bound;

    long long max_deg = 0;
    for (int v = 0; v < g.n(); ++v) max_deg = std::max<long long>(max_deg, g.degree(v));
    rep.max_degree_check.value = Rational(max_deg);
    rep.max_degree_check.bound = target + gamma * n_rat;
    rep.max_degree_check.pass = rep.max_degree_check.value <= rep.max_degree_check.bound;

    rep.min_great_check.applicable = !rep.great_counts.empty();
    rep.min_great_check.bound = Rational(g.n(), 5) - Rational(4) * gamma * n_rat;
    if (rep.min_great_check.applicable) {
        long long min_g = rep.great_counts.front().count;
        for (const GreatEdgeCount& gc : rep.great_counts)
            min_g = std::min(min_g, gc.count);
        rep.min_great_check.value = Rational(min_g);
        rep.min_great_check.pass = rep.min_great_check.value >= rep.min_great_check.bound;
    } else {
        rep.min_great_check.pass = true;
    }

    rep.m_bound_check.value = Rational(rep.m_size);
    rep.m_bound_check.bound = Rational(2 * q) + Rational(64) * gamma * Rational(q);
    rep.m_bound_check.pass = rep.m_bound_check.value <= rep.m_bound_check.bound;

    rep.part_size_min = *std::min_element(rep.part_sizes.begin(), rep.part_sizes.end());
    rep.part_size_max = *std::max_element(rep.part_sizes.begin(), rep.part_sizes.end());
    rep.part_size_window_ok =
        rep.part_size_min > q - 15 && rep.part_size_max <= q + 64;

    return rep;
}

struct PartitionSearchOptions {
    uint64_t budget = 10'000'000; // exhaustive when 5^(n-1) fits
    int restarts = 32;
    uint64_t seed = 1;
};

namespace detail {

inline long long structured_count_of(const std::vector<Edge>& edges,
                                     const std::vector<int>& part_of) {
    long long s = 0;
    for (const Edge& e : edges) {
        int d = part_of[e.u] - part_of[e.v];
        if (d < 0) d = -d;
        if (d == 1 || d == 4) ++s;
    }
    return s;
}

// Steepest-ascent single-vertex moves from a given start assignment.
inline void hill_climb(const ColoredGraph& g, std::vector<int>& part_of) {
    int n = g.n();
    std::vector<std::array<int, 5>> dtab(n, std::array<int, 5>{});
    for (const Edge& e : g.edges()) {
        dtab[e.u][part_of[e.v]]++;
        dtab[e.v][part_of[e.u]]++;
    }
    auto score = [&](int v, int p) {
        return dtab[v][(p + 1) % 5] + dtab[v][(p + 4) % 5];
    };
    for (;;) {
        int best_gain = 0, best_v = -1, best_p = -1;
        for (int v = 0; v < n; ++v) {
            int cur = score(v, part_of[v]);
            for (int p = 0; p < 5; ++p) {
                if (p == part_of[v]) continue;
                int gain = score(v, p) - cur;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                    best_p = p;
                }
            }
        }
        if (best_v < 0) return;
        int old = part_of[best_v];
        part_of[best_v] = best_p;
        g.neighbors(best_v).for_each([&](int u) {
            dtab[u][old]--;
            dtab[u][best_p]++;
        });
    }
}

} // namespace detail

// Partition maximizing the structured edge count: exhaustive (exact) when
// 5^(n-1) assignments fit in the budget — the first vertex can be pinned
// to part 0 since rotating all parts preserves structuredness — and
// seeded steepest-ascent restarts otherwise.
inline BlowupPartition best_blowup_partition(const ColoredGraph& g,
                                             const PartitionSearchOptions& opts = {}) {
    BlowupPartition best;
    best.part_of.assign(g.n(), 0);
    if (g.n() == 0) return best;

    bool exhaustive = true;
    uint64_t total = 1;
    for (int i = 0; i + 1 < g.n() && exhaustive; ++i) {
        if (total > opts.budget / 5) exhaustive = false;
        total *= 5;
    }

    if (exhaustive) {
        std::vector<int> cur(g.n(), 0);
        long long best_score = detail::structured_count_of(g.edges(), cur);
        for (;;) {
            int i = 1;
            while (i < g.n() && cur[i] == 4) cur[i++] = 0;
            if (i >= g.n()) break;
            cur[i]++;
            long long sc = detail::structured_count_of(g.edges(), cur);
            if (sc > best_score) {
                best_score = sc;
                best.part_of = cur;
            }
        }
        return best;
    }

    std::mt19937_64 rng(opts.seed);
    long long best_score = -1;
    for (int r = 0; r < std::max(1, opts.restarts); ++r) {
        std::vector<int> cur(g.n());
        if (r == 0) {
            std::fill(cur.begin(), cur.end(), 0);
        } else {
            for (int& x : cur) x = static_cast<int>(rng() % 5);
        }
        detail::hill_climb(g, cur);
        long long sc = detail::structured_count_of(g.edges(), cur);
        if (sc > best_score) {
            best_score = sc;
            best.part_of = cur;
        }
    }
    return best;
}

// One row of the closed-form bound table. The o(n)/o(1) slack terms of the
// two upper bounds are replaced by a caller-supplied delta.
struct BoundsRow {
    long long n = 0, q = 0, r = 0, t = 0;
    Rational lower_est;  // n^2/25 - 2n/5
    Rational upper_main;      // n^2/25 + 3n/25 + delta n
    Rational upper_approx;      // q^2 + q (6 + 8r/5 - 3 [r in {3,4}] + delta)
    bool lower_ok = false;
    bool main_ok = false;
    bool approx_ok = false;
};

inline std::vector<BoundsRow> bounds_table(long long n_min, long long n_max,
                                           const Rational& delta = Rational(0)) {
    if (n_min < 5) throw std::invalid_argument("bounds_table: n_min must be at least 5");
    if (n_max > 100'000'000)
        throw std::invalid_argument("bounds_table: n_max above 1e8 would overflow");
    std::vector<BoundsRow> rows;
    for (long long n = n_min; n <= n_max; ++n) {
        TnValue tv = t_value(n);
        BoundsRow row;
        row.n = n;
        row.q = tv.q;
        row.r = tv.r;
        row.t = tv.t;
        row.lower_est = Rational(n * n, 25) - Rational(2 * n, 5);
        row.upper_main = Rational(n * n, 25) + Rational(3 * n, 25) + delta * Rational(n);
        Rational coeff = Rational(6) + Rational(8 * tv.r, 5) -
                         Rational(tv.r >= 3 ? 3 : 0) + delta;
        row.upper_approx = Rational(tv.q * tv.q) + Rational(tv.q) * coeff;
        row.lower_ok = row.lower_est <= Rational(tv.t);
        row.main_ok = Rational(tv.t) <= row.upper_main;
        row.approx_ok = Rational(tv.t) <= row.upper_approx;
        rows.push_back(row);
    }
    return rows;
}

} // namespace mct
