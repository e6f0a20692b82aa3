#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mct {

// Part sizes (a_1,...,a_5) of a pentagon blow-up, indices mod 5.
using PartSizes = std::array<long long, 5>;

// Bottleneck of a blow-up with part sizes a: the smallest number of pairs
// between two consecutive parts. Any edge-disjoint 5-cycle packing inside
// the blow-up has at most this many cycles.
inline long long b_value(const PartSizes& a) {
    for (long long ai : a)
        if (ai < 0) throw std::invalid_argument("part sizes must be nonnegative");
    long long best = a[0] * a[1];
    for (int i = 1; i < 5; ++i) best = std::min(best, a[i] * a[(i + 1) % 5]);
    return best;
}

// t(n) = max of b(a) over part sizes summing to n, with n = 5q + r:
// q^2 when r in {0,1,2}, q(q+1) when r in {3,4}.
struct TnValue {
    long long n = 0;
    long long q = 0;
    long long r = 0;
    long long t = 0;
};

inline TnValue t_value(long long n) {
    if (n < 0) throw std::invalid_argument("t(n): n must be nonnegative");
    TnValue v;
    v.n = n;
    v.q = n / 5;
    v.r = n % 5;
    v.t = (v.r <= 2) ? v.q * v.q : v.q * (v.q + 1);
    return v;
}

// A maximizer of b(a) for a_1+...+a_5 = n. The +1 parts are laid out so
// that the explicit cycle family in blowup_packing attains b(a) directly:
// for r in {3,4} the incremented parts sit at alternating positions.
inline PartSizes balanced_part_sizes(long long n) {
    long long q = n / 5, r = n % 5;
    switch (r) {
        case 0: return {q, q, q, q, q};
        case 1: return {q + 1, q, q, q, q};
        case 2: return {q + 1, q + 1, q, q, q};
        case 3: return {q + 1, q, q + 1, q, q + 1};
        default: return {q + 1, q, q + 1, q + 1, q + 1};
    }
}

} // namespace mct
