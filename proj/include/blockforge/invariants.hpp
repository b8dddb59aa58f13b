#ifndef BLOCKFORGE_INVARIANTS_HPP
#define BLOCKFORGE_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "blockforge/fusion.hpp"

// Block-invariant calculator: closed-form bounds, exact values where the
// theory pins them, and the conjecture checklist.

namespace blockforge {

struct IntInterval {
    long long lo = 0;
    long long hi = 0;
    std::vector<long long> excluded; // values inside [lo, hi] ruled out

    static IntInterval point(long long v) { return {v, v, {}}; }
    bool is_point() const { return lo == hi && excluded.empty(); }
    bool contains(long long v) const;
    bool operator==(const IntInterval&) const = default;
};

struct InvariantBounds {
    IntInterval k, k0, k1, l;
    std::optional<long long> k_minus_l;    // exact when n = 1
    int height_vanishing_above = 0;        // k_i = 0 for i > this
    long long weighted_sum_bound = 0;      // bound on sum p^(2i) k_i

    bool operator==(const InvariantBounds&) const = default;
};

// k(B) >= ((p^l + p^(l-1) - p^(2l-m-1) - 1)/e + e) p^n,
// k_0(B) <= ((p^l - 1)/e + e) p^n <= p^(n+l),
// sum p^(2i) k_i(B) <= ((p^l - 1)/e + e) p^(n+m-l),
// k(B) <= ((p^l - 1)/e + e)(p^(n+m-l-2) + p^n - p^(n-2)),
// heights vanish above min(2(m-l), (m+n-1)/2).
InvariantBounds bounds_general(const BlockParams& B);

// n = 1 refinements: heights vanish above 1, exact k - l, the long k_0 lower
// bound, and for p = 3, e = 2 the exact k_0 = (3^m + 9)/2.
InvariantBounds bounds_M(const BlockParams& B);

// m = 2, n = 1, l = 1: the six displayed inequalities; for e = p - 1 also the
// cap k <= p^2 + p - 2, l <= 2e - 2 and the excluded k_0 values coming from
// sums of squares.
InvariantBounds bounds_extraspecial(const BlockParams& B);

// Most refined bounds available for the given parameters.
InvariantBounds best_bounds(const BlockParams& B);

struct ExactInvariants {
    std::optional<IntInterval> k, k0, k1, l; // points, or two-valued intervals
    std::string basis;                       // which result pins the values

    bool operator==(const ExactInvariants&) const = default;
};

// Exact values where known: e = 1 (nilpotent), the extraspecial e = 2 family
// for p <= 11, and the p = 3, n = 1, e = 2 family.
std::optional<ExactInvariants> exact_invariants(const BlockParams& B);

struct ConjectureCheck {
    std::string name;
    bool verified = false; // true when the arithmetic witness closes the check
    std::string witness;

    bool operator==(const ConjectureCheck&) const = default;
};

using ConjectureReport = std::vector<ConjectureCheck>;

ConjectureReport conjecture_checks(const BlockParams& B);

} // namespace blockforge

#endif
