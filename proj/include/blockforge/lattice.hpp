#ifndef BLOCKFORGE_LATTICE_HPP
#define BLOCKFORGE_LATTICE_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blockforge/arith.hpp"

// Integer quadratic-form engine: the Dynkin A_r form and its small-value
// solutions, Gram checks for cyclotomic decomposition columns, sums of
// squares, the height-profile Diophantine equation and reduced binary forms.

namespace blockforge {

using IntVector = std::vector<long long>;

enum class RootShape {
    interval,                     // +-(0..0 1..1 0..0)
    two_intervals_same_sign,      // +-(0..0 1..1 0..0 1..1 0..0), gap >= 1
    two_intervals_opposite_sign,  // +-(0..0 1..1 0..0 -1..-1 0..0), gap >= 1
    doubled_plateau,              // +-(0..0 1..1 2..2 1..1 0..0), contiguous
    other,
};

const char* to_string(RootShape s);

// q(a) = sum a_i^2 - sum a_i a_(i+1); evaluates both the product form and the
// half-sum-of-squares form and insists they agree.
int128 q_eval(const IntVector& a);

RootShape classify_root(const IntVector& a);

struct QSolution {
    IntVector vec;
    RootShape shape;
};

// Exhaustive solutions of q(a) = v over entries in {-2..2} (the proof bound);
// v must be 1 or 2.
std::vector<QSolution> q_solutions(int r, int v);

struct GramSpec {
    std::vector<std::string> basis_labels;
    // prescribed inner products, symmetric, indexed like basis_labels
    std::vector<std::vector<long long>> gram;
    // character heights, one per row of the checked vectors
    std::vector<int> char_heights;
    // entries of every vector at rows of height h must be divisible by the
    // modulus (a p-power)
    std::vector<std::pair<int, long long>> divisibility;
};

struct GramCheckResult {
    bool ok = true;
    std::string violation; // first violated constraint if !ok
};

GramCheckResult gram_check(const std::vector<IntVector>& vectors, const GramSpec& spec);

// parity of a forced odd-times-odd overlap: true means orthogonality is
// impossible
bool parity_obstruction(long long odd_overlap_count);

// All multisets of t positive squares with sum N (non-increasing square
// values); N is capped at 400.
std::vector<std::vector<long long>> sum_squares_exact(long long N, long long t);

// {r <= cap : p^2 is not a sum of p^2 - r positive squares}; cap <= p^2
std::set<long long> forbidden_deficits(long long p, long long cap);

struct HeightProfile {
    // r[i - 2] = multiplicity r_i of i^2 - 1, i >= 2
    std::vector<long long> r;

    long long multiplicity(int i) const;
    bool operator==(const HeightProfile&) const = default;
};

// Solutions of sum r_i (i^2 - 1) = p(p-3)/2. With the rational filter on,
// profiles with sum of residues r_i mod (p-1)/2 exceeding 2 are dropped.
std::vector<HeightProfile> height_profile_solutions(long long p,
                                                    bool apply_rational_filter = true);

struct BinaryForm {
    long long a = 0, b = 0, c = 0; // symmetric matrix (a b; b c)

    int128 det() const { return checked_mul(a, c) - checked_mul(b, b); }
    bool is_reduced() const { return 0 <= 2 * b && 2 * b <= a && a <= c; }
    bool operator==(const BinaryForm&) const = default;
    bool operator<(const BinaryForm& o) const;
};

// All reduced positive definite forms of the given determinant, optionally
// filtered by elementary divisors (d1, d2) with gcd(a,b,c) = d1, d1 d2 = det.
std::vector<BinaryForm> reduced_binary_forms(
    long long det, std::optional<std::pair<long long, long long>> elementary_divisors = {});

} // namespace blockforge

#endif
