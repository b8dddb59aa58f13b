#ifndef BLOCKFORGE_FUSION_HPP
#define BLOCKFORGE_FUSION_HPP

#include <vector>

#include "blockforge/group.hpp"

// The inertial automorphism alpha (x -> x^alpha_1, y -> y), the semidirect
// product D x| I(B), F-conjugacy classes of the controlled fusion system and
// the class counts derived from them.

namespace blockforge {

class BlockParams {
public:
    // e must divide p - 1
    static BlockParams make(const GroupParams& group, long long e);
    static BlockParams make(long long p, int m, int n, int l, long long e);

    const GroupParams& group() const { return group_; }
    long long e() const { return e_; }
    long long alpha_unit() const { return alpha1_; }  // alpha_1 mod p^m

    // alpha^s applied to x^i y^j = x^(i alpha_1^s) y^j
    Element alpha(const Element& g, long long s = 1) const;

private:
    explicit BlockParams(GroupParams group) : group_(std::move(group)) {}
    GroupParams group_;
    long long e_ = 1;
    long long alpha1_ = 1;
    std::vector<long long> alpha_pow_; // alpha_1^s mod p^m, s = 0..e-1
};

// alpha_1 of multiplicative order exactly e mod p^m, pinned as g^(phi(p^m)/e)
// for the least primitive root g.
long long inertial_unit(long long p, int m, long long e);

struct FusionClass {
    Element representative;    // lexicographically least member
    long long size = 0;        // orbit length under D x| I(B)
    long long l_bu = 1;        // e on classes meeting <y>, 1 elsewhere
    long long aut_order = 1;   // |Aut_F(<u>)|
    bool meets_y = false;
    std::vector<Element> members; // sorted
};

// Orbits of D x| I(B) acting on D by conjugation.
std::vector<FusionClass> fusion_classes(const BlockParams& B,
                                        long long budget = kDefaultBudget);

// Sum of l_bu over the fusion classes; checked against the closed formula.
long long k_lower(const BlockParams& B, long long budget = kDefaultBudget);
long long k_lower(const BlockParams& B, const std::vector<FusionClass>& classes);

// ((p^l + p^(l-1) - p^(2l-m-1) - 1)/e + e) p^n, exact and provably integral
int128 k_lower_formula(const BlockParams& B);

// Sum of l_bu over the nontrivial fusion classes (requires n = 1); checked
// against the closed formula.
long long k_minus_l(const BlockParams& B, long long budget = kDefaultBudget);
long long k_minus_l(const BlockParams& B, const std::vector<FusionClass>& classes);

// (p^m + p^(m-1) - p^(m-2) - p)/e + e(p-1), for n = 1
int128 k_minus_l_formula(const BlockParams& B);

// Number of conjugacy classes of the concrete group D x| <alpha> of order
// p^(m+n) e.
long long semidirect_class_count(const BlockParams& B, long long budget = kDefaultBudget);

} // namespace blockforge

#endif
