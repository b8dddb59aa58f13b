#ifndef BLOCKFORGE_GROUP_HPP
#define BLOCKFORGE_GROUP_HPP

#include <vector>

#include "blockforge/arith.hpp"

// Exact arithmetic for the split metacyclic p-group
//
//   D = < x, y | x^(p^m) = y^(p^n) = 1, y x y^{-1} = x^(1+p^l) >
//
// with p odd, 0 < l < m and m - l <= n. Elements are kept in the normal form
// x^i y^j with 0 <= i < p^m, 0 <= j < p^n.

namespace blockforge {

struct Element {
    long long i = 0; // exponent of x, mod p^m
    long long j = 0; // exponent of y, mod p^n

    bool operator==(const Element&) const = default;
    // lexicographic (i, j); class representatives are the least element
    bool operator<(const Element& o) const { return i != o.i ? i < o.i : j < o.j; }
};

class GroupParams {
public:
    // Validates p odd prime, 0 < l < m, m - l <= n. Each violation yields a
    // distinct diagnostic.
    static GroupParams make(long long p, int m, int n, int l);

    long long p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int l() const { return l_; }

    long long x_order() const { return pm_; }   // p^m
    long long y_order() const { return pn_; }   // p^n
    long long order() const { return pm_ * pn_; }

    // (1 + p^l)^b mod p^m; the base has multiplicative order p^(m-l)
    long long twist_pow(long long b) const;
    long long twist_order() const { return static_cast<long long>(twist_.size()); }

    Element identity() const { return {0, 0}; }
    Element x() const { return {1, 0}; }
    Element y() const { return {0, 1}; }

    long long index_of(const Element& g) const { return g.i * pn_ + g.j; }
    Element element_at(long long idx) const { return {idx / pn_, idx % pn_}; }

private:
    GroupParams() = default;

    long long p_ = 0;
    int m_ = 0, n_ = 0, l_ = 0;
    long long pm_ = 0, pn_ = 0, pl_ = 0;
    std::vector<long long> twist_; // (1+p^l)^b mod p^m for b = 0 .. p^(m-l)-1
};

inline GroupParams make_params(long long p, int m, int n, int l)
{
    return GroupParams::make(p, m, n, l);
}

// Generators and order of a cyclic factor; subgroups that are not cyclic
// (such as C_D(y)) are represented by a list of these.
struct CyclicData {
    Element generator;
    long long order = 1;
};

struct ConjClass {
    Element representative;          // lexicographically least member
    std::vector<Element> members;    // sorted
    long long size() const { return static_cast<long long>(members.size()); }
};

// (x^a y^b)(x^c y^d) = x^(a + c(1+p^l)^b) y^(b+d)
Element mul(const GroupParams& G, const Element& g, const Element& h);
Element inv(const GroupParams& G, const Element& g);
Element pow(const GroupParams& G, Element g, long long k);
long long order_of(const GroupParams& G, const Element& g);

Element conj(const GroupParams& G, const Element& g, const Element& h); // g h g^{-1}
Element commutator(const GroupParams& G, const Element& g, const Element& h);

// Z(D) = <x^(p^(m-l))> x <y^(p^(m-l))>, found by brute force and returned as
// generator data (the y-factor is dropped when trivial).
std::vector<CyclicData> center(const GroupParams& G);
long long center_order_formula(const GroupParams& G); // p^(n-m+2l)

CyclicData derived_subgroup(const GroupParams& G);    // <x^(p^l)>

std::vector<Element> centralizer(const GroupParams& G, const Element& u);

std::vector<ConjClass> conjugacy_classes(const GroupParams& G,
                                         long long budget = kDefaultBudget);

// p^(n-m+2l-1) (p^(m-l+1) + p^(m-l) - 1)
int128 class_count_formula(const GroupParams& G);

} // namespace blockforge

#endif
