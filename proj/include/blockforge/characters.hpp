#ifndef BLOCKFORGE_CHARACTERS_HPP
#define BLOCKFORGE_CHARACTERS_HPP

#include <iosfwd>
#include <vector>

#include "blockforge/cyclotomic.hpp"
#include "blockforge/fusion.hpp"
#include "blockforge/group.hpp"

// Complex character table of M_(p^(m+1)) = D with n = 1, the I(B)-action on
// Irr(D), Ordinary-Weight-Conjecture weights w(D, d) and the Galois orbit
// structure on Irr(B).

namespace blockforge {

struct IrrChar {
    enum class Kind { linear, induced };

    Kind kind = Kind::linear;
    long long a = 0; // linear: i mod p^(m-1); induced: k mod p^(m-1) with p !| k
    long long b = 0; // linear: j mod p

    long long degree(const GroupParams& G) const { return kind == Kind::linear ? 1 : G.p(); }
    // p^defect = |D| / p-part of the degree
    int defect(const GroupParams& G) const { return kind == Kind::linear ? G.m() + 1 : G.m(); }
    bool operator==(const IrrChar&) const = default;
};

// chi_ij(x^a y^b) = zeta_(p^(m-1))^(i a) zeta_p^(j b);
// psi_k vanishes off <x^p> and psi_k(x^(p a')) = p zeta_(p^(m-1))^(k a')
CycInt char_value(const GroupParams& G, const IrrChar& chi, const Element& g);

struct CharacterTable {
    long long root_order = 0;                 // p^(m-1)
    std::vector<IrrChar> chars;               // p^m linear, p^(m-2)(p-1) induced
    std::vector<ConjClass> classes;
    std::vector<std::vector<CycInt>> values;  // chars x classes
};

// Full table for n = 1 (errors otherwise); rows and columns satisfy the exact
// orthogonality relations.
CharacterTable irr_table(const GroupParams& G, long long budget = kDefaultBudget);

// w(D,d) = sum over I(B)-orbits on Irr^d(D) of |I(B) /\ I(chi)|; 0 unless
// d is m or m+1.
long long owc_weights(const BlockParams& B, int d);

// closed forms ((p^(m-1)-1)/e + e) p and (p-1) p^(m-2) / e
int128 owc_weight_formula(const BlockParams& B, int d);

struct InertialOrbits {
    std::vector<long long> linear;   // sorted orbit lengths on linear characters
    std::vector<long long> degree_p; // sorted orbit lengths on degree-p characters
};

InertialOrbits inertial_char_orbits(const BlockParams& B);

struct GaloisOrbitData {
    // lengths of the orbits of p-conjugate characters, sorted descending
    std::vector<long long> orbit_lengths;
    // number of p-rational characters: l(B), known only within [e, 2e-1]
    long long rational_lo = 0;
    long long rational_hi = 0;

    long long orbit_sum() const;
    bool operator==(const GaloisOrbitData&) const = default;
};

// Orbit multiset computed from fusion data (requires n = 1, e >= 2): one
// orbit of length phi(|u|)/|Aut_F(<u>)| per Galois orbit of l(b_u) = 1
// classes, e orbits of length p-1 from <y>, plus the l(B) rational entries.
GaloisOrbitData galois_orbit_multiset(const BlockParams& B,
                                      long long budget = kDefaultBudget);
GaloisOrbitData galois_orbit_multiset(const BlockParams& B,
                                      const std::vector<FusionClass>& classes);

// Table dump: rows = characters, columns = class representatives, entries =
// canonical coefficient tuples; RFC 4180 quoting.
void write_table_csv(const GroupParams& G, const CharacterTable& table, std::ostream& os);

} // namespace blockforge

#endif
