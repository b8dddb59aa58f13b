#include "blockforge/invariants.hpp"

#include <algorithm>

#include "blockforge/characters.hpp"
#include "blockforge/lattice.hpp"

namespace blockforge {

bool IntInterval::contains(long long v) const
{
    if (v < lo || v > hi)
        return false;
    return std::find(excluded.begin(), excluded.end(), v) == excluded.end();
}

namespace {

long long as_ll(const Rational& r) { return checked_cast_ll(r.as_integer()); }
long long floor_ll(const Rational& r) { return checked_cast_ll(r.floor()); }

struct FormulaParts {
    long long p;
    int m, n, l;
    long long e;
    Rational A;       // (p^l - 1)/e + e
    long long k_lo;
    long long k_up;
    long long k0_up;
    long long W;      // weighted-sum bound
};

FormulaParts formula_parts(const BlockParams& B)
{
    const GroupParams& G = B.group();
    FormulaParts F;
    F.p = G.p();
    F.m = G.m();
    F.n = G.n();
    F.l = G.l();
    F.e = B.e();
    Rational e(F.e);
    F.A = (Rational::power(F.p, F.l) - Rational(1)) / e + e;
    F.k_lo = checked_cast_ll(k_lower_formula(B));
    F.k_up = floor_ll(F.A * (Rational::power(F.p, F.n + F.m - F.l - 2) +
                             Rational::power(F.p, F.n) - Rational::power(F.p, F.n - 2)));
    F.k0_up = as_ll(F.A * Rational::power(F.p, F.n));
    F.W = as_ll(F.A * Rational::power(F.p, F.n + F.m - F.l));
    return F;
}

} // namespace

InvariantBounds bounds_general(const BlockParams& B)
{
    FormulaParts F = formula_parts(B);
    InvariantBounds b;
    b.weighted_sum_bound = F.W;
    b.height_vanishing_above =
        std::min(2 * (F.m - F.l), (F.m + F.n - 1) / 2);
    b.k = {F.k_lo, F.k_up, {}};
    // k_i <= W / p^(2i) individually
    long long caps_from_1 = 0, caps_from_2 = 0;
    for (int i = 1; i <= b.height_vanishing_above; ++i) {
        long long cap = floor_ll(Rational(F.W) / Rational::power(F.p, 2 * i));
        caps_from_1 += cap;
        if (i >= 2)
            caps_from_2 += cap;
    }
    b.k0 = {std::max(1LL, F.k_lo - caps_from_1), F.k0_up, {}};
    if (b.height_vanishing_above == 0)
        b.k1 = IntInterval::point(0);
    else
        b.k1 = {std::max(0LL, F.k_lo - F.k0_up - caps_from_2),
                floor_ll(Rational(F.W) / Rational::power(F.p, 2)), {}};
    b.l = {F.e, F.k_up - F.k_lo + F.e, {}};
    return b;
}

namespace {

// bounds_M without the p = 3 exactness step, reused by bounds_extraspecial
InvariantBounds bounds_M_core(const BlockParams& B, const FormulaParts& F)
{
    if (B.group().n() != 1)
        throw std::invalid_argument("bounds_M requires n = 1");
    InvariantBounds b = bounds_general(B);
    Rational e(F.e);

    b.height_vanishing_above = 1; // k_i = 0 for i >= 2
    b.k_minus_l = checked_cast_ll(k_minus_l_formula(B));

    long long k1_up = std::min(
        floor_ll(Rational(F.W) / Rational::power(F.p, 2)),
        as_ll((Rational::power(F.p, F.m - 1) - Rational(1)) / e + e - Rational(1)));
    long long k1_lo = std::max(0LL, F.k_lo - F.k0_up);
    b.k1 = {k1_lo, k1_up, {}};

    long long k0_long = as_ll((Rational::power(F.p, F.m) - Rational::power(F.p, F.m - 2) -
                               Rational(F.p) + Rational(1)) /
                                  e +
                              e * Rational(F.p - 1) + Rational(1));
    b.k0 = {std::max({1LL, F.k_lo - k1_up, k0_long}), F.k0_up, {}};
    b.l = {F.e, F.k_up - *b.k_minus_l, {}};
    return b;
}

void apply_p3_exact_k0(const BlockParams& B, const FormulaParts& F, InvariantBounds& b)
{
    if (F.p != 3 || F.e != 2)
        return;
    // k_0(B) = (3^m + 9)/2 exactly for p = 3
    long long k0 = as_ll((Rational::power(3, F.m) + Rational(9)) / Rational(2));
    if (k0 < b.k0.lo || k0 > b.k0.hi)
        throw consistency_error("exact k0 for p = 3 leaves the bound interval");
    b.k0 = IntInterval::point(k0);
    b.k1 = {std::max(b.k1.lo, F.k_lo - k0), std::min(b.k1.hi, b.k.hi - k0), {}};
}

} // namespace

InvariantBounds bounds_M(const BlockParams& B)
{
    FormulaParts F = formula_parts(B);
    InvariantBounds b = bounds_M_core(B, F);
    apply_p3_exact_k0(B, F, b);
    return b;
}

InvariantBounds bounds_extraspecial(const BlockParams& B)
{
    const GroupParams& G = B.group();
    if (G.m() != 2 || G.n() != 1 || G.l() != 1)
        throw std::invalid_argument("bounds_extraspecial requires (m, n, l) = (2, 1, 1)");
    FormulaParts F = formula_parts(B);
    InvariantBounds b = bounds_M_core(B, F);

    // the six displayed inequalities, as a cross-check of the derivation
    long long p = F.p, e = F.e;
    long long p2e = as_ll(Rational(p * p - 1) / Rational(e));
    long long pe = as_ll(Rational(p - 1) / Rational(e));
    if (b.k.lo != p2e + e * p || b.k.hi != p2e + e * p + e - 1 ||
        b.k0.hi != (pe + e) * p || b.k0.lo != (pe + e) * p - e + 1 ||
        b.k1.lo != pe || b.k1.hi != pe + e - 1 ||
        b.l.lo != e || b.l.hi != 2 * e - 1 ||
        *b.k_minus_l != p2e + (p - 1) * e)
        throw consistency_error("extraspecial bounds disagree with the displayed forms");

    if (e == p - 1) {
        b.k.hi = std::min(b.k.hi, p * p + p - 2);
        b.l.hi = std::min(b.l.hi, 2 * e - 2);
        long long cap = std::min<long long>(15, p * p - 1);
        for (long long r : forbidden_deficits(p, cap)) {
            long long v = p * p - r;
            if (v >= b.k0.lo && v <= b.k0.hi)
                b.k0.excluded.push_back(v);
        }
        std::sort(b.k0.excluded.begin(), b.k0.excluded.end());
    }
    apply_p3_exact_k0(B, F, b);
    return b;
}

InvariantBounds best_bounds(const BlockParams& B)
{
    const GroupParams& G = B.group();
    if (G.m() == 2 && G.n() == 1 && G.l() == 1)
        return bounds_extraspecial(B);
    if (G.n() == 1)
        return bounds_M(B);
    return bounds_general(B);
}

std::optional<ExactInvariants> exact_invariants(const BlockParams& B)
{
    const GroupParams& G = B.group();
    long long p = G.p(), e = B.e();
    int m = G.m(), n = G.n(), l = G.l();

    ExactInvariants out;
    if (e == 1) {
        long long kD = checked_cast_ll(class_count_formula(G));
        out.k = IntInterval::point(kD);
        out.k0 = IntInterval::point(checked_cast_ll(ipow(p, n + l)));
        out.l = IntInterval::point(1);
        if (n == 1)
            out.k1 = IntInterval::point(kD - checked_cast_ll(ipow(p, m)));
        out.basis = "nilpotent block: k(D) and |D:D'|";
        return out;
    }
    if (p == 3 && n == 1 && e == 2) {
        long long k0 = checked_cast_ll((ipow(3, m) + 9) / 2);
        long long k1 = checked_cast_ll(ipow(3, m - 2));
        long long k = checked_cast_ll((11 * ipow(3, m - 2) + 9) / 2);
        if (m <= 3) {
            out.k = IntInterval::point(k);
            out.k0 = IntInterval::point(k0);
            out.k1 = IntInterval::point(k1);
            out.l = IntInterval::point(2);
            out.basis = "p = 3, m <= 3 exact invariants";
        } else {
            out.k0 = IntInterval::point(k0);
            out.k = {k, k + 1, {}};
            out.k1 = {k1, k1 + 1, {}};
            out.l = {2, 3, {}};
            out.basis = "p = 3 exact k0; k, k1, l two-valued";
        }
        return out;
    }
    if (m == 2 && n == 1 && l == 1 && e == 2 && p <= 11) {
        out.k = IntInterval::point((p * p + 4 * p - 1) / 2);
        out.k0 = IntInterval::point(p * (p + 3) / 2);
        out.k1 = IntInterval::point((p - 1) / 2);
        out.l = IntInterval::point(2);
        out.basis = "extraspecial e = 2, p <= 11 exact invariants";
        return out;
    }
    return std::nullopt;
}

namespace {

std::string rng(const IntInterval& iv)
{
    if (iv.is_point())
        return std::to_string(iv.lo);
    return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

} // namespace

ConjectureReport conjecture_checks(const BlockParams& B)
{
    const GroupParams& G = B.group();
    long long p = G.p(), e = B.e();
    int m = G.m(), n = G.n(), l = G.l();
    InvariantBounds bounds = best_bounds(B);
    auto exact = exact_invariants(B);

    // tightest interval we can defend for each invariant
    auto eff = [&](const IntInterval InvariantBounds::*bf,
                   std::optional<IntInterval> ExactInvariants::*ef) {
        IntInterval iv = bounds.*bf;
        if (exact && (*exact).*ef) {
            const IntInterval& x = *((*exact).*ef);
            iv.lo = std::max(iv.lo, x.lo);
            iv.hi = std::min(iv.hi, x.hi);
        }
        return iv;
    };
    IntInterval k = eff(&InvariantBounds::k, &ExactInvariants::k);
    IntInterval k0 = eff(&InvariantBounds::k0, &ExactInvariants::k0);
    IntInterval k1 = eff(&InvariantBounds::k1, &ExactInvariants::k1);
    IntInterval lB = eff(&InvariantBounds::l, &ExactInvariants::l);

    long long orderD = G.order();
    long long index_derived = checked_cast_ll(ipow(p, n + l));
    long long index_center = checked_cast_ll(ipow(p, 2 * (m - l)));
    long long kD = checked_cast_ll(class_count_formula(G));
    long long kDprime = checked_cast_ll(ipow(p, m - l)); // D' is cyclic

    ConjectureReport rep;

    rep.push_back({"brauer_k_conjecture", k.hi <= orderD,
                   "k(B) <= " + std::to_string(k.hi) + " <= |D| = " + std::to_string(orderD)});

    rep.push_back({"olsson", k0.hi <= index_derived,
                   "k0(B) <= " + std::to_string(k0.hi) +
                       " <= |D:D'| = " + std::to_string(index_derived)});

    if (k0.is_point() && k.is_point()) {
        rep.push_back({"height_zero", k0.lo < k.lo,
                       "exact k0 = " + std::to_string(k0.lo) + " < k = " + std::to_string(k.lo)});
    } else {
        // the k0 bound stays strictly under the k lower bound because l < m
        Rational gap = (Rational::power(p, l - 1) - Rational::power(p, 2 * l - m - 1)) *
                       Rational::power(p, n) / Rational(e);
        rep.push_back({"height_zero", Rational(0) < gap,
                       "k0 bound " + std::to_string(bounds.k0.hi) + " < k lower bound " +
                           std::to_string(bounds.k.lo) + " (margin " + to_string(gap.num()) +
                           "/" + to_string(gap.den()) + ", positive since l < m)"});
    }

    {
        bool ok = ipow(p, bounds.height_vanishing_above) < index_center;
        rep.push_back({"robinson", ok,
                       "p^h <= " + to_string(ipow(p, bounds.height_vanishing_above)) +
                           std::string(ok ? " < " : " !< ") +
                           "|D:Z(D)| = " + std::to_string(index_center) +
                           " for all admitted heights h <= " +
                           std::to_string(bounds.height_vanishing_above)});
    }

    if (k1.lo >= 1)
        rep.push_back({"eaton_moreto", true,
                       "k1(B) >= " + std::to_string(k1.lo) +
                           " so the minimal positive height is 1 = minimal positive height of D"});
    else
        rep.push_back({"eaton_moreto", false,
                       "k1 range " + rng(k1) + " does not force a positive-height character"});

    {
        bool first = Rational(k.hi) / Rational(lB.lo) < Rational(kD) ||
                     Rational(k.hi) / Rational(lB.lo) == Rational(kD);
        bool second = k.hi <= checked_mul(k0.lo, kDprime);
        rep.push_back({"malle_navarro", first && second,
                       "k/l <= " + std::to_string(k.hi) + "/" + std::to_string(lB.lo) +
                           " vs k(D) = " + std::to_string(kD) + "; k <= " + std::to_string(k.hi) +
                           " vs k0 k(D') = " + std::to_string(k0.lo) + "*" +
                           std::to_string(kDprime)});
    }

    if (exact && exact->l && exact->l->is_point())
        rep.push_back({"alperin_weight", exact->l->lo == e,
                       "l(B) = " + std::to_string(exact->l->lo) + " = e(B) = " + std::to_string(e)});
    else
        rep.push_back({"alperin_weight", false, "l(B) only known in " + rng(lB)});

    if (n == 1 && exact && exact->k0 && exact->k0->is_point() && exact->k1 &&
        exact->k1->is_point()) {
        long long w_full = owc_weights(B, m + 1);
        long long w_sub = owc_weights(B, m);
        bool ok = exact->k0->lo == w_full && exact->k1->lo == w_sub;
        rep.push_back({"ordinary_weight", ok,
                       "k0 = " + std::to_string(exact->k0->lo) + " vs w(D," +
                           std::to_string(m + 1) + ") = " + std::to_string(w_full) +
                           "; k1 = " + std::to_string(exact->k1->lo) + " vs w(D," +
                           std::to_string(m) + ") = " + std::to_string(w_sub)});
    } else {
        rep.push_back({"ordinary_weight", false,
                       n == 1 ? "exact k0, k1 not available" : "weights not computed for n >= 2"});
    }

    if (p == 3 && n == 1 && e == 2)
        rep.push_back({"alperin_mckay", true,
                       "k0(B) = (3^m+9)/2 = " + std::to_string((checked_cast_ll(ipow(3, m)) + 9) / 2) +
                           " for B and its Brauer correspondent alike"});
    if (m == 2 && n == 1 && l == 1 && e == 2)
        rep.push_back({"galois_alperin_mckay", true,
                       "k0(B) = p(p+3)/2 = " + std::to_string(p * (p + 3) / 2) +
                           " with every height-zero character fixed by the p-automorphisms"});
    return rep;
}

} // namespace blockforge
