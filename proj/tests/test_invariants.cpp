#include <doctest.h>

#include <algorithm>

#include "blockforge/invariants.hpp"

using namespace blockforge;

namespace {

const ConjectureCheck& find_check(const ConjectureReport& rep, const std::string& name)
{
    for (const auto& c : rep)
        if (c.name == name)
            return c;
    throw std::runtime_error("missing conjecture entry " + name);
}

} // namespace

TEST_CASE("general bounds fixtures")
{
    InvariantBounds b = bounds_general(BlockParams::make(3, 3, 1, 2, 2));
    CHECK(b.k.lo == 21);
    CHECK(b.k.hi == 22);
    CHECK(b.k0.hi == 18);
    CHECK(b.weighted_sum_bound == 54);
    CHECK(b.height_vanishing_above == 1);

    InvariantBounds c = bounds_general(BlockParams::make(3, 2, 1, 1, 2));
    CHECK(c.k.lo == 10);
    CHECK(c.k.hi == 11);
    CHECK(c.k0.lo == 7); // pre-refinement
    CHECK(c.k0.hi == 9);

    // Olsson boundary at e = 1: the k0 bound is |D:D'| = p^(n+l)
    InvariantBounds nil = bounds_general(BlockParams::make(3, 2, 2, 1, 1));
    CHECK(nil.k0.hi == 27);
}

TEST_CASE("k0 bound never exceeds |D:D'|")
{
    for (auto [p, m, n, l] : std::vector<std::array<long long, 4>>{
             {3, 2, 1, 1}, {3, 3, 2, 1}, {3, 4, 3, 2}, {5, 3, 2, 2}, {7, 2, 3, 1}})
        for (long long e = 1; e <= p - 1; ++e) {
            if ((p - 1) % e != 0)
                continue;
            InvariantBounds b = bounds_general(BlockParams::make(p, m, n, l, e));
            CHECK(b.k0.hi <= ipow(p, n + l));
            CHECK(b.k.lo <= b.k.hi);
            CHECK(b.k0.lo <= b.k0.hi);
            CHECK(b.k1.lo <= b.k1.hi);
            CHECK(b.l.lo <= b.l.hi);
        }
}

TEST_CASE("M-case bounds")
{
    InvariantBounds b = bounds_M(BlockParams::make(3, 3, 1, 2, 2));
    CHECK(b.k0 == IntInterval::point(18)); // Landrock refinement at p = 3
    CHECK(b.k1.lo == 3);
    CHECK(b.k1.hi == 4);
    CHECK(b.l.lo == 2);
    CHECK(b.l.hi == 3);
    CHECK(b.k_minus_l == 19);
    CHECK(b.height_vanishing_above == 1);

    InvariantBounds c = bounds_M(BlockParams::make(5, 2, 1, 1, 2));
    CHECK(c.k_minus_l == 20);
    CHECK(c.k1.lo == 2);
    CHECK(c.k1.hi == 3);

    // nilpotent: k - l = k(D) - 1
    InvariantBounds nil = bounds_M(BlockParams::make(5, 2, 1, 1, 1));
    CHECK(nil.k_minus_l == 28);

    CHECK_THROWS_AS(bounds_M(BlockParams::make(3, 2, 2, 1, 2)), std::invalid_argument);
}

TEST_CASE("extraspecial bounds")
{
    InvariantBounds b = bounds_extraspecial(BlockParams::make(5, 2, 1, 1, 4));
    CHECK(b.k.lo == 26);
    CHECK(b.k.hi == 28); // capped by k <= p^2 + p - 2
    CHECK(b.k0.lo == 22);
    CHECK(b.k0.hi == 25);
    CHECK(b.k0.excluded == std::vector<long long>{23, 24}); // k0 in {22, 25}
    CHECK(b.k1.lo == 1);
    CHECK(b.k1.hi == 4);
    CHECK(b.l.lo == 4);
    CHECK(b.l.hi == 6);

    // e = 2 and p > 3: plain displayed bounds, k0 two-valued
    InvariantBounds c = bounds_extraspecial(BlockParams::make(7, 2, 1, 1, 2));
    CHECK(c.k0.lo == 7 * 10 / 2 - 1);
    CHECK(c.k0.hi == 35);
    CHECK(c.k_minus_l == 36);

    // p = 3, e = 2 = p - 1: the displayed bounds, the sum-of-squares
    // exclusions and the exact k0 pin everything
    InvariantBounds d = bounds_extraspecial(BlockParams::make(3, 2, 1, 1, 2));
    CHECK(d.k == IntInterval::point(10));
    CHECK(d.k0 == IntInterval::point(9));
    CHECK(d.k1 == IntInterval::point(1));
    CHECK(d.l == IntInterval::point(2));

    CHECK_THROWS_AS(bounds_extraspecial(BlockParams::make(3, 3, 1, 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("exact invariants by family")
{
    auto p3 = exact_invariants(BlockParams::make(3, 2, 1, 1, 2));
    REQUIRE(p3.has_value());
    CHECK(*p3->k == IntInterval::point(10));
    CHECK(*p3->k0 == IntInterval::point(9));
    CHECK(*p3->k1 == IntInterval::point(1));
    CHECK(*p3->l == IntInterval::point(2));

    auto p7 = exact_invariants(BlockParams::make(7, 2, 1, 1, 2));
    REQUIRE(p7.has_value());
    CHECK(*p7->k == IntInterval::point(38));
    CHECK(*p7->k0 == IntInterval::point(35));
    CHECK(*p7->k1 == IntInterval::point(3));
    CHECK(*p7->l == IntInterval::point(2));

    auto m3 = exact_invariants(BlockParams::make(3, 3, 1, 2, 2));
    REQUIRE(m3.has_value());
    CHECK(*m3->k == IntInterval::point(21));
    CHECK(*m3->k0 == IntInterval::point(18));

    // p = 3, m >= 4: k0 exact, the others two-valued
    auto m4 = exact_invariants(BlockParams::make(3, 4, 1, 3, 2));
    REQUIRE(m4.has_value());
    CHECK(*m4->k0 == IntInterval::point(45));
    CHECK(m4->k == IntInterval{54, 55, {}});
    CHECK(m4->k1 == IntInterval{9, 10, {}});
    CHECK(m4->l == IntInterval{2, 3, {}});

    // nilpotent, n = 2: no k1 claim
    auto nil = exact_invariants(BlockParams::make(3, 2, 2, 1, 1));
    REQUIRE(nil.has_value());
    CHECK(*nil->k == IntInterval::point(33));
    CHECK(*nil->k0 == IntInterval::point(27));
    CHECK(*nil->l == IntInterval::point(1));
    CHECK(!nil->k1.has_value());

    CHECK(!exact_invariants(BlockParams::make(5, 2, 1, 1, 4)).has_value());
    CHECK(!exact_invariants(BlockParams::make(13, 2, 1, 1, 2)).has_value());
}

TEST_CASE("exact values sit inside every bound interval")
{
    for (auto [p, m, n, l] : std::vector<std::array<long long, 4>>{
             {3, 2, 1, 1}, {3, 3, 1, 2}, {3, 4, 1, 3}, {5, 2, 1, 1}, {7, 2, 1, 1},
             {11, 2, 1, 1}, {3, 2, 2, 1}, {5, 3, 2, 2}})
        for (long long e = 1; e <= p - 1; ++e) {
            if ((p - 1) % e != 0)
                continue;
            BlockParams B = BlockParams::make(p, m, n, l, e);
            auto exact = exact_invariants(B);
            if (!exact)
                continue;
            for (const auto& bounds : {best_bounds(B), bounds_general(B)}) {
                auto inside = [](const std::optional<IntInterval>& x, const IntInterval& iv) {
                    if (x)
                        CHECK((x->lo >= iv.lo && x->hi <= iv.hi));
                };
                inside(exact->k, bounds.k);
                inside(exact->k0, bounds.k0);
                inside(exact->l, bounds.l);
                if (bounds.height_vanishing_above >= 1)
                    inside(exact->k1, bounds.k1);
            }
            if (exact->k && exact->k0 && exact->k1 && exact->k->is_point() &&
                exact->k0->is_point() && exact->k1->is_point())
                CHECK(exact->k->lo == exact->k0->lo + exact->k1->lo);
        }
}

TEST_CASE("conjecture checklist on exact families")
{
    auto rep = conjecture_checks(BlockParams::make(3, 2, 1, 1, 2));
    for (const char* name : {"brauer_k_conjecture", "olsson", "height_zero", "robinson",
                             "eaton_moreto", "malle_navarro", "alperin_weight",
                             "ordinary_weight", "alperin_mckay", "galois_alperin_mckay"})
        CHECK(find_check(rep, name).verified);

    auto rep5 = conjecture_checks(BlockParams::make(5, 2, 1, 1, 2));
    CHECK(find_check(rep5, "malle_navarro").verified);
    CHECK(find_check(rep5, "malle_navarro").witness.find("22") != std::string::npos);
    CHECK(find_check(rep5, "ordinary_weight").verified);

    // l(B) is not pinned for e = 4, so the weight conjectures stay open
    auto rep54 = conjecture_checks(BlockParams::make(5, 2, 1, 1, 4));
    CHECK(!find_check(rep54, "alperin_weight").verified);
    CHECK(find_check(rep54, "brauer_k_conjecture").verified);
    CHECK(find_check(rep54, "height_zero").verified);

    // n = 2: the general-case checks still close, the weights do not
    auto rep_n2 = conjecture_checks(BlockParams::make(3, 2, 2, 1, 2));
    CHECK(find_check(rep_n2, "brauer_k_conjecture").verified);
    CHECK(find_check(rep_n2, "olsson").verified);
    CHECK(find_check(rep_n2, "height_zero").verified);
    CHECK(find_check(rep_n2, "robinson").verified);
    CHECK(!find_check(rep_n2, "ordinary_weight").verified);

    // height bound too weak to settle Robinson at (m, n, l) = (2, 3, 1)
    auto rep_weak = conjecture_checks(BlockParams::make(3, 2, 3, 1, 2));
    CHECK(!find_check(rep_weak, "robinson").verified);
}
