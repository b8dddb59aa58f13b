#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "blockforge/fusion.hpp"

using namespace blockforge;

TEST_CASE("inertial unit fixtures")
{
    CHECK(inertial_unit(3, 2, 2) == 8);   // -1 mod 9
    CHECK(inertial_unit(7, 2, 2) == 48);  // -1 mod 49
    CHECK(inertial_unit(5, 2, 4) == 7);   // 2^5 mod 25
    CHECK(inertial_unit(5, 2, 1) == 1);
    CHECK_THROWS_WITH_AS(inertial_unit(5, 2, 3), doctest::Contains("does not divide"),
                         std::invalid_argument);
}

TEST_CASE("alpha has order e, fixes y and acts freely on <x> off 1")
{
    for (auto [p, m, n, l, e] : std::vector<std::array<long long, 5>>{
             {3, 2, 1, 1, 2}, {5, 2, 1, 1, 4}, {7, 2, 1, 1, 3}, {5, 3, 2, 2, 2}}) {
        BlockParams B = BlockParams::make(p, m, n, l, e);
        const GroupParams& G = B.group();
        CHECK(multiplicative_order(B.alpha_unit(), G.x_order()) == (e == 1 ? 1 : e));
        CHECK(B.alpha(G.y()) == G.y());
        for (long long s = 1; s < e; ++s)
            for (long long i = 1; i < G.x_order(); ++i)
                CHECK(!(B.alpha(Element{i, 0}, s) == Element{i, 0}));
    }
}

TEST_CASE("BlockParams validates the inertial index")
{
    CHECK_THROWS_AS(BlockParams::make(3, 2, 1, 1, 4), std::invalid_argument);
    CHECK_NOTHROW(BlockParams::make(3, 2, 1, 1, 1));
}

TEST_CASE("fusion classes of the extraspecial 27 block")
{
    BlockParams B = BlockParams::make(3, 2, 1, 1, 2);
    auto classes = fusion_classes(B);
    CHECK(classes.size() == 7);

    long long meeting = 0, total = 0;
    for (const auto& c : classes) {
        total += c.size;
        if (c.meets_y) {
            ++meeting;
            CHECK(c.l_bu == 2);
        } else {
            CHECK(c.l_bu == 1);
        }
        // orbit-stabilizer in D x| I(B)
        CHECK((B.group().order() * B.e()) % c.size == 0);
    }
    CHECK(meeting == 3);
    CHECK(total == B.group().order());

    std::map<long long, FusionClass> by_rep;
    for (const auto& c : classes)
        by_rep[B.group().index_of(c.representative)] = c;
    // Aut_F(<x>) = <y> x I(B), Aut_F(<y>) = 1
    CHECK(by_rep.at(B.group().index_of(Element{1, 0})).aut_order == 6);
    CHECK(by_rep.at(B.group().index_of(Element{0, 1})).aut_order == 1);
}

TEST_CASE("classes disjoint from <y> fuse in I(B)-orbits of length e")
{
    for (auto [p, m, n, l, e] : std::vector<std::array<long long, 5>>{
             {3, 2, 1, 1, 2}, {5, 2, 1, 1, 2}, {5, 2, 1, 1, 4}, {3, 3, 1, 2, 2}, {3, 2, 2, 1, 2}}) {
        BlockParams B = BlockParams::make(p, m, n, l, e);
        const GroupParams& G = B.group();
        auto d_classes = conjugacy_classes(G);
        std::map<long long, long long> d_class_size;
        for (const auto& c : d_classes)
            for (const auto& g : c.members)
                d_class_size[G.index_of(g)] = c.size();
        long long y_classes = 0;
        for (const auto& c : fusion_classes(B)) {
            if (c.meets_y) {
                ++y_classes;
                CHECK(c.size == d_class_size.at(G.index_of(c.representative)));
            } else {
                CHECK(c.size == e * d_class_size.at(G.index_of(c.representative)));
            }
        }
        CHECK(y_classes == G.y_order()); // exactly p^n classes meet <y>
    }
}

TEST_CASE("k lower bound fixtures")
{
    CHECK(k_lower(BlockParams::make(3, 2, 1, 1, 2)) == 10);
    CHECK(k_lower(BlockParams::make(3, 3, 1, 2, 2)) == 21);
    // nilpotent: every l(b_u) = 1 and the count is k(D)
    BlockParams nil = BlockParams::make(3, 3, 1, 2, 1);
    CHECK(k_lower(nil) == checked_cast_ll(class_count_formula(nil.group())));
    CHECK(k_lower_formula(BlockParams::make(5, 2, 1, 1, 2)) == 22);
}

TEST_CASE("k minus l fixtures")
{
    CHECK(k_minus_l(BlockParams::make(3, 2, 1, 1, 2)) == 8);
    CHECK(k_minus_l(BlockParams::make(5, 2, 1, 1, 2)) == 20);
    CHECK(k_minus_l(BlockParams::make(3, 3, 1, 2, 2)) == 19);
    CHECK_THROWS_AS(k_minus_l(BlockParams::make(3, 2, 2, 1, 2)), std::invalid_argument);
}

TEST_CASE("semidirect product class counts")
{
    CHECK(semidirect_class_count(BlockParams::make(3, 2, 1, 1, 2)) == 10);
    CHECK(semidirect_class_count(BlockParams::make(3, 2, 1, 1, 1)) == 11);
    CHECK(semidirect_class_count(BlockParams::make(5, 2, 1, 1, 2)) == 22);
}

TEST_CASE("sharpness on a small grid")
{
    for (auto [p, m, n, l] : std::vector<std::array<long long, 4>>{
             {3, 2, 1, 1}, {3, 2, 2, 1}, {3, 3, 1, 2}, {3, 3, 2, 1}, {3, 3, 2, 2}, {5, 2, 1, 1}, {5, 2, 2, 1}})
        for (long long e = 1; e <= p - 1; ++e) {
            if ((p - 1) % e != 0)
                continue;
            BlockParams B = BlockParams::make(p, m, n, l, e);
            CHECK(k_lower(B) == semidirect_class_count(B));
        }
}

TEST_CASE("fusion respects the enumeration budget")
{
    BlockParams B = BlockParams::make(3, 2, 1, 1, 2);
    CHECK_THROWS_AS(fusion_classes(B, 53), budget_error);
    CHECK_THROWS_AS(semidirect_class_count(B, 53), budget_error);
}
