#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "blockforge/lattice.hpp"

using namespace blockforge;

TEST_CASE("q evaluation fixtures")
{
    CHECK(q_eval({1, 1, 1}) == 1);
    CHECK(q_eval({1, 0, 1}) == 2);
    CHECK(q_eval({1, 2, 1}) == 2);
    CHECK(q_eval({}) == 0);
    CHECK(q_eval({-3}) == 9);
    CHECK(q_eval({1, 1, -1}) == 3); // not a q = 2 vector
}

TEST_CASE("the two forms of q agree on random vectors")
{
    std::mt19937 rng(97);
    std::uniform_int_distribution<long long> entry(-10, 10);
    std::uniform_int_distribution<int> len(1, 12);
    for (int t = 0; t < 100000; ++t) {
        IntVector a(len(rng));
        for (auto& v : a)
            v = entry(rng);
        q_eval(a); // throws if the evaluations disagree
    }
}

TEST_CASE("root shape classification")
{
    CHECK(classify_root({0, 1, 1, 0}) == RootShape::interval);
    CHECK(classify_root({-1, -1, -1}) == RootShape::interval);
    CHECK(classify_root({1, 0, 1}) == RootShape::two_intervals_same_sign);
    CHECK(classify_root({-1, 0, 0, -1, -1}) == RootShape::two_intervals_same_sign);
    CHECK(classify_root({1, 1, 0, -1}) == RootShape::two_intervals_opposite_sign);
    CHECK(classify_root({1, 2, 1}) == RootShape::doubled_plateau);
    CHECK(classify_root({0, -1, -2, -2, -1, 0}) == RootShape::doubled_plateau);
    CHECK(classify_root({1, 1, -1}) == RootShape::other);
    CHECK(classify_root({1, 3, 1}) == RootShape::other);
    CHECK(classify_root({1, 0, 2}) == RootShape::other);
    CHECK(classify_root({0, 0}) == RootShape::other);
}

TEST_CASE("q solutions for small rank")
{
    auto v1 = q_solutions(3, 1);
    CHECK(v1.size() == 12); // 6 intervals, 2 signs
    for (const auto& s : v1)
        CHECK(s.shape == RootShape::interval);

    auto r1 = q_solutions(1, 1);
    CHECK(r1.size() == 2);

    auto v2 = q_solutions(3, 2);
    std::set<IntVector> vecs;
    for (const auto& s : v2) {
        CHECK(s.shape != RootShape::other);
        vecs.insert(s.vec);
    }
    CHECK(vecs.count({1, 0, 1}));
    CHECK(vecs.count({-1, 0, -1}));
    CHECK(vecs.count({1, 2, 1}));
    CHECK(vecs.count({1, 0, -1}));
    CHECK(!vecs.count({1, 1, -1})); // q = 3
    CHECK(vecs.size() == 6);

    CHECK_THROWS_AS(q_solutions(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_solutions(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_solutions(11, 1), budget_error);
}

TEST_CASE("gram check on the zero configuration")
{
    GramSpec spec;
    spec.basis_labels = {"a", "b"};
    spec.gram = {{0, 0}, {0, 0}};
    CHECK(gram_check({IntVector(4, 0), IntVector(4, 0)}, spec).ok);
}

TEST_CASE("gram check reports the first violation")
{
    // ten +-1 entries against a prescribed diagonal of 12
    GramSpec spec;
    spec.basis_labels = {"d"};
    spec.gram = {{12}};
    IntVector d{1, -1, 1, 1, -1, 1, 1, 1, -1, 1};
    auto res = gram_check({d}, spec);
    CHECK(!res.ok);
    CHECK(res.violation.find("(d,d) = 10") != std::string::npos);
}

TEST_CASE("gram divisibility keyed by height")
{
    GramSpec spec;
    spec.basis_labels = {"a"};
    spec.gram = {{9 + 4}};
    spec.char_heights = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    spec.divisibility = {{1, 3}};
    IntVector good{1, 1, 1, 1, 1, 1, 1, 1, 1, -2};
    auto res = gram_check({good}, spec);
    CHECK(!res.ok); // -2 at the height-1 row is not divisible by 3
    CHECK(res.violation.find("height-1") != std::string::npos);

    IntVector ok_vec{1, 1, 1, 1, 1, 1, 1, 1, -1, 3};
    spec.gram = {{12}};
    CHECK(gram_check({ok_vec}, spec).ok);
}

TEST_CASE("parity obstruction")
{
    CHECK(parity_obstruction(9));
    CHECK(parity_obstruction(25));
    CHECK(!parity_obstruction(0));
    CHECK(!parity_obstruction(4));
    CHECK_THROWS_AS(parity_obstruction(-1), std::invalid_argument);
}

TEST_CASE("sums of squares fixtures")
{
    auto all25 = sum_squares_exact(25, 25);
    REQUIRE(all25.size() == 1);
    CHECK(all25[0] == std::vector<long long>(25, 1));

    auto d3 = sum_squares_exact(25, 22);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0][0] == 4);
    CHECK(std::count(d3[0].begin(), d3[0].end(), 1) == 21);

    CHECK(sum_squares_exact(25, 24).empty());
    CHECK(sum_squares_exact(3, 5).empty()); // N < t
    CHECK_THROWS_AS(sum_squares_exact(401, 3), budget_error);
}

TEST_CASE("sums of squares against a DP oracle")
{
    // least number of parts s >= 2 with sum (s^2 - 1) = d
    const long long LIM = 120;
    std::vector<long long> dp(LIM + 1, std::numeric_limits<long long>::max() / 2);
    dp[0] = 0;
    for (long long d = 1; d <= LIM; ++d)
        for (long long s = 2; s * s - 1 <= d; ++s)
            dp[d] = std::min(dp[d], dp[d - (s * s - 1)] + 1);

    for (long long N = 0; N <= 60; ++N)
        for (long long t = 0; t <= N + 2; ++t) {
            bool has = !sum_squares_exact(N, t).empty();
            bool oracle = N >= t && dp[N - t] <= t;
            CHECK(has == oracle);
        }

    // every returned multiset really sums to N with t terms
    for (const auto& sol : sum_squares_exact(49, 40)) {
        CHECK(sol.size() == 40);
        long long sum = 0;
        for (long long sq : sol) {
            long long root = 1;
            while (root * root < sq)
                ++root;
            CHECK(root * root == sq);
            sum += sq;
        }
        CHECK(sum == 49);
    }
}

TEST_CASE("forbidden deficits")
{
    std::set<long long> expected{1, 2, 4, 5, 7, 10, 13};
    CHECK(forbidden_deficits(5, 15) == expected);
    CHECK(forbidden_deficits(7, 15) == expected);
    CHECK(forbidden_deficits(5, 3) == std::set<long long>{1, 2});
    CHECK_THROWS_AS(forbidden_deficits(5, 26), std::invalid_argument);
}

TEST_CASE("height profile solutions")
{
    for (long long p : {5, 7, 11})
        CHECK(height_profile_solutions(p).empty());

    auto p13 = height_profile_solutions(13);
    bool found = false;
    for (const auto& h : p13)
        if (h.multiplicity(2) == 19 && h.multiplicity(3) == 1)
            found = true;
    CHECK(found);

    auto p7 = height_profile_solutions(7, false);
    REQUIRE(p7.size() == 1);
    CHECK(p7[0].multiplicity(2) == 2);
    CHECK(p7[0].multiplicity(3) == 1);

    CHECK_THROWS_AS(height_profile_solutions(3), std::invalid_argument);
    CHECK_THROWS_AS(height_profile_solutions(9), std::invalid_argument);
}

TEST_CASE("unfiltered height profiles against a knapsack oracle")
{
    for (long long p : {5, 7, 11, 13, 17}) {
        long long target = p * (p - 3) / 2;
        // different algorithm: breadth-first over achievable sums
        int max_i = 2;
        while (static_cast<long long>(max_i + 1) * (max_i + 1) - 1 <= target)
            ++max_i;
        std::set<std::vector<long long>> oracle;
        std::vector<std::pair<std::vector<long long>, long long>> frontier{
            {std::vector<long long>(max_i - 1, 0), 0}};
        for (size_t pos = 0; pos < frontier.size(); ++pos) {
            auto [profile, sum] = frontier[pos];
            if (sum == target) {
                oracle.insert(profile);
                continue;
            }
            // extend by the smallest index not yet frozen: increment each i
            for (int i = 2; i <= max_i; ++i) {
                // keep profiles canonical: only grow indices >= the largest used
                bool later_used = false;
                for (int j = i + 1; j <= max_i; ++j)
                    if (profile[j - 2] > 0)
                        later_used = true;
                if (later_used)
                    continue;
                long long piece = static_cast<long long>(i) * i - 1;
                if (sum + piece > target)
                    continue;
                auto next = profile;
                ++next[i - 2];
                frontier.emplace_back(next, sum + piece);
            }
        }
        auto computed = height_profile_solutions(p, false);
        std::set<std::vector<long long>> got;
        for (const auto& h : computed)
            got.insert(h.r);
        CHECK(got == oracle);
    }
}

TEST_CASE("reduced binary forms")
{
    auto det9 = reduced_binary_forms(9);
    CHECK(det9 == std::vector<BinaryForm>{{1, 0, 9}, {2, 1, 5}, {3, 0, 3}});
    auto filtered = reduced_binary_forms(9, std::make_pair(1LL, 9LL));
    CHECK(filtered == std::vector<BinaryForm>{{1, 0, 9}, {2, 1, 5}});
    CHECK(reduced_binary_forms(1) == std::vector<BinaryForm>{{1, 0, 1}});
    CHECK_THROWS_AS(reduced_binary_forms(0), std::invalid_argument);
    CHECK_THROWS_AS(reduced_binary_forms(9, std::make_pair(2LL, 3LL)), std::invalid_argument);
}

TEST_CASE("reduced forms are complete against naive enumeration")
{
    for (long long det = 1; det <= 40; ++det) {
        std::set<BinaryForm> naive;
        for (long long a = 1; a * a <= 4 * det; ++a)
            for (long long b = -a; b <= a; ++b)
                for (long long c = 1; c <= 4 * det; ++c) {
                    BinaryForm f{a, b, c};
                    if (f.det() == det && f.is_reduced() && a > 0 && f.det() > 0)
                        naive.insert(f);
                }
        auto fast = reduced_binary_forms(det);
        std::set<BinaryForm> got(fast.begin(), fast.end());
        CHECK(got == naive);
    }
}
