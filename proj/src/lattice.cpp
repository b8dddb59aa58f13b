#include "blockforge/lattice.hpp"

#include <algorithm>
#include <functional>

namespace blockforge {

const char* to_string(RootShape s)
{
    switch (s) {
    case RootShape::interval: return "interval";
    case RootShape::two_intervals_same_sign: return "two_intervals_same_sign";
    case RootShape::two_intervals_opposite_sign: return "two_intervals_opposite_sign";
    case RootShape::doubled_plateau: return "doubled_plateau";
    case RootShape::other: return "other";
    }
    return "other";
}

int128 q_eval(const IntVector& a)
{
    size_t r = a.size();
    int128 products = 0;
    for (size_t i = 0; i < r; ++i)
        products = checked_add(products, checked_mul(a[i], a[i]));
    for (size_t i = 0; i + 1 < r; ++i)
        products -= checked_mul(a[i], a[i + 1]);

    int128 squares = 0;
    if (r > 0) {
        squares = checked_add(checked_mul(a.front(), a.front()),
                              checked_mul(a.back(), a.back()));
        for (size_t i = 0; i + 1 < r; ++i) {
            int128 d = static_cast<int128>(a[i]) - a[i + 1];
            squares = checked_add(squares, checked_mul(d, d));
        }
        if (squares % 2 != 0)
            throw consistency_error("half-sum form of q is not even");
        squares /= 2;
    }
    if (products != squares)
        throw consistency_error("the two evaluations of q disagree");
    return products;
}

namespace {

// maximal runs of equal nonzero values; zeros only delimit
struct Run {
    long long value;
    bool gap_before; // at least one zero between this run and the previous
};

std::vector<Run> nonzero_runs(const IntVector& a)
{
    std::vector<Run> runs;
    bool saw_zero = false;
    for (long long v : a) {
        if (v == 0) {
            saw_zero = true;
            continue;
        }
        if (runs.empty() || runs.back().value != v || saw_zero)
            runs.push_back({v, saw_zero && !runs.empty()});
        saw_zero = false;
    }
    return runs;
}

} // namespace

RootShape classify_root(const IntVector& a)
{
    auto runs = nonzero_runs(a);
    if (runs.empty())
        return RootShape::other;

    if (runs.size() == 1 && (runs[0].value == 1 || runs[0].value == -1))
        return RootShape::interval;

    if (runs.size() == 2 && runs[1].gap_before) {
        long long u = runs[0].value, v = runs[1].value;
        if ((u == 1 && v == 1) || (u == -1 && v == -1))
            return RootShape::two_intervals_same_sign;
        if ((u == 1 && v == -1) || (u == -1 && v == 1))
            return RootShape::two_intervals_opposite_sign;
        return RootShape::other;
    }

    // 1..1 2..2 1..1 with contiguous support; the flanking runs may be empty
    long long sign = runs[0].value > 0 ? 1 : -1;
    std::vector<long long> pattern;
    for (const auto& run : runs) {
        if (run.gap_before)
            return RootShape::other;
        pattern.push_back(run.value * sign);
    }
    if (pattern == std::vector<long long>{1, 2, 1} || pattern == std::vector<long long>{2} ||
        pattern == std::vector<long long>{1, 2} || pattern == std::vector<long long>{2, 1})
        return RootShape::doubled_plateau;
    return RootShape::other;
}

std::vector<QSolution> q_solutions(int r, int v)
{
    if (r < 1)
        throw std::invalid_argument("q_solutions: r must be at least 1");
    if (v != 1 && v != 2)
        throw std::invalid_argument("q_solutions: only the values 1 and 2 are in scope");
    if (r > 10)
        throw budget_error("q_solutions: enumeration over 5^r entries needs r <= 10");

    std::vector<QSolution> out;
    IntVector a(r, -2);
    for (;;) {
        if (q_eval(a) == v) {
            RootShape shape = classify_root(a);
            out.push_back({a, shape});
        }
        int pos = 0;
        while (pos < r && a[pos] == 2) {
            a[pos] = -2;
            ++pos;
        }
        if (pos == r)
            break;
        ++a[pos];
    }
    return out;
}

GramCheckResult gram_check(const std::vector<IntVector>& vectors, const GramSpec& spec)
{
    size_t k = vectors.size();
    if (spec.gram.size() != k)
        throw std::invalid_argument("gram_check: spec dimension does not match vector count");
    size_t rows = k ? vectors[0].size() : 0;
    for (const auto& v : vectors)
        if (v.size() != rows)
            throw std::invalid_argument("gram_check: vectors of unequal length");
    if (!spec.char_heights.empty() && spec.char_heights.size() != rows)
        throw std::invalid_argument("gram_check: height vector length mismatch");

    auto label = [&](size_t i) {
        return i < spec.basis_labels.size() ? spec.basis_labels[i] : "v" + std::to_string(i);
    };

    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            int128 dot = 0;
            for (size_t t = 0; t < rows; ++t)
                dot = checked_add(dot, checked_mul(vectors[i][t], vectors[j][t]));
            if (dot != spec.gram[i][j])
                return {false, "(" + label(i) + "," + label(j) + ") = " + to_string(dot) +
                                   ", prescribed " + std::to_string(spec.gram[i][j])};
        }

    if (!spec.char_heights.empty()) {
        for (auto [h, mod] : spec.divisibility)
            for (size_t t = 0; t < rows; ++t) {
                if (spec.char_heights[t] != h)
                    continue;
                for (size_t i = 0; i < k; ++i)
                    if (vectors[i][t] % mod != 0)
                        return {false, label(i) + " entry " + std::to_string(vectors[i][t]) +
                                           " at height-" + std::to_string(h) + " row " +
                                           std::to_string(t) + " is not divisible by " +
                                           std::to_string(mod)};
            }
    }
    return {true, ""};
}

bool parity_obstruction(long long odd_overlap_count)
{
    if (odd_overlap_count < 0)
        throw std::invalid_argument("parity_obstruction: negative count");
    return odd_overlap_count % 2 != 0;
}

std::vector<std::vector<long long>> sum_squares_exact(long long N, long long t)
{
    if (N < 0 || t < 0)
        throw std::invalid_argument("sum_squares_exact: negative arguments");
    if (N > 400)
        throw budget_error("sum_squares_exact is budgeted for N <= 400");

    std::vector<std::vector<long long>> out;
    if (N < t)
        return out;

    // a multiset of t positive squares summing to N is a multiset of parts
    // s >= 2 with sum (s^2 - 1) = N - t and at most t parts, padded with 1s
    long long deficit = N - t;
    std::vector<long long> parts;
    std::function<void(long long, long long, long long)> rec = [&](long long rem, long long max_s,
                                                                   long long left) {
        if (rem == 0) {
            std::vector<long long> squares;
            for (long long s : parts)
                squares.push_back(s * s);
            squares.insert(squares.end(), static_cast<size_t>(left), 1);
            out.push_back(std::move(squares));
            return;
        }
        if (left == 0)
            return;
        for (long long s = max_s; s >= 2; --s) {
            long long piece = s * s - 1;
            if (piece > rem)
                continue;
            // even with the largest remaining parts the deficit must stay
            // reachable: left-1 parts of size <= s^2-1
            if (checked_mul(piece, left) < rem)
                break;
            parts.push_back(s);
            rec(rem - piece, s, left - 1);
            parts.pop_back();
        }
    };
    long long max_s = 1;
    while ((max_s + 1) * (max_s + 1) - 1 <= deficit)
        ++max_s;
    if (deficit == 0)
        out.push_back(std::vector<long long>(static_cast<size_t>(t), 1));
    else
        rec(deficit, max_s, t);
    return out;
}

std::set<long long> forbidden_deficits(long long p, long long cap)
{
    if (cap > checked_mul(p, p))
        throw std::invalid_argument("forbidden_deficits: cap exceeds p^2");
    long long p2 = p * p;
    std::set<long long> out;
    for (long long r = 1; r <= cap; ++r)
        if (sum_squares_exact(p2, p2 - r).empty())
            out.insert(r);
    return out;
}

long long HeightProfile::multiplicity(int i) const
{
    if (i < 2 || static_cast<size_t>(i - 2) >= r.size())
        return 0;
    return r[i - 2];
}

std::vector<HeightProfile> height_profile_solutions(long long p, bool apply_rational_filter)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("height_profile_solutions: p must be an odd prime >= 5");
    long long target = p * (p - 3) / 2;
    int max_i = 2;
    while (static_cast<long long>(max_i + 1) * (max_i + 1) - 1 <= target)
        ++max_i;

    std::vector<HeightProfile> out;
    HeightProfile cur;
    cur.r.assign(max_i - 1, 0);
    std::function<void(int, long long)> rec = [&](int i, long long rem) {
        if (i > max_i) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        long long piece = static_cast<long long>(i) * i - 1;
        for (long long cnt = 0; cnt * piece <= rem; ++cnt) {
            cur.r[i - 2] = cnt;
            rec(i + 1, rem - cnt * piece);
        }
        cur.r[i - 2] = 0;
    };
    rec(2, target);

    if (apply_rational_filter) {
        long long half = (p - 1) / 2;
        std::erase_if(out, [&](const HeightProfile& hp) {
            long long residues = 0;
            for (long long ri : hp.r)
                residues += ri % half;
            return residues > 2;
        });
    }
    return out;
}

bool BinaryForm::operator<(const BinaryForm& o) const
{
    if (a != o.a)
        return a < o.a;
    if (b != o.b)
        return b < o.b;
    return c < o.c;
}

std::vector<BinaryForm> reduced_binary_forms(
    long long det, std::optional<std::pair<long long, long long>> elementary_divisors)
{
    if (det < 1)
        throw std::invalid_argument("reduced_binary_forms: determinant must be positive");
    if (elementary_divisors) {
        auto [d1, d2] = *elementary_divisors;
        if (d1 < 1 || d2 < 1 || checked_mul(d1, d2) != det)
            throw std::invalid_argument("reduced_binary_forms: elementary divisors must multiply to det");
    }

    std::vector<BinaryForm> out;
    // reduction gives 3a^2/4 <= ac - b^2 = det
    for (long long a = 1; 3 * a * a <= 4 * det; ++a)
        for (long long b = 0; 2 * b <= a; ++b) {
            long long num = det + b * b;
            if (num % a != 0)
                continue;
            long long c = num / a;
            if (c < a)
                continue;
            BinaryForm f{a, b, c};
            if (elementary_divisors) {
                long long g = static_cast<long long>(gcd128(gcd128(a, b), c));
                if (g != elementary_divisors->first)
                    continue;
            }
            out.push_back(f);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace blockforge
