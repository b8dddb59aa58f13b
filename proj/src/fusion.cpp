#include "blockforge/fusion.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace blockforge {

long long inertial_unit(long long p, int m, long long e)
{
    if (e <= 0 || (p - 1) % e != 0)
        throw std::invalid_argument("inertial index e = " + std::to_string(e) +
                                    " does not divide p - 1 = " + std::to_string(p - 1));
    long long mod = checked_cast_ll(ipow(p, m));
    if (e == 1)
        return 1;
    long long g = least_primitive_root(p, m);
    long long phi = mod / p * (p - 1);
    long long a1 = powmod(g, phi / e, mod);
    if (multiplicative_order(a1, mod) != e)
        throw consistency_error("inertial unit does not have order e");
    return a1;
}

BlockParams BlockParams::make(const GroupParams& group, long long e)
{
    BlockParams B(group);
    B.e_ = e;
    B.alpha1_ = inertial_unit(group.p(), group.m(), e);
    B.alpha_pow_.reserve(e);
    long long t = 1;
    for (long long s = 0; s < e; ++s) {
        B.alpha_pow_.push_back(t);
        t = mulmod(t, B.alpha1_, group.x_order());
    }
    return B;
}

BlockParams BlockParams::make(long long p, int m, int n, int l, long long e)
{
    return make(GroupParams::make(p, m, n, l), e);
}

Element BlockParams::alpha(const Element& g, long long s) const
{
    s %= e_;
    if (s < 0)
        s += e_;
    return {mulmod(g.i, alpha_pow_[s], group_.x_order()), g.j};
}

namespace {

// |Aut_F(<u>)|: distinct automorphisms of <u> induced by elements of
// D x| I(B) that normalize <u>. Conjugation preserves order, so it is enough
// to test membership of g u g^{-1} in <u>.
long long fusion_aut_order(const BlockParams& B, const Element& u)
{
    const GroupParams& G = B.group();
    long long o = order_of(G, u);
    if (o == 1)
        return 1;
    std::map<long long, long long> dlog; // index of u^k -> k
    Element cur = G.identity();
    for (long long k = 0; k < o; ++k) {
        dlog[G.index_of(cur)] = k;
        cur = mul(G, cur, u);
    }
    std::set<long long> exponents;
    for (long long e_i = 0; e_i < G.x_order(); ++e_i)
        for (long long e_j = 0; e_j < G.y_order(); ++e_j)
            for (long long s = 0; s < B.e(); ++s) {
                Element c{e_i, e_j};
                Element v = conj(G, c, B.alpha(u, s));
                auto it = dlog.find(G.index_of(v));
                if (it != dlog.end())
                    exponents.insert(it->second);
            }
    return static_cast<long long>(exponents.size());
}

} // namespace

std::vector<FusionClass> fusion_classes(const BlockParams& B, long long budget)
{
    const GroupParams& G = B.group();
    long long size = G.order();
    if (checked_mul(size, B.e()) > budget)
        throw budget_error("|D| e = " + to_string(checked_mul(size, B.e())) +
                           " exceeds enumeration budget " + std::to_string(budget));

    std::vector<int> class_id(size, -1);
    std::vector<FusionClass> classes;
    for (long long idx = 0; idx < size; ++idx) {
        if (class_id[idx] >= 0)
            continue;
        int id = static_cast<int>(classes.size());
        FusionClass c;
        std::queue<long long> work;
        class_id[idx] = id;
        work.push(idx);
        while (!work.empty()) {
            long long curIdx = work.front();
            work.pop();
            Element g = G.element_at(curIdx);
            c.members.push_back(g);
            if (g.i == 0)
                c.meets_y = true;
            Element images[3] = {conj(G, G.x(), g), conj(G, G.y(), g), B.alpha(g)};
            int n_images = B.e() > 1 ? 3 : 2;
            for (int t = 0; t < n_images; ++t) {
                long long nxt = G.index_of(images[t]);
                if (class_id[nxt] < 0) {
                    class_id[nxt] = id;
                    work.push(nxt);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        c.size = static_cast<long long>(c.members.size());
        classes.push_back(std::move(c));
    }

    for (auto& c : classes) {
        c.l_bu = c.meets_y ? B.e() : 1;
        c.aut_order = fusion_aut_order(B, c.representative);
    }
    return classes;
}

int128 k_lower_formula(const BlockParams& B)
{
    const GroupParams& G = B.group();
    long long p = G.p();
    int m = G.m(), n = G.n(), l = G.l();
    Rational inner = (Rational::power(p, l) + Rational::power(p, l - 1) -
                      Rational::power(p, 2 * l - m - 1) - Rational(1)) /
                         Rational(B.e()) +
                     Rational(B.e());
    return (inner * Rational::power(p, n)).as_integer();
}

long long k_lower(const BlockParams& B, const std::vector<FusionClass>& classes)
{
    long long sum = 0;
    for (const auto& c : classes)
        sum += c.l_bu;
    int128 formula = k_lower_formula(B);
    if (formula != sum)
        throw consistency_error("k(B) lower bound: orbit sum " + std::to_string(sum) +
                                " != closed formula " + to_string(formula));
    return sum;
}

long long k_lower(const BlockParams& B, long long budget)
{
    return k_lower(B, fusion_classes(B, budget));
}

int128 k_minus_l_formula(const BlockParams& B)
{
    const GroupParams& G = B.group();
    if (G.n() != 1)
        throw std::invalid_argument("k(B) - l(B) formula requires n = 1");
    long long p = G.p();
    int m = G.m();
    Rational r = (Rational::power(p, m) + Rational::power(p, m - 1) -
                  Rational::power(p, m - 2) - Rational(p)) /
                     Rational(B.e()) +
                 Rational(B.e()) * Rational(p - 1);
    return r.as_integer();
}

long long k_minus_l(const BlockParams& B, const std::vector<FusionClass>& classes)
{
    const GroupParams& G = B.group();
    if (G.n() != 1)
        throw std::invalid_argument("k_minus_l requires n = 1");
    long long sum = 0;
    for (const auto& c : classes)
        if (!(c.representative == G.identity()))
            sum += c.l_bu;
    int128 formula = k_minus_l_formula(B);
    if (formula != sum)
        throw consistency_error("k(B) - l(B): orbit sum " + std::to_string(sum) +
                                " != closed formula " + to_string(formula));
    return sum;
}

long long k_minus_l(const BlockParams& B, long long budget)
{
    return k_minus_l(B, fusion_classes(B, budget));
}

long long semidirect_class_count(const BlockParams& B, long long budget)
{
    const GroupParams& G = B.group();
    long long e = B.e();
    long long size = checked_cast_ll(checked_mul(G.order(), e));
    if (size > budget)
        throw budget_error("|D x| I(B)| = " + std::to_string(size) +
                           " exceeds enumeration budget " + std::to_string(budget));

    // elements (d, alpha^s); conjugation by c in D sends (d, s) to
    // (c d alpha^s(c^{-1}), s), conjugation by alpha to (alpha(d), s)
    auto index = [&](const Element& d, long long s) { return G.index_of(d) * e + s; };

    std::vector<int> class_id(size, -1);
    long long count = 0;
    std::vector<long long> work;
    for (long long idx = 0; idx < size; ++idx) {
        if (class_id[idx] >= 0)
            continue;
        ++count;
        class_id[idx] = 1;
        work.assign(1, idx);
        while (!work.empty()) {
            long long cur = work.back();
            work.pop_back();
            Element d = G.element_at(cur / e);
            long long s = cur % e;
            for (const Element& c : {G.x(), G.y()}) {
                Element img = mul(G, mul(G, c, d), B.alpha(inv(G, c), s));
                long long nxt = index(img, s);
                if (class_id[nxt] < 0) {
                    class_id[nxt] = 1;
                    work.push_back(nxt);
                }
            }
            long long nxt = index(B.alpha(d), s);
            if (class_id[nxt] < 0) {
                class_id[nxt] = 1;
                work.push_back(nxt);
            }
        }
    }
    return count;
}

} // namespace blockforge
