#include "blockforge/group.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace blockforge {

GroupParams GroupParams::make(long long p, int m, int n, int l)
{
    if (p == 2)
        throw std::invalid_argument("p = 2 is not supported (the group family needs an odd prime)");
    if (!is_prime(p))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (l <= 0)
        throw std::invalid_argument("twist exponent l must be positive");
    if (l >= m)
        throw std::invalid_argument("l < m violated (l = " + std::to_string(l) +
                                    ", m = " + std::to_string(m) + ")");
    if (n <= 0)
        throw std::invalid_argument("exponent n must be positive");
    if (m - l > n)
        throw std::invalid_argument("m - l <= n violated (m - l = " + std::to_string(m - l) +
                                    ", n = " + std::to_string(n) + ")");

    GroupParams G;
    G.p_ = p;
    G.m_ = m;
    G.n_ = n;
    G.l_ = l;
    G.pm_ = checked_cast_ll(ipow(p, m));
    G.pn_ = checked_cast_ll(ipow(p, n));
    G.pl_ = checked_cast_ll(ipow(p, l));
    checked_mul(G.pm_, G.pn_); // |D| must be representable

    long long period = checked_cast_ll(ipow(p, m - l)); // order of 1+p^l mod p^m
    G.twist_.reserve(period);
    long long t = 1;
    long long base = (1 + G.pl_) % G.pm_;
    for (long long b = 0; b < period; ++b) {
        G.twist_.push_back(t);
        t = mulmod(t, base, G.pm_);
    }
    if (t != 1)
        throw consistency_error("twist table does not close after p^(m-l) steps");
    return G;
}

long long GroupParams::twist_pow(long long b) const
{
    long long period = twist_order();
    b %= period;
    if (b < 0)
        b += period;
    return twist_[b];
}

Element mul(const GroupParams& G, const Element& g, const Element& h)
{
    long long i = (g.i + mulmod(h.i, G.twist_pow(g.j), G.x_order())) % G.x_order();
    long long j = (g.j + h.j) % G.y_order();
    return {i, j};
}

Element inv(const GroupParams& G, const Element& g)
{
    // (x^a y^b)^{-1} = x^(-a (1+p^l)^(-b)) y^(-b)
    long long jb = (G.y_order() - g.j) % G.y_order();
    long long i = mulmod((G.x_order() - g.i) % G.x_order(), G.twist_pow(-g.j), G.x_order());
    return {i, jb};
}

Element pow(const GroupParams& G, Element g, long long k)
{
    if (k < 0)
        return pow(G, inv(G, g), -k);
    Element r = G.identity();
    while (k > 0) {
        if (k & 1)
            r = mul(G, r, g);
        k >>= 1;
        if (k > 0)
            g = mul(G, g, g);
    }
    return r;
}

long long order_of(const GroupParams& G, const Element& g)
{
    // p-group: the order is the least p-power k with g^k = 1
    long long ord = 1;
    Element h = g;
    while (!(h == G.identity())) {
        h = pow(G, h, G.p());
        ord = checked_cast_ll(checked_mul(ord, G.p()));
    }
    return ord;
}

Element conj(const GroupParams& G, const Element& g, const Element& h)
{
    return mul(G, mul(G, g, h), inv(G, g));
}

Element commutator(const GroupParams& G, const Element& g, const Element& h)
{
    return mul(G, mul(G, g, h), mul(G, inv(G, g), inv(G, h)));
}

std::vector<Element> centralizer(const GroupParams& G, const Element& u)
{
    std::vector<Element> out;
    for (long long i = 0; i < G.x_order(); ++i)
        for (long long j = 0; j < G.y_order(); ++j) {
            Element g{i, j};
            if (mul(G, g, u) == mul(G, u, g))
                out.push_back(g);
        }
    return out;
}

long long center_order_formula(const GroupParams& G)
{
    return checked_cast_ll(ipow(G.p(), G.n() - G.m() + 2 * G.l()));
}

std::vector<CyclicData> center(const GroupParams& G)
{
    // brute force: everything commuting with both generators
    std::vector<Element> members;
    for (long long i = 0; i < G.x_order(); ++i)
        for (long long j = 0; j < G.y_order(); ++j) {
            Element g{i, j};
            if (mul(G, g, G.x()) == mul(G, G.x(), g) && mul(G, g, G.y()) == mul(G, G.y(), g))
                members.push_back(g);
        }

    long long step = checked_cast_ll(ipow(G.p(), G.m() - G.l())); // p^(m-l)
    std::vector<CyclicData> gens;
    gens.push_back({Element{step % G.x_order(), 0}, checked_cast_ll(ipow(G.p(), G.l()))});
    long long y_part = G.y_order() / std::min(step, G.y_order());
    if (y_part > 1)
        gens.push_back({Element{0, step % G.y_order()}, y_part});

    long long expected = 1;
    for (const auto& c : gens) {
        if (order_of(G, c.generator) != c.order)
            throw consistency_error("center generator has unexpected order");
        expected *= c.order;
    }
    if (expected != static_cast<long long>(members.size()) ||
        expected != center_order_formula(G))
        throw consistency_error("brute-force center does not match p^(n-m+2l)");
    return gens;
}

CyclicData derived_subgroup(const GroupParams& G)
{
    long long step = checked_cast_ll(ipow(G.p(), G.l()));
    Element g{step % G.x_order(), 0};
    return {g, checked_cast_ll(ipow(G.p(), G.m() - G.l()))};
}

std::vector<ConjClass> conjugacy_classes(const GroupParams& G, long long budget)
{
    long long size = G.order();
    if (size > budget)
        throw budget_error("|D| = " + std::to_string(size) + " exceeds enumeration budget " +
                           std::to_string(budget));

    std::vector<int> class_id(size, -1);
    std::vector<ConjClass> classes;
    for (long long idx = 0; idx < size; ++idx) {
        if (class_id[idx] >= 0)
            continue;
        int id = static_cast<int>(classes.size());
        ConjClass c;
        std::queue<long long> work;
        class_id[idx] = id;
        work.push(idx);
        while (!work.empty()) {
            long long cur = work.front();
            work.pop();
            Element g = G.element_at(cur);
            c.members.push_back(g);
            for (const Element& s : {G.x(), G.y()}) {
                long long nxt = G.index_of(conj(G, s, g));
                if (class_id[nxt] < 0) {
                    class_id[nxt] = id;
                    work.push(nxt);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        classes.push_back(std::move(c));
    }
    return classes;
}

int128 class_count_formula(const GroupParams& G)
{
    long long p = G.p();
    int m = G.m(), n = G.n(), l = G.l();
    return checked_mul(ipow(p, n - m + 2 * l - 1),
                       checked_add(ipow(p, m - l + 1), ipow(p, m - l) - 1));
}

} // namespace blockforge
