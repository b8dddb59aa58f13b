#include "blockforge/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

namespace blockforge {

namespace {

void require_m_case(const GroupParams& G, const char* what)
{
    if (G.n() != 1)
        throw std::invalid_argument(std::string(what) + " requires n = 1 (the group M_(p^(m+1)))");
}

long long euler_phi_prime_power(long long p, long long q) // q = p^k
{
    return q == 1 ? 1 : q / p * (p - 1);
}

} // namespace

CycInt char_value(const GroupParams& G, const IrrChar& chi, const Element& g)
{
    require_m_case(G, "char_value");
    long long p = G.p();
    long long N = G.x_order() / p; // p^(m-1)
    if (chi.kind == IrrChar::Kind::linear) {
        // image of x^a y^b in D/D' = C_(p^(m-1)) x C_p
        long long expo = (chi.a % N) * (g.i % N) % N;
        expo = (expo + (chi.b % p) * (g.j % p) % p * (N / p)) % N;
        return CycInt::root_power(p, N, expo);
    }
    if (g.j % p != 0 || g.i % p != 0)
        return CycInt(p, N);
    return CycInt::root_power(p, N, chi.a % N * (g.i / p) % N, p);
}

CharacterTable irr_table(const GroupParams& G, long long budget)
{
    require_m_case(G, "irr_table");
    long long p = G.p();
    long long N = G.x_order() / p;

    CharacterTable t;
    t.root_order = N;
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < p; ++j)
            t.chars.push_back({IrrChar::Kind::linear, i, j});
    for (long long k = 1; k < N; ++k)
        if (k % p != 0)
            t.chars.push_back({IrrChar::Kind::induced, k, 0});
    t.classes = conjugacy_classes(G, budget);
    if (static_cast<long long>(t.chars.size()) != static_cast<long long>(t.classes.size()))
        throw consistency_error("character count does not match class count");

    t.values.reserve(t.chars.size());
    for (const auto& chi : t.chars) {
        std::vector<CycInt> row;
        row.reserve(t.classes.size());
        for (const auto& cls : t.classes)
            row.push_back(char_value(G, chi, cls.representative));
        t.values.push_back(std::move(row));
    }
    return t;
}

namespace {

// Orbits of <alpha> acting on labels via lab -> act(lab); returns pairs
// (orbit length, stabilizer order), one per orbit.
template <typename Label, typename Act>
std::vector<std::pair<long long, long long>> alpha_orbits(const std::vector<Label>& labels,
                                                          long long e, Act act)
{
    std::set<Label> seen;
    std::vector<std::pair<long long, long long>> orbits;
    for (const auto& lab : labels) {
        if (seen.count(lab))
            continue;
        long long len = 0;
        Label cur = lab;
        do {
            seen.insert(cur);
            cur = act(cur);
            ++len;
        } while (!(cur == lab));
        if (e % len != 0)
            throw consistency_error("orbit length does not divide e");
        orbits.emplace_back(len, e / len);
    }
    return orbits;
}

struct CharAction {
    long long N;        // p^(m-1)
    long long p;
    long long alpha_inv; // alpha_1^(-1) mod N

    // alpha.chi = chi o alpha^(-1)
    std::pair<long long, long long> linear(std::pair<long long, long long> ij) const
    {
        return {ij.first * alpha_inv % N, ij.second};
    }
    long long induced(long long k) const { return k * alpha_inv % N; }
};

CharAction make_char_action(const BlockParams& B)
{
    const GroupParams& G = B.group();
    long long p = G.p();
    long long N = G.x_order() / p;
    long long a = B.alpha_unit() % N;
    long long ainv = powmod(a, multiplicative_order(a, N) - 1, N);
    return {N, p, ainv};
}

} // namespace

long long owc_weights(const BlockParams& B, int d)
{
    const GroupParams& G = B.group();
    require_m_case(G, "owc_weights");
    int m = G.m();
    if (d != m && d != m + 1)
        return 0;

    CharAction act = make_char_action(B);
    long long w = 0;
    if (d == m + 1) {
        std::vector<std::pair<long long, long long>> labels;
        for (long long i = 0; i < act.N; ++i)
            for (long long j = 0; j < act.p; ++j)
                labels.emplace_back(i, j);
        for (auto [len, stab] : alpha_orbits(labels, B.e(), [&](auto ij) { return act.linear(ij); }))
            w += stab;
    } else {
        std::vector<long long> labels;
        for (long long k = 1; k < act.N; ++k)
            if (k % act.p != 0)
                labels.push_back(k);
        for (auto [len, stab] : alpha_orbits(labels, B.e(), [&](long long k) { return act.induced(k); }))
            w += stab;
    }
    return w;
}

int128 owc_weight_formula(const BlockParams& B, int d)
{
    const GroupParams& G = B.group();
    require_m_case(G, "owc_weight_formula");
    long long p = G.p();
    int m = G.m();
    Rational e(B.e());
    if (d == m + 1)
        return (((Rational::power(p, m - 1) - Rational(1)) / e + e) * Rational(p)).as_integer();
    if (d == m)
        return ((Rational(p - 1) / e) * Rational::power(p, m - 2)).as_integer();
    return 0;
}

InertialOrbits inertial_char_orbits(const BlockParams& B)
{
    const GroupParams& G = B.group();
    require_m_case(G, "inertial_char_orbits");
    CharAction act = make_char_action(B);

    InertialOrbits out;
    std::vector<std::pair<long long, long long>> lin;
    for (long long i = 0; i < act.N; ++i)
        for (long long j = 0; j < act.p; ++j)
            lin.emplace_back(i, j);
    for (auto [len, stab] : alpha_orbits(lin, B.e(), [&](auto ij) { return act.linear(ij); }))
        out.linear.push_back(len);
    std::vector<long long> ind;
    for (long long k = 1; k < act.N; ++k)
        if (k % act.p != 0)
            ind.push_back(k);
    for (auto [len, stab] : alpha_orbits(ind, B.e(), [&](long long k) { return act.induced(k); }))
        out.degree_p.push_back(len);
    std::sort(out.linear.begin(), out.linear.end());
    std::sort(out.degree_p.begin(), out.degree_p.end());
    return out;
}

long long GaloisOrbitData::orbit_sum() const
{
    return std::accumulate(orbit_lengths.begin(), orbit_lengths.end(), 0LL);
}

GaloisOrbitData galois_orbit_multiset(const BlockParams& B, long long budget)
{
    return galois_orbit_multiset(B, fusion_classes(B, budget));
}

GaloisOrbitData galois_orbit_multiset(const BlockParams& B,
                                      const std::vector<FusionClass>& classes)
{
    const GroupParams& G = B.group();
    require_m_case(G, "galois_orbit_multiset");
    if (B.e() < 2)
        throw std::invalid_argument("galois_orbit_multiset requires e >= 2");

    std::vector<int> class_of(G.order(), -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& g : classes[c].members)
            class_of[G.index_of(g)] = static_cast<int>(c);

    // generator of Gal(Q(zeta_(p^m))|Q) acting on subsections by u -> u^t
    long long t = least_primitive_root(G.p(), G.m());

    GaloisOrbitData out;
    std::vector<char> seen(classes.size(), 0);
    for (size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        if (seen[c] || cls.meets_y)
            continue;
        long long len = 0;
        Element u = cls.representative;
        int cur = static_cast<int>(c);
        do {
            seen[cur] = 1;
            u = pow(G, u, t);
            cur = class_of[G.index_of(u)];
            ++len;
        } while (cur != static_cast<int>(c));
        long long expected =
            euler_phi_prime_power(G.p(), order_of(G, cls.representative)) / cls.aut_order;
        if (len != expected)
            throw consistency_error("Galois orbit length " + std::to_string(len) +
                                    " != phi(|u|)/|Aut_F(<u>)| = " + std::to_string(expected));
        out.orbit_lengths.push_back(len);
    }

    // the p-1 nontrivial <y>-classes carry e columns each and fuse into
    // Galois orbits of full length p-1
    long long y_classes = 0;
    for (const auto& cls : classes)
        if (cls.meets_y && !(cls.representative == G.identity()))
            ++y_classes;
    if (y_classes != G.p() - 1)
        throw consistency_error("expected p-1 nontrivial <y>-classes");
    for (long long i = 0; i < B.e(); ++i)
        out.orbit_lengths.push_back(G.p() - 1);

    std::sort(out.orbit_lengths.rbegin(), out.orbit_lengths.rend());
    out.rational_lo = B.e();
    out.rational_hi = 2 * B.e() - 1;
    return out;
}

namespace {

std::string csv_quote(const std::string& field)
{
    bool need = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!need)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string element_name(const Element& g)
{
    if (g.i == 0 && g.j == 0)
        return "1";
    std::string s;
    if (g.i != 0)
        s += "x^" + std::to_string(g.i);
    if (g.j != 0) {
        if (!s.empty())
            s += "*";
        s += "y^" + std::to_string(g.j);
    }
    return s;
}

std::string char_name(const IrrChar& chi)
{
    if (chi.kind == IrrChar::Kind::linear)
        return "chi_" + std::to_string(chi.a) + "_" + std::to_string(chi.b);
    return "psi_" + std::to_string(chi.a);
}

} // namespace

void write_table_csv(const GroupParams& G, const CharacterTable& table, std::ostream& os)
{
    os << "character,degree";
    for (const auto& cls : table.classes)
        os << ',' << csv_quote(element_name(cls.representative));
    os << "\r\n";
    for (size_t r = 0; r < table.chars.size(); ++r) {
        os << csv_quote(char_name(table.chars[r])) << ',' << table.chars[r].degree(G);
        for (const auto& v : table.values[r]) {
            std::string tuple = "(";
            auto coeffs = v.canonical_coefficients();
            for (size_t i = 0; i < coeffs.size(); ++i) {
                if (i)
                    tuple += ',';
                tuple += std::to_string(coeffs[i]);
            }
            tuple += ')';
            os << ',' << csv_quote(tuple);
        }
        os << "\r\n";
    }
}

} // namespace blockforge
