#include "blockforge/arith.hpp"

namespace blockforge {

std::string to_string(int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    // -2^127 still negates fine in unsigned space
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

int128 ipow(int128 base, long long exp)
{
    if (exp < 0)
        throw std::invalid_argument("ipow: negative exponent");
    int128 r = 1;
    while (exp > 0) {
        if (exp & 1)
            r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0)
            base = checked_mul(base, base);
    }
    return r;
}

int128 gcd128(int128 a, int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(long long n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

long long mulmod(long long a, long long b, long long mod)
{
    return static_cast<long long>(static_cast<int128>(a) * b % mod);
}

long long powmod(long long base, long long exp, long long mod)
{
    long long r = 1 % mod;
    base %= mod;
    if (base < 0)
        base += mod;
    while (exp > 0) {
        if (exp & 1)
            r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

long long multiplicative_order(long long a, long long mod)
{
    long long x = a % mod;
    if (x < 0)
        x += mod;
    if (gcd128(x, mod) != 1)
        throw std::invalid_argument("multiplicative_order: arguments not coprime");
    long long ord = 1;
    long long cur = x;
    while (cur != 1 % mod) {
        cur = mulmod(cur, x, mod);
        ++ord;
        if (ord > mod)
            throw std::logic_error("multiplicative_order: did not terminate");
    }
    return ord;
}

long long least_primitive_root(long long p, int m)
{
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("least_primitive_root: p must be an odd prime");
    long long mod = checked_cast_ll(ipow(p, m));
    long long phi = mod / p * (p - 1);
    // prime factors of phi = p^{m-1}(p-1)
    long long rest = p - 1;
    long long factors[64];
    int nf = 0;
    if (m > 1)
        factors[nf++] = p;
    for (long long d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            factors[nf++] = d;
            while (rest % d == 0)
                rest /= d;
        }
    }
    if (rest > 1)
        factors[nf++] = rest;
    for (long long g = 2; g < mod; ++g) {
        if (g % p == 0)
            continue;
        bool primitive = true;
        for (int i = 0; i < nf && primitive; ++i)
            if (powmod(g, phi / factors[i], mod) == 1)
                primitive = false;
        if (primitive)
            return g;
    }
    throw std::logic_error("least_primitive_root: none found");
}

long long checked_cast_ll(int128 v)
{
    if (v > static_cast<int128>(INT64_MAX) || v < static_cast<int128>(INT64_MIN))
        throw std::overflow_error("value does not fit in 64 bits: " + to_string(v));
    return static_cast<long long>(v);
}

Rational::Rational(int128 n, int128 d) : num_(n), den_(d)
{
    if (den_ == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const
{
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const
{
    return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const
{
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const
{
    if (o.num_ == 0)
        throw std::invalid_argument("Rational: division by zero");
    return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Rational::operator<(const Rational& o) const
{
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

int128 Rational::floor() const
{
    int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

int128 Rational::as_integer() const
{
    if (den_ != 1)
        throw consistency_error("expected integral value, got " + to_string(num_) + "/" +
                                to_string(den_));
    return num_;
}

Rational Rational::power(int128 p, long long k)
{
    if (k >= 0)
        return Rational(ipow(p, k));
    return Rational(1, ipow(p, -k));
}

} // namespace blockforge
