#ifndef BLOCKFORGE_ARITH_HPP
#define BLOCKFORGE_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

// Exact integer arithmetic helpers. All formula evaluation in the library
// runs over 128-bit integers (or exact rationals on top of them); overflow
// throws instead of wrapping.

namespace blockforge {

using int128 = __int128;

// Enumeration over more elements than the configured budget is refused.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A formula and an independent computation of the same quantity disagree.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

// |D| <= 3^10 by default; the CLI can raise this via --budget or
// BLOCKFORGE_BUDGET.
inline constexpr long long kDefaultBudget = 59049;

std::string to_string(int128 v);

inline int128 checked_add(int128 a, int128 b)
{
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("128-bit integer overflow in addition");
    return r;
}

inline int128 checked_mul(int128 a, int128 b)
{
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit integer overflow in multiplication");
    return r;
}

// base^exp with overflow checking, exp >= 0
int128 ipow(int128 base, long long exp);

int128 gcd128(int128 a, int128 b);

// Deterministic trial division; intended for p < 10^6.
bool is_prime(long long n);

long long mulmod(long long a, long long b, long long mod);
long long powmod(long long base, long long exp, long long mod);

// Multiplicative order of a modulo mod (a coprime to mod); iterates, so only
// meant for the small moduli appearing here.
long long multiplicative_order(long long a, long long mod);

// Least primitive root modulo p^m for an odd prime p.
long long least_primitive_root(long long p, int m);

long long checked_cast_ll(int128 v);

// Exact rational on 128-bit integers, always normalized with den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 n) : num_(n), den_(1) {}   // NOLINT: implicit by design
    Rational(int128 n, int128 d);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const;

    bool is_integer() const { return den_ == 1; }
    int128 floor() const;
    // Value as an integer; throws if the rational is not integral.
    int128 as_integer() const;

    // p^k for k of either sign
    static Rational power(int128 p, long long k);

private:
    int128 num_, den_;
};

} // namespace blockforge

#endif
