#ifndef BLOCKFORGE_CYCLOTOMIC_HPP
#define BLOCKFORGE_CYCLOTOMIC_HPP

#include <vector>

#include "blockforge/arith.hpp"

namespace blockforge {

// Exact element of Z[zeta_N] for a prime power N = p^s. Coefficients are
// stored over the exponent basis zeta^0 .. zeta^(N-1) and kept canonical by
// clearing the top block with
//
//   zeta^((p-1)N/p + r) = -(zeta^r + zeta^(N/p + r) + ... + zeta^((p-2)N/p + r)),
//
// so two values are equal iff their coefficient vectors coincide.
class CycInt {
public:
    CycInt(long long p, long long n); // zero of Z[zeta_n], n = p^s
    static CycInt from_integer(long long p, long long n, long long v);
    // c * zeta_n^t
    static CycInt root_power(long long p, long long n, long long t, long long c = 1);

    long long root_order() const { return n_; }
    long long prime() const { return p_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    CycInt& operator*=(long long c);
    bool operator==(const CycInt& o) const { return n_ == o.n_ && coeff_ == o.coeff_; }

    CycInt conjugate() const;            // zeta -> zeta^(-1)
    CycInt galois(long long t) const;    // zeta -> zeta^t, gcd(t, p) = 1

    bool is_zero() const;
    bool is_integer(long long v) const { return *this == from_integer(p_, n_, v); }

    // canonical coefficients, length phi(n) = (p-1) n / p
    std::vector<long long> canonical_coefficients() const;

private:
    void reduce();

    long long p_ = 0;
    long long n_ = 0;
    std::vector<long long> coeff_;
};

} // namespace blockforge

#endif
