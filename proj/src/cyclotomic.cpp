#include "blockforge/cyclotomic.hpp"

#include <algorithm>

namespace blockforge {

CycInt::CycInt(long long p, long long n) : p_(p), n_(n), coeff_(n, 0)
{
    long long check = n;
    while (check > 1) {
        if (check % p != 0)
            throw std::invalid_argument("CycInt: root order must be a power of p");
        check /= p;
    }
}

CycInt CycInt::from_integer(long long p, long long n, long long v)
{
    CycInt z(p, n);
    z.coeff_[0] = v;
    return z;
}

CycInt CycInt::root_power(long long p, long long n, long long t, long long c)
{
    CycInt z(p, n);
    t %= n;
    if (t < 0)
        t += n;
    z.coeff_[t] = c;
    z.reduce();
    return z;
}

void CycInt::reduce()
{
    long long block = n_ / p_;
    long long top = (p_ - 1) * block;
    for (long long r = 0; r < block; ++r) {
        long long c = coeff_[top + r];
        if (c == 0)
            continue;
        for (long long u = 0; u + 1 < p_; ++u)
            coeff_[u * block + r] -= c;
        coeff_[top + r] = 0;
    }
}

CycInt& CycInt::operator+=(const CycInt& o)
{
    if (n_ != o.n_)
        throw std::invalid_argument("CycInt: mixed root orders");
    for (long long t = 0; t < n_; ++t)
        coeff_[t] += o.coeff_[t];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o)
{
    if (n_ != o.n_)
        throw std::invalid_argument("CycInt: mixed root orders");
    for (long long t = 0; t < n_; ++t)
        coeff_[t] -= o.coeff_[t];
    return *this;
}

CycInt CycInt::operator+(const CycInt& o) const
{
    CycInt r = *this;
    r += o;
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const
{
    CycInt r = *this;
    r -= o;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const
{
    if (n_ != o.n_)
        throw std::invalid_argument("CycInt: mixed root orders");
    CycInt r(p_, n_);
    for (long long s = 0; s < n_; ++s) {
        if (coeff_[s] == 0)
            continue;
        for (long long t = 0; t < n_; ++t) {
            if (o.coeff_[t] == 0)
                continue;
            r.coeff_[(s + t) % n_] += coeff_[s] * o.coeff_[t];
        }
    }
    r.reduce();
    return r;
}

CycInt CycInt::operator-() const
{
    CycInt r = *this;
    for (auto& c : r.coeff_)
        c = -c;
    return r;
}

CycInt& CycInt::operator*=(long long c)
{
    for (auto& v : coeff_)
        v *= c;
    return *this;
}

CycInt CycInt::conjugate() const
{
    return galois(n_ - 1);
}

CycInt CycInt::galois(long long t) const
{
    t %= n_;
    if (t < 0)
        t += n_;
    if (t % p_ == 0)
        throw std::invalid_argument("CycInt::galois: exponent not coprime to p");
    CycInt r(p_, n_);
    for (long long s = 0; s < n_; ++s)
        if (coeff_[s] != 0)
            r.coeff_[s * t % n_] += coeff_[s];
    r.reduce();
    return r;
}

bool CycInt::is_zero() const
{
    return std::all_of(coeff_.begin(), coeff_.end(), [](long long c) { return c == 0; });
}

std::vector<long long> CycInt::canonical_coefficients() const
{
    long long top = (p_ - 1) * (n_ / p_);
    return std::vector<long long>(coeff_.begin(), coeff_.begin() + top);
}

} // namespace blockforge
