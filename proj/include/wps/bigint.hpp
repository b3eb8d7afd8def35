#ifndef WPS_BIGINT_HPP
#define WPS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wps {

using Int = boost::multiprecision::cpp_int;

inline Int igcd(const Int &a, const Int &b) { return boost::multiprecision::gcd(a, b); }

inline Int ilcm(const Int &a, const Int &b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::lcm(a, b);
}

inline Int iabs(const Int &a) { return a < 0 ? Int(-a) : a; }

inline Int ipow(Int base, unsigned long e)
{
    Int r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// quotient a/b, throwing when b does not divide a
inline Int divexact(const Int &a, const Int &b)
{
    if (b == 0)
        throw std::domain_error("divexact: division by zero");
    Int q = a / b;
    if (q * b != a)
        throw std::domain_error("divexact: inexact division");
    return q;
}

inline bool divides(const Int &d, const Int &a)
{
    if (d == 0)
        return a == 0;
    return a % d == 0;
}

inline Int binomial(const Int &n, long k)
{
    if (k < 0)
        return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return divexact(num, den);
}

// trial division; coordinates of weight vectors are desk-scale
inline std::map<Int, long> factorize(Int n)
{
    if (n <= 0)
        throw std::domain_error("factorize: argument must be positive");
    std::map<Int, long> f;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1)
        ++f[n];
    return f;
}

inline long p_valuation(Int n, const Int &p)
{
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline bool fits_int64(const Int &v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return lo <= v && v <= hi;
}

} // namespace wps

#endif
