#ifndef WPS_SERIES_HPP
#define WPS_SERIES_HPP

#include "wps/errors.hpp"
#include "wps/rings.hpp"

#include <map>
#include <string>
#include <type_traits>
#include <utility>

namespace wps {

// Finitely supported series in one variable u (cohomological degree 2).
// All arithmetic is exact; `precision` caps the exponents that are kept.
template <class R> struct Series1 {
    std::map<long, typename R::Elem> c; // exponent -> coefficient

    bool is_zero() const { return c.empty(); }

    bool operator==(const Series1 &o) const { return c == o.c; }
};

template <class R> struct Series2 {
    std::map<std::pair<long, long>, typename R::Elem> c;
};

template <class R>
void s1_set(const R &ring, Series1<R> &s, long k, typename R::Elem v)
{
    if (ring.is_zero(v))
        s.c.erase(k);
    else
        s.c[k] = std::move(v);
}

template <class R>
void s1_add_term(const R &ring, Series1<R> &s, long k, const typename R::Elem &v)
{
    auto it = s.c.find(k);
    if (it == s.c.end()) {
        if (!ring.is_zero(v))
            s.c.emplace(k, v);
        return;
    }
    it->second = ring.add(it->second, v);
    if (ring.is_zero(it->second))
        s.c.erase(it);
}

template <class R> Series1<R> s1_monomial(const R &ring, long k, typename R::Elem v)
{
    Series1<R> s;
    s1_set(ring, s, k, std::move(v));
    return s;
}

template <class R> Series1<R> s1_identity(const R &ring)
{
    return s1_monomial(ring, 1, ring.one());
}

template <class R> Series1<R> s1_add(const R &ring, const Series1<R> &a, const Series1<R> &b)
{
    Series1<R> r = a;
    for (const auto &[k, v] : b.c)
        s1_add_term(ring, r, k, v);
    return r;
}

template <class R>
Series1<R> s1_mul(const R &ring, const Series1<R> &a, const Series1<R> &b, long precision)
{
    Series1<R> r;
    for (const auto &[ka, va] : a.c)
        for (const auto &[kb, vb] : b.c) {
            if (ka + kb > precision)
                continue;
            s1_add_term(ring, r, ka + kb, ring.mul(va, vb));
        }
    return r;
}

template <class R>
Series1<R> s1_scale(const R &ring, const Series1<R> &a, const typename R::Elem &v)
{
    Series1<R> r;
    for (const auto &[k, c] : a.c) {
        auto p = ring.mul(c, v);
        if (!ring.is_zero(p))
            r.c.emplace(k, std::move(p));
    }
    return r;
}

template <class R> Series1<R> s1_truncate(const Series1<R> &a, long precision)
{
    Series1<R> r;
    for (const auto &[k, c] : a.c)
        if (k <= precision)
            r.c.emplace(k, c);
    return r;
}

// substitution f(g(u)); g must have zero constant term
template <class R>
Series1<R> s1_compose(const R &ring, const Series1<R> &f, const Series1<R> &g, long precision)
{
    if (g.c.count(0))
        throw invalid_input("substitution requires a series with zero constant term");
    Series1<R> out;
    Series1<R> gpow = s1_monomial(ring, 0, ring.one());
    long prev = 0;
    for (const auto &[k, coeff] : f.c) {
        if (k > precision)
            break; // g^k has valuation >= k
        for (; prev < k; ++prev)
            gpow = s1_mul(ring, gpow, g, precision);
        out = s1_add(ring, out, s1_scale(ring, gpow, coeff));
    }
    return s1_truncate(out, precision);
}

// F(a(u), b(u)) for a bivariate series F; both arguments need zero constant term
template <class R>
Series1<R> s2_eval(const R &ring, const Series2<R> &F, const Series1<R> &a, const Series1<R> &b,
                   long precision)
{
    if (a.c.count(0) || b.c.count(0))
        throw invalid_input("substitution requires series with zero constant term");
    // cache powers on demand
    std::map<long, Series1<R>> apow, bpow;
    apow[0] = s1_monomial(ring, 0, ring.one());
    bpow[0] = apow[0];
    auto power = [&](std::map<long, Series1<R>> &cache, const Series1<R> &base, long e) {
        long known = cache.rbegin()->first;
        Series1<R> cur = cache.rbegin()->second;
        while (known < e) {
            cur = s1_mul(ring, cur, base, precision);
            ++known;
            cache.emplace(known, cur);
        }
        return cache.at(e);
    };
    Series1<R> out;
    for (const auto &[ij, coeff] : F.c) {
        auto [i, j] = ij;
        if (i + j > precision)
            continue; // both arguments have valuation >= 1
        Series1<R> term = s1_mul(ring, power(apow, a, i), power(bpow, b, j), precision);
        out = s1_add(ring, out, s1_scale(ring, term, coeff));
    }
    return s1_truncate(out, precision);
}

template <class R> std::string s1_render(const R &ring, const Series1<R> &s,
                                         const std::string &var = "u")
{
    if (s.c.empty())
        return "0";
    std::string out;
    for (const auto &[k, c] : s.c) {
        std::string cs = ring.render(c);
        bool negated = cs.size() && cs[0] == '-';
        if (negated)
            cs = cs.substr(1);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term;
        if (mono.empty())
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
            term = "(" + cs + ") " + mono;
        else
            term = cs + " " + mono;
        if (out.empty())
            out += (negated ? "-" : "") + term;
        else
            out += (negated ? " - " : " + ") + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// formal group laws

template <class R> struct FormalGroupLaw {
    R ring;
    Series2<R> F;

    // coefficient of u1^i u2^j
    typename R::Elem coeff(long i, long j) const
    {
        auto it = F.c.find({i, j});
        return it == F.c.end() ? ring.zero() : it->second;
    }
};

inline FormalGroupLaw<IntegerRing> fgl_additive()
{
    FormalGroupLaw<IntegerRing> law{IntegerRing{}, {}};
    law.F.c[{1, 0}] = 1;
    law.F.c[{0, 1}] = 1;
    return law;
}

inline FormalGroupLaw<LaurentRing> fgl_multiplicative()
{
    FormalGroupLaw<LaurentRing> law{LaurentRing{}, {}};
    law.F.c[{1, 0}] = law.ring.one();
    law.F.c[{0, 1}] = law.ring.one();
    law.F.c[{1, 1}] = LaurentRing::z_power(1);
    return law;
}

// u1 + u2 + sum a_ij u1^i u2^j over i,j >= 1, i+j <= D
inline FormalGroupLaw<GenericRing> fgl_generic(int bound)
{
    GenericRing ring(bound);
    FormalGroupLaw<GenericRing> law{ring, {}};
    law.F.c[{1, 0}] = ring.one();
    law.F.c[{0, 1}] = ring.one();
    for (int i = 1; i < bound; ++i)
        for (int j = 1; i + j <= bound; ++j)
            law.F.c[{i, j}] = ring.generator(i, j);
    return law;
}

template <class R> FormalGroupLaw<R> fgl_for(const R &ring);

template <> inline FormalGroupLaw<IntegerRing> fgl_for(const IntegerRing &)
{
    return fgl_additive();
}
template <> inline FormalGroupLaw<LaurentRing> fgl_for(const LaurentRing &)
{
    return fgl_multiplicative();
}
template <> inline FormalGroupLaw<GenericRing> fgl_for(const GenericRing &ring)
{
    return fgl_generic(ring.bound());
}

// grading check: coefficient of u^k in a series of cohomological degree 2d
// is homogeneous of homological degree 2(k - d)
template <class R>
bool series_graded(const R &ring, const Series1<R> &s, long d)
{
    for (const auto &[k, c] : s.c) {
        auto deg = ring.degree(c); // throws if inhomogeneous
        if (deg && *deg != 2 * (k - d))
            return false;
    }
    return true;
}

// [r](u): r-fold formal sum, [0](u) = 0, [r](u) = F(u, [r-1](u))
template <class R>
Series1<R> r_series(const FormalGroupLaw<R> &law, long r, long precision)
{
    if (r < 0)
        throw invalid_input("r_series requires r >= 0");
    if (precision < 1)
        throw invalid_input("r_series requires precision >= 1");
    Series1<R> s; // [0](u) = 0
    Series1<R> u = s1_identity(law.ring);
    for (long step = 0; step < r; ++step)
        s = s2_eval(law.ring, law.F, u, s, precision);
    if constexpr (std::is_same_v<R, LaurentRing>) {
        for (const auto &[k, c] : s.c)
            for (const auto &[m, coeff] : c.terms)
                if (m < 0)
                    throw consistency_error("r-series produced a negative z-power");
    }
    if (!series_graded(law.ring, s, 1))
        throw consistency_error("r-series coefficient of the wrong degree");
    return s;
}

} // namespace wps

#endif
