// Independent brute-force oracles used to freeze expected values.
// Everything here recomputes results from first principles, bypassing the
// library's own code paths.
#ifndef WPS_TEST_ORACLES_HPP
#define WPS_TEST_ORACLES_HPP

#include "wps/bigint.hpp"
#include "wps/weights.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using wps::Int;

// subset-gcd criterion of a normalised weight vector, checked literally
inline bool normalised_by_subsets(const std::vector<Int> &cs)
{
    if (cs.size() == 1)
        return cs[0] == 1;
    for (std::size_t skip = 0; skip < cs.size(); ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (i != skip)
                g = wps::igcd(g, cs[i]);
        if (g != 1)
            return false;
    }
    return true;
}

// l_j via recursive enumeration of (j+1)-element index combinations
inline Int lj_by_combinations(const std::vector<Int> &cs, std::size_t j)
{
    Int result = 1;
    std::vector<std::size_t> idx;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (idx.size() == j + 1) {
            Int prod = 1, g = 0;
            for (auto i : idx) {
                prod *= cs[i];
                g = wps::igcd(g, cs[i]);
            }
            result = wps::ilcm(result, prod / g);
            return;
        }
        for (std::size_t i = start; i < cs.size(); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

// ---------------------------------------------------------------------------
// Independent reducer for the iterated-Thom relations over Z and Z[z,z^-1].
// Strategy differs from the library (smallest squared index first), the
// q-series come from closed forms instead of the formal-group recursion, and
// the data structures are separate.

// coefficient: map z-exponent -> integer (z-exponent always 0 integrally)
using ZCoeff = std::map<long, Int>;

inline void zadd(ZCoeff &a, long m, const Int &v)
{
    if (v == 0)
        return;
    auto it = a.find(m);
    if (it == a.end())
        a.emplace(m, v);
    else {
        it->second += v;
        if (it->second == 0)
            a.erase(it);
    }
}

struct NaivePoly {
    std::map<std::vector<int>, ZCoeff> terms;
};

inline void npoly_add(NaivePoly &p, const std::vector<int> &mono, long zpow, const Int &c)
{
    zadd(p.terms[mono], zpow, c);
    if (p.terms[mono].empty())
        p.terms.erase(mono);
}

// reduce w_1^{e_1} ... w_n^{e_n} over the weights q_1..q_n; multiplicative
// when `mult` is set, integral otherwise; returns coefficients on u_0..u_n
inline std::vector<ZCoeff> naive_normal_form(const std::vector<int> &start,
                                             const std::vector<Int> &q, bool mult)
{
    const std::size_t n = q.size();
    NaivePoly work;
    npoly_add(work, start, 0, 1);
    std::vector<ZCoeff> out(n + 1);
    while (!work.terms.empty()) {
        auto node = work.terms.extract(work.terms.begin());
        const std::vector<int> &e = node.key();
        const ZCoeff &coeff = node.mapped();
        // smallest squared index
        std::size_t i = 0;
        while (i < n && e[i] < 2)
            ++i;
        if (i == n) {
            std::size_t h = 0;
            while (h < n && e[h] == 0)
                ++h;
            std::size_t k = n - h;
            for (const auto &[m, c] : coeff)
                zadd(out[k], m, c);
            continue;
        }
        if (i == 0)
            continue; // w_1^2 tail dies
        // w_{i+1}^2 -> [q_{i+1}](w_i) w_{i+1}; series index i+1 in 1-based terms
        Int qi = q[i];
        long smax = mult ? static_cast<long>(qi) : 1;
        for (long s = 1; s <= smax; ++s) {
            Int binom = mult ? wps::binomial(qi, s) : qi;
            std::vector<int> f = e;
            f[i] -= 1;
            f[i - 1] += static_cast<int>(s);
            long total = 0;
            for (int v : f)
                total += v;
            if (total > static_cast<long>(n))
                continue;
            for (const auto &[m, c] : coeff)
                npoly_add(work, f, m + (mult ? s - 1 : 0), c * binom);
        }
    }
    return out;
}

} // namespace oracle

#endif
