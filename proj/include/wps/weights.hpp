#ifndef WPS_WEIGHTS_HPP
#define WPS_WEIGHTS_HPP

#include "wps/bigint.hpp"
#include "wps/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace wps {

// weight vector (chi_0, ..., chi_n) of positive integers, n+1 >= 1
class WeightVector {
  public:
    WeightVector() = default;

    explicit WeightVector(std::vector<Int> coords) : coords_(std::move(coords))
    {
        if (coords_.empty())
            throw invalid_input("weight vector must have at least one coordinate");
        for (const Int &c : coords_)
            if (c < 1)
                throw invalid_input("weight vector coordinates must be positive");
    }

    WeightVector(std::initializer_list<long> cs)
        : WeightVector(std::vector<Int>(cs.begin(), cs.end()))
    {
    }

    static WeightVector ones(std::size_t len)
    {
        return WeightVector(std::vector<Int>(len, Int(1)));
    }

    static WeightVector parse(const std::string &s)
    {
        std::vector<Int> cs;
        std::string item;
        std::istringstream in(s);
        while (std::getline(in, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw invalid_input("malformed weight vector '" + s +
                                    "': expected comma-separated positive integers");
            cs.emplace_back(item);
        }
        if (cs.empty())
            throw invalid_input("malformed weight vector '" + s + "'");
        return WeightVector(std::move(cs));
    }

    std::size_t size() const { return coords_.size(); }
    std::size_t n() const { return coords_.size() - 1; }
    const Int &operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Int> &coords() const { return coords_; }

    // chi' = (chi_0, ..., chi_{n-1})
    WeightVector truncated() const
    {
        if (size() < 2)
            throw invalid_input("cannot truncate a length-1 weight vector");
        return WeightVector(std::vector<Int>(coords_.begin(), coords_.end() - 1));
    }

    Int gcd() const
    {
        Int g = 0;
        for (const Int &c : coords_)
            g = igcd(g, c);
        return g;
    }

    Int lcm() const
    {
        Int l = 1;
        for (const Int &c : coords_)
            l = ilcm(l, c);
        return l;
    }

    Int product() const
    {
        Int p = 1;
        for (const Int &c : coords_)
            p *= c;
        return p;
    }

    bool operator==(const WeightVector &o) const { return coords_ == o.coords_; }
    bool operator!=(const WeightVector &o) const { return coords_ != o.coords_; }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i)
                s += ",";
            s += coords_[i].str();
        }
        return s;
    }

  private:
    std::vector<Int> coords_;
};

struct DivisibilityClass {
    bool normalised = false;
    bool weakly_divisive = false;
    bool divisive = false;
    std::optional<Int> p_primary;        // set when a unique prime occurs
    std::optional<std::vector<Int>> q;   // q_j = chi_j / chi_{j-1}, present iff divisive
};

// set of primes appearing in chi
inline std::set<Int> prime_support(const WeightVector &chi)
{
    std::set<Int> ps;
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (const auto &[p, e] : factorize(chi[i]))
            ps.insert(p);
    return ps;
}

inline bool is_normalised(const WeightVector &chi)
{
    // for every j, gcd of the remaining coordinates is 1
    const std::size_t len = chi.size();
    if (len == 1)
        return chi[0] == 1;
    for (std::size_t j = 0; j < len; ++j) {
        Int g = 0;
        for (std::size_t i = 0; i < len; ++i)
            if (i != j)
                g = igcd(g, chi[i]);
        if (g != 1)
            return false;
    }
    return true;
}

inline bool is_divisive(const WeightVector &chi)
{
    for (std::size_t j = 1; j < chi.size(); ++j)
        if (chi[j] % chi[j - 1] != 0)
            return false;
    return true;
}

inline bool is_weakly_divisive(const WeightVector &chi)
{
    const Int &last = chi[chi.size() - 1];
    for (std::size_t j = 0; j + 1 < chi.size(); ++j)
        if (last % chi[j] != 0)
            return false;
    return true;
}

struct Classification {
    Int g;
    Int l;
    DivisibilityClass cls;
};

inline Classification classify(const WeightVector &chi)
{
    Classification out;
    out.g = chi.gcd();
    out.l = chi.lcm();
    out.cls.normalised = is_normalised(chi);
    out.cls.weakly_divisive = is_weakly_divisive(chi);
    out.cls.divisive = is_divisive(chi);
    auto ps = prime_support(chi);
    if (ps.size() == 1)
        out.cls.p_primary = *ps.begin();
    if (out.cls.divisive) {
        std::vector<Int> q;
        for (std::size_t j = 1; j < chi.size(); ++j)
            q.push_back(chi[j] / chi[j - 1]);
        out.cls.q = std::move(q);
    }
    return out;
}

// Divide out, prime by prime, everything beyond the second-smallest valuation.
// The result has at least two coordinates of valuation 0 at every prime.
inline WeightVector normalise(const WeightVector &chi)
{
    std::vector<Int> cs(chi.coords());
    if (cs.size() == 1)
        return WeightVector({1});
    for (const Int &p : prime_support(chi)) {
        std::vector<long> v(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
            v[i] = p_valuation(cs[i], p);
        std::vector<long> sorted(v);
        std::sort(sorted.begin(), sorted.end());
        long e = sorted[1]; // second-smallest valuation
        for (std::size_t i = 0; i < cs.size(); ++i)
            cs[i] /= ipow(p, std::min(v[i], e));
    }
    return WeightVector(std::move(cs));
}

// h_J = prod(chi_j : j in J) / gcd(chi_j : j in J) for a subset bitmask J
inline Int h_subset(const WeightVector &chi, std::uint32_t mask)
{
    Int prod = 1, g = 0;
    for (std::size_t i = 0; i < chi.size(); ++i)
        if (mask & (1u << i)) {
            prod *= chi[i];
            g = igcd(g, chi[i]);
        }
    return g == 0 ? Int(1) : divexact(prod, g);
}

class KawasakiInvariants {
  public:
    explicit KawasakiInvariants(const WeightVector &chi) : chi_(chi)
    {
        if (chi.size() > 24)
            throw invalid_input("subset enumeration limited to n <= 23");
        g_ = chi.gcd();
        l_ = chi.lcm();
        const std::size_t n = chi.n();
        lj_.assign(n + 1, Int(1)); // lj_[j] = l_j, lj_[0] = 1
        mj_.assign(n + 1, Int(1));
        const std::uint32_t full = (1u << chi.size()) - 1u;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            int sz = __builtin_popcount(mask);
            // l_j runs over (j+1)-element subsets
            if (sz < 2)
                continue;
            std::size_t j = static_cast<std::size_t>(sz) - 1;
            lj_[j] = ilcm(lj_[j], h_subset(chi, mask));
        }
        for (std::size_t j = 1; j <= n; ++j)
            mj_[j] = divexact(ipow(l_, static_cast<unsigned long>(j)), lj_[j]);
    }

    const WeightVector &chi() const { return chi_; }
    const Int &g() const { return g_; }
    const Int &l() const { return l_; }
    // l_j for 1 <= j <= n (l_0 = 1 by convention)
    const Int &lj(std::size_t j) const { return lj_.at(j); }
    const Int &mj(std::size_t j) const { return mj_.at(j); }
    std::size_t n() const { return chi_.n(); }

    // full subset-to-h_J table; only sensible for small n
    std::map<std::uint32_t, Int> hJ_table() const
    {
        std::map<std::uint32_t, Int> t;
        const std::uint32_t full = (1u << chi_.size()) - 1u;
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            t.emplace(mask, h_subset(chi_, mask));
        return t;
    }

  private:
    WeightVector chi_;
    Int g_, l_;
    std::vector<Int> lj_, mj_;
};

inline KawasakiInvariants kawasaki_invariants(const WeightVector &chi)
{
    return KawasakiInvariants(chi);
}

// cohomology of the weighted lens space L(chi_n; chi')
struct LensCohomology {
    std::size_t dimension;     // 2n - 1
    std::vector<Int> torsion;  // s_k = order of H^{2k}, 1 <= k <= n-1
};

inline LensCohomology lens_cohomology(const WeightVector &chi)
{
    if (chi.size() < 2)
        throw invalid_input("lens_cohomology requires length >= 2");
    const std::size_t n = chi.n();
    KawasakiInvariants full(chi), trunc(chi.truncated());
    LensCohomology out;
    out.dimension = 2 * n - 1;
    for (std::size_t k = 1; k + 1 <= n; ++k)
        out.torsion.push_back(divexact(full.lj(k), trunc.lj(k)));
    return out;
}

// p-content of chi together with its coprime cofactor alpha
struct PrimaryPart {
    WeightVector content; // coordinates p^{v_p(chi_i)}
    WeightVector alpha;   // chi = content * alpha coordinatewise, gcd(p, alpha_i) = 1
};

inline std::map<Int, PrimaryPart> primary_decomposition(const WeightVector &chi)
{
    std::map<Int, PrimaryPart> out;
    for (const Int &p : prime_support(chi)) {
        std::vector<Int> content, alpha;
        for (std::size_t i = 0; i < chi.size(); ++i) {
            Int pc = ipow(p, p_valuation(chi[i], p));
            content.push_back(pc);
            alpha.push_back(divexact(chi[i], pc));
        }
        out.emplace(p, PrimaryPart{WeightVector(std::move(content)),
                                   WeightVector(std::move(alpha))});
    }
    return out;
}

// sorted normal form (1,1,p^{k_2},...,p^{k_n}) of a normalised p-primary vector
inline WeightVector p_primary_normal_form(const WeightVector &pi)
{
    auto ps = prime_support(pi);
    if (ps.size() > 1)
        throw invalid_input("p_primary_normal_form: '" + pi.str() +
                            "' is not p-primary (primes " +
                            [&] {
                                std::string s;
                                for (const Int &p : ps)
                                    s += (s.empty() ? "" : ",") + p.str();
                                return s;
                            }() +
                            " occur)");
    if (!is_normalised(pi))
        throw invalid_input("p_primary_normal_form: '" + pi.str() +
                            "' is not normalised (fewer than two coordinates are prime to p)");
    std::vector<Int> cs(pi.coords());
    std::sort(cs.begin(), cs.end());
    return WeightVector(std::move(cs));
}

// coordinatewise product of the sorted p-contents of normalise(chi); always divisive
inline WeightVector star_form(const WeightVector &chi)
{
    WeightVector nu = normalise(chi);
    std::vector<Int> cs(nu.size(), Int(1));
    for (const auto &[p, part] : primary_decomposition(nu)) {
        std::vector<Int> pc(part.content.coords());
        std::sort(pc.begin(), pc.end());
        for (std::size_t i = 0; i < cs.size(); ++i)
            cs[i] *= pc[i];
    }
    return WeightVector(std::move(cs));
}

// descriptor of the coordinate-power map e(chi/omega): P(omega) -> P(chi)
struct MapDescriptor {
    WeightVector source;         // omega
    WeightVector target;         // chi
    Int s;                       // smallest s with omega | s*chi coordinatewise
    std::vector<Int> exponents;  // s*chi_i / omega_i
    Int group_order;             // |C_{chi/omega}| = prod exponents
};

inline MapDescriptor quotient(const WeightVector &chi, const WeightVector &omega)
{
    if (chi.size() != omega.size())
        throw invalid_input("quotient: weight vectors must have equal length");
    Int s = 1;
    for (std::size_t i = 0; i < chi.size(); ++i)
        s = ilcm(s, divexact(omega[i], igcd(omega[i], chi[i])));
    MapDescriptor d{omega, chi, s, {}, 1};
    for (std::size_t i = 0; i < chi.size(); ++i) {
        d.exponents.push_back(divexact(s * chi[i], omega[i]));
        d.group_order *= d.exponents.back();
    }
    return d;
}

// e(chi/sigma) o e(sigma/omega) against e(chi/omega), compared exponentwise
struct Composition {
    std::vector<Int> composite_exponents;
    std::vector<Int> direct_exponents;
    Int s_prime;        // constant integral ratio composite/direct
    Int s_doubleprime;  // s(omega,sigma) * s(sigma,omega): e(sigma/omega) o e(omega/sigma) = e(s'')
};

inline Composition compose(const WeightVector &omega, const WeightVector &sigma,
                           const WeightVector &chi)
{
    if (omega.size() != sigma.size() || sigma.size() != chi.size())
        throw invalid_input("compose: weight vectors must have equal length");
    MapDescriptor first = quotient(sigma, omega);
    MapDescriptor second = quotient(chi, sigma);
    MapDescriptor direct = quotient(chi, omega);
    Composition out;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        out.composite_exponents.push_back(first.exponents[i] * second.exponents[i]);
        out.direct_exponents.push_back(direct.exponents[i]);
    }
    Int ratio = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        if (out.composite_exponents[i] % out.direct_exponents[i] != 0)
            throw consistency_error("compose: non-integral exponent ratio at coordinate " +
                                    std::to_string(i));
        Int r = out.composite_exponents[i] / out.direct_exponents[i];
        if (i == 0)
            ratio = r;
        else if (r != ratio)
            throw consistency_error("compose: exponent ratio is not constant across coordinates");
    }
    out.s_prime = ratio;
    out.s_doubleprime = quotient(omega, sigma).s * quotient(sigma, omega).s;
    return out;
}

} // namespace wps

#endif
