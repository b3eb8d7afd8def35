#ifndef WPS_RINGS_HPP
#define WPS_RINGS_HPP

#include "wps/bigint.hpp"
#include "wps/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wps {

enum class Theory { integral, ktheory, generic };

inline std::string theory_name(Theory t)
{
    switch (t) {
    case Theory::integral: return "integral";
    case Theory::ktheory: return "ktheory";
    case Theory::generic: return "generic";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Z: every element sits in degree 0

struct IntegerRing {
    static constexpr Theory theory = Theory::integral;
    using Elem = Int;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(const Int &v) const { return v; }
    bool is_zero(const Elem &a) const { return a == 0; }
    Elem add(const Elem &a, const Elem &b) const { return a + b; }
    Elem neg(const Elem &a) const { return -a; }
    Elem mul(const Elem &a, const Elem &b) const { return a * b; }
    Elem mul_int(const Elem &a, const Int &v) const { return a * v; }
    bool equal(const Elem &a, const Elem &b) const { return a == b; }

    // homological degree of a homogeneous element; nullopt for 0
    std::optional<long> degree(const Elem &a) const
    {
        if (a == 0)
            return std::nullopt;
        return 0;
    }
    bool homogeneous(const Elem &) const { return true; }

    std::string render(const Elem &a) const { return a.str(); }
};

// ---------------------------------------------------------------------------
// Z[z, z^-1], z an invertible unit of homological degree 2

struct LaurentRing {
    static constexpr Theory theory = Theory::ktheory;

    struct Elem {
        std::map<long, Int> terms; // z-exponent -> coefficient
        bool operator==(const Elem &o) const { return terms == o.terms; }
    };

    Elem zero() const { return {}; }
    Elem one() const { return from_int(1); }
    Elem from_int(const Int &v) const
    {
        Elem e;
        if (v != 0)
            e.terms[0] = v;
        return e;
    }
    static Elem z_power(long m, const Int &c = 1)
    {
        Elem e;
        if (c != 0)
            e.terms[m] = c;
        return e;
    }
    bool is_zero(const Elem &a) const { return a.terms.empty(); }
    Elem add(const Elem &a, const Elem &b) const
    {
        Elem r = a;
        for (const auto &[m, c] : b.terms) {
            Int &slot = r.terms[m];
            slot += c;
            if (slot == 0)
                r.terms.erase(m);
        }
        return r;
    }
    Elem neg(const Elem &a) const
    {
        Elem r;
        for (const auto &[m, c] : a.terms)
            r.terms[m] = -c;
        return r;
    }
    Elem mul(const Elem &a, const Elem &b) const
    {
        Elem r;
        for (const auto &[ma, ca] : a.terms)
            for (const auto &[mb, cb] : b.terms) {
                Int &slot = r.terms[ma + mb];
                slot += ca * cb;
                if (slot == 0)
                    r.terms.erase(ma + mb);
            }
        return r;
    }
    Elem mul_int(const Elem &a, const Int &v) const
    {
        if (v == 0)
            return {};
        Elem r;
        for (const auto &[m, c] : a.terms)
            r.terms[m] = c * v;
        return r;
    }
    bool equal(const Elem &a, const Elem &b) const { return a.terms == b.terms; }

    std::optional<long> degree(const Elem &a) const
    {
        if (a.terms.empty())
            return std::nullopt;
        if (a.terms.size() != 1)
            throw consistency_error("inhomogeneous Laurent element");
        return 2 * a.terms.begin()->first;
    }
    bool homogeneous(const Elem &a) const { return a.terms.size() <= 1; }

    // integer content of a single z^m term; used for the t = z*x normalisation
    Int int_at_z_power(const Elem &a, long m) const
    {
        if (a.terms.empty())
            return 0;
        if (a.terms.size() != 1 || a.terms.begin()->first != m)
            throw consistency_error("Laurent element is not an integer multiple of z^" +
                                    std::to_string(m));
        return a.terms.begin()->second;
    }

    std::string render(const Elem &a) const
    {
        if (a.terms.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &[m, c] : a.terms) {
            Int mag = iabs(c);
            std::string term;
            if (m == 0)
                term = mag.str();
            else {
                if (mag != 1)
                    term = mag.str() + " ";
                term += "z";
                if (m != 1)
                    term += "^" + std::to_string(m);
            }
            if (first)
                out += (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Z[a_ij : 2 <= i+j <= D], a_ij = a_ji, deg a_ij = 2(i+j-1); a_11 prints aE

struct GenericRing {
    static constexpr Theory theory = Theory::generic;

    // canonical generator with i >= j >= 1
    struct Gen {
        int i, j;
        auto operator<=>(const Gen &) const = default;
    };
    // sorted (generator, exponent) pairs, exponents > 0
    using Mono = std::vector<std::pair<Gen, int>>;

    struct Elem {
        std::map<Mono, Int> terms;
        bool operator==(const Elem &o) const { return terms == o.terms; }
    };

    explicit GenericRing(int bound = 2) : bound_(bound)
    {
        if (bound_ < 2)
            throw invalid_input("generic coefficient ring needs generation bound >= 2");
    }

    int bound() const { return bound_; }

    static Gen gen(int i, int j)
    {
        if (i < j)
            std::swap(i, j);
        if (j < 1)
            throw invalid_input("a_ij requires i, j >= 1");
        return Gen{i, j};
    }
    static long gen_degree(const Gen &g) { return 2L * (g.i + g.j - 1); }

    Elem generator(int i, int j) const
    {
        Gen g = gen(i, j);
        if (g.i + g.j > bound_)
            throw invalid_input("a_ij exceeds the generation bound");
        Elem e;
        e.terms[Mono{{g, 1}}] = 1;
        return e;
    }

    Elem zero() const { return {}; }
    Elem one() const { return from_int(1); }
    Elem from_int(const Int &v) const
    {
        Elem e;
        if (v != 0)
            e.terms[Mono{}] = v;
        return e;
    }
    bool is_zero(const Elem &a) const { return a.terms.empty(); }
    Elem add(const Elem &a, const Elem &b) const
    {
        Elem r = a;
        for (const auto &[m, c] : b.terms) {
            Int &slot = r.terms[m];
            slot += c;
            if (slot == 0)
                r.terms.erase(m);
        }
        return r;
    }
    Elem neg(const Elem &a) const
    {
        Elem r;
        for (const auto &[m, c] : a.terms)
            r.terms[m] = -c;
        return r;
    }
    static Mono mono_mul(const Mono &a, const Mono &b)
    {
        Mono r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i, ++j;
            }
        }
        return r;
    }
    Elem mul(const Elem &a, const Elem &b) const
    {
        Elem r;
        for (const auto &[ma, ca] : a.terms)
            for (const auto &[mb, cb] : b.terms) {
                Mono m = mono_mul(ma, mb);
                Int &slot = r.terms[m];
                slot += ca * cb;
                if (slot == 0)
                    r.terms.erase(m);
            }
        return r;
    }
    Elem mul_int(const Elem &a, const Int &v) const
    {
        if (v == 0)
            return {};
        Elem r;
        for (const auto &[m, c] : a.terms)
            r.terms[m] = c * v;
        return r;
    }
    bool equal(const Elem &a, const Elem &b) const { return a.terms == b.terms; }

    static long mono_degree(const Mono &m)
    {
        long d = 0;
        for (const auto &[g, e] : m)
            d += gen_degree(g) * e;
        return d;
    }
    std::optional<long> degree(const Elem &a) const
    {
        if (a.terms.empty())
            return std::nullopt;
        long d = mono_degree(a.terms.begin()->first);
        for (const auto &[m, c] : a.terms)
            if (mono_degree(m) != d)
                throw consistency_error("inhomogeneous generic element");
        return d;
    }
    bool homogeneous(const Elem &a) const
    {
        if (a.terms.empty())
            return true;
        long d = mono_degree(a.terms.begin()->first);
        for (const auto &[m, c] : a.terms)
            if (mono_degree(m) != d)
                return false;
        return true;
    }

    static std::string gen_name(const Gen &g)
    {
        if (g.i == 1 && g.j == 1)
            return "aE";
        if (g.i < 10 && g.j < 10)
            return "a" + std::to_string(g.i) + std::to_string(g.j);
        return "a" + std::to_string(g.i) + "_" + std::to_string(g.j);
    }
    static std::string mono_render(const Mono &m)
    {
        std::string s;
        for (const auto &[g, e] : m) {
            if (!s.empty())
                s += " ";
            s += gen_name(g);
            if (e != 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }
    std::string render(const Elem &a) const
    {
        if (a.terms.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &[m, c] : a.terms) {
            Int mag = iabs(c);
            std::string term;
            std::string ms = mono_render(m);
            if (ms.empty())
                term = mag.str();
            else if (mag == 1)
                term = ms;
            else
                term = mag.str() + " " + ms;
            if (first)
                out += (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }

  private:
    int bound_;
};

} // namespace wps

#endif
