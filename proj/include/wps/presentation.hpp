#ifndef WPS_PRESENTATION_HPP
#define WPS_PRESENTATION_HPP

#include "wps/series.hpp"
#include "wps/weights.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <vector>

namespace wps {

// Exponent vector (e_1, ..., e_n) of a monomial w_1^{e_1} ... w_n^{e_n}.
// Tail form: the support is empty or a contiguous block {h, ..., n}.
using WMono = std::vector<int>;

inline bool tail_form(const WMono &e)
{
    std::size_t n = e.size();
    std::size_t h = 0;
    while (h < n && e[h] == 0)
        ++h;
    for (std::size_t i = h; i < n; ++i)
        if (e[i] == 0)
            return false;
    return true;
}

inline long wmono_total(const WMono &e)
{
    long t = 0;
    for (int v : e)
        t += v;
    return t;
}

// monomial of u_k = w_{n-k+1} ... w_n
inline WMono u_monomial(std::size_t n, std::size_t k)
{
    WMono e(n, 0);
    for (std::size_t i = n - k; i < n; ++i)
        e[i] = 1;
    return e;
}

inline std::string render_wmono(const WMono &e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += " ";
        s += "w" + std::to_string(i + 1);
        if (e[i] != 1)
            s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

// true when (e_n, ..., e_1) < (f_n, ..., f_1) lexicographically
inline bool rewrite_smaller(const WMono &e, const WMono &f)
{
    for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] != f[i])
            return e[i] < f[i];
    }
    return false;
}

template <class R> using WPoly = std::map<WMono, typename R::Elem>;

template <class R>
void wpoly_add(const R &ring, WPoly<R> &p, const WMono &m, const typename R::Elem &c)
{
    auto it = p.find(m);
    if (it == p.end()) {
        if (!ring.is_zero(c))
            p.emplace(m, c);
        return;
    }
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second))
        p.erase(it);
}

// E^*(P(chi)) for divisive chi, presented on the basis u_0, ..., u_n with the
// full multiplication table obtained by rewriting squares via the q_i-series
template <class R> class ThomPresentation {
  public:
    using Elem = typename R::Elem;

    ThomPresentation(WeightVector chi, FormalGroupLaw<R> law)
        : chi_(std::move(chi)), law_(std::move(law))
    {
        if (!is_divisive(chi_))
            throw invalid_input("weight vector '" + chi_.str() +
                                "' is not divisive; pass star_form(chi) instead");
        const std::size_t n = chi_.n();
        for (std::size_t i = 1; i <= n; ++i) {
            Int qi = divexact(chi_[i], chi_[i - 1]);
            if (qi > 100000)
                throw invalid_input("quotient weight q_" + std::to_string(i) +
                                    " is too large for series expansion");
            q_.push_back(qi);
        }
        // precision n is exact for rewriting: monomials of total degree > n
        // can never reduce to a basis element
        long rewrite_prec = static_cast<long>(n);
        for (std::size_t i = 1; i <= n; ++i) {
            long qi = static_cast<long>(q_[i - 1]);
            long prec = rewrite_prec;
            if constexpr (R::theory == Theory::ktheory)
                prec = std::max(prec, qi); // the full polynomial, for the relation ideal
            qseries_.push_back(r_series(law_, qi, prec));
        }
        build_table();
    }

    const WeightVector &chi() const { return chi_; }
    const R &ring() const { return law_.ring; }
    const FormalGroupLaw<R> &law() const { return law_; }
    std::size_t n() const { return chi_.n(); }
    const std::vector<Int> &q() const { return q_; }
    const Series1<R> &q_series(std::size_t i) const { return qseries_.at(i - 1); }

    // coefficients of u_j * u_k on the basis u_0, ..., u_n
    const std::vector<Elem> &product(std::size_t j, std::size_t k) const
    {
        return table_.at(j).at(k);
    }

    // normal form of a polynomial given in tail-form monomials
    std::vector<Elem> normal_form(const WPoly<R> &input) const
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        std::vector<Elem> out(n + 1, rg.zero());
        WPoly<R> work;
        for (const auto &[e, c] : input) {
            if (e.size() != n)
                throw invalid_input("monomial length does not match the weight vector");
            if (!tail_form(e))
                throw invalid_input("monomial " + render_wmono(e) + " is not in tail form");
            if (wmono_total(e) <= static_cast<long>(n))
                wpoly_add(rg, work, e, c);
        }
        while (!work.empty()) {
            auto node = work.extract(work.begin());
            const WMono &e = node.key();
            const Elem &c = node.mapped();
            // largest index with a square
            std::size_t i = n;
            while (i > 0 && e[i - 1] < 2)
                --i;
            if (i == 0) {
                // squarefree tail w_{h+1} ... w_n = u_{n-h}
                std::size_t h = 0;
                while (h < n && e[h] == 0)
                    ++h;
                std::size_t k = n - h;
                out[k] = rg.add(out[k], c);
                continue;
            }
            if (i == 1)
                continue; // w_1^2 rewrites through [q_1](w_0) = 0
            for (const auto &[kexp, sc] : qseries_[i - 1].c) {
                WMono f = e;
                f[i - 1] -= 1;
                f[i - 2] += static_cast<int>(kexp);
                if (wmono_total(f) > static_cast<long>(n))
                    continue; // can never reach a basis monomial
                assert(rewrite_smaller(f, e));
                wpoly_add(rg, work, f, rg.mul(c, sc));
            }
        }
        return out;
    }

    // normal form of w_n^i, computed on the monomial itself
    std::vector<Elem> top_power(std::size_t i) const
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        if (i == 0) {
            std::vector<Elem> out(n + 1, rg.zero());
            out[0] = rg.one();
            return out;
        }
        WPoly<R> p;
        WMono e(n, 0);
        e[n - 1] = static_cast<int>(i);
        p.emplace(e, rg.one());
        return normal_form(p);
    }

    // product of two basis expansions through the table
    std::vector<Elem> multiply(const std::vector<Elem> &a, const std::vector<Elem> &b) const
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        std::vector<Elem> out(n + 1, rg.zero());
        for (std::size_t j = 0; j <= n; ++j) {
            if (rg.is_zero(a[j]))
                continue;
            for (std::size_t k = 0; k <= n; ++k) {
                if (rg.is_zero(b[k]))
                    continue;
                Elem cc = rg.mul(a[j], b[k]);
                const auto &row = product(j, k);
                for (std::size_t m = 0; m <= n; ++m)
                    if (!rg.is_zero(row[m]))
                        out[m] = rg.add(out[m], rg.mul(cc, row[m]));
            }
        }
        return out;
    }

    // canonical generators of the relation ideal, (w_i - [q_i](w_{i-1})) w_i ... w_n;
    // over Z and the generic ring, series terms beyond w_{i-1}^{i-1} lie in the
    // subideal of the earlier relations and are dropped
    WPoly<R> relation(std::size_t i) const
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        WPoly<R> rel;
        WMono lead(n, 0);
        lead[i - 1] = 2;
        for (std::size_t t = i; t < n; ++t)
            lead[t] = 1;
        rel.emplace(lead, rg.one());
        if (i >= 2) {
            for (const auto &[kexp, sc] : qseries_[i - 1].c) {
                // over Z and the generic ring, terms beyond w_{i-1}^{i-1} are
                // monomial multiples of earlier relations; K keeps the whole
                // polynomial [q_i](u), as its top-degree part does not reduce
                if (R::theory != Theory::ktheory && kexp > static_cast<long>(i) - 1)
                    continue;
                WMono m(n, 0);
                m[i - 2] = static_cast<int>(kexp);
                m[i - 1] = 1;
                for (std::size_t t = i; t < n; ++t)
                    m[t] = 1;
                wpoly_add(rg, rel, m, rg.neg(sc));
            }
        }
        return rel;
    }

    std::string render_relation(std::size_t i) const
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        WPoly<R> rel = relation(i);
        std::string tail;
        for (std::size_t t = i + 1; t <= n; ++t)
            tail += (tail.empty() ? "" : " ") + ("w" + std::to_string(t));
        // strip the common tail from each monomial and render the head
        std::string head;
        bool first = true;
        for (const auto &[e, c] : rel) {
            WMono stripped = e;
            for (std::size_t t = i; t < n; ++t)
                stripped[t] -= 1;
            std::string cs = rg.render(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg)
                cs = cs.substr(1);
            bool composite = cs.find(" + ") != std::string::npos ||
                             cs.find(" - ") != std::string::npos;
            std::string mono = render_wmono(stripped);
            std::string term;
            if (cs == "1")
                term = mono;
            else if (composite)
                term = "(" + cs + ") " + mono;
            else
                term = cs + " " + mono;
            if (first)
                head += (neg ? "-" : "") + term;
            else
                head += (neg ? " - " : " + ") + term;
            first = false;
        }
        if (rel.size() == 1)
            return tail.empty() ? head : head + " " + tail;
        if (tail.empty())
            return head;
        return "(" + head + ") " + tail;
    }

  private:
    void build_table()
    {
        const std::size_t n = chi_.n();
        const R &rg = ring();
        table_.assign(n + 1, std::vector<std::vector<Elem>>(n + 1));
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t k = 0; k <= j; ++k) {
                WMono e(n, 0);
                for (std::size_t t = n - j; t < n; ++t)
                    e[t] += 1;
                for (std::size_t t = n - k; t < n; ++t)
                    e[t] += 1;
                WPoly<R> p;
                p.emplace(std::move(e), rg.one());
                auto row = normal_form(p);
                for (std::size_t m = 0; m <= n; ++m) {
                    if (rg.is_zero(row[m]))
                        continue;
                    if (m < j + k)
                        throw consistency_error("structure constant below the degree filtration");
                    auto deg = rg.degree(row[m]);
                    if (deg && *deg != 2 * (static_cast<long>(m) - static_cast<long>(j) -
                                            static_cast<long>(k)))
                        throw consistency_error("structure constant of u_" + std::to_string(j) +
                                                " u_" + std::to_string(k) +
                                                " has the wrong degree");
                }
                table_[j][k] = row;
                table_[k][j] = std::move(row);
            }
    }

    WeightVector chi_;
    FormalGroupLaw<R> law_;
    std::vector<Int> q_;
    std::vector<Series1<R>> qseries_;
    std::vector<std::vector<std::vector<Elem>>> table_;
};

template <class R>
ThomPresentation<R> build_presentation(const WeightVector &chi, const R &ring)
{
    return ThomPresentation<R>(chi, fgl_for(ring));
}

// ---------------------------------------------------------------------------
// Kawasaki's integral model: the sublattice of Z[x]/(x^{n+1}) spanned by l_j x^j

class KawasakiRing {
  public:
    explicit KawasakiRing(const WeightVector &chi_in)
        : chi_(is_normalised(chi_in) ? chi_in : normalise(chi_in)), inv_(chi_)
    {
        const std::size_t n = chi_.n();
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j)
                if (!divides(lj(i + j), lj(i) * lj(j)))
                    throw consistency_error("l_" + std::to_string(i + j) +
                                            " does not divide l_" + std::to_string(i) + " l_" +
                                            std::to_string(j));
    }

    const WeightVector &chi() const { return chi_; }
    std::size_t n() const { return chi_.n(); }
    const KawasakiInvariants &invariants() const { return inv_; }

    // embedding v_j = l_j x^j (l_0 = 1)
    Int lj(std::size_t j) const { return j == 0 ? Int(1) : inv_.lj(j); }

    // v_i v_j = (l_i l_j / l_{i+j}) v_{i+j}, zero above degree n
    Int structure_constant(std::size_t i, std::size_t j) const
    {
        if (i + j > n())
            return 0;
        return divexact(lj(i) * lj(j), lj(i + j));
    }

    // m_j, the coefficient in v_1^j = m_j v_j
    Int mj(std::size_t j) const { return j == 0 ? Int(1) : inv_.mj(j); }

  private:
    WeightVector chi_;
    KawasakiInvariants inv_;
};

inline KawasakiRing kawasaki_ring(const WeightVector &chi) { return KawasakiRing(chi); }

// ---------------------------------------------------------------------------
// cross-checks between the two integral models

struct IsoReport {
    std::vector<std::string> lines;
    bool ok = true;
};

// For divisive chi the integral Thom presentation satisfies
// w_n^j = prod_{h=1}^{j-1} (chi_n / chi_{n-h}) u_j, and u_j <-> v_j matches the
// Kawasaki ring of normalise(chi).
inline IsoReport verify_divisive_iso(const WeightVector &chi)
{
    if (!is_divisive(chi))
        throw invalid_input("verify_divisive_iso requires a divisive weight vector");
    IsoReport rep;
    const std::size_t n = chi.n();
    ThomPresentation<IntegerRing> pres(chi, fgl_additive());
    KawasakiRing kaw(normalise(chi));

    for (std::size_t j = 1; j <= n; ++j) {
        Int scalar = 1;
        for (std::size_t h = 1; h + 1 <= j; ++h)
            scalar *= divexact(chi[n], chi[n - h]);
        auto power = pres.top_power(j);
        for (std::size_t m = 0; m <= n; ++m) {
            Int expect = (m == j) ? scalar : Int(0);
            if (power[m] != expect) {
                std::string got;
                for (std::size_t mm = 0; mm <= n; ++mm)
                    got += (mm ? " + " : "") + power[mm].str() + " u" + std::to_string(mm);
                throw consistency_error("w_n^" + std::to_string(j) + " = " + got +
                                        " but the closed form gives " + scalar.str() + " u" +
                                        std::to_string(j));
            }
        }
        if (scalar != kaw.mj(j))
            throw consistency_error("w_n^" + std::to_string(j) + " scalar " + scalar.str() +
                                    " differs from m_" + std::to_string(j) + " = " +
                                    kaw.mj(j).str());
        rep.lines.push_back("w_n^" + std::to_string(j) + " = " + scalar.str() + " u" +
                            std::to_string(j) + " = m_" + std::to_string(j) + " u" +
                            std::to_string(j));
    }

    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            const auto &row = pres.product(i, j);
            for (std::size_t m = 0; m <= n; ++m) {
                Int expect = (m == i + j) ? kaw.structure_constant(i, j) : Int(0);
                if (row[m] != expect)
                    throw consistency_error(
                        "u" + std::to_string(i) + "*u" + std::to_string(j) +
                        " disagrees with the Kawasaki ring at u" + std::to_string(m) + ": " +
                        row[m].str() + " vs " + expect.str());
            }
        }
    rep.lines.push_back("multiplication table matches v_i v_j = (l_i l_j / l_{i+j}) v_{i+j}");
    return rep;
}

// Rationally the algebra is EQ[w_n]/(w_n^{n+1}): powers of w_n expand
// triangularly over the u-basis with nonzero integer diagonal.
template <class R> struct RationalFormReport {
    std::vector<Int> diagonal;               // w_n^j = diagonal_j u_j + higher terms
    std::vector<bool> pure;                  // true when the expansion is exactly diagonal
    bool top_power_vanishes = false;         // w_n^{n+1} = 0
    bool ok = false;
};

template <class R>
RationalFormReport<R> rational_form(const ThomPresentation<R> &pres)
{
    const std::size_t n = pres.n();
    const R &rg = pres.ring();
    RationalFormReport<R> rep;
    rep.ok = true;
    rep.diagonal.assign(n + 1, 0);
    rep.pure.assign(n + 1, true);
    rep.diagonal[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        auto power = pres.top_power(j);
        for (std::size_t m = 0; m < j; ++m)
            if (!rg.is_zero(power[m]))
                rep.ok = false; // would break the degree filtration
        if (rg.is_zero(power[j])) {
            rep.ok = false;
            continue;
        }
        // the diagonal entry sits in degree 0, hence is an integer
        if constexpr (R::theory == Theory::integral)
            rep.diagonal[j] = power[j];
        else if constexpr (R::theory == Theory::ktheory)
            rep.diagonal[j] = rg.int_at_z_power(power[j], 0);
        else {
            auto it = power[j].terms.find(GenericRing::Mono{});
            if (it == power[j].terms.end() || power[j].terms.size() != 1)
                throw consistency_error("diagonal entry of w_n^j is not an integer");
            rep.diagonal[j] = it->second;
        }
        for (std::size_t m = j + 1; m <= n; ++m)
            if (!rg.is_zero(power[m]))
                rep.pure[j] = false;
    }
    rep.top_power_vanishes = true;
    auto top = pres.top_power(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        if (!rg.is_zero(top[m]))
            rep.top_power_vanishes = false;
    rep.ok = rep.ok && rep.top_power_vanishes;
    return rep;
}

} // namespace wps

#endif
