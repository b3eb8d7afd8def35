#ifndef WPS_REASSEMBLY_HPP
#define WPS_REASSEMBLY_HPP

#include "wps/lattice.hpp"
#include "wps/presentation.hpp"

#include <string>
#include <vector>

namespace wps {

// Per-degree integer lattices inside E^*(CP^n_+).
// Integral: degree j is one-dimensional on the coordinate x^j.
// K-theory: degree j has coordinates t^j, ..., t^n with t = z*x, so vectors
// are integer polynomials starting at t^j; z-powers are reinstated on output.
struct GradedLattice {
    Theory theory = Theory::integral;
    std::size_t n = 0;
    std::vector<Mat> degrees; // HNF basis per degree j = 1..n (index j-1)

    const Mat &at_degree(std::size_t j) const { return degrees.at(j - 1); }

    std::size_t ambient_dim(std::size_t j) const
    {
        return theory == Theory::integral ? 1 : n - j + 1;
    }
};

// lattice of the full ambient E^*(CP^n_+): the image of the trivial weight
inline GradedLattice ambient_images(Theory theory, std::size_t n)
{
    GradedLattice g{theory, n, {}};
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t dim = g.ambient_dim(j);
        Mat id;
        for (std::size_t c = 0; c < dim; ++c) {
            Col v(dim, 0);
            v[c] = 1;
            id.push_back(std::move(v));
        }
        g.degrees.push_back(std::move(id));
    }
    return g;
}

// H^*(P(pi)) -> H^*(CP^n): degree j lands on Z * l_j(pi) * x^j
inline GradedLattice integral_images(const WeightVector &pi, std::size_t n)
{
    if (pi.n() != n)
        throw invalid_input("integral_images: length mismatch");
    KawasakiInvariants inv(pi);
    GradedLattice g{Theory::integral, n, {}};
    for (std::size_t j = 1; j <= n; ++j)
        g.degrees.push_back(Mat{Col{inv.lj(j)}});
    return g;
}

namespace detail {

// t-normalised structure constant: coefficient of u_m in u_j u_k as an integer
inline Int t_constant(const ThomPresentation<LaurentRing> &pres, std::size_t j, std::size_t k,
                      std::size_t m)
{
    const auto &c = pres.product(j, k)[m];
    if (pres.ring().is_zero(c))
        return 0;
    return pres.ring().int_at_z_power(c, static_cast<long>(m) - static_cast<long>(j) -
                                            static_cast<long>(k));
}

} // namespace detail

struct KImages {
    GradedLattice lattice;
    std::vector<Col> images; // phi^*(u_k) as t-polynomials, index k-1, coords t^0..t^n
};

// phi^*-images of the K-theory basis of P(1,...,1,r) inside Z[t]/(t^{n+1}):
// image(u_1) = (1+t)^r - 1, higher images by the triangular solve through the
// multiplication table, with exact divisibility required at every step
inline KImages k_images(const WeightVector &pi, std::size_t n)
{
    if (pi.n() != n)
        throw invalid_input("k_images: length mismatch");
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] != 1)
            throw invalid_input("unsupported weight shape for K-theory images: '" + pi.str() +
                                "' is not of the form (1,...,1,r)");
    const Int r = pi[n];
    ThomPresentation<LaurentRing> pres(pi, fgl_multiplicative());

    std::vector<Col> G(n + 1, Col(n + 1, 0)); // G[k] = image(u_k), G[0] = 1
    G[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        G[1][i] = binomial(r, static_cast<long>(i)); // (1+t)^r - 1 truncated
    auto conv_at = [&](const Col &a, const Col &b, std::size_t d) {
        Int s = 0;
        for (std::size_t i = 0; i <= d; ++i)
            s += a[i] * b[d - i];
        return s;
    };
    for (std::size_t d = 2; d <= n; ++d)
        for (std::size_t j = std::min(d, n); j >= 2; --j) {
            Int rhs = conv_at(G[1], G[j - 1], d);
            for (std::size_t m = j + 1; m <= d; ++m)
                rhs -= detail::t_constant(pres, 1, j - 1, m) * G[m][d];
            Int lead = detail::t_constant(pres, 1, j - 1, j);
            if (lead == 0 || rhs % lead != 0)
                throw invalid_input("unsupported weight shape: triangular solve for '" +
                                    pi.str() + "' is not integral at t^" + std::to_string(d));
            G[j][d] = rhs / lead;
        }

    // the images must realise the whole multiplication table
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= j; ++k)
            for (std::size_t d = 0; d <= n; ++d) {
                Int lhs = conv_at(G[j], G[k], d);
                Int want = 0;
                for (std::size_t m = 0; m <= n; ++m)
                    if (G[m][d] != 0)
                        want += detail::t_constant(pres, j, k, m) * G[m][d];
                if (lhs != want)
                    throw consistency_error("k_images: image of u_" + std::to_string(j) +
                                            " u_" + std::to_string(k) +
                                            " fails the ring-map identity");
            }

    KImages out;
    out.lattice.theory = Theory::ktheory;
    out.lattice.n = n;
    for (std::size_t j = 1; j <= n; ++j) {
        Mat gens;
        for (std::size_t k = j; k <= n; ++k) {
            Col v(n - j + 1);
            for (std::size_t i = j; i <= n; ++i)
                v[i - j] = G[k][i];
            gens.push_back(std::move(v));
        }
        out.lattice.degrees.push_back(hnf(gens));
    }
    for (std::size_t k = 1; k <= n; ++k)
        out.images.push_back(G[k]);
    return out;
}

inline GradedLattice intersect(const std::vector<GradedLattice> &lattices)
{
    if (lattices.empty())
        throw invalid_input("intersect requires at least one lattice");
    for (const auto &l : lattices)
        if (l.n != lattices[0].n || l.theory != lattices[0].theory)
            throw invalid_input("intersect: mismatched ambient data");
    GradedLattice out{lattices[0].theory, lattices[0].n, {}};
    for (std::size_t j = 1; j <= out.n; ++j) {
        Mat acc = hnf(lattices[0].at_degree(j));
        for (std::size_t i = 1; i < lattices.size(); ++i)
            acc = lattice_intersect(acc, lattices[i].at_degree(j));
        out.degrees.push_back(std::move(acc));
    }
    return out;
}

struct AssembledRing {
    Theory theory;
    WeightVector chi;           // normalised input
    std::size_t n = 0;
    GradedLattice lattice;      // canonical HNF bases per degree
    std::vector<Col> generators;            // y_j: the pivot-t^j basis vector of degree j
    std::vector<std::vector<Int>> relations; // y_1^j over the degree-j HNF basis
};

inline AssembledRing assemble(const WeightVector &chi_in, Theory theory)
{
    if (theory == Theory::generic)
        throw invalid_input("assemble supports the integral and ktheory coefficients");
    WeightVector chi = normalise(chi_in);
    const std::size_t n = chi.n();
    auto parts = primary_decomposition(chi);

    std::vector<GradedLattice> lattices;
    for (const auto &[p, part] : parts) {
        WeightVector pi = p_primary_normal_form(part.content);
        if (theory == Theory::integral)
            lattices.push_back(integral_images(pi, n));
        else {
            for (std::size_t i = 0; i + 1 < pi.size(); ++i)
                if (pi[i] != 1)
                    throw invalid_input(
                        "K-theory reassembly needs pairwise coprime weights; the " + p.str() +
                        "-content of '" + chi.str() + "' is '" + part.content.str() + "'");
            lattices.push_back(k_images(pi, n).lattice);
        }
    }

    AssembledRing out;
    out.theory = theory;
    out.chi = chi;
    out.n = n;
    out.lattice = lattices.empty() ? ambient_images(theory, n) : intersect(lattices);

    for (std::size_t j = 1; j <= n; ++j) {
        const Mat &basis = out.lattice.at_degree(j);
        if (basis.size() != out.lattice.ambient_dim(j))
            throw consistency_error("assembled lattice is not of full rank in degree " +
                                    std::to_string(j));
        if (basis[0][0] == 0)
            throw consistency_error("assembled lattice misses a generator at t^" +
                                    std::to_string(j));
        out.generators.push_back(basis[0]);
    }

    // pass from a polynomial in x resp. t to the coordinates of degree j
    auto degree_coords = [&](const Col &poly, std::size_t j) {
        Col v(out.lattice.ambient_dim(j), 0);
        if (theory == Theory::integral) {
            v[0] = poly[j];
            return v;
        }
        for (std::size_t i = 1; i < j; ++i)
            if (poly[i] != 0)
                throw consistency_error("degree-" + std::to_string(j) +
                                        " element has a term below t^" + std::to_string(j));
        for (std::size_t i = j; i <= n; ++i)
            v[i - j] = poly[i];
        return v;
    };

    // y_1^j expanded over the degree-j basis
    const Col &y1 = out.generators[0];
    Col ypoly(n + 1, 0);
    if (theory == Theory::integral)
        ypoly[1] = y1[0];
    else
        for (std::size_t i = 1; i <= n; ++i)
            ypoly[i] = y1[i - 1];
    Col acc(n + 1, 0);
    acc[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        Col next(n + 1, 0);
        for (std::size_t a = 0; a <= n; ++a)
            for (std::size_t b = 0; a + b <= n; ++b)
                next[a + b] += acc[a] * ypoly[b];
        acc = std::move(next);
        auto sol = solve_in_hnf(out.lattice.at_degree(j), degree_coords(acc, j));
        if (!sol)
            throw consistency_error("y_1^" + std::to_string(j) +
                                    " lies outside the assembled lattice in degree " +
                                    std::to_string(j));
        out.relations.push_back(*sol);
    }
    return out;
}

// Colimit route: tensor the p-primary parts over Z[x]/(x^{n+1}) degreewise and
// check that each degree is free of rank one (Smith normal form).
struct ColimitReport {
    WeightVector chi;
    std::size_t n = 0;
    std::vector<std::size_t> ranks;                // free rank per degree 1..n
    std::vector<std::vector<Int>> invariant_factors; // torsion data per degree
    bool ok = false;
};

inline ColimitReport colimit_check(const WeightVector &chi_in)
{
    WeightVector chi = normalise(chi_in);
    const std::size_t n = chi.n();
    auto parts = primary_decomposition(chi);
    if (parts.size() > 4 || n > 6)
        throw invalid_input("colimit_check is limited to <= 4 primes and n <= 6");

    ColimitReport rep;
    rep.chi = chi;
    rep.n = n;

    std::vector<KawasakiRing> rings;
    for (const auto &[p, part] : parts)
        rings.emplace_back(p_primary_normal_form(part.content));
    const std::size_t m = rings.size();

    if (m <= 1) {
        // the tensor over the base collapses to the single part (or the base itself)
        rep.ranks.assign(n, 1);
        rep.invariant_factors.assign(n, {});
        rep.ok = true;
        return rep;
    }

    // tuples (j_1, ..., j_m) with sum d index the degree-d piece of the big tensor
    auto tuples_of_degree = [&](std::size_t d) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur(m, 0);
        auto rec = [&](auto &&self, std::size_t pos, std::size_t left) -> void {
            if (pos + 1 == m) {
                if (left <= n) {
                    cur[pos] = left;
                    out.push_back(cur);
                }
                return;
            }
            for (std::size_t v = 0; v <= std::min(left, n); ++v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, d);
        return out;
    };

    rep.ok = true;
    for (std::size_t d = 1; d <= n; ++d) {
        auto rows = tuples_of_degree(d);
        auto lower = tuples_of_degree(d - 1);
        std::map<std::vector<std::size_t>, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i)
            row_index.emplace(rows[i], i);
        Mat relations;
        for (const auto &t : lower)
            for (std::size_t i = 0; i + 1 < m; ++i) {
                // x acting through factor i minus x acting through factor i+1
                Col v(rows.size(), 0);
                auto act = [&](std::size_t factor, const Int &sign) {
                    if (t[factor] >= n)
                        return; // x * v_n = 0
                    std::vector<std::size_t> shifted = t;
                    shifted[factor] += 1;
                    Int c = rings[factor].structure_constant(1, t[factor]);
                    v[row_index.at(shifted)] += sign * c;
                };
                act(i, 1);
                act(i + 1, -1);
                if (!col_is_zero(v))
                    relations.push_back(std::move(v));
            }
        auto factors = smith_invariant_factors(relations);
        std::size_t free_rank = rows.size() - factors.size();
        bool trivial = true;
        for (const Int &f : factors)
            if (f != 1)
                trivial = false;
        rep.ranks.push_back(free_rank);
        std::vector<Int> nontrivial;
        for (const Int &f : factors)
            if (f != 1)
                nontrivial.push_back(f);
        rep.invariant_factors.push_back(nontrivial);
        if (free_rank != 1 || !trivial)
            rep.ok = false;
    }
    return rep;
}

} // namespace wps

#endif
