#ifndef WPS_HOMOLOGY_HPP
#define WPS_HOMOLOGY_HPP

#include "wps/reassembly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wps {

// Dual basis b_0, ..., b_n with b_j in homological degree 2j and diagonal
// delta(b_j) = sum e_{j,k,l} b_k (x) b_l, e_{j,k,l} = c^j_{kl}
template <class R> struct CoalgebraPresentation {
    R ring;
    std::size_t n = 0;
    // diagonal[j] maps (k, l) to e_{j,k,l}; counit terms (j,0) and (0,j) included
    std::vector<std::map<std::pair<std::size_t, std::size_t>, typename R::Elem>> diagonal;

    const typename R::Elem coefficient(std::size_t j, std::size_t k, std::size_t l) const
    {
        auto it = diagonal.at(j).find({k, l});
        return it == diagonal.at(j).end() ? ring.zero() : it->second;
    }
};

template <class R>
CoalgebraPresentation<R> dualize(const ThomPresentation<R> &pres)
{
    const std::size_t n = pres.n();
    const R &rg = pres.ring();
    CoalgebraPresentation<R> co{rg, n, {}};
    co.diagonal.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t l = 0; l <= n; ++l) {
                const auto &c = pres.product(k, l)[j];
                if (rg.is_zero(c))
                    continue;
                auto deg = rg.degree(c);
                if (deg && *deg != 2 * (static_cast<long>(j) - static_cast<long>(k) -
                                        static_cast<long>(l)))
                    throw consistency_error("diagonal coefficient of wrong degree");
                co.diagonal[j].emplace(std::make_pair(k, l), c);
            }
    // counit and cocommutativity
    for (std::size_t j = 0; j <= n; ++j) {
        if (!rg.equal(co.coefficient(j, j, 0), rg.one()) ||
            !rg.equal(co.coefficient(j, 0, j), rg.one()))
            throw consistency_error("counit fails on b_" + std::to_string(j));
        for (const auto &[kl, c] : co.diagonal[j])
            if (!rg.equal(c, co.coefficient(j, kl.second, kl.first)))
                throw consistency_error("diagonal is not cocommutative");
    }
    return co;
}

// binomial-free diagonal of CP^n: delta(b_j) = sum_i b_i (x) b_{j-i}
template <class R> CoalgebraPresentation<R> cpn_coalgebra(std::size_t n, const R &ring)
{
    CoalgebraPresentation<R> co{ring, n, {}};
    co.diagonal.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            co.diagonal[j].emplace(std::make_pair(i, j - i), ring.one());
    return co;
}

// M[i][j] = coefficient of u_j in w_n^i; psi_*(b_j) = sum_i M[i][j] b_i
template <class R>
std::vector<std::vector<typename R::Elem>> pushforward_matrix(const ThomPresentation<R> &pres)
{
    const std::size_t n = pres.n();
    std::vector<std::vector<typename R::Elem>> M;
    for (std::size_t i = 0; i <= n; ++i)
        M.push_back(pres.top_power(i));
    return M;
}

// t-normalised integer pushforward of a K-theory presentation: column j lists
// the b_i-coefficients of psi_*(b_j) with z-powers stripped
inline std::vector<Col> k_pushforward_columns(const ThomPresentation<LaurentRing> &pres)
{
    const std::size_t n = pres.n();
    auto M = pushforward_matrix(pres);
    std::vector<Col> cols(n + 1, Col(n + 1, 0));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
            const auto &c = M[i][j];
            if (pres.ring().is_zero(c))
                continue;
            cols[j][i] = pres.ring().int_at_z_power(
                c, static_cast<long>(j) - static_cast<long>(i));
        }
    return cols;
}

// E_*(P(chi)) for pairwise-coprime chi in K-theory, as the intersection of the
// pushforward image lattices inside K_*(CP^n_+)
struct HomologyAssembly {
    WeightVector chi;
    std::size_t n = 0;
    // filtration lattice per degree j in the coordinates (b_j, ..., b_1)
    GradedLattice lattice;
    std::vector<Col> basis;  // beta_j in ascending coordinates (b_1, ..., b_n)
    std::vector<Int> pivots; // b_j-coordinate of beta_j
    CoalgebraPresentation<LaurentRing> coalgebra; // on the basis 1, beta_1, ..., beta_n
};

inline HomologyAssembly assemble_homology(const WeightVector &chi_in)
{
    WeightVector chi = normalise(chi_in);
    const std::size_t n = chi.n();
    auto parts = primary_decomposition(chi);

    std::vector<std::vector<Col>> part_cols;
    for (const auto &[p, part] : parts) {
        WeightVector pi = p_primary_normal_form(part.content);
        for (std::size_t i = 0; i + 1 < pi.size(); ++i)
            if (pi[i] != 1)
                throw invalid_input(
                    "homology reassembly needs pairwise coprime weights; the " + p.str() +
                    "-content of '" + chi.str() + "' is '" + part.content.str() + "'");
        ThomPresentation<LaurentRing> pres(pi, fgl_multiplicative());
        part_cols.push_back(k_pushforward_columns(pres));
    }

    HomologyAssembly out;
    out.chi = chi;
    out.n = n;
    out.lattice.theory = Theory::ktheory;
    out.lattice.n = n;

    for (std::size_t j = 1; j <= n; ++j) {
        // image lattice of degree <= 2j in reversed coordinates (b_j, ..., b_1)
        auto part_lattice = [&](const std::vector<Col> &cols) {
            Mat gens;
            for (std::size_t k = 1; k <= j; ++k) {
                Col v(j);
                for (std::size_t i = 1; i <= j; ++i)
                    v[j - i] = cols[k][i];
                gens.push_back(std::move(v));
            }
            return hnf(gens);
        };
        Mat acc;
        if (part_cols.empty()) {
            for (std::size_t c = 0; c < j; ++c) {
                Col v(j, 0);
                v[c] = 1;
                acc.push_back(std::move(v));
            }
        } else {
            acc = part_lattice(part_cols[0]);
            for (std::size_t i = 1; i < part_cols.size(); ++i)
                acc = lattice_intersect(acc, part_lattice(part_cols[i]));
        }
        if (acc.size() != j)
            throw consistency_error("homology lattice is not of full rank in degree " +
                                    std::to_string(j));
        if (acc[0][0] == 0)
            throw consistency_error("homology lattice misses a generator at b_" +
                                    std::to_string(j));
        Col beta(n, 0); // ascending coordinates
        for (std::size_t i = 1; i <= j; ++i)
            beta[i - 1] = acc[0][j - i];
        out.pivots.push_back(acc[0][0]);
        out.basis.push_back(std::move(beta));
        out.lattice.degrees.push_back(std::move(acc));
    }

    // restrict the CP^n diagonal to the new basis and verify closure
    LaurentRing lr;
    CoalgebraPresentation<LaurentRing> co{lr, n, {}};
    co.diagonal.resize(n + 1);
    co.diagonal[0].emplace(std::make_pair(0u, 0u), lr.one());
    for (std::size_t j = 1; j <= n; ++j) {
        co.diagonal[j].emplace(std::make_pair(j, 0u), lr.one());
        co.diagonal[j].emplace(std::make_pair(0u, j), lr.one());
        // inner part: C[k][l] = coefficient of b_k (x) b_l in delta(beta_j)
        std::vector<Col> C(n + 1, Col(n + 1, 0));
        for (std::size_t i = 2; i <= j; ++i)
            for (std::size_t k = 1; k + 1 <= i; ++k)
                C[k][i - k] = out.basis[j - 1][i - 1];
        // solve B X B^T = C over the triangular basis matrix B
        auto solve_in_basis = [&](Col rhs) {
            // rhs indexed by b_1..b_n; coefficients over beta_1..beta_n
            Col coeffs(n, 0);
            for (std::size_t a = n; a >= 1; --a) {
                Int top = rhs[a - 1];
                Int piv = out.pivots[a - 1];
                if (top % piv != 0)
                    throw consistency_error(
                        "diagonal of the assembled homology does not close over the basis");
                Int q = top / piv;
                coeffs[a - 1] = q;
                if (q != 0)
                    for (std::size_t i = 1; i <= a; ++i)
                        rhs[i - 1] -= q * out.basis[a - 1][i - 1];
            }
            return coeffs;
        };
        // first pass: express the columns of C over beta (acting on the k index)
        std::vector<Col> Y(n + 1, Col(n, 0));
        for (std::size_t l = 1; l <= n; ++l) {
            Col rhs(n, 0);
            for (std::size_t k = 1; k <= n; ++k)
                rhs[k - 1] = C[k][l];
            Y[l] = solve_in_basis(std::move(rhs));
        }
        // second pass on the l index
        for (std::size_t a = 1; a <= n; ++a) {
            Col rhs(n, 0);
            for (std::size_t l = 1; l <= n; ++l)
                rhs[l - 1] = Y[l][a - 1];
            Col row = solve_in_basis(std::move(rhs));
            for (std::size_t b = 1; b <= n; ++b) {
                if (row[b - 1] == 0)
                    continue;
                long zshift = static_cast<long>(j) - static_cast<long>(a) -
                              static_cast<long>(b);
                co.diagonal[j].emplace(std::make_pair(a, b),
                                       LaurentRing::z_power(zshift, row[b - 1]));
            }
        }
    }
    out.coalgebra = std::move(co);
    return out;
}

} // namespace wps

#endif
