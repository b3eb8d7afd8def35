#ifndef WPS_LATTICE_HPP
#define WPS_LATTICE_HPP

#include "wps/bigint.hpp"
#include "wps/errors.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace wps {

// column vectors over Z; a lattice is the span of the columns
using Col = std::vector<Int>;
using Mat = std::vector<Col>; // list of columns, all of equal length

inline std::size_t mat_dim(const Mat &m) { return m.empty() ? 0 : m[0].size(); }

inline bool col_is_zero(const Col &c)
{
    for (const Int &v : c)
        if (v != 0)
            return false;
    return true;
}

inline Col col_sub_scaled(const Col &a, const Col &b, const Int &q)
{
    Col r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - q * b[i];
    return r;
}

namespace detail {

// column elimination into echelon form with strictly increasing pivot rows;
// `transform`, when given, receives the same column operations
inline void echelonize(Mat &cols, Mat *transform)
{
    if (cols.empty())
        return;
    const std::size_t d = mat_dim(cols);
    std::size_t placed = 0;
    for (std::size_t row = 0; row < d && placed < cols.size(); ++row) {
        // Euclid across all columns with a nonzero entry in this row
        while (true) {
            std::size_t nonzero = cols.size();
            int count = 0;
            for (std::size_t c = placed; c < cols.size(); ++c)
                if (cols[c][row] != 0) {
                    ++count;
                    if (nonzero == cols.size() || iabs(cols[c][row]) > iabs(cols[nonzero][row]))
                        nonzero = c;
                }
            if (count <= 1)
                break;
            // reduce the largest entry by the smallest nonzero one
            std::size_t smallest = cols.size();
            for (std::size_t c = placed; c < cols.size(); ++c)
                if (c != nonzero && cols[c][row] != 0)
                    if (smallest == cols.size() ||
                        iabs(cols[c][row]) < iabs(cols[smallest][row]))
                        smallest = c;
            Int q = cols[nonzero][row] / cols[smallest][row];
            cols[nonzero] = col_sub_scaled(cols[nonzero], cols[smallest], q);
            if (transform)
                (*transform)[nonzero] =
                    col_sub_scaled((*transform)[nonzero], (*transform)[smallest], q);
        }
        for (std::size_t c = placed; c < cols.size(); ++c)
            if (cols[c][row] != 0) {
                std::swap(cols[placed], cols[c]);
                if (transform)
                    std::swap((*transform)[placed], (*transform)[c]);
                if (cols[placed][row] < 0) {
                    for (Int &v : cols[placed])
                        v = -v;
                    if (transform)
                        for (Int &v : (*transform)[placed])
                            v = -v;
                }
                ++placed;
                break;
            }
    }
}

} // namespace detail

// canonical column-style Hermite normal form of the lattice spanned by `gens`:
// pivot rows strictly increase, pivots are positive, and entries of earlier
// columns in a pivot row are reduced into [0, pivot)
inline Mat hnf(Mat gens)
{
    detail::echelonize(gens, nullptr);
    while (!gens.empty() && col_is_zero(gens.back()))
        gens.pop_back();
    // pivot rows
    std::vector<std::size_t> pivot(gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
        std::size_t r = 0;
        while (gens[c][r] == 0)
            ++r;
        pivot[c] = r;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < i; ++k) {
            // reduce entry of column k in pivot row of column i
            Int v = gens[k][pivot[i]];
            Int d = gens[i][pivot[i]];
            Int q = v / d;
            if (v - q * d < 0)
                q -= 1; // floor division
            if (q != 0)
                gens[k] = col_sub_scaled(gens[k], gens[i], q);
        }
    return gens;
}

inline bool lattice_equal(const Mat &a, const Mat &b) { return hnf(a) == hnf(b); }

// integer kernel of the matrix with the given columns
inline Mat kernel(const Mat &cols)
{
    if (cols.empty())
        return {};
    Mat work = cols;
    Mat transform(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        transform[c].assign(cols.size(), 0);
        transform[c][c] = 1;
    }
    detail::echelonize(work, &transform);
    Mat ker;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (col_is_zero(work[c]))
            ker.push_back(transform[c]);
    return ker;
}

// intersection of the lattices spanned by a and b inside Z^d
inline Mat lattice_intersect(const Mat &a, const Mat &b)
{
    if (a.empty() || b.empty())
        return {};
    if (mat_dim(a) != mat_dim(b))
        throw invalid_input("lattice intersection requires equal ambient dimension");
    Mat stacked = a;
    for (const Col &c : b) {
        Col neg(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            neg[i] = -c[i];
        stacked.push_back(neg);
    }
    Mat ker = kernel(stacked);
    Mat gens;
    for (const Col &k : ker) {
        Col v(mat_dim(a), 0);
        for (std::size_t c = 0; c < a.size(); ++c)
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += k[c] * a[c][i];
        gens.push_back(std::move(v));
    }
    return hnf(gens);
}

// coefficients of v in an HNF basis, or nullopt when v is outside the lattice
inline std::optional<std::vector<Int>> solve_in_hnf(const Mat &basis, const Col &v)
{
    std::vector<Int> coeff(basis.size(), 0);
    Col rest = v;
    std::size_t c = 0;
    for (std::size_t row = 0; row < rest.size(); ++row) {
        std::size_t prow = 0;
        if (c < basis.size()) {
            while (basis[c][prow] == 0)
                ++prow;
        }
        if (c < basis.size() && prow == row) {
            Int d = basis[c][row];
            if (rest[row] % d != 0)
                return std::nullopt;
            Int q = rest[row] / d;
            coeff[c] = q;
            if (q != 0)
                rest = col_sub_scaled(rest, basis[c], q);
            ++c;
        } else if (rest[row] != 0) {
            return std::nullopt;
        }
    }
    for (const Int &x : rest)
        if (x != 0)
            return std::nullopt;
    return coeff;
}

inline bool lattice_member(const Mat &hnf_basis, const Col &v)
{
    return solve_in_hnf(hnf_basis, v).has_value();
}

// index of a full-rank sublattice of Z^d given by an HNF basis
inline Int hnf_index(const Mat &basis)
{
    Int idx = 1;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        std::size_t r = 0;
        while (basis[c][r] == 0)
            ++r;
        idx *= basis[c][r];
    }
    return idx;
}

// Smith normal form invariant factors (nonzero diagonal entries, each
// dividing the next) of the matrix with the given columns
inline std::vector<Int> smith_invariant_factors(Mat cols)
{
    std::vector<Int> factors;
    if (cols.empty() || mat_dim(cols) == 0)
        return factors;
    std::size_t rows = mat_dim(cols);
    std::size_t t = 0;
    while (t < rows && t < cols.size()) {
        // find a nonzero pivot at or after (t, t)
        std::size_t pc = cols.size(), pr = rows;
        for (std::size_t c = t; c < cols.size() && pc == cols.size(); ++c)
            for (std::size_t r = t; r < rows; ++r)
                if (cols[c][r] != 0) {
                    pc = c;
                    pr = r;
                    break;
                }
        if (pc == cols.size())
            break;
        std::swap(cols[t], cols[pc]);
        for (Col &c : cols)
            std::swap(c[t], c[pr]);
        bool again = true;
        while (again) {
            again = false;
            // clear the pivot row by column operations
            for (std::size_t c = t + 1; c < cols.size(); ++c)
                while (cols[c][t] != 0) {
                    Int q = cols[c][t] / cols[t][t];
                    cols[c] = col_sub_scaled(cols[c], cols[t], q);
                    if (cols[c][t] != 0) {
                        std::swap(cols[c], cols[t]);
                        again = true;
                    }
                }
            // clear the pivot column by row operations
            for (std::size_t r = t + 1; r < rows; ++r)
                while (cols[t][r] != 0) {
                    Int q = cols[t][r] / cols[t][t];
                    for (std::size_t c = t; c < cols.size(); ++c)
                        cols[c][r] -= q * cols[c][t];
                    if (cols[t][r] != 0) {
                        for (std::size_t c = t; c < cols.size(); ++c)
                            std::swap(cols[c][r], cols[c][t]);
                        again = true;
                    }
                }
        }
        ++t;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i < t; ++i)
        if (cols[i][i] < 0)
            cols[i][i] = -cols[i][i];
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            Int a = cols[i][i], b = cols[i + 1][i + 1];
            if (b % a != 0) {
                Int g = igcd(a, b);
                cols[i + 1][i + 1] = a / g * b;
                cols[i][i] = g;
                changed = true;
            }
        }
    }
    for (std::size_t i = 0; i < t; ++i)
        factors.push_back(cols[i][i]);
    return factors;
}

} // namespace wps

#endif
