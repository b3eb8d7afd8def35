#ifndef WPS_RENDER_HPP
#define WPS_RENDER_HPP

#include "wps/homology.hpp"

#include <string>
#include <vector>

namespace wps {

// join (coefficient, monomial) terms into "2 u3 + 2 aE u4" with sign folding
inline std::string join_terms(const std::vector<std::pair<std::string, std::string>> &terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (const auto &[coeff_in, mono] : terms) {
        std::string cs = coeff_in;
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg)
            cs = cs.substr(1);
        bool composite =
            cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        std::string term;
        if (mono.empty())
            term = composite ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = mono;
        else if (composite)
            term = "(" + cs + ") " + mono;
        else
            term = cs + " " + mono;
        if (out.empty())
            out += (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

template <class R>
std::string render_u_expansion(const R &ring, const std::vector<typename R::Elem> &coeffs)
{
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (ring.is_zero(coeffs[m]))
            continue;
        std::string mono = m == 0 ? "1" : "u" + std::to_string(m);
        terms.emplace_back(ring.render(coeffs[m]), mono);
    }
    return join_terms(terms);
}

// integer polynomial sum c_i var^i, exponents start..start+len-1
inline std::string render_poly(const Col &coeffs, std::size_t start, const std::string &var)
{
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        std::size_t e = start + i;
        std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        terms.emplace_back(coeffs[i].str(), mono);
    }
    return join_terms(terms);
}

template <class R>
std::string render_diagonal(const CoalgebraPresentation<R> &co, std::size_t j,
                            const std::string &label)
{
    std::vector<std::pair<std::string, std::string>> terms;
    for (const auto &[kl, c] : co.diagonal[j]) {
        auto [k, l] = kl;
        std::string left = k == 0 ? "1" : label + std::to_string(k);
        std::string right = l == 0 ? "1" : label + std::to_string(l);
        terms.emplace_back(co.ring.render(c), left + " (x) " + right);
    }
    return join_terms(terms);
}

} // namespace wps

#endif
