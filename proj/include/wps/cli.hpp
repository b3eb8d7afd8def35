#ifndef WPS_CLI_HPP
#define WPS_CLI_HPP

#include "wps/verify.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace wps {

using njson = nlohmann::ordered_json;

// integers above 2^53 - 1 in magnitude serialize as decimal strings
inline njson json_int(const Int &v)
{
    static const Int bound = (Int(1) << 53) - 1;
    if (iabs(v) <= bound)
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline njson json_vector(const std::vector<Int> &vs)
{
    njson arr = njson::array();
    for (const Int &v : vs)
        arr.push_back(json_int(v));
    return arr;
}

inline njson json_chi(const WeightVector &chi) { return json_vector(chi.coords()); }

struct Request {
    std::string command;
    std::optional<WeightVector> chi;
    Theory theory = Theory::integral;
    std::optional<int> truncation; // generic generation bound override
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> count;
    std::optional<std::string> only;
    std::optional<WeightVector> omega;
    std::optional<WeightVector> sigma;
    std::string route = "thom"; // homology: "thom" or "assemble"
};

struct CommandResult {
    int status = 0;
    std::string out;
    std::string err;
};

namespace cli_detail {

inline WeightVector require_chi(const Request &req)
{
    if (!req.chi)
        throw invalid_input("--chi is required");
    return *req.chi;
}

template <class F> void with_theory(const Request &req, std::size_t n, F &&f)
{
    switch (req.theory) {
    case Theory::integral:
        f(IntegerRing{});
        return;
    case Theory::ktheory:
        f(LaurentRing{});
        return;
    case Theory::generic: {
        int bound = req.truncation.value_or(static_cast<int>(2 * std::max<std::size_t>(n, 1)));
        f(GenericRing(bound));
        return;
    }
    }
}

// ------------------------------------------------------------------ invariants

inline CommandResult cmd_invariants(const Request &req)
{
    WeightVector chi = require_chi(req);
    auto cls = classify(chi);
    KawasakiInvariants inv(chi);
    WeightVector nu = normalise(chi);
    WeightVector star = star_form(chi);

    CommandResult res;
    if (req.json) {
        njson j;
        j["chi"] = json_chi(chi);
        j["g"] = json_int(cls.g);
        j["l"] = json_int(cls.l);
        j["normalised"] = cls.cls.normalised;
        j["weakly_divisive"] = cls.cls.weakly_divisive;
        j["divisive"] = cls.cls.divisive;
        j["p_primary"] = cls.cls.p_primary ? json_int(*cls.cls.p_primary) : njson(nullptr);
        j["q"] = cls.cls.q ? json_vector(*cls.cls.q) : njson(nullptr);
        njson lj = njson::array(), mj = njson::array();
        for (std::size_t k = 1; k <= chi.n(); ++k) {
            lj.push_back(json_int(inv.lj(k)));
            mj.push_back(json_int(inv.mj(k)));
        }
        j["lj"] = lj;
        j["mj"] = mj;
        j["normalised_form"] = json_chi(nu);
        j["star_form"] = json_chi(star);
        res.out = j.dump(2) + "\n";
        return res;
    }
    std::ostringstream out;
    out << "chi: " << chi.str() << "\n";
    out << "g: " << cls.g.str() << "\n";
    out << "l: " << cls.l.str() << "\n";
    out << "normalised: " << (cls.cls.normalised ? "yes" : "no") << "\n";
    out << "weakly divisive: " << (cls.cls.weakly_divisive ? "yes" : "no") << "\n";
    out << "divisive: " << (cls.cls.divisive ? "yes" : "no") << "\n";
    if (cls.cls.p_primary)
        out << "p-primary: p = " << cls.cls.p_primary->str() << "\n";
    if (cls.cls.q) {
        out << "q: ";
        for (std::size_t i = 0; i < cls.cls.q->size(); ++i)
            out << (i ? "," : "") << (*cls.cls.q)[i].str();
        out << "\n";
    }
    out << "l_j: ";
    for (std::size_t k = 1; k <= chi.n(); ++k)
        out << (k > 1 ? ", " : "") << inv.lj(k).str();
    out << "\nm_j: ";
    for (std::size_t k = 1; k <= chi.n(); ++k)
        out << (k > 1 ? ", " : "") << inv.mj(k).str();
    out << "\nnormalise: " << nu.str() << "\n";
    out << "star form: " << star.str() << "\n";
    res.out = out.str();
    return res;
}

// ------------------------------------------------------------------------ lens

inline CommandResult cmd_lens(const Request &req)
{
    WeightVector chi = require_chi(req);
    if (chi.size() < 2)
        throw invalid_input("lens requires a weight vector of length >= 2");
    auto lens = lens_cohomology(chi);
    WeightVector base = chi.truncated();

    CommandResult res;
    if (req.json) {
        njson j;
        j["chi"] = json_chi(chi);
        j["lens"] = njson{{"k", json_int(chi[chi.n()])}, {"base", json_chi(base)}};
        j["dimension"] = lens.dimension;
        njson groups = njson::array();
        for (std::size_t k = 1; k <= lens.torsion.size(); ++k)
            groups.push_back(njson{{"degree", 2 * k}, {"order", json_int(lens.torsion[k - 1])}});
        j["groups"] = groups;
        j["top"] = njson{{"degree", lens.dimension}, {"group", "Z"}};
        res.out = j.dump(2) + "\n";
        return res;
    }
    std::ostringstream out;
    out << "weighted lens space L(" << chi[chi.n()].str() << "; " << base.str()
        << "), dimension " << lens.dimension << "\n";
    for (std::size_t k = 1; k <= lens.torsion.size(); ++k) {
        out << "H^" << 2 * k << " = ";
        if (lens.torsion[k - 1] == 1)
            out << "0\n";
        else
            out << "Z/" << lens.torsion[k - 1].str() << "\n";
    }
    out << "H^" << lens.dimension << " = Z\n";
    res.out = out.str();
    return res;
}

// ---------------------------------------------------------------- presentation

template <class R>
void presentation_payload(const Request &req, const ThomPresentation<R> &pres,
                          const WeightVector &input, CommandResult &res)
{
    const std::size_t n = pres.n();
    const R &rg = pres.ring();
    if (req.json) {
        njson j;
        j["chi"] = json_chi(input);
        j["presented"] = json_chi(pres.chi());
        j["theory"] = theory_name(R::theory);
        if constexpr (R::theory == Theory::generic)
            j["generic_bound"] = rg.bound();
        njson basis = njson::array();
        for (std::size_t k = 0; k <= n; ++k)
            basis.push_back(njson{{"label", "u" + std::to_string(k)}, {"degree", 2 * k}});
        j["basis"] = basis;
        j["q"] = json_vector(pres.q());
        njson rels = njson::array();
        for (std::size_t i = 1; i <= n; ++i)
            rels.push_back(pres.render_relation(i));
        j["relations"] = rels;
        njson series = njson::array();
        for (std::size_t i = 1; i <= n; ++i)
            series.push_back(njson{{"i", i},
                                   {"q", json_int(pres.q()[i - 1])},
                                   {"series", s1_render(rg, pres.q_series(i))}});
        j["relation_series"] = series;
        njson table = njson::array();
        for (std::size_t a = 0; a <= n; ++a) {
            njson row = njson::array();
            for (std::size_t b = 0; b <= n; ++b) {
                njson cell = njson::array();
                for (std::size_t m = 0; m <= n; ++m)
                    cell.push_back(rg.render(pres.product(a, b)[m]));
                row.push_back(cell);
            }
            table.push_back(row);
        }
        j["table"] = table;
        res.out = j.dump(2) + "\n";
        return;
    }
    std::ostringstream out;
    out << "E*(P(" << pres.chi().str() << ")) over the " << theory_name(R::theory)
        << " theory";
    if constexpr (R::theory == Theory::generic)
        out << " (bound " << rg.bound() << ")";
    out << "\n";
    out << "basis:";
    for (std::size_t k = 0; k <= n; ++k)
        out << " u" << k << " (degree " << 2 * k << ")";
    out << "\nrelations:\n";
    for (std::size_t i = 1; i <= n; ++i)
        out << "  " << pres.render_relation(i) << "\n";
    out << "q-series:\n";
    for (std::size_t i = 1; i <= n; ++i)
        out << "  [q_" << i << "](u) = [" << pres.q()[i - 1].str()
            << "](u) = " << s1_render(rg, pres.q_series(i)) << "\n";
    out << "products:\n";
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a; b <= n; ++b)
            out << "  u" << a << "*u" << b << " = "
                << render_u_expansion(rg, pres.product(a, b)) << "\n";
    res.out += out.str();
}

inline CommandResult cmd_presentation(const Request &req)
{
    WeightVector chi = require_chi(req);
    CommandResult res;
    WeightVector target = chi;
    if (!is_divisive(chi)) {
        target = star_form(chi);
        res.err = "note: '" + chi.str() + "' is not divisive; presenting the star form '" +
                  target.str() + "' (same homotopy type)\n";
    }
    with_theory(req, target.n(), [&](const auto &ring) {
        auto pres = build_presentation(target, ring);
        presentation_payload(req, pres, chi, res);
    });
    return res;
}

// -------------------------------------------------------------------- kawasaki

inline CommandResult cmd_kawasaki(const Request &req)
{
    WeightVector chi = require_chi(req);
    KawasakiRing ring(chi);
    const std::size_t n = ring.n();

    CommandResult res;
    if (!is_normalised(chi))
        res.err = "note: normalising '" + chi.str() + "' to '" + ring.chi().str() + "'\n";
    if (req.json) {
        njson j;
        j["chi"] = json_chi(chi);
        j["normalised_form"] = json_chi(ring.chi());
        njson emb = njson::array();
        for (std::size_t k = 1; k <= n; ++k)
            emb.push_back(njson{{"generator", "v" + std::to_string(k)},
                                {"degree", 2 * k},
                                {"lj", json_int(ring.lj(k))}});
        j["embedding"] = emb;
        njson mj = njson::array();
        for (std::size_t k = 1; k <= n; ++k)
            mj.push_back(json_int(ring.mj(k)));
        j["mj"] = mj;
        njson table = njson::array();
        for (std::size_t a = 0; a <= n; ++a) {
            njson row = njson::array();
            for (std::size_t b = 0; b <= n; ++b)
                row.push_back(json_int(ring.structure_constant(a, b)));
            table.push_back(row);
        }
        j["table"] = table;
        res.out = j.dump(2) + "\n";
        return res;
    }
    std::ostringstream out;
    out << "Kawasaki ring of P(" << ring.chi().str() << ")\n";
    out << "embedding into Z[x]/(x^" << n + 1 << "):";
    for (std::size_t k = 1; k <= n; ++k)
        out << " v" << k << " = " << ring.lj(k).str() << " x"
            << (k > 1 ? "^" + std::to_string(k) : "");
    out << "\nrelations:";
    for (std::size_t k = 2; k <= n; ++k)
        out << " v1^" << k << " = " << ring.mj(k).str() << " v" << k << ";";
    out << "\nproducts:\n";
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a; a + b <= n; ++b)
            out << "  v" << a << "*v" << b << " = " << ring.structure_constant(a, b).str()
                << " v" << a + b << "\n";
    res.out = out.str();
    return res;
}

// ------------------------------------------------------------------ reassemble

inline CommandResult cmd_reassemble(const Request &req)
{
    WeightVector chi = require_chi(req);
    if (req.theory == Theory::generic)
        throw invalid_input("reassemble supports --theory integral or ktheory");
    auto ring = assemble(chi, req.theory);
    const std::size_t n = ring.n;
    bool integral = req.theory == Theory::integral;

    auto gen_name = [](std::size_t j, std::size_t k) {
        std::string base = "y" + std::to_string(j);
        return k == 0 ? base : base + "." + std::to_string(k + 1);
    };

    CommandResult res;
    if (req.json) {
        njson j;
        j["chi"] = json_chi(ring.chi);
        j["theory"] = theory_name(req.theory);
        njson gens = njson::array();
        for (std::size_t d = 1; d <= n; ++d)
            gens.push_back(njson{{"degree", 2 * d}, {"vector", json_vector(ring.generators[d - 1])}});
        j["generators"] = gens;
        njson rels = njson::array();
        for (std::size_t d = 1; d <= n; ++d) {
            njson rhs = njson::array();
            const auto &coeffs = ring.relations[d - 1];
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                if (coeffs[k] != 0)
                    rhs.push_back(njson{{"coeff", json_int(coeffs[k])}, {"gen", gen_name(d, k)}});
            rels.push_back(njson{{"lhs", "y1^" + std::to_string(d)}, {"rhs", rhs}});
        }
        j["relations"] = rels;
        res.out = j.dump(2) + "\n";
        return res;
    }
    // t = z*x is the degree-0 normalisation; reinstate the z-powers of a
    // degree-2j vector for display in the x-coordinates
    auto render_zx = [](const Col &v, std::size_t j) {
        std::vector<std::pair<std::string, std::string>> terms;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            std::size_t e = j + i;
            LaurentRing::Elem c = LaurentRing::z_power(static_cast<long>(e - j), v[i]);
            terms.emplace_back(LaurentRing{}.render(c),
                               e == 1 ? "x" : "x^" + std::to_string(e));
        }
        return join_terms(terms);
    };
    std::ostringstream out;
    out << "assembled E*(P(" << ring.chi.str() << ")), " << theory_name(req.theory) << "\n";
    for (std::size_t d = 1; d <= n; ++d) {
        out << "degree " << 2 * d << ": y" << d << " = "
            << (integral ? render_poly(ring.generators[d - 1], d, "x")
                         : render_poly(ring.generators[d - 1], d, "t") + " = " +
                               render_zx(ring.generators[d - 1], d));
        const Mat &basis = ring.lattice.at_degree(d);
        if (basis.size() > 1) {
            out << "  (lattice basis:";
            for (std::size_t k = 0; k < basis.size(); ++k)
                out << (k ? ", " : " ") << render_poly(basis[k], d, integral ? "x" : "t");
            out << ")";
        }
        out << "\n";
    }
    out << "relations:\n";
    for (std::size_t d = 1; d <= n; ++d) {
        out << "  y1^" << d << " = ";
        std::vector<std::pair<std::string, std::string>> terms;
        const auto &coeffs = ring.relations[d - 1];
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0)
                terms.emplace_back(coeffs[k].str(), gen_name(d, k));
        out << join_terms(terms) << "\n";
    }
    res.out = out.str();
    return res;
}

// -------------------------------------------------------------------- homology

template <class R>
void coalgebra_payload(const Request &req, const CoalgebraPresentation<R> &co,
                       const WeightVector &input, const WeightVector &presented,
                       CommandResult &res)
{
    if (req.json) {
        njson j;
        j["chi"] = json_chi(input);
        j["presented"] = json_chi(presented);
        j["theory"] = theory_name(R::theory);
        j["route"] = "thom";
        njson basis = njson::array();
        for (std::size_t k = 0; k <= co.n; ++k)
            basis.push_back(njson{{"degree", 2 * k}, {"label", "b" + std::to_string(k)}});
        j["basis"] = basis;
        njson diag = njson::array();
        for (std::size_t k = 0; k <= co.n; ++k) {
            njson terms = njson::array();
            for (const auto &[kl, c] : co.diagonal[k])
                terms.push_back(njson{{"k", kl.first},
                                      {"l", kl.second},
                                      {"coeff", co.ring.render(c)}});
            diag.push_back(njson{{"j", k}, {"terms", terms}});
        }
        j["diagonal"] = diag;
        res.out = j.dump(2) + "\n";
        return;
    }
    std::ostringstream out;
    out << "homology coalgebra of P(" << presented.str() << ") over the "
        << theory_name(R::theory) << " theory\n";
    out << "basis:";
    for (std::size_t k = 0; k <= co.n; ++k)
        out << " b" << k << " (degree " << 2 * k << ")";
    out << "\ndiagonal:\n";
    for (std::size_t k = 0; k <= co.n; ++k)
        out << "  d(b" << k << ") = " << render_diagonal(co, k, "b") << "\n";
    res.out += out.str();
}

inline CommandResult cmd_homology(const Request &req)
{
    WeightVector chi = require_chi(req);
    CommandResult res;
    if (req.route == "assemble") {
        if (req.theory != Theory::ktheory)
            throw invalid_input("homology --route assemble supports --theory ktheory");
        auto h = assemble_homology(chi);
        if (req.json) {
            njson j;
            j["chi"] = json_chi(h.chi);
            j["theory"] = "ktheory";
            j["route"] = "assemble";
            njson basis = njson::array();
            basis.push_back(njson{{"degree", 0}, {"label", "b0"}});
            for (std::size_t d = 1; d <= h.n; ++d)
                basis.push_back(njson{{"degree", 2 * d}, {"label", "b" + std::to_string(d)}});
            j["basis"] = basis;
            njson vecs = njson::array();
            for (std::size_t d = 1; d <= h.n; ++d)
                vecs.push_back(njson{{"degree", 2 * d}, {"vector", json_vector(h.basis[d - 1])}});
            j["vectors"] = vecs;
            njson diag = njson::array();
            for (std::size_t k = 0; k <= h.n; ++k) {
                njson terms = njson::array();
                for (const auto &[kl, c] : h.coalgebra.diagonal[k])
                    terms.push_back(njson{{"k", kl.first},
                                          {"l", kl.second},
                                          {"coeff", h.coalgebra.ring.render(c)}});
                diag.push_back(njson{{"j", k}, {"terms", terms}});
            }
            j["diagonal"] = diag;
            res.out = j.dump(2) + "\n";
            return res;
        }
        auto render_b = [&](const Col &v) {
            std::vector<std::pair<std::string, std::string>> terms;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0)
                    terms.emplace_back(v[i].str(), "b" + std::to_string(i + 1));
            return join_terms(terms);
        };
        std::ostringstream out;
        out << "assembled K_*(P(" << h.chi.str() << ")) inside K_*(CP^" << h.n << ")\n";
        out << "basis: 1";
        for (std::size_t d = 1; d <= h.n; ++d)
            out << ", " << render_b(h.basis[d - 1]);
        out << "\n";
        out << "diagonal (b" << "j denoting the degree-2j basis vector):\n";
        for (std::size_t k = 0; k <= h.n; ++k)
            out << "  d(b" << k << ") = " << render_diagonal(h.coalgebra, k, "b") << "\n";
        res.out = out.str();
        return res;
    }
    if (req.route != "thom")
        throw invalid_input("homology --route must be 'thom' or 'assemble'");
    WeightVector target = chi;
    if (!is_divisive(chi)) {
        target = star_form(chi);
        res.err = "note: '" + chi.str() + "' is not divisive; dualizing the star form '" +
                  target.str() + "' (same homotopy type)\n";
    }
    with_theory(req, target.n(), [&](const auto &ring) {
        auto co = dualize(build_presentation(target, ring));
        coalgebra_payload(req, co, chi, target, res);
    });
    return res;
}

// ------------------------------------------------------------------------ maps

inline njson json_descriptor(const MapDescriptor &d)
{
    return njson{{"source", json_chi(d.source)},
                 {"target", json_chi(d.target)},
                 {"s", json_int(d.s)},
                 {"exponents", json_vector(d.exponents)},
                 {"group_order", json_int(d.group_order)}};
}

inline std::string text_descriptor(const MapDescriptor &d)
{
    std::string s = "P(" + d.source.str() + ") -> P(" + d.target.str() + "): [";
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
        if (i)
            s += ", ";
        s += "z" + std::to_string(i) + "^" + d.exponents[i].str();
    }
    s += "]  (s = " + d.s.str() + ", group order " + d.group_order.str() + ")";
    return s;
}

inline CommandResult cmd_maps(const Request &req)
{
    WeightVector chi = require_chi(req);
    CommandResult res;
    if (req.omega && req.sigma) {
        auto comp = compose(*req.omega, *req.sigma, chi);
        if (req.json) {
            njson j;
            j["omega"] = json_chi(*req.omega);
            j["sigma"] = json_chi(*req.sigma);
            j["chi"] = json_chi(chi);
            j["composite_exponents"] = json_vector(comp.composite_exponents);
            j["direct_exponents"] = json_vector(comp.direct_exponents);
            j["s_prime"] = json_int(comp.s_prime);
            j["s_doubleprime"] = json_int(comp.s_doubleprime);
            res.out = j.dump(2) + "\n";
            return res;
        }
        std::ostringstream out;
        out << "e(chi/sigma) o e(sigma/omega) for omega = " << req.omega->str()
            << ", sigma = " << req.sigma->str() << ", chi = " << chi.str() << "\n";
        out << "composite exponents: ";
        for (std::size_t i = 0; i < comp.composite_exponents.size(); ++i)
            out << (i ? ", " : "") << comp.composite_exponents[i].str();
        out << "\ndirect exponents:    ";
        for (std::size_t i = 0; i < comp.direct_exponents.size(); ++i)
            out << (i ? ", " : "") << comp.direct_exponents[i].str();
        out << "\ns' = " << comp.s_prime.str() << " (composite = e(s') o direct)\n";
        out << "s'' = " << comp.s_doubleprime.str() << " (omega/sigma round trip)\n";
        res.out = out.str();
        return res;
    }
    if (req.omega) {
        auto d = quotient(chi, *req.omega);
        if (req.json) {
            njson j;
            j["chi"] = json_chi(chi);
            j["omega"] = json_chi(*req.omega);
            j["map"] = json_descriptor(d);
            res.out = j.dump(2) + "\n";
            return res;
        }
        res.out = "e(chi/omega): " + text_descriptor(d) + "\n";
        return res;
    }

    auto parts = primary_decomposition(chi);
    if (req.json) {
        njson j;
        j["chi"] = json_chi(chi);
        njson dec = njson::array();
        for (const auto &[p, part] : parts) {
            njson e;
            e["p"] = json_int(p);
            e["content"] = json_chi(part.content);
            e["alpha"] = json_chi(part.alpha);
            e["extraction"] = json_descriptor(quotient(part.content, chi));
            e["insertion"] = json_descriptor(quotient(chi, part.content));
            e["l_alpha"] = json_int(part.alpha.lcm());
            dec.push_back(e);
        }
        j["decomposition"] = dec;
        j["star_form"] = json_chi(star_form(chi));
        res.out = j.dump(2) + "\n";
        return res;
    }
    std::ostringstream out;
    out << "primary decomposition of " << chi.str() << "\n";
    for (const auto &[p, part] : parts) {
        out << "p = " << p.str() << ": content " << part.content.str() << ", alpha "
            << part.alpha.str() << ", l(alpha) = " << part.alpha.lcm().str() << "\n";
        out << "  extraction " << text_descriptor(quotient(part.content, chi)) << "\n";
        out << "  insertion  " << text_descriptor(quotient(chi, part.content)) << "\n";
    }
    out << "star form: " << star_form(chi).str() << "\n";
    res.out = out.str();
    return res;
}

// ---------------------------------------------------------------------- verify

inline CommandResult cmd_verify(const Request &req)
{
    VerifyOptions opt;
    if (req.seed)
        opt.seed = *req.seed;
    if (req.count)
        opt.count = *req.count;
    opt.only = req.only;
    opt.chi = req.chi;
    auto results = run_verify(opt);

    std::size_t failures = 0, flags = 0;
    for (const auto &r : results) {
        if (!r.passed) {
            if (r.flag_only)
                ++flags;
            else
                ++failures;
        }
    }

    CommandResult res;
    if (req.json) {
        njson j;
        j["seed"] = opt.seed;
        j["count"] = opt.count;
        if (opt.chi)
            j["chi"] = json_chi(*opt.chi);
        njson arr = njson::array();
        for (const auto &r : results) {
            njson e;
            e["name"] = r.name;
            e["status"] = r.passed ? "pass" : (r.flag_only ? "flag" : "fail");
            e["checked"] = r.checked;
            if (!r.passed) {
                e["counterexample"] = r.counterexample;
                e["detail"] = r.detail;
            }
            arr.push_back(e);
        }
        j["results"] = arr;
        j["failures"] = failures;
        res.out = j.dump(2) + "\n";
    } else {
        std::ostringstream out;
        for (const auto &r : results) {
            if (r.passed)
                out << "PASS " << r.name << " (" << r.checked << " checked)\n";
            else if (r.flag_only)
                out << "FLAG " << r.name << ": " << r.detail
                    << (r.counterexample.empty() ? "" : " at chi = " + r.counterexample)
                    << "\n";
            else
                out << "FAIL " << r.name << ": " << r.detail
                    << (r.counterexample.empty() ? "" : " at chi = " + r.counterexample)
                    << "\n";
        }
        out << results.size() - failures - flags << " passed, " << failures << " failed";
        if (flags)
            out << ", " << flags << " flagged";
        out << "\n";
        res.out = out.str();
    }
    res.status = failures ? 2 : 0;
    return res;
}

} // namespace cli_detail

inline CommandResult dispatch(const Request &req)
{
    try {
        if (req.command == "invariants")
            return cli_detail::cmd_invariants(req);
        if (req.command == "lens")
            return cli_detail::cmd_lens(req);
        if (req.command == "presentation")
            return cli_detail::cmd_presentation(req);
        if (req.command == "kawasaki")
            return cli_detail::cmd_kawasaki(req);
        if (req.command == "reassemble")
            return cli_detail::cmd_reassemble(req);
        if (req.command == "homology")
            return cli_detail::cmd_homology(req);
        if (req.command == "maps")
            return cli_detail::cmd_maps(req);
        if (req.command == "verify")
            return cli_detail::cmd_verify(req);
        throw invalid_input("unknown command '" + req.command + "'");
    } catch (const invalid_input &e) {
        return CommandResult{1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const consistency_error &e) {
        return CommandResult{2, "", std::string("internal consistency failure: ") + e.what() + "\n"};
    }
}

} // namespace wps

#endif
