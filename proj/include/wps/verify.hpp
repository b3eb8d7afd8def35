#ifndef WPS_VERIFY_HPP
#define WPS_VERIFY_HPP

#include "wps/homology.hpp"
#include "wps/render.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wps {

struct VerifyOptions {
    std::uint64_t seed = 8103; // fixed default keeps CI reproducible
    std::size_t count = 1000;
    std::optional<std::string> only;
    std::optional<WeightVector> chi;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    bool flag_only = false; // reported but not counted as a failure
    std::size_t checked = 0;
    std::string detail;
    std::string counterexample;
};

namespace verify_detail {

inline long draw(std::mt19937_64 &rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline WeightVector random_chi(std::mt19937_64 &rng, long max_n, long max_coord)
{
    long n = draw(rng, 1, max_n);
    std::vector<Int> cs;
    for (long i = 0; i <= n; ++i)
        cs.emplace_back(draw(rng, 1, max_coord));
    return WeightVector(std::move(cs));
}

inline WeightVector random_divisive(std::mt19937_64 &rng, long max_n, long cap)
{
    long n = draw(rng, 1, max_n);
    std::vector<Int> cs{1};
    for (long i = 1; i <= n; ++i) {
        Int prev = cs.back();
        std::vector<long> options;
        for (long q = 1; prev * q <= cap; ++q)
            options.push_back(q);
        cs.push_back(prev * options[static_cast<std::size_t>(
                         draw(rng, 0, static_cast<long>(options.size()) - 1))]);
    }
    return WeightVector(std::move(cs));
}

inline Mat random_lattice(std::mt19937_64 &rng, std::size_t d, long cap)
{
    Mat cols;
    for (std::size_t j = 0; j < d; ++j) {
        Col v(d, 0);
        v[j] = draw(rng, 1, cap);
        for (std::size_t r = j + 1; r < d; ++r)
            v[r] = draw(rng, -cap, cap);
        cols.push_back(std::move(v));
    }
    return cols;
}

// all sampling happens up front so that --only does not change the draws
struct Context {
    std::vector<WeightVector> samples;     // n <= 5, coords <= 100
    std::vector<WeightVector> big_samples; // n <= 6, coords <= 200
    std::vector<WeightVector> divisive;    // n <= 4, coords <= 64
    std::vector<std::array<Mat, 3>> lattice_triples;
    bool focused = false;

    Context(const VerifyOptions &opt)
    {
        std::mt19937_64 rng(opt.seed);
        if (opt.chi) {
            focused = true;
            samples.push_back(*opt.chi);
            big_samples.push_back(*opt.chi);
            WeightVector st = star_form(*opt.chi);
            if (st.n() <= 6)
                divisive.push_back(st);
        } else {
            for (std::size_t i = 0; i < opt.count; ++i)
                samples.push_back(random_chi(rng, 5, 100));
            for (std::size_t i = 0; i < opt.count / 2; ++i)
                big_samples.push_back(random_chi(rng, 6, 200));
            divisive.push_back(WeightVector{1, 1, 2, 4});
            divisive.push_back(WeightVector{1, 1, 1, 3});
            std::size_t ndiv = std::max<std::size_t>(8, std::min<std::size_t>(40, opt.count / 25));
            for (std::size_t i = 0; i < ndiv; ++i)
                divisive.push_back(random_divisive(rng, 4, 64));
        }
        for (int i = 0; i < 25; ++i) {
            std::size_t d = static_cast<std::size_t>(draw(rng, 1, 4));
            lattice_triples.push_back({random_lattice(rng, d, 5), random_lattice(rng, d, 5),
                                       random_lattice(rng, d, 5)});
        }
    }
};

using PropertyFn = std::function<void(const Context &, PropertyResult &)>;

inline void fail(PropertyResult &res, const std::string &counterexample,
                 const std::string &detail)
{
    res.passed = false;
    if (res.counterexample.empty())
        res.counterexample = counterexample;
    if (res.detail.empty())
        res.detail = detail;
}

template <class F>
void for_each_chi(const std::vector<WeightVector> &set, PropertyResult &res, F &&body)
{
    for (const WeightVector &chi : set) {
        if (!res.passed)
            return;
        try {
            body(chi);
            ++res.checked;
        } catch (const std::exception &e) {
            fail(res, chi.str(), e.what());
        }
    }
}

template <class R> void check_presentation_duality(const ThomPresentation<R> &pres)
{
    auto co = dualize(pres); // throws on counit/cocommutativity/degree failure
    const auto &rg = pres.ring();
    for (std::size_t a = 0; a <= pres.n(); ++a)
        for (std::size_t b = 0; b <= pres.n(); ++b)
            for (std::size_t j = 0; j <= pres.n(); ++j)
                if (!rg.equal(pres.product(a, b)[j], co.coefficient(j, a, b)))
                    throw consistency_error("pairing identity fails at u" + std::to_string(a) +
                                            " u" + std::to_string(b) + ", b" +
                                            std::to_string(j));
}

template <class R> void check_table_associativity(const ThomPresentation<R> &pres)
{
    const auto &rg = pres.ring();
    const std::size_t n = pres.n();
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t k = 0; k <= n; ++k) {
                std::vector<typename R::Elem> ei(n + 1, rg.zero()), ek(n + 1, rg.zero());
                ei[i] = rg.one();
                ek[k] = rg.one();
                auto lhs = pres.multiply(pres.product(i, j), ek);
                auto rhs = pres.multiply(ei, pres.product(j, k));
                for (std::size_t m = 0; m <= n; ++m)
                    if (!rg.equal(lhs[m], rhs[m]))
                        throw consistency_error("(u" + std::to_string(i) + " u" +
                                                std::to_string(j) + ") u" + std::to_string(k) +
                                                " != u" + std::to_string(i) + " (u" +
                                                std::to_string(j) + " u" + std::to_string(k) +
                                                ")");
            }
}

template <class R> void check_coassociativity(const CoalgebraPresentation<R> &co)
{
    const auto &rg = co.ring;
    for (std::size_t j = 0; j <= co.n; ++j)
        for (std::size_t a = 0; a <= co.n; ++a)
            for (std::size_t b = 0; b <= co.n; ++b)
                for (std::size_t c = 0; c <= co.n; ++c) {
                    typename R::Elem lhs = rg.zero(), rhs = rg.zero();
                    for (std::size_t k = 0; k <= co.n; ++k) {
                        lhs = rg.add(lhs,
                                     rg.mul(co.coefficient(j, k, c), co.coefficient(k, a, b)));
                        rhs = rg.add(rhs,
                                     rg.mul(co.coefficient(j, a, k), co.coefficient(k, b, c)));
                    }
                    if (!rg.equal(lhs, rhs))
                        throw consistency_error("coassociativity fails");
                }
}

inline const std::vector<std::pair<std::string, PropertyFn>> &registry()
{
    static const std::vector<std::pair<std::string, PropertyFn>> props = {
        {"mj-multiplicativity",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 KawasakiInvariants inv(chi);
                 auto parts = primary_decomposition(chi);
                 for (std::size_t j = 1; j <= chi.n(); ++j) {
                     Int lprod = 1, mprod = 1;
                     for (const auto &[p, part] : parts) {
                         KawasakiInvariants pinv(part.content);
                         lprod *= pinv.lj(j);
                         mprod *= pinv.mj(j);
                     }
                     if (inv.lj(j) != lprod)
                         throw consistency_error("l_" + std::to_string(j) +
                                                 " is not multiplicative");
                     if (inv.mj(j) != mprod)
                         throw consistency_error("m_" + std::to_string(j) +
                                                 " is not multiplicative");
                 }
             });
         }},
        {"lj-divisibility",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.big_samples, res, [&](const WeightVector &chi) {
                 KawasakiInvariants inv(chi);
                 for (std::size_t i = 1; i <= chi.n(); ++i)
                     for (std::size_t j = i; i + j <= chi.n(); ++j)
                         if (!divides(inv.lj(i + j), inv.lj(i) * inv.lj(j)))
                             throw consistency_error("l_" + std::to_string(i) + " l_" +
                                                     std::to_string(j) +
                                                     " is not divisible by l_" +
                                                     std::to_string(i + j));
             });
         }},
        {"kawasaki-identities",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 KawasakiInvariants inv(chi);
                 std::size_t n = chi.n();
                 if (inv.lj(1) != chi.lcm() || inv.mj(1) != 1)
                     throw consistency_error("l_1 != l or m_1 != 1");
                 if (inv.lj(n) != divexact(chi.product(), chi.gcd()))
                     throw consistency_error("l_n != prod/g");
                 Int want = divexact(chi.gcd() * ipow(chi.lcm(), static_cast<unsigned long>(n)),
                                     chi.product());
                 if (inv.mj(n) != want)
                     throw consistency_error("m_n != g l^n / prod");
             });
         }},
        {"normalise-idempotent",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 WeightVector nu = normalise(chi);
                 if (!is_normalised(nu))
                     throw consistency_error("normalise output fails the subset-gcd criterion");
                 if (normalise(nu) != nu)
                     throw consistency_error("normalise is not idempotent");
             });
         }},
        {"star-form",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 WeightVector st = star_form(chi);
                 if (!is_divisive(st))
                     throw consistency_error("star_form output is not divisive");
                 auto a = primary_decomposition(normalise(chi));
                 auto b = primary_decomposition(st);
                 if (a.size() != b.size())
                     throw consistency_error("star_form changes the prime support");
                 for (auto &[p, part] : a) {
                     std::vector<Int> lhs = part.content.coords();
                     std::vector<Int> rhs = b.at(p).content.coords();
                     std::sort(lhs.begin(), lhs.end());
                     std::sort(rhs.begin(), rhs.end());
                     if (lhs != rhs)
                         throw consistency_error("star_form changes the p-content multiset");
                 }
             });
         }},
        {"maps-calculus",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 WeightVector one = WeightVector::ones(chi.size());
                 if (quotient(chi, one).exponents != chi.coords())
                     throw consistency_error("phi = e(chi) has the wrong exponents");
                 auto psi = quotient(one, chi);
                 Int l = chi.lcm();
                 for (std::size_t i = 0; i < chi.size(); ++i)
                     if (psi.exponents[i] != divexact(l, chi[i]))
                         throw consistency_error("psi = e(1/chi) has the wrong exponents");
                 // extraction-then-insertion factors through the power map e(l(alpha))
                 for (const auto &[p, part] : primary_decomposition(chi)) {
                     auto comp = compose(chi, part.content, chi);
                     if (comp.s_prime != part.alpha.lcm())
                         throw consistency_error("round trip at p = " + p.str() +
                                                 " is not e(l(alpha))");
                 }
             });
         }},
        {"lens-torsion",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 if (chi.size() < 2)
                     return;
                 auto lens = lens_cohomology(chi); // throws when s_k is not integral
                 KawasakiInvariants full(chi), trunc(chi.truncated());
                 for (std::size_t k = 1; k + 1 <= chi.n(); ++k)
                     if (lens.torsion[k - 1] * trunc.lj(k) != full.lj(k))
                         throw consistency_error("s_k l'_k != l_k");
             });
         }},
        {"r-series-homomorphism",
         [](const Context &, PropertyResult &res) {
             auto add = fgl_additive();
             auto mult = fgl_multiplicative();
             const long prec = 8;
             for (long a = 0; a <= 8; ++a)
                 for (long b = 0; b <= 8; ++b) {
                     ++res.checked;
                     auto la = r_series(add, a + b, prec);
                     auto ra = s2_eval(add.ring, add.F, r_series(add, a, prec),
                                       r_series(add, b, prec), prec);
                     auto lm = r_series(mult, a + b, prec);
                     auto rm = s2_eval(mult.ring, mult.F, r_series(mult, a, prec),
                                       r_series(mult, b, prec), prec);
                     if (!(la == ra) || !(lm == rm)) {
                         fail(res, "a=" + std::to_string(a) + ",b=" + std::to_string(b),
                              "[a+b](u) != F([a](u),[b](u))");
                         return;
                     }
                 }
         }},
        {"associativity",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.divisive, res, [&](const WeightVector &chi) {
                 check_table_associativity(build_presentation(chi, IntegerRing{}));
                 check_table_associativity(build_presentation(chi, LaurentRing{}));
             });
         }},
        {"assoc-generic",
         [](const Context &ctx, PropertyResult &res) {
             res.flag_only = true; // reported, not imposed: the generic law is not a group law
             std::size_t limit = ctx.focused ? ctx.divisive.size() : 10;
             std::vector<WeightVector> subset(ctx.divisive.begin(),
                                              ctx.divisive.begin() +
                                                  std::min(limit, ctx.divisive.size()));
             for_each_chi(subset, res, [&](const WeightVector &chi) {
                 GenericRing ring(static_cast<int>(2 * chi.n()));
                 check_table_associativity(build_presentation(chi, ring));
             });
         }},
        {"duality",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.divisive, res, [&](const WeightVector &chi) {
                 auto hp = build_presentation(chi, IntegerRing{});
                 check_presentation_duality(hp);
                 check_coassociativity(dualize(hp));
                 auto kp = build_presentation(chi, LaurentRing{});
                 check_presentation_duality(kp);
                 check_coassociativity(dualize(kp));
                 GenericRing ring(static_cast<int>(std::max<std::size_t>(1, chi.n())) * 2);
                 check_presentation_duality(build_presentation(chi, ring));
             });
         }},
        {"rational-form",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.divisive, res, [&](const WeightVector &chi) {
                 if (!rational_form(build_presentation(chi, IntegerRing{})).ok)
                     throw consistency_error("integral rational form fails");
                 if (!rational_form(build_presentation(chi, LaurentRing{})).ok)
                     throw consistency_error("K-theory rational form fails");
                 GenericRing ring(static_cast<int>(std::max<std::size_t>(1, chi.n())) * 2);
                 if (!rational_form(build_presentation(chi, ring)).ok)
                     throw consistency_error("generic rational form fails");
             });
         }},
        {"divisive-iso",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.divisive, res,
                          [&](const WeightVector &chi) { verify_divisive_iso(chi); });
         }},
        {"intersect-algebra",
         [](const Context &ctx, PropertyResult &res) {
             for (const auto &[a, b, c] : ctx.lattice_triples) {
                 ++res.checked;
                 if (lattice_intersect(a, b) != lattice_intersect(b, a)) {
                     fail(res, "", "intersection is not commutative");
                     return;
                 }
                 if (lattice_intersect(lattice_intersect(a, b), c) !=
                     lattice_intersect(a, lattice_intersect(b, c))) {
                     fail(res, "", "intersection is not associative");
                     return;
                 }
                 if (lattice_intersect(a, a) != hnf(a)) {
                     fail(res, "", "intersection is not idempotent");
                     return;
                 }
             }
         }},
        {"intersect-coprime-index",
         [](const Context &ctx, PropertyResult &res) {
             for (const auto &[a, b, c] : ctx.lattice_triples) {
                 Int ia = hnf_index(hnf(a)), ib = hnf_index(hnf(b));
                 if (igcd(ia, ib) != 1)
                     continue;
                 ++res.checked;
                 if (hnf_index(lattice_intersect(a, b)) != ia * ib) {
                     fail(res, "", "coprime intersection index is not multiplicative");
                     return;
                 }
             }
         }},
        {"assemble-integral-kawasaki",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 auto a = assemble(chi, Theory::integral);
                 KawasakiRing kaw(a.chi);
                 for (std::size_t j = 1; j <= a.n; ++j) {
                     if (a.lattice.at_degree(j) != Mat{{Col{kaw.lj(j)}}})
                         throw consistency_error("integral lattice differs from Z l_j x^j");
                     if (a.relations[j - 1] != std::vector<Int>{kaw.mj(j)})
                         throw consistency_error("y_1^j != m_j y_j");
                 }
             });
         }},
        {"k-ring-map",
         [](const Context &ctx, PropertyResult &res) {
             // k_images re-checks the ring-map identity internally on every call
             for_each_chi(ctx.divisive, res, [&](const WeightVector &chi) {
                 std::vector<Int> cs(chi.n(), Int(1));
                 cs.push_back(chi[chi.n()]);
                 WeightVector shape(cs);
                 auto im = k_images(shape, shape.n());
                 KawasakiInvariants inv(shape);
                 for (std::size_t j = 1; j <= shape.n(); ++j)
                     if (im.lattice.at_degree(j)[0][0] != inv.lj(j))
                         throw consistency_error("K image pivot differs from l_j");
             });
         }},
        {"limit-colimit",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 WeightVector nu = normalise(chi);
                 if (nu.n() > 3 || prime_support(nu).size() > 3)
                     return;
                 auto rep = colimit_check(nu);
                 if (!rep.ok)
                     throw consistency_error("colimit is not free of rank one per degree");
                 auto a = assemble(nu, Theory::integral);
                 for (std::size_t j = 1; j <= rep.n; ++j)
                     if (a.lattice.at_degree(j).size() != rep.ranks[j - 1])
                         throw consistency_error("limit and colimit ranks differ");
             });
         }},
        {"homology-duality",
         [](const Context &ctx, PropertyResult &res) {
             for_each_chi(ctx.samples, res, [&](const WeightVector &chi) {
                 WeightVector nu = normalise(chi);
                 for (const auto &[p, part] : primary_decomposition(nu)) {
                     auto sorted = p_primary_normal_form(part.content);
                     for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
                         if (sorted[i] != 1)
                             return; // K-theory route needs pairwise coprime weights
                 }
                 auto h = assemble_homology(nu);
                 auto c = assemble(nu, Theory::ktheory);
                 KawasakiInvariants inv(nu);
                 for (std::size_t j = 1; j <= h.n; ++j) {
                     if (h.pivots[j - 1] != inv.mj(j))
                         throw consistency_error("homology pivot differs from m_j");
                     if (c.generators[j - 1][0] != inv.lj(j))
                         throw consistency_error("cohomology pivot differs from l_j");
                     if (h.pivots[j - 1] * c.generators[j - 1][0] !=
                         ipow(inv.l(), static_cast<unsigned long>(j)))
                         throw consistency_error("pivot product differs from l^j");
                 }
             });
         }},
    };
    return props;
}

} // namespace verify_detail

inline std::vector<PropertyResult> run_verify(const VerifyOptions &opt)
{
    verify_detail::Context ctx(opt);
    std::vector<PropertyResult> results;
    bool matched = false;
    for (const auto &[name, fn] : verify_detail::registry()) {
        if (opt.only && *opt.only != name)
            continue;
        matched = true;
        PropertyResult res;
        res.name = name;
        try {
            fn(ctx, res);
        } catch (const std::exception &e) {
            verify_detail::fail(res, "", e.what());
        }
        results.push_back(std::move(res));
    }
    if (opt.only && !matched)
        throw invalid_input("unknown property '" + *opt.only + "'");
    return results;
}

} // namespace wps

#endif
