#include "wps/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wps;

namespace {

// closed form of the multiplicative r-series: sum_{s=1}^r C(r,s) z^{s-1} u^s
Series1<LaurentRing> multiplicative_closed_form(long r)
{
    Series1<LaurentRing> s;
    for (long k = 1; k <= r; ++k)
        s.c[k] = LaurentRing::z_power(k - 1, binomial(r, k));
    return s;
}

} // namespace

TEST_CASE("formal group laws have the stated shapes")
{
    auto add = fgl_additive();
    CHECK(add.coeff(1, 0) == 1);
    CHECK(add.coeff(0, 1) == 1);
    CHECK(add.F.c.size() == 2);

    auto mult = fgl_multiplicative();
    CHECK(mult.ring.equal(mult.coeff(1, 1), LaurentRing::z_power(1)));
    CHECK(mult.F.c.size() == 3);

    auto gen2 = fgl_generic(2);
    CHECK(gen2.ring.equal(gen2.coeff(1, 1), gen2.ring.generator(1, 1)));
    CHECK(gen2.F.c.size() == 3);

    // unitality and commutativity
    auto gen5 = fgl_generic(5);
    for (const auto &[ij, c] : gen5.F.c) {
        auto [i, j] = ij;
        if (i == 0)
            CHECK((j == 1 && gen5.ring.equal(c, gen5.ring.one())));
        if (j == 0)
            CHECK((i == 1 && gen5.ring.equal(c, gen5.ring.one())));
        CHECK(gen5.ring.equal(c, gen5.coeff(j, i)));
    }
}

TEST_CASE("r-series of the additive and multiplicative laws")
{
    auto add = fgl_additive();
    auto r3 = r_series(add, 3, 8);
    REQUIRE(r3.c.size() == 1);
    CHECK(r3.c.at(1) == 3);

    auto mult = fgl_multiplicative();
    auto m2 = r_series(mult, 2, 8);
    // (1+zu)^2 - 1 divided by z: 2u + z u^2
    REQUIRE(m2.c.size() == 2);
    CHECK(mult.ring.equal(m2.c.at(1), mult.ring.from_int(2)));
    CHECK(mult.ring.equal(m2.c.at(2), LaurentRing::z_power(1)));

    for (long r = 0; r <= 8; ++r) {
        auto got = r_series(mult, r, 10);
        auto want = multiplicative_closed_form(r);
        INFO("r = " << r);
        CHECK(got == want);
        CHECK(got.c.size() == static_cast<std::size_t>(r)); // exactly r terms
        CHECK(series_graded(mult.ring, got, 1));
    }

    // [1](u) = u and [0](u) = 0 for every law
    CHECK(r_series(add, 0, 4).is_zero());
    CHECK(r_series(mult, 0, 4).is_zero());
    CHECK(r_series(add, 1, 4) == s1_identity(add.ring));
    CHECK(r_series(mult, 1, 4) == s1_identity(mult.ring));
    auto gen = fgl_generic(4);
    CHECK(r_series(gen, 0, 4).is_zero());
    CHECK(r_series(gen, 1, 4) == s1_identity(gen.ring));
}

TEST_CASE("generic r-series agrees with the hand expansion through degree 3")
{
    // [2](u) = 2u + aE u^2 + 2 a21 u^3, [3](u) = 3u + 3 aE u^2 + (aE^2 + 8 a21) u^3
    auto law = fgl_generic(3);
    const auto &ring = law.ring;
    auto aE = ring.generator(1, 1);
    auto a21 = ring.generator(2, 1);

    auto two = r_series(law, 2, 3);
    CHECK(ring.equal(two.c.at(1), ring.from_int(2)));
    CHECK(ring.equal(two.c.at(2), aE));
    CHECK(ring.equal(two.c.at(3), ring.mul_int(a21, 2)));

    auto three = r_series(law, 3, 3);
    CHECK(ring.equal(three.c.at(1), ring.from_int(3)));
    CHECK(ring.equal(three.c.at(2), ring.mul_int(aE, 3)));
    CHECK(ring.equal(three.c.at(3), ring.add(ring.mul(aE, aE), ring.mul_int(a21, 8))));
    CHECK(series_graded(ring, three, 1));

    // ru + r(r-1)/2 aE u^2 holds for every r
    for (long r = 2; r <= 7; ++r) {
        auto s = r_series(law, r, 2);
        CHECK(ring.equal(s.c.at(1), ring.from_int(r)));
        CHECK(ring.equal(s.c.at(2), ring.mul_int(aE, r * (r - 1) / 2)));
    }
}

TEST_CASE("substitution")
{
    auto mult = fgl_multiplicative();
    auto five = r_series(mult, 5, 8);

    // u -> 0 kills everything, u -> u is the identity
    Series1<LaurentRing> zero;
    CHECK(s1_compose(mult.ring, five, zero, 8).is_zero());
    CHECK(s1_compose(mult.ring, five, s1_identity(mult.ring), 8) == five);

    // [2]([3](u)) = [6](u) through precision 6
    auto two = r_series(mult, 2, 6);
    auto three = r_series(mult, 3, 6);
    auto six = r_series(mult, 6, 6);
    CHECK(s1_compose(mult.ring, two, three, 6) == six);

    Series1<LaurentRing> with_const;
    with_const.c[0] = mult.ring.one();
    CHECK_THROWS_AS(s1_compose(mult.ring, five, with_const, 8), invalid_input);
    CHECK_THROWS_AS(s2_eval(mult.ring, mult.F, with_const, zero, 8), invalid_input);
}

TEST_CASE("r-series homomorphism [a+b](u) = F([a](u), [b](u))")
{
    auto add = fgl_additive();
    auto mult = fgl_multiplicative();
    const long prec = 8;
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b) {
            auto lhs_add = r_series(add, a + b, prec);
            auto rhs_add =
                s2_eval(add.ring, add.F, r_series(add, a, prec), r_series(add, b, prec), prec);
            CHECK(lhs_add == rhs_add);

            auto lhs = r_series(mult, a + b, prec);
            auto rhs = s2_eval(mult.ring, mult.F, r_series(mult, a, prec),
                               r_series(mult, b, prec), prec);
            INFO("a = " << a << " b = " << b);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("series and coefficient rendering")
{
    auto mult = fgl_multiplicative();
    auto m3 = r_series(mult, 3, 8);
    CHECK(s1_render(mult.ring, m3) == "3 u + 3 z u^2 + z^2 u^3");

    auto gen = fgl_generic(3);
    auto g3 = r_series(gen, 3, 3);
    CHECK(s1_render(gen.ring, g3) == "3 u + 3 aE u^2 + (aE^2 + 8 a21) u^3");

    LaurentRing lr;
    CHECK(lr.render(LaurentRing::z_power(-1)) == "z^-1");
    CHECK(lr.render(lr.from_int(-7)) == "-7");
    GenericRing gr(4);
    CHECK(gr.render(gr.mul_int(gr.mul(gr.generator(1, 1), gr.generator(2, 1)), -2)) ==
          "-2 aE a21");
}

TEST_CASE("degree bookkeeping of ring elements")
{
    LaurentRing lr;
    CHECK(*lr.degree(LaurentRing::z_power(3)) == 6);
    CHECK_FALSE(lr.degree(lr.zero()).has_value());

    GenericRing gr(6);
    CHECK(*gr.degree(gr.generator(1, 1)) == 2);
    CHECK(*gr.degree(gr.generator(2, 1)) == 4);
    CHECK(*gr.degree(gr.generator(3, 2)) == 8);
    CHECK(*gr.degree(gr.mul(gr.generator(1, 1), gr.generator(1, 1))) == 4);
    // aE^2 and a21 share degree 4, their sum is homogeneous
    CHECK(gr.homogeneous(gr.add(gr.mul(gr.generator(1, 1), gr.generator(1, 1)),
                                gr.generator(2, 1))));
    CHECK_FALSE(gr.homogeneous(gr.add(gr.generator(1, 1), gr.generator(2, 1))));
}
