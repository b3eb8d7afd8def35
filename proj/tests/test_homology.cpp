#include "wps/homology.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wps;

namespace {

long draw(std::mt19937_64 &rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

WeightVector random_divisive(std::mt19937_64 &rng, long max_n, long cap)
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

// (delta (x) 1) delta = (1 (x) delta) delta at the structure-constant level
template <class R> void check_coassociative(const CoalgebraPresentation<R> &co)
{
    const auto &rg = co.ring;
    for (std::size_t j = 0; j <= co.n; ++j)
        for (std::size_t a = 0; a <= co.n; ++a)
            for (std::size_t b = 0; b <= co.n; ++b)
                for (std::size_t c = 0; c <= co.n; ++c) {
                    typename R::Elem lhs = rg.zero(), rhs = rg.zero();
                    for (std::size_t k = 0; k <= co.n; ++k) {
                        lhs = rg.add(lhs, rg.mul(co.coefficient(j, k, c),
                                                 co.coefficient(k, a, b)));
                        rhs = rg.add(rhs, rg.mul(co.coefficient(j, a, k),
                                                 co.coefficient(k, b, c)));
                    }
                    INFO("j=" << j << " (" << a << "," << b << "," << c << ")");
                    CHECK(rg.equal(lhs, rhs));
                }
}

} // namespace

TEST_CASE("dual of CP^n agrees with the binomial-free diagonal")
{
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        auto direct = cpn_coalgebra(n, IntegerRing{});
        auto dual = dualize(build_presentation(WeightVector::ones(n + 1), IntegerRing{}));
        for (std::size_t j = 0; j <= n; ++j)
            CHECK(direct.diagonal[j] == dual.diagonal[j]);
        // n = 2: delta(b_2) = b_2 (x) 1 + b_1 (x) b_1 + 1 (x) b_2
        if (n == 2) {
            CHECK(direct.coefficient(2, 1, 1) == 1);
            CHECK(direct.coefficient(2, 2, 0) == 1);
            CHECK(direct.coefficient(2, 0, 2) == 1);
            CHECK(direct.coefficient(1, 1, 0) == 1);
        }
    }
}

TEST_CASE("Example diagonals of (1,1,1,r) over the generic theory")
{
    for (long r : {2L, 3L, 4L, 5L, 7L}) {
        auto pres = build_presentation(WeightVector{1, 1, 1, r}, GenericRing(6));
        auto co = dualize(pres);
        const auto &rg = co.ring;
        INFO("r = " << r);
        // delta(b_2) = b_2 (x) 1 + r b_1 (x) b_1 + 1 (x) b_2
        CHECK(rg.equal(co.coefficient(2, 1, 1), rg.from_int(r)));
        CHECK(rg.equal(co.coefficient(2, 2, 0), rg.one()));
        CHECK(rg.equal(co.coefficient(2, 0, 2), rg.one()));
        // delta(b_3) = b_3 (x) 1 + r b_2 (x) b_1 + C(r,2) aE b_1 (x) b_1
        //              + r b_1 (x) b_2 + 1 (x) b_3
        CHECK(rg.equal(co.coefficient(3, 2, 1), rg.from_int(r)));
        CHECK(rg.equal(co.coefficient(3, 1, 2), rg.from_int(r)));
        CHECK(rg.equal(co.coefficient(3, 1, 1),
                       rg.mul_int(rg.generator(1, 1), binomial(r, 2))));
        CHECK(rg.equal(co.coefficient(3, 3, 0), rg.one()));
        // delta(b_0) = b_0 (x) b_0
        CHECK(rg.equal(co.coefficient(0, 0, 0), rg.one()));
    }
}

TEST_CASE("duality identity between products and diagonals")
{
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 15; ++iter) {
        WeightVector chi = random_divisive(rng, 4, 32);
        auto pres = build_presentation(chi, LaurentRing{});
        auto co = dualize(pres);
        const auto &rg = pres.ring();
        // <u_a u_b, b_j> = sum_{k,l} e_{j,k,l} <u_a,b_k> <u_b,b_l> = e_{j,a,b}
        for (std::size_t a = 0; a <= pres.n(); ++a)
            for (std::size_t b = 0; b <= pres.n(); ++b)
                for (std::size_t j = 0; j <= pres.n(); ++j)
                    CHECK(rg.equal(pres.product(a, b)[j], co.coefficient(j, a, b)));
    }
}

TEST_CASE("coassociativity of dualized presentations")
{
    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 10; ++iter) {
        WeightVector chi = random_divisive(rng, 4, 24);
        check_coassociative(dualize(build_presentation(chi, IntegerRing{})));
        check_coassociative(dualize(build_presentation(chi, LaurentRing{})));
    }
    for (std::size_t n : {2u, 3u})
        check_coassociative(cpn_coalgebra(n, IntegerRing{}));
}

TEST_CASE("pushforward matrices")
{
    // (1,1,r) in K-theory: b_1 -> b_1, b_2 -> r b_2
    for (long r : {2L, 3L, 5L}) {
        auto pres = build_presentation(WeightVector{1, 1, r}, LaurentRing{});
        auto cols = k_pushforward_columns(pres);
        CHECK(cols[1] == Col{0, 1, 0});
        CHECK(cols[2] == Col{0, 0, r});
    }

    // identity on CP^n
    auto id = build_presentation(WeightVector{1, 1, 1, 1}, LaurentRing{});
    auto idc = k_pushforward_columns(id);
    for (std::size_t j = 0; j <= 3; ++j)
        for (std::size_t i = 0; i <= 3; ++i)
            CHECK(idc[j][i] == Int(i == j ? 1 : 0));

    // (1,1,2,4) integral: diagonal scalars prod_{h<j} chi_n/chi_{n-h}
    auto hp = build_presentation(WeightVector{1, 1, 2, 4}, IntegerRing{});
    auto M = pushforward_matrix(hp);
    CHECK(M[1][1] == 1);
    CHECK(M[2][2] == 2);
    CHECK(M[3][3] == 8);
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 3; ++j)
            if (i != j)
                CHECK(M[i][j] == 0);
}

TEST_CASE("pushforward is a coalgebra map")
{
    // delta_CP(psi_* b_j) = (psi_* (x) psi_*) delta_P(b_j), t-normalised
    for (long r : {2L, 3L, 4L}) {
        for (std::size_t n : {2u, 3u}) {
            std::vector<Int> cs(n, Int(1));
            cs.push_back(r);
            auto pres = build_presentation(WeightVector(cs), LaurentRing{});
            auto co = dualize(pres);
            auto cols = k_pushforward_columns(pres);
            const auto &lr = pres.ring();
            for (std::size_t j = 0; j <= n; ++j) {
                // lhs[k][l] = coefficient of b_k (x) b_l in delta(psi_* b_j)
                std::vector<Col> lhs(n + 1, Col(n + 1, 0));
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t k = 0; k <= i; ++k)
                        lhs[k][i - k] += cols[j][i];
                std::vector<Col> rhs(n + 1, Col(n + 1, 0));
                for (std::size_t a = 0; a <= n; ++a)
                    for (std::size_t b = 0; b <= n; ++b) {
                        const auto &e = co.coefficient(j, a, b);
                        if (lr.is_zero(e))
                            continue;
                        Int ei = lr.int_at_z_power(e, static_cast<long>(j) -
                                                          static_cast<long>(a) -
                                                          static_cast<long>(b));
                        for (std::size_t k = 0; k <= n; ++k)
                            for (std::size_t l = 0; l <= n; ++l)
                                rhs[k][l] += ei * cols[a][k] * cols[b][l];
                    }
                for (std::size_t k = 0; k <= n; ++k)
                    for (std::size_t l = 0; l <= n; ++l) {
                        INFO("r=" << r << " n=" << n << " j=" << j << " (" << k << "," << l
                                  << ")");
                        CHECK(lhs[k][l] == rhs[k][l]);
                    }
            }
        }
    }
}

TEST_CASE("homology reassembly of (3,4,5)")
{
    auto h = assemble_homology(WeightVector{3, 4, 5});
    REQUIRE(h.n == 2);
    // basis {1, b_1, 60 b_2}
    CHECK(h.basis[0] == Col{1, 0});
    CHECK(h.basis[1] == Col{0, 60});
    CHECK(h.pivots == std::vector<Int>{1, 60});

    // diagonal: delta(beta_2) = beta_2 (x) 1 + 60 beta_1 (x) beta_1 + 1 (x) beta_2
    const auto &lr = h.coalgebra.ring;
    CHECK(lr.equal(h.coalgebra.coefficient(2, 1, 1), lr.from_int(60)));
    CHECK(lr.equal(h.coalgebra.coefficient(2, 2, 0), lr.one()));
    CHECK(lr.equal(h.coalgebra.coefficient(1, 0, 1), lr.one()));
    check_coassociative(h.coalgebra);
}

TEST_CASE("homology reassembly of a single prime is the part itself")
{
    auto h = assemble_homology(WeightVector{1, 1, 4});
    auto pres = build_presentation(WeightVector{1, 1, 4}, LaurentRing{});
    auto cols = k_pushforward_columns(pres);
    // same lattice as the pushforward image
    Mat image{{Col{cols[1][1], cols[1][2]}}, {Col{cols[2][1], cols[2][2]}}};
    Mat basis{{h.basis[0]}, {h.basis[1]}};
    CHECK(lattice_equal(image, basis));
}

TEST_CASE("homology and cohomology assemblies are Kronecker dual")
{
    // pivot of beta_j is m_j(chi) and pivot of y_j is l_j(chi), so the product
    // of the two degree-j indices is l(chi)^j
    for (auto chi : {WeightVector{3, 4, 5}, WeightVector{1, 2, 3}, WeightVector{2, 3, 4},
                     WeightVector{1, 1, 2, 3}, WeightVector{1, 2, 3, 5}}) {
        auto h = assemble_homology(chi);
        auto c = assemble(chi, Theory::ktheory);
        KawasakiInvariants inv(h.chi);
        INFO("chi = " << chi.str());
        for (std::size_t j = 1; j <= h.n; ++j) {
            Int ypivot = c.generators[j - 1][0];
            CHECK(h.pivots[j - 1] == inv.mj(j));
            CHECK(ypivot == inv.lj(j));
            CHECK(h.pivots[j - 1] * ypivot == ipow(inv.l(), static_cast<unsigned long>(j)));
        }
    }
}

TEST_CASE("homology reassembly rejects shared primes")
{
    CHECK_THROWS_AS(assemble_homology(WeightVector{1, 1, 2, 2}), invalid_input);
}
