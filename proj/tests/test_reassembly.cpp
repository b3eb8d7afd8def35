#include "wps/reassembly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wps;

namespace {

long draw(std::mt19937_64 &rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

WeightVector random_chi(std::mt19937_64 &rng, long max_n, long max_coord)
{
    long n = draw(rng, 1, max_n);
    std::vector<Int> cs;
    for (long i = 0; i <= n; ++i)
        cs.emplace_back(draw(rng, 1, max_coord));
    return WeightVector(std::move(cs));
}

} // namespace

TEST_CASE("integral images of p-primary parts")
{
    auto g = integral_images(WeightVector{1, 1, 4}, 2);
    CHECK(g.at_degree(1) == Mat{{Col{4}}});
    CHECK(g.at_degree(2) == Mat{{Col{4}}});

    auto full = integral_images(WeightVector{1, 1, 1}, 2);
    CHECK(full.at_degree(1) == Mat{{Col{1}}});
    CHECK(full.at_degree(2) == Mat{{Col{1}}});

    for (long p : {2L, 3L, 5L})
        for (long k = 1; k <= 3; ++k) {
            Int pk = ipow(p, static_cast<unsigned long>(k));
            auto gl = integral_images(WeightVector(std::vector<Int>{1, 1, pk}), 2);
            CHECK(gl.at_degree(1) == Mat{{Col{pk}}});
            CHECK(gl.at_degree(2) == Mat{{Col{pk}}});
        }
}

TEST_CASE("k images of (1,...,1,r)")
{
    // r = 3, n = 2: images 3t + 3t^2 and 3t^2
    auto k3 = k_images(WeightVector{1, 1, 3}, 2);
    CHECK(k3.images[0] == Col{0, 3, 3});
    CHECK(k3.images[1] == Col{0, 0, 3});

    // r = 1 is the identity
    auto k1 = k_images(WeightVector{1, 1, 1}, 2);
    CHECK(k1.images[0] == Col{0, 1, 0});
    CHECK(k1.images[1] == Col{0, 0, 1});

    // r = 4, n = 2: (1+t)^4 - 1 = 4t + 6t^2, and the solve gives 4t^2
    auto k4 = k_images(WeightVector{1, 1, 4}, 2);
    CHECK(k4.images[0] == Col{0, 4, 6});
    CHECK(k4.images[1] == Col{0, 0, 4});

    // n = 3, r = 2: the solve fills in 2t^2 + t^3 and 2t^3
    auto k2 = k_images(WeightVector{1, 1, 1, 2}, 3);
    CHECK(k2.images[0] == Col{0, 2, 1, 0});
    CHECK(k2.images[1] == Col{0, 0, 2, 1});
    CHECK(k2.images[2] == Col{0, 0, 0, 2});

    // the built-in ring-map identity check ran for each of these; shapes
    // other than (1,...,1,r) are rejected
    CHECK_THROWS_AS(k_images(WeightVector{1, 2, 4}, 2), invalid_input);

    for (long r = 1; r <= 7; ++r)
        for (std::size_t n : {2u, 3u, 4u, 5u}) {
            std::vector<Int> cs(n, Int(1));
            cs.push_back(r);
            CHECK_NOTHROW(k_images(WeightVector(cs), n));
        }
}

TEST_CASE("intersection of the p-primary images of (3,4,5)")
{
    std::size_t n = 2;

    // integral: lcm of the three indices, degree by degree
    std::vector<GradedLattice> hparts;
    for (long r : {4L, 3L, 5L})
        hparts.push_back(integral_images(WeightVector{1, 1, r}, n));
    auto hmeet = intersect(hparts);
    CHECK(hmeet.at_degree(1) == Mat{{Col{60}}});
    CHECK(hmeet.at_degree(2) == Mat{{Col{60}}});

    // K-theory: CRT on the membership conditions gives pivots 60 and 60,
    // with 60t + 30t^2 the canonical lift (90 = 2 mod 4, 0 mod 3, 0 mod 5
    // reduces to 30 modulo the second generator 60t^2)
    std::vector<GradedLattice> kparts;
    for (long r : {4L, 3L, 5L})
        kparts.push_back(k_images(WeightVector{1, 1, r}, n).lattice);
    auto kmeet = intersect(kparts);
    REQUIRE(kmeet.at_degree(1).size() == 2);
    CHECK(kmeet.at_degree(1)[0] == Col{60, 30});
    CHECK(kmeet.at_degree(1)[1] == Col{0, 60});
    CHECK(kmeet.at_degree(2) == Mat{{Col{60}}});

    // the alternative generator 60t + 90t^2 spans the same lattice with 60t^2
    Mat alt{{Col{60, 90}}, {Col{0, 60}}};
    CHECK(lattice_equal(alt, kmeet.at_degree(1)));

    // intersect of a single lattice is itself
    auto single = intersect({kparts[0]});
    CHECK(single.at_degree(1) == hnf(kparts[0].at_degree(1)));
}

TEST_CASE("assemble over the integers reproduces the Kawasaki ring")
{
    auto a345 = assemble(WeightVector{3, 4, 5}, Theory::integral);
    CHECK(a345.generators[0] == Col{60});
    CHECK(a345.generators[1] == Col{60});
    REQUIRE(a345.relations.size() == 2);
    CHECK(a345.relations[1] == std::vector<Int>{60}); // v(1)^2 = 60 v(2)

    auto trivial = assemble(WeightVector{1, 1, 1, 1}, Theory::integral);
    for (std::size_t j = 1; j <= 3; ++j) {
        CHECK(trivial.generators[j - 1] == Col{1});
        CHECK(trivial.relations[j - 1] == std::vector<Int>{1});
    }

    // lattice equals Z l_j(chi) x^j and the relation coefficient is m_j
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 60; ++iter) {
        WeightVector chi = random_chi(rng, 5, 100);
        auto asm_ring = assemble(chi, Theory::integral);
        KawasakiRing kaw(asm_ring.chi);
        for (std::size_t j = 1; j <= asm_ring.n; ++j) {
            INFO("chi = " << chi.str() << " degree " << j);
            CHECK(asm_ring.lattice.at_degree(j) == Mat{{Col{kaw.lj(j)}}});
            CHECK(asm_ring.relations[j - 1] == std::vector<Int>{kaw.mj(j)});
        }
    }
}

TEST_CASE("assemble over K-theory for (3,4,5)")
{
    auto a = assemble(WeightVector{3, 4, 5}, Theory::ktheory);
    REQUIRE(a.n == 2);
    CHECK(a.generators[0] == Col{60, 30});
    CHECK(a.generators[1] == Col{60});
    // y_1^2 = 60 y_2 exactly, no contribution from other basis vectors
    CHECK(a.relations[1] == std::vector<Int>{60});

    // basis independence: the unimodular alternative y_1 = 60t + 90t^2
    // satisfies the same relation
    Col alt_y1{60, 90};
    CHECK(lattice_member(a.lattice.at_degree(1), alt_y1));
    Col sq{3600}; // (60t + 90t^2)^2 = 3600 t^2 mod t^3
    auto sol = solve_in_hnf(a.lattice.at_degree(2), sq);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 60);

    // pairwise coprime is required: (1,1,2,2) is normalised with 2-content (1,1,2,2)
    CHECK_THROWS_AS(assemble(WeightVector{1, 1, 2, 2}, Theory::ktheory), invalid_input);
    CHECK_THROWS_AS(assemble(WeightVector{3, 4, 5}, Theory::generic), invalid_input);
    // (2,3,4) normalises to the pairwise-coprime (1,3,2), so it goes through
    CHECK_NOTHROW(assemble(WeightVector{2, 3, 4}, Theory::ktheory));

    // chi = (1,...,1) gives the full CP^n lattice with y_1^j = y_j
    auto cp = assemble(WeightVector{1, 1, 1, 1}, Theory::ktheory);
    for (std::size_t j = 1; j <= 3; ++j) {
        std::vector<Int> expect(cp.lattice.ambient_dim(j), 0);
        expect[0] = 1;
        CHECK(cp.relations[j - 1] == expect);
    }
}

TEST_CASE("colimit check")
{
    auto r345 = colimit_check(WeightVector{3, 4, 5});
    CHECK(r345.ok);
    CHECK(r345.ranks == std::vector<std::size_t>{1, 1});
    for (const auto &f : r345.invariant_factors)
        CHECK(f.empty());

    auto r123 = colimit_check(WeightVector{1, 2, 3});
    CHECK(r123.ok);
    CHECK(r123.ranks == std::vector<std::size_t>{1, 1});

    // (1,2,6) normalises to the single-prime (1,1,3)
    auto r126 = colimit_check(WeightVector{1, 2, 6});
    CHECK(r126.ok);
    CHECK(r126.chi == WeightVector{1, 1, 3});

    auto r4 = colimit_check(WeightVector{1, 1, 4});
    CHECK(r4.ok);

    // three primes, n = 3
    auto r3p = colimit_check(WeightVector{1, 2, 3, 5});
    CHECK(r3p.ok);
    CHECK(r3p.ranks == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("limit and colimit routes agree on rank")
{
    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 25; ++iter) {
        WeightVector chi = random_chi(rng, 3, 40);
        if (prime_support(normalise(chi)).size() > 3)
            continue;
        auto rep = colimit_check(chi);
        INFO("chi = " << chi.str());
        CHECK(rep.ok); // rank 1 per degree, matching the rank-1 limit lattices
        auto asm_ring = assemble(chi, Theory::integral);
        for (std::size_t j = 1; j <= rep.n; ++j)
            CHECK(asm_ring.lattice.at_degree(j).size() == rep.ranks[j - 1]);
    }
}
