#include <catch_amalgamated.hpp>

#include "orbitrank/kirillov.hpp"
#include "orbitrank/verify.hpp"

using namespace orbitrank;

namespace {

NilpotentLieAlgebra nilradical_of(const char* type) {
    const RootSystem rs(parse_type(type));
    return build_nilradical(rs, build_tower(rs));
}

Functional unit_at(const NilpotentLieAlgebra& L, int idx) {
    Functional f = zero_functional(L);
    f[idx] = make_rational(1);
    return f;
}

}  // namespace

TEST_CASE("three-dimensional Heisenberg: the center dual has a rank-2 orbit") {
    const NilpotentLieAlgebra L = nilradical_of("A2");
    REQUIRE(L.dim() == 3);
    REQUIRE(L.centers == std::vector<int>{2});

    const Functional lam = unit_at(L, 2);
    const RationalMatrix B = skew_form(L, lam);
    CHECK(B(0, 1) == make_rational(1));
    CHECK(B(1, 0) == make_rational(-1));
    CHECK(B(0, 0) == make_rational(0));
    CHECK(orbit_dimension(L, lam) == 2);
    CHECK(stabilizer_dimension(L, lam) == 1);
    CHECK(classify_rank(L, lam) == 1);

    // A dual vector off the center has an abelian kernel: zero form.
    CHECK(orbit_dimension(L, unit_at(L, 0)) == 0);
    CHECK(classify_rank(L, unit_at(L, 0)) == 0);
}

TEST_CASE("translating the center dual along exp of a generator") {
    const NilpotentLieAlgebra L = nilradical_of("A2");
    const Rational t = make_rational(3, 2);
    std::vector<Rational> x = zero_functional(L);
    x[0] = t;
    const Functional moved = coadjoint_action(L, x, unit_at(L, 2));
    CHECK(moved == Functional{make_rational(0), -t, make_rational(1)});
    CHECK(orbit_dimension(L, moved) == orbit_dimension(L, unit_at(L, 2)));
}

TEST_CASE("layer-supported functionals hit the rank thresholds exactly") {
    const NilpotentLieAlgebra L = nilradical_of("C3");
    REQUIRE(L.dim() == 8);
    REQUIRE(L.layers.size() == 2);

    CHECK(rank_threshold(L, 0) == 0);
    CHECK(rank_threshold(L, 1) == 4);
    CHECK(rank_threshold(L, 2) == 6);

    const Functional l1 = rankable_functional(L, 1, {make_rational(5, 3)});
    CHECK(orbit_dimension(L, l1) == 4);
    CHECK(classify_rank(L, l1) == 1);

    const Functional l2 = rankable_functional(L, 2, {make_rational(1), make_rational(1)});
    CHECK(orbit_dimension(L, l2) == 6);
    CHECK(stabilizer_dimension(L, l2) == 2);
    CHECK(classify_rank(L, l2) == 2);

    CHECK(classify_rank(L, zero_functional(L)) == 0);
}

TEST_CASE("frozen thresholds for the rank-3 chain of F4") {
    const NilpotentLieAlgebra L = nilradical_of("F4");
    CHECK(rank_threshold(L, 1) == 14);
    CHECK(rank_threshold(L, 2) == 18);
    CHECK(rank_threshold(L, 3) == 20);
    const Functional l3 =
        rankable_functional(L, 3, {make_rational(1), make_rational(-2), make_rational(1, 3)});
    CHECK(orbit_dimension(L, l3) == 20);
    CHECK(classify_rank(L, l3) == 3);
}

TEST_CASE("ill-formed functional requests are rejected") {
    const NilpotentLieAlgebra L = nilradical_of("C3");
    CHECK_THROWS_AS(rankable_functional(L, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(rankable_functional(L, 3, {make_rational(1), make_rational(1), make_rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rankable_functional(L, 2, {make_rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(rankable_functional(L, 1, {make_rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(skew_form(L, Functional(3, make_rational(1))), std::invalid_argument);
    CHECK_THROWS_AS(rank_threshold(L, -1), std::invalid_argument);
    CHECK_THROWS_AS(rank_threshold(L, 3), std::invalid_argument);
    CHECK_THROWS_AS(coadjoint_action(L, std::vector<Rational>(2), zero_functional(L)),
                    std::invalid_argument);
}

TEST_CASE("orbit dimensions are even and scale-invariant") {
    Rng rng(2024);
    for (const char* t : {"A3", "B3", "C3", "G2"}) {
        const NilpotentLieAlgebra L = nilradical_of(t);
        INFO(t);
        for (int rep = 0; rep < 8; ++rep) {
            Functional lam(L.dim());
            for (auto& c : lam) c = rng.uniform_int(0, 2) == 0 ? make_rational(0) : rng.small_rational();
            const int d = orbit_dimension(L, lam);
            CHECK(d % 2 == 0);
            Functional scaled = lam;
            for (auto& c : scaled) c *= make_rational(-7, 3);
            CHECK(orbit_dimension(L, scaled) == d);
        }
    }
}

TEST_CASE("exact rank agrees with the floating cross-check on random functionals") {
    Rng rng(99);
    for (const char* t : {"A4", "B3", "C3", "G2"}) {
        const NilpotentLieAlgebra L = nilradical_of(t);
        INFO(t);
        for (int rep = 0; rep < 10; ++rep) {
            Functional lam(L.dim());
            for (auto& c : lam) c = rng.small_rational();
            CHECK(orbit_dimension(L, lam) == orbit_dimension_float(L, lam));
        }
    }
}

TEST_CASE("orbit dimension is constant along random coadjoint translates") {
    Rng rng(7);
    for (const char* t : {"C3", "B3"}) {
        const NilpotentLieAlgebra L = nilradical_of(t);
        INFO(t);
        for (int rep = 0; rep < 5; ++rep) {
            Functional lam(L.dim());
            std::vector<Rational> x(L.dim());
            for (auto& c : lam) c = rng.small_rational();
            for (auto& c : x) c = rng.uniform_int(0, 1) ? rng.small_rational() : make_rational(0);
            CHECK(orbit_dimension(L, coadjoint_action(L, x, lam)) == orbit_dimension(L, lam));
        }
    }
}

TEST_CASE("property checks pass at reduced scale") {
    TypeCache cache;
    CHECK(check_rank_table(cache, 8).passed());
    CHECK(check_sigma_cardinality(cache, 8).passed());
    CHECK(check_parabolic_complement(cache, 8).passed());
    CHECK(check_heisenberg(cache, 5).passed());
    CHECK(check_jacobi(cache, 5).passed());
    CHECK(check_dimension_formula(cache, 4, 42, 5).passed());
    CHECK(check_field_independence(cache, 4, 42, 5).passed());
    CHECK(check_coadjoint_invariance(cache, 4, 42, 3, 5).passed());
    CHECK(check_rank_semicontinuity(cache, 3, 42, 10, 9).passed());
}

TEST_CASE("the suite runner rejects unknown suites and runs the named checks") {
    VerifyOptions opt;
    opt.max_rank = 3;
    opt.trials = 5;
    opt.seed = 11;
    const std::vector<CheckResult> table = run_suite("table", opt);
    CHECK(table.size() == 3);
    for (const auto& c : table) {
        CHECK(c.passed());
        CHECK(c.cases > 0);
    }
    CHECK(run_suite("semicont", opt).size() == 1);
    CHECK(run_suite("all", opt).size() == 9);
    CHECK_THROWS_AS(run_suite("bogus", opt), std::invalid_argument);
}
