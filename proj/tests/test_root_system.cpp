#include <catch_amalgamated.hpp>

#include "orbitrank/root_system.hpp"

using namespace orbitrank;

namespace {

// Independent oracle: closed-form root counts per family.
int expected_root_count(DynkinType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return -1;
}

std::vector<DynkinType> all_types(int max_rank) {
    std::vector<DynkinType> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int n = 1; n <= max_rank; ++n)
            if (is_valid({f, n})) out.push_back({f, n});
    return out;
}

}  // namespace

TEST_CASE("type tokens parse case-insensitively and reject junk") {
    CHECK(parse_type("E8") == DynkinType{Family::E, 8});
    CHECK(parse_type("e8") == DynkinType{Family::E, 8});
    CHECK(parse_type("d10") == DynkinType{Family::D, 10});
    CHECK(parse_type("a1") == DynkinType{Family::A, 1});
    CHECK_THROWS_AS(parse_type("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("H4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("B1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("D2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("A0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("Ax"), std::invalid_argument);
}

TEST_CASE("reflection closure reproduces the closed-form root counts") {
    for (DynkinType t : all_types(12)) {
        const RootSystem rs(t);
        INFO(to_string(t));
        CHECK(static_cast<int>(rs.roots().size()) == expected_root_count(t));
        CHECK(2 * rs.n_positive() == static_cast<int>(rs.roots().size()));
    }
}

TEST_CASE("roots split into sign-definite halves closed under negation") {
    for (DynkinType t : {DynkinType{Family::A, 5}, DynkinType{Family::B, 4},
                         DynkinType{Family::D, 5}, DynkinType{Family::F, 4}}) {
        const RootSystem rs(t);
        for (const Root& a : rs.roots()) {
            CHECK((all_nonneg(a) || all_nonpos(a)));
            CHECK(rs.contains(negated(a)));
        }
        for (int i = 0; i < rs.n_positive(); ++i) CHECK(all_nonneg(rs.positive(i)));
    }
}

TEST_CASE("invariant form: normalization and simple pairings") {
    const RootSystem a2({Family::A, 2});
    CHECK(a2.pairing(a2.simple(0), a2.simple(0)) == make_rational(2));
    CHECK(a2.pairing(a2.simple(0), a2.simple(1)) == make_rational(-1));

    const RootSystem b3({Family::B, 3});
    CHECK(b3.pairing(b3.simple(2), b3.simple(2)) == make_rational(1));
    CHECK(b3.pairing(b3.simple(0), b3.simple(0)) == make_rational(2));

    const RootSystem g2({Family::G, 2});
    CHECK(g2.pairing(g2.simple(0), g2.simple(0)) == make_rational(2, 3));
    CHECK(g2.pairing(g2.simple(1), g2.simple(1)) == make_rational(2));
    CHECK(g2.pairing(g2.simple(0), g2.simple(1)) == make_rational(-1));
}

TEST_CASE("Cartan entries recover the coroot pairings of the form") {
    for (DynkinType t : all_types(8)) {
        const RootSystem rs(t);
        INFO(to_string(t));
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                const Rational lhs =
                    2 * rs.pairing(rs.simple(i), rs.simple(j)) / rs.pairing(rs.simple(j), rs.simple(j));
                CHECK(lhs == make_rational(rs.cartan()[j][i]));
            }
    }
}

TEST_CASE("the form is symmetric and invariant under simple reflections") {
    for (DynkinType t : {DynkinType{Family::A, 3}, DynkinType{Family::C, 3},
                         DynkinType{Family::G, 2}, DynkinType{Family::F, 4}}) {
        const RootSystem rs(t);
        const auto& roots = rs.roots();
        for (std::size_t x = 0; x < roots.size(); x += 3)
            for (std::size_t y = x; y < roots.size(); y += 3) {
                CHECK(rs.pairing(roots[x], roots[y]) == rs.pairing(roots[y], roots[x]));
                for (int j = 0; j < rs.rank(); ++j) {
                    CHECK(rs.contains(rs.reflect(roots[x], j)));
                    CHECK(rs.pairing(rs.reflect(roots[x], j), rs.reflect(roots[y], j)) ==
                          rs.pairing(roots[x], roots[y]));
                }
            }
    }
}

TEST_CASE("highest roots match the classical coordinates") {
    CHECK(RootSystem({Family::A, 3}).highest_root() == Root{1, 1, 1});
    CHECK(RootSystem({Family::B, 4}).highest_root() == Root{1, 2, 2, 2});
    CHECK(RootSystem({Family::C, 3}).highest_root() == Root{2, 2, 1});
    CHECK(RootSystem({Family::D, 5}).highest_root() == Root{1, 2, 2, 1, 1});
    CHECK(RootSystem({Family::G, 2}).highest_root() == Root{3, 2});
    CHECK(RootSystem({Family::F, 4}).highest_root() == Root{2, 3, 4, 2});
    CHECK(RootSystem({Family::E, 6}).highest_root() == Root{1, 2, 2, 3, 2, 1});
    CHECK(RootSystem({Family::E, 8}).highest_root() == Root{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("the highest root dominates every root coordinatewise") {
    for (DynkinType t : all_types(12)) {
        const RootSystem rs(t);
        const Root theta = rs.highest_root();
        INFO(to_string(t));
        for (int i = 0; i < rs.n_positive(); ++i) CHECK(dominates(theta, rs.positive(i)));
    }
}

TEST_CASE("classification round-trips construction, up to the D3 = A3 coincidence") {
    for (DynkinType t : all_types(12)) {
        const DynkinType got = classify_type(RootSystem(t));
        INFO(to_string(t));
        if (t == DynkinType{Family::D, 3})
            CHECK(got == DynkinType{Family::A, 3});
        else
            CHECK(got == t);
    }
}

TEST_CASE("reducible or malformed inputs are rejected") {
    const RootSystem a3({Family::A, 3});

    // Not closed under negation.
    CHECK_THROWS_AS(irreducible_components({a3.simple(0)}, a3), std::invalid_argument);

    // Two orthogonal A1 factors: no dominant root, not classifiable as one system.
    Subsystem two_a1;
    two_a1.base = {a3.simple(0), a3.simple(2)};
    two_a1.roots = {a3.simple(0), a3.simple(2), negated(a3.simple(0)), negated(a3.simple(2))};
    CHECK_THROWS_AS(highest_root(two_a1), std::domain_error);
    CHECK_THROWS_AS(classify_type(two_a1, a3), std::invalid_argument);

    CHECK_THROWS_AS(RootSystem({Family::E, 9}), std::invalid_argument);
}

TEST_CASE("component splitting separates orthogonal factors with their bases") {
    const RootSystem a3({Family::A, 3});
    const std::vector<Root> set = {a3.simple(0), a3.simple(2), negated(a3.simple(0)),
                                   negated(a3.simple(2))};
    const auto comps = irreducible_components(set, a3);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].base == std::vector<Root>{a3.simple(0)});
    CHECK(comps[1].base == std::vector<Root>{a3.simple(2)});
    CHECK(classify_type(comps[0], a3) == DynkinType{Family::A, 1});

    // The full system is one component, and the recovered base is the simple roots.
    const auto whole = irreducible_components(a3.roots(), a3);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].base == std::vector<Root>{a3.simple(0), a3.simple(1), a3.simple(2)});
    CHECK(whole[0].roots.size() == a3.roots().size());
}
