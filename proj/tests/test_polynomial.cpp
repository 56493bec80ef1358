#include <doctest.h>

#include "astk/polynomial.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace astk;

TEST_CASE("polynomial arithmetic basics") {
    auto R = make_ring({"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1), one = Poly::constant(R, 1);
    Poly f = (x + y) * (x - y);
    CHECK(f == x * x - y * y);
    CHECK(f.to_string() == "x^2 - y^2");
    CHECK((x - x).is_zero());
    CHECK(f.terms().size() == 2);
    CHECK((x + one).pow(3).coeff({1, 0}) == 3);
    CHECK(f.evaluate({Rational(3), Rational(1)}) == 8);
}

TEST_CASE("laurent monomials are units") {
    auto L = make_ring({"x"}, RingMode::Laurent);
    Poly x = Poly::variable(L, 0), xinv = Poly::variable(L, 0, -1);
    CHECK(x * xinv == Poly::constant(L, 1));
    CHECK(xinv.has_negative_exponents());
    CHECK((x + xinv).min_exponents() == Monomial{-1});
    auto P = make_ring({"x"});
    CHECK_THROWS_AS(Poly::monomial(P, {-1}), DomainError);
}

TEST_CASE("ring mismatch is rejected") {
    auto R = make_ring({"x"});
    auto S = make_ring({"y"});
    CHECK_THROWS_AS(Poly::variable(R, 0) + Poly::variable(S, 0), DomainError);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto L = make_ring({"x"}, RingMode::Laurent);
    auto T = make_ring({"t1", "t2"}, RingMode::Laurent);
    Poly x = Poly::variable(L, 0);
    Poly f = x * x + Poly::variable(L, 0, -2);
    Poly t1 = Poly::variable(T, 0), t2 = Poly::variable(T, 1);
    Poly img = f.substitute({t1 * t2}, {Poly::variable(T, 0, -1) * Poly::variable(T, 1, -1)});
    CHECK(img == (t1 * t2).pow(2) + Poly::monomial(T, {-2, -2}));
}

TEST_CASE("ring laws hold on random Laurent triples") {
    std::mt19937_64 rng(oracle::seed());
    auto L = make_ring({"x", "y", "z"}, RingMode::Laurent);
    std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), n(0, 5);
    auto random_laurent = [&] {
        Poly p(L);
        int terms = n(rng);
        for (int k = 0; k < terms; ++k) p.add_term({e(rng), e(rng), e(rng)}, Rational(c(rng)) / (1 + (k % 3)));
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_laurent(), g = random_laurent(), h = random_laurent();
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE(f * g == g * f);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f + g == g + f);
        REQUIRE((f - f).is_zero());
    }
}

TEST_CASE("printed polynomials parse back") {
    std::mt19937_64 rng(oracle::seed());
    auto R = make_ring({"x", "y", "z"});
    auto L = make_ring({"x", "y"}, RingMode::Laurent);
    for (int t = 0; t < 50; ++t) {
        Poly p = oracle::random_poly(rng, R, 4, 5) * (Rational(t % 3 + 1) / 2);
        CHECK(parse_poly(R, p.to_string()) == p);
        Poly q = oracle::random_poly(rng, L, 3, 4).mul_term({-2, -1}, 1);
        CHECK(parse_poly(L, q.to_string()) == q);
    }
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    CHECK(parse_poly(R, "2x(y + 1)^2 - 3/4") == Rational(2) * x * (y + Poly::constant(R, 1)).pow(2) - Poly::constant(R, Rational(3, 4)));
    CHECK_THROWS_AS(parse_poly(R, "x^-1"), DomainError);
    CHECK_THROWS_AS(parse_poly(R, "w + 1"), DomainError);
    CHECK_THROWS_AS(parse_poly(R, "x +"), DomainError);
    CHECK_THROWS_AS(parse_poly(R, "(x"), DomainError);
}
