#include <doctest.h>

#include "astk/groebner.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace astk;

namespace {

bool contains(const std::vector<Poly>& v, const Poly& p) {
    for (const auto& q : v)
        if (q == p) return true;
    return false;
}

}  // namespace

TEST_CASE("groebner basis of a single linear generator") {
    auto R = make_ring({"x"});
    Poly x = Poly::variable(R, 0);
    auto gb = groebner_basis(IdealGens(R, {x}), TermOrder::grevlex(1));
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == x);
}

TEST_CASE("groebner basis of x^2+y^2, xy contains y^3") {
    auto R = make_ring({"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    IdealGens I(R, {x * x + y * y, x * y});
    // y^3 = y·(x²+y²) − x·(xy)
    CHECK(y * (x * x + y * y) - x * (x * y) == y.pow(3));
    auto gb = groebner_basis(I, TermOrder::grevlex(2));
    CHECK(contains(gb.basis, y.pow(3)));
    CHECK(gb.satisfies_buchberger());
    CHECK(gb.contains_source());
    // cofactors reproduce each basis element
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
        Poly sum(R);
        for (std::size_t i = 0; i < I.size(); ++i) sum += gb.cofactors[j][i] * I.generators[i];
        CHECK(sum == gb.basis[j]);
    }
}

TEST_CASE("GL2 augmentation-ideal presentation is already a basis") {
    auto R = make_ring({"e1", "e2"});
    Poly e1 = Poly::variable(R, 0), e2 = Poly::variable(R, 1), c = Poly::constant(R, 1);
    auto gb = groebner_basis(IdealGens(R, {e1 - 2 * c, e2 - c}), TermOrder::grevlex(2));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == e1 - 2 * c);
    CHECK(gb.basis[1] == e2 - c);
}

TEST_CASE("groebner engine rejects integer and Laurent rings") {
    auto Z = make_ring({"x"}, RingMode::Polynomial, CoeffDomain::Integers);
    CHECK_THROWS_AS(groebner_basis(IdealGens(Z, {Poly::variable(Z, 0)}), TermOrder::grevlex(1)), DomainError);
    auto L = make_ring({"x"}, RingMode::Laurent);
    CHECK_THROWS_AS(groebner_basis(IdealGens(L, {Poly::variable(L, 0)}), TermOrder::grevlex(1)), DomainError);
}

TEST_CASE("ideal membership certificates") {
    auto R = make_ring({"x"});
    Poly x = Poly::variable(R, 0), one = Poly::constant(R, 1);
    IdealGens I(R, {x - one});
    SUBCASE("zero target") {
        auto cert = ideal_member(Poly(R), I, TermOrder::grevlex(1));
        REQUIRE(cert);
        CHECK(cert->coefficients[0].is_zero());
        CHECK(cert->validate());
    }
    SUBCASE("x^2 - 1 = (x+1)(x-1)") {
        auto cert = ideal_member(x * x - one, I, TermOrder::grevlex(1));
        REQUIRE(cert);
        CHECK(cert->coefficients[0] == x + one);
    }
    SUBCASE("non-member") { CHECK_FALSE(ideal_member(x, I, TermOrder::grevlex(1))); }
    SUBCASE("ring mismatch") {
        auto S = make_ring({"y"});
        CHECK_THROWS_AS(ideal_member(Poly::variable(S, 0), I, TermOrder::grevlex(1)), DomainError);
    }
}

TEST_CASE("membership in (t^3-1, t(t-1)) agrees with the window oracle") {
    auto R = make_ring({"t"});
    Poly t = Poly::variable(R, 0), one = Poly::constant(R, 1);
    std::vector<Poly> gens{t.pow(3) - one, t * (t - one)};
    IdealGens I(R, gens);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 3; ++b) {
            Poly f = (t - one).pow(a) * t.pow(b);
            bool gb = ideal_member(f, I, TermOrder::grevlex(1)).has_value();
            bool lin = oracle::window_member(f, gens, 8);
            CHECK(gb == lin);
        }
    CHECK(ideal_member((t - one).pow(2), I, TermOrder::grevlex(1)));
    CHECK_FALSE(ideal_member(t, I, TermOrder::grevlex(1)));
}

TEST_CASE("laurent membership") {
    auto L = make_ring({"x"}, RingMode::Laurent);
    Poly x = Poly::variable(L, 0), xi = Poly::variable(L, 0, -1), one = Poly::constant(L, 1);
    IdealGens I(L, {x - one});
    auto c1 = laurent_member(x - one, I);
    REQUIRE(c1);
    CHECK(c1->coefficients[0] == one);
    auto c2 = laurent_member(xi - one, I);
    REQUIRE(c2);
    CHECK(c2->coefficients[0] == -xi);
    CHECK_FALSE(laurent_member(x + one, I));
    // x is a unit: (x) is the whole ring
    CHECK(laurent_member(one, IdealGens(L, {x})));
}

TEST_CASE("laurent membership for the GL2 restriction ideal matches the window oracle") {
    auto L = make_ring({"t1", "t2"}, RingMode::Laurent);
    Poly t1 = Poly::variable(L, 0), t2 = Poly::variable(L, 1), one = Poly::constant(L, 1);
    std::vector<Poly> gens{t1 + t2 - 2 * one, t1 * t2 - one};
    IdealGens I(L, gens);
    std::vector<Poly> probes{(t1 - one) * (t2 - one), t1 - one, (t1 - one).pow(2), t2 - one,
                             (t2 - one).pow(2) * Poly::variable(L, 0, -1)};
    for (const auto& f : probes) {
        auto cert = laurent_member(f, I);
        CHECK(cert.has_value() == oracle::laurent_window_member(f, gens, 2));
        if (cert) CHECK(cert->validate());
    }
}

TEST_CASE("groebner soundness on random ideals (property)") {
    std::mt19937_64 rng(oracle::seed());
    std::uniform_int_distribution<int> nv(1, 3), ng(1, 3), nt(1, 3);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = nv(rng);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        auto R = make_ring(names);
        std::vector<Poly> gens;
        const int k = ng(rng);
        for (int i = 0; i < k; ++i) gens.push_back(oracle::random_poly(rng, R, 3, nt(rng)));
        IdealGens I(R, gens);
        auto gb = groebner_basis(I, TermOrder::grevlex(n));
        REQUIRE(gb.satisfies_buchberger());
        REQUIRE(gb.contains_source());
        // membership of a random element agrees with the window oracle in both directions
        for (int probe = 0; probe < 3; ++probe) {
            Poly f = probe == 0 ? oracle::random_poly(rng, R, 2, 2) * gens[0] : oracle::random_poly(rng, R, 3, 2);
            if (f.degree() > 6) continue;
            auto cert = member_via(gb, f);
            bool lin = oracle::window_member(f, gens, 6);
            if (!cert) CHECK_FALSE(lin);
            if (lin) CHECK(cert.has_value());
            if (cert) CHECK(cert->validate());
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("term orders") {
    auto g = TermOrder::grevlex(3);
    CHECK(g.compare({1, 0, 0}, {0, 1, 0}) > 0);
    CHECK(g.compare({0, 0, 2}, {1, 0, 0}) > 0);  // degree first
    CHECK(g.compare({1, 0, 1}, {0, 2, 0}) < 0);  // grevlex tie-break on the last variable
    auto l = TermOrder::lex(2);
    CHECK(l.compare({1, 0}, {0, 5}) > 0);
    auto e = TermOrder::elimination({1, 2});
    CHECK(e.compare({1, 0, 0}, {0, 5, 5}) > 0);
}
