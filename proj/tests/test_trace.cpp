#include <doctest.h>

#include "astk/trace.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace astk;

namespace {

RepElement random_element(const RepRingPtr& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-2, 2);
    if (!r->polynomial_type()) {
        Vector v(r->algebra.dim());
        for (auto& x : v) x = c(rng);
        return RepElement::from_coords(r, v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, r->distinguished.size() - 1);
    RepElement out = RepElement::constant(r, c(rng));
    for (int t = 0; t < 3; ++t) {
        RepElement m = RepElement::constant(r, c(rng));
        for (int k = 0; k < 2; ++k) m = m * RepElement::from_poly(r, r->distinguished[pick(rng)]);
        out = out + m;
    }
    return out;
}

}  // namespace

TEST_CASE("symmetric polynomials rewritten in elementary functions") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::string> tv, ev;
        for (std::size_t i = 1; i <= n; ++i) {
            tv.push_back("t" + std::to_string(i));
            ev.push_back("e" + std::to_string(i));
        }
        auto T = make_ring(tv), E = make_ring(ev);
        std::vector<Poly> images;
        for (unsigned k = 1; k <= n; ++k) images.push_back(oracle::elementary_by_subsets(T, k));
        std::mt19937_64 rng(oracle::seed() + n);
        for (int trial = 0; trial < 5; ++trial) {
            Poly g = oracle::random_poly(rng, E, 3, 4);
            Poly f = g.substitute(images);
            CHECK(symmetric_to_elementary(f, E) == g);
        }
    }
    auto T = make_ring({"a", "b"});
    CHECK_THROWS_AS(symmetric_to_elementary(Poly::variable(T, 0), make_ring({"e1", "e2"})), DomainError);
}

TEST_CASE("trace is a ring map compatible with the unit") {
    std::mt19937_64 rng(oracle::seed());
    for (const char* g : {"gm", "t2", "gl2", "gl3", "sl2", "mu4", "s3", "c2", "gm*mu3"}) {
        CAPTURE(g);
        auto rep = rep_ring(parse_group_spec(g));
        auto cr = class_function_ring(rep);
        for (int k = 0; k < 6; ++k) {
            RepElement a = random_element(rep, rng), b = random_element(rep, rng);
            CHECK(dennis_trace(cr, a * b) == dennis_trace(cr, a) * dennis_trace(cr, b));
            CHECK(dennis_trace(cr, a + b) == dennis_trace(cr, a) + dennis_trace(cr, b));
            CHECK(unit_evaluation(dennis_trace(cr, a)) == augmentation(a));
        }
    }
}

TEST_CASE("trace of the regular representation of S3") {
    auto rep = rep_ring(parse_group_spec("s3"));
    auto cr = class_function_ring(rep);
    auto t = dennis_trace(cr, regular_representation(rep));
    CHECK(t.coords == Vector{6, 0, 0});
}

TEST_CASE("GL2 traces land on elementary coordinates") {
    auto rep = rep_ring(parse_group_spec("gl2"));
    auto cr = class_function_ring(rep);
    REQUIRE(cr->model == ClassModel::SymmetricLaurent);
    Poly e1 = Poly::variable(cr->ring, 0), e2 = Poly::variable(cr->ring, 1), f = Poly::variable(cr->ring, 2);
    // t1^{-1} + t2^{-1} = e1 / e2
    Poly inv = Poly::variable(rep->ring, 0, -1) + Poly::variable(rep->ring, 1, -1);
    CHECK(dennis_trace(cr, RepElement::from_poly(rep, inv)).value == e1 * f);
    CHECK(dennis_trace(cr, RepElement::from_poly(rep, Poly::variable(rep->ring, 0) * Poly::variable(rep->ring, 1)))
              .value == e2);
    CHECK(cr->reduce(e2 * f) == Poly::constant(cr->ring, 1));
}

TEST_CASE("class functions on different groups do not mix") {
    auto a = class_function_ring(parse_group_spec("gm"));
    auto b = class_function_ring(parse_group_spec("gm"));
    CHECK_THROWS_AS(unit_ideal_J(a)[0] + unit_ideal_J(b)[0], DomainError);
    auto rep = rep_ring(parse_group_spec("gm"));
    CHECK_THROWS_AS(dennis_trace(a, RepElement::one(rep)), DomainError);
}

TEST_CASE("radical comparison") {
    for (const char* g : {"gm", "t2", "gl2", "gl3", "sl2", "mu2", "mu5", "s3", "c2", "trivial", "gm*mu2"}) {
        CAPTURE(g);
        auto r = radical_compare(parse_group_spec(g), 3);
        REQUIRE(r.exponent);
        CHECK(*r.exponent == 1);
        CHECK(r.status == SearchStatus::Pass);
        CHECK(r.reverse_holds);
        CHECK(r.unit_evaluation_vanishes);
        CHECK(r.audit());
    }
}

TEST_CASE("radical certificates check against the window oracle") {
    auto r = radical_compare(parse_group_spec("gl2"), 2);
    REQUIRE(r.exponent);
    std::vector<Poly> gens;
    for (const auto& t : r.trace_generators) gens.push_back(t.value);
    for (const auto& c : r.forward) CHECK(oracle::window_member(c.target, gens, 4));
}

TEST_CASE("tampered radical certificate fails the audit") {
    auto r = radical_compare(parse_group_spec("s3"), 2);
    REQUIRE(!r.forward_alg.empty());
    for (auto& x : r.forward_alg[0].coefficients[0]) x += 1;
    CHECK(!r.audit());
    auto p = radical_compare(parse_group_spec("sl2"), 2);
    REQUIRE(!p.forward.empty());
    p.forward[0].coefficients[0] += Poly::constant(p.ring->ring, 1);
    CHECK(!p.audit());
}

TEST_CASE("serial and parallel radical searches agree") {
    auto a = radical_compare(parse_group_spec("gl3"), 2, Exec::Serial);
    auto b = radical_compare(parse_group_spec("gl3"), 2, Exec::Parallel);
    REQUIRE(a.exponent == b.exponent);
    REQUIRE(a.forward.size() == b.forward.size());
    for (std::size_t i = 0; i < a.forward.size(); ++i) CHECK(a.forward[i].coefficients == b.forward[i].coefficients);
}

TEST_CASE("identity ideal is the radical of J for nice groups") {
    for (const char* g : {"gm", "t2", "mu2", "mu3", "mu4", "mu5", "mu6", "s3", "c2", "trivial", "gm*mu2"}) {
        CAPTURE(g);
        auto u = unipotent_reduced_check(parse_group_spec(g));
        CHECK(u.holds);
        CHECK(u.ie_maximal);
        CHECK(u.audit());
    }
    auto s = unipotent_reduced_check(parse_group_spec("s3"));
    CHECK(s.zero_set == std::vector<std::string>{"e"});
    CHECK(s.function_ring_dim == 6);
    auto m = unipotent_reduced_check(parse_group_spec("mu4"));
    REQUIRE(m.separable);
    CHECK(*m.separable);
    CHECK(m.function_ring_dim == 4);
}

TEST_CASE("groups that are not nice are rejected") {
    CHECK_THROWS_AS(unipotent_reduced_check(parse_group_spec("gl2")), DomainError);
    CHECK_THROWS_AS(unipotent_reduced_check(parse_group_spec("sl2")), DomainError);
}
