#include <doctest.h>

#include "astk/completion.hpp"
#include "astk/series.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace astk;

namespace {

RepRingPtr ring_of(const std::string& spec) { return rep_ring(parse_group_spec(spec)); }

Vector cyclic_augmentation(unsigned n) { return Vector(n, Rational(1)); }

}  // namespace

TEST_CASE("multisets and ideal powers") {
    CHECK(multisets(2, 2).size() == 3);
    CHECK(multisets(3, 2).size() == 6);
    CHECK(multisets(1, 4).size() == 1);
    auto R = make_ring({"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    CHECK(ideal_power({x, y}, 4).size() == 5);
}

TEST_CASE("completion of the Laurent ring at x - 1") {
    auto L = make_ring({"x"}, RingMode::Laurent, CoeffDomain::Integers);
    auto Lq = rationalized(L);
    Poly x = Poly::variable(Lq, 0), one = Poly::constant(Lq, 1);
    auto q = complete_truncated(IdealGens(L, {Poly::variable(L, 0) - Poly::constant(L, 1)}), 3);
    CHECK(q.dim() == 4);
    CHECK(quotient_is_consistent(q));
    std::vector<Poly> ubasis;
    for (unsigned k = 0; k <= 3; ++k) ubasis.push_back((x - one).pow(k));
    auto cx = coordinates_in(q, ubasis, x);
    REQUIRE(cx);
    CHECK(*cx == Vector{1, 1, 0, 0});
    auto cxi = coordinates_in(q, ubasis, Poly::variable(Lq, 0, -1));
    REQUIRE(cxi);
    CHECK(*cxi == Vector{1, -1, 1, -1});
}

TEST_CASE("completion of a cyclic quotient stabilizes at the local factor") {
    auto R = make_ring({"t"});
    Poly t = Poly::variable(R, 0), one = Poly::constant(R, 1);
    std::size_t prev = 100;
    for (int N = 0; N <= 8; ++N) {
        auto q = complete_truncated(IdealGens(R, {t - one}), N, {t.pow(5) - one});
        CHECK(q.dim() <= prev);
        prev = q.dim();
    }
    CHECK(prev == 1);
    auto split = idempotent_split(quotient_algebra(UPoly::x_power(5) - UPoly::constant(1)), cyclic_augmentation(5),
                                  quotient_algebra(UPoly::x_power(5) - UPoly::constant(1)).basis_vector(1));
    REQUIRE(split.augmentation_local);
    CHECK(split.dims[*split.augmentation_local] == prev);
}

TEST_CASE("zero ideal") {
    auto R = make_ring({"x"});
    auto q = complete_truncated(IdealGens(R, {Poly(R)}), 5);
    CHECK(q.identity_quotient);
    Poly t = Poly::variable(R, 0), one = Poly::constant(R, 1);
    auto q2 = complete_truncated(IdealGens(R, {}), 2, {t.pow(3) - one});
    CHECK(!q2.identity_quotient);
    CHECK(q2.dim() == 3);
}

TEST_CASE("infinite truncation is rejected") {
    auto R = make_ring({"x", "y"});
    CHECK_THROWS_AS(complete_truncated(IdealGens(R, {Poly::variable(R, 0)}), 2), UnsupportedError);
}

TEST_CASE("precision lowering is a surjective ring map commuting with generators") {
    std::mt19937_64 rng(oracle::seed());
    auto L = make_ring({"x", "y"}, RingMode::Laurent);
    Poly x = Poly::variable(L, 0), y = Poly::variable(L, 1), one = Poly::constant(L, 1);
    IdealGens I(L, {x - one, y - one});
    auto high = complete_truncated(I, 4);
    CHECK(high.dim() == 15);
    for (int M = 0; M <= 4; ++M) {
        auto low = complete_truncated(I, M);
        CHECK(quotient_is_consistent(low));
        ExactMatrix p = lowering_map(high, low);
        CHECK(p.rank() == low.dim());
        for (std::size_t g = 0; g < high.generator_images.size(); ++g)
            CHECK(p.apply(high.generator_images[g]) == low.generator_images[g]);
        std::uniform_int_distribution<int> c(-3, 3);
        for (int k = 0; k < 10; ++k) {
            Vector a(high.dim()), b(high.dim());
            for (auto& v : a) v = c(rng);
            for (auto& v : b) v = c(rng);
            CHECK(p.apply(high.algebra.multiply(a, b)) == low.algebra.multiply(p.apply(a), p.apply(b)));
        }
    }
}

TEST_CASE("idempotent split examples") {
    auto a2 = quotient_algebra(UPoly({-1, 0, 1}));
    auto s2 = idempotent_split(a2, cyclic_augmentation(2), a2.basis_vector(1));
    CHECK(s2.laws_hold());
    REQUIRE(s2.augmentation_local);
    CHECK(s2.idempotents[*s2.augmentation_local] == Vector{Rational(1, 2), Rational(1, 2)});

    auto a3 = quotient_algebra(UPoly({-1, 0, 0, 1}));
    auto s3 = idempotent_split(a3, cyclic_augmentation(3), a3.basis_vector(1));
    CHECK(s3.laws_hold());
    std::vector<std::size_t> dims = s3.dims;
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 2});

    auto q = FinDimAlgebra({"1"}, {{{Rational(1)}}}, {Rational(1)});
    auto s1 = idempotent_split(q, {Rational(1)});
    CHECK(s1.idempotents.size() == 1);
    CHECK(s1.laws_hold());

    // non-commutative input
    FinDimAlgebra bad({"a", "b"}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}}, {1, 0});
    CHECK_THROWS_AS(idempotent_split(bad, {1, 0}), DomainError);

    // inseparable: Q[t]/(t-1)^2 (t-2)
    auto ins = quotient_algebra(UPoly({-1, 2, -1}) * UPoly({2, -1}).monic() * UPoly::constant(-1));
    auto si = idempotent_split(ins, {1, 1, 1}, ins.basis_vector(1));
    CHECK(si.laws_hold());
    CHECK(si.idempotents.size() == 2);
}

TEST_CASE("idempotent laws hold for every cyclic algebra and random separating element") {
    for (unsigned n = 1; n <= 12; ++n) {
        auto alg = quotient_algebra(UPoly::x_power(n) - UPoly::constant(1));
        auto s = idempotent_split(alg, cyclic_augmentation(n));
        CHECK(s.laws_hold());
        REQUIRE(s.augmentation_local);
        CHECK(s.dims[*s.augmentation_local] == 1);
    }
}

TEST_CASE("containment exponents") {
    for (unsigned n = 2; n <= 6; ++n) {
        auto rep = containment_exponent(ring_of("mu" + std::to_string(n)), ring_of("gm"), 4);
        REQUIRE(rep.exponent);
        CHECK(*rep.exponent == 1);
        CHECK(rep.audit());
    }
    auto sl = containment_exponent(ring_of("gm"), ring_of("sl2"), 6);
    REQUIRE(sl.exponent);
    CHECK(*sl.exponent == 2);
    CHECK(sl.audit());
    CHECK(sl.reverse_holds);
    CHECK(sl.augmentation_vanishes);
    auto gl = containment_exponent(ring_of("t2"), ring_of("gl2"), 4);
    REQUIRE(gl.exponent);
    CHECK(*gl.exponent == 2);
    CHECK(gl.audit());

    // undetermined when the bound is too small
    auto und = containment_exponent(ring_of("gm"), ring_of("sl2"), 1);
    CHECK(und.status == SearchStatus::Undetermined);
    CHECK(!und.exponent);
}

TEST_CASE("containment decisions agree with the window oracle") {
    struct Case {
        std::string h, g;
    };
    for (const auto& c : {Case{"gm", "sl2"}, Case{"t2", "gl2"}}) {
        auto rep = containment_exponent(ring_of(c.h), ring_of(c.g), 4);
        REQUIRE(rep.exponent);
        for (const auto& [m, w] : rep.lower_witnesses) CHECK(!oracle::laurent_window_member(w, rep.restricted_generators, 6));
        for (const auto& cert : rep.forward)
            CHECK(oracle::laurent_window_member(cert.target, rep.restricted_generators, 6));
    }
}

TEST_CASE("serial and parallel containment searches agree") {
    auto a = containment_exponent(ring_of("t2"), ring_of("gl2"), 4, Exec::Serial);
    auto b = containment_exponent(ring_of("t2"), ring_of("gl2"), 4, Exec::Parallel);
    REQUIRE(a.exponent == b.exponent);
    for (std::size_t i = 0; i < a.forward.size(); ++i)
        for (std::size_t j = 0; j < a.forward[i].coefficients.size(); ++j)
            CHECK(a.forward[i].coefficients[j] == b.forward[i].coefficients[j]);
}

TEST_CASE("tampered certificates fail the audit") {
    auto rep = containment_exponent(ring_of("gm"), ring_of("sl2"), 6);
    REQUIRE(!rep.forward.empty());
    rep.forward[0].coefficients[0] += Poly::constant(rep.h->ring, 1);
    CHECK(!rep.audit());
}

TEST_CASE("koszul comparison") {
    auto R1 = make_ring({"x"});
    Poly x = Poly::variable(R1, 0);
    auto k1 = koszul_completion_check(R1, {x}, 4);
    CHECK(k1.adic_side_dim == 5);
    CHECK(k1.koszul_side_dim == 5);
    CHECK(k1.isomorphic);

    auto R2 = make_ring({"x", "y"});
    auto k2 = koszul_completion_check(R2, {Poly::variable(R2, 0), Poly::variable(R2, 1)}, 4);
    // monomials x^a y^b with a + b ≤ 4
    std::size_t count = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) ++count;
    CHECK(k2.adic_side_dim == count);
    CHECK(k2.koszul_side_dim == count);
    CHECK(k2.isomorphic);
    CHECK(k2.node_dim == 25);
    CHECK(k2.regular_prediction_holds);

    auto k3 = koszul_completion_check(R1, {x * x}, 2);
    CHECK(k3.adic_tower == std::vector<std::size_t>{2, 4, 6});
    CHECK(k3.koszul_tower == k3.adic_tower);
    CHECK(k3.isomorphic);
}

TEST_CASE("koszul check detects a non-regular sequence") {
    auto R = make_ring({"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    // (x, x) is not regular: node dim differs from the regular prediction (and is infinite)
    CHECK_THROWS_AS(koszul_completion_check(R, {x, x}, 2), UnsupportedError);
    // (x², xy + y², y³) is not a regular sequence in two variables
    auto k = koszul_completion_check(R, {x * x, x * y + y * y, y.pow(3)}, 1);
    CHECK(!k.regular_prediction_holds);
}
