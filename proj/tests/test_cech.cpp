#include <doctest.h>

#include "astk/cech.hpp"
#include "support/oracles.hpp"

using namespace astk;

namespace {

HopfAlgebraData hopf(const std::string& g) { return hopf_from_group(parse_group_spec(g)); }

}  // namespace

TEST_CASE("hopf algebras of finite groups") {
    auto m2 = hopf("mu2");
    CHECK(m2.dim() == 2);
    CHECK(m2.comult[1] == SparseVec{{3, Rational(1)}});
    CHECK(m2.antipode[1] == SparseVec{{1, Rational(1)}});
    CHECK(!m2.axiom_failure());

    auto triv = hopf("trivial");
    CHECK(triv.dim() == 1);
    auto s3 = hopf("s3");
    CHECK(s3.dim() == 6);
    CHECK(s3.counit == Vector{1, 0, 0, 0, 0, 0});
    CHECK(s3.genuine_dim == 3);

    auto prod = hopf("mu2*mu3");
    CHECK(prod.dim() == 6);
    CHECK(!prod.axiom_failure());
    CHECK(prod.genuine_dim == 6);

    CHECK_THROWS_AS(hopf("gm"), DomainError);
}

TEST_CASE("broken hopf data is caught") {
    auto h = hopf("mu3");
    h.antipode[1] = SparseVec{{1, Rational(1)}};
    REQUIRE(h.axiom_failure());
    CHECK(h.axiom_failure()->find("antipode") != std::string::npos);
    CHECK_THROWS_AS(cech_nerve(h, 3), IntegrityError);

    auto g = hopf("s3");
    g.comult[0].pop_back();
    CHECK(g.axiom_failure());
}

TEST_CASE("nerve levels and identities") {
    auto cs = cech_nerve(hopf("mu2"), 3);
    CHECK(cs.level_dims == std::vector<std::size_t>{1, 2, 4, 8});
    CHECK(!cs.identity_failure());

    auto t = cech_nerve(hopf("trivial"), 3);
    CHECK(t.level_dims == std::vector<std::size_t>{1, 1, 1, 1});
    for (const auto& lvl : t.cofaces)
        for (const auto& d : lvl) CHECK(d.columns == std::vector<SparseVec>{{{0, Rational(1)}}});

    auto s = cech_nerve(hopf("s3"), 2);
    CHECK(s.level_dims == std::vector<std::size_t>{1, 6, 36});
    auto h = hopf("s3");
    for (std::size_t i = 0; i < 6; ++i) CHECK(s.cofaces[1][1].columns[i] == h.comult[i]);

    // swap two cofaces: identities must fail
    auto bad = cech_nerve(hopf("mu3"), 3);
    std::swap(bad.cofaces[1][0], bad.cofaces[1][2]);
    CHECK(bad.identity_failure());
}

TEST_CASE("serial and parallel coface assembly agree") {
    auto h = hopf("mu4");
    auto a = cech_nerve(h, 4, Exec::Serial);
    auto b = cech_nerve(h, 4, Exec::Parallel);
    for (std::size_t m = 0; m < a.cofaces.size(); ++m)
        for (std::size_t i = 0; i < a.cofaces[m].size(); ++i) CHECK(a.cofaces[m][i] == b.cofaces[m][i]);
}

TEST_CASE("normalized cohomology of mu_n") {
    for (unsigned n = 1; n <= 6; ++n) {
        CAPTURE(n);
        auto cs = cech_nerve(hopf("mu" + std::to_string(n)), 4);
        auto r = normalized_cohomology(cs, 2);
        CHECK(r.h_dims == std::vector<std::size_t>{1, 0, 0});
        CHECK(r.equalizer_dim == 1);
        CHECK(r.normalized_dims == r.predicted_normalized_dims);
        CHECK(r.squares_to_zero);
        CHECK(r.genuine_dim == n);
    }
}

TEST_CASE("normalized and unnormalized complexes agree") {
    for (unsigned n = 2; n <= 4; ++n) {
        auto r = normalized_cohomology(cech_nerve(hopf("mu" + std::to_string(n)), 3), 2);
        CHECK(r.h_dims == oracle::cobar_mu_cohomology(n, 2));
    }
}

TEST_CASE("finite group function algebras") {
    auto r = normalized_cohomology(cech_nerve(hopf("s3"), 2), 1);
    CHECK(r.h_dims[0] == 1);
    CHECK(r.equalizer_dim == 1);
    CHECK(r.normalized_dims == r.predicted_normalized_dims);
    auto t = normalized_cohomology(cech_nerve(hopf("trivial"), 3), 2);
    CHECK(t.h_dims == std::vector<std::size_t>{1, 0, 0});
    CHECK_THROWS_AS(normalized_cohomology(cech_nerve(hopf("mu2"), 2), 2), DomainError);
}

TEST_CASE("descent gap") {
    auto one = descent_gap(parse_group_spec("mu1"));
    CHECK(one.genuine == 1);
    CHECK(one.totalization == 1);
    CHECK(one.completed == 1);
    CHECK(!one.gap);
    for (unsigned n = 2; n <= 6; ++n) {
        auto g = descent_gap(parse_group_spec("mu" + std::to_string(n)));
        CHECK(g.genuine == n);
        CHECK(g.totalization == 1);
        CHECK(g.completed == 1);
        CHECK(g.gap);
        CHECK(g.reconciled);
    }
    CHECK_THROWS_AS(descent_gap(parse_group_spec("s3")), DomainError);
}
