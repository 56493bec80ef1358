#include <doctest.h>

#include "astk/algebra.hpp"
#include "astk/cochain.hpp"
#include "astk/matrix.hpp"
#include "astk/sparse.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace astk;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int sparsity) {
    std::uniform_int_distribution<int> v(-5, 5), z(0, sparsity);
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (z(rng) == 0) m(i, j) = Rational(v(rng)) / static_cast<long>(1 + (i + j) % 4);
    return m;
}

std::vector<Vector> rows_of(const ExactMatrix& m) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace

TEST_CASE("Bareiss rank agrees with textbook elimination and across kernels") {
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 9);
        ExactMatrix m = random_matrix(rng, dim(rng), dim(rng), trial % 3);
        // force some dependent rows
        if (m.rows() > 2)
            for (std::size_t j = 0; j < m.cols(); ++j) m(m.rows() - 1, j) = m(0, j) * 2 - m(1, j);
        const std::size_t r = m.rank(Exec::Serial);
        CHECK(r == oracle::naive_rank(rows_of(m)));
        CHECK(r == m.rank(Exec::Parallel));
        auto es = m.echelon(Exec::Serial), ep = m.echelon(Exec::Parallel);
        CHECK(es.rows == ep.rows);
        CHECK(es.pivots == ep.pivots);
        auto ker = m.kernel();
        CHECK(ker.size() + r == m.cols());  // rank + nullity = cols
        for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
        CHECK(m.image().size() == r);
    }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    ExactMatrix a = ExactMatrix::from_rows({{1, 2}, {2, 4}}, 2);
    auto x = a.solve({3, 6});
    REQUIRE(x);
    CHECK(a.apply(*x) == Vector{3, 6});
    CHECK_FALSE(a.solve({1, 0}));
}

TEST_CASE("sparse echelon agrees with dense elimination") {
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int trial = 0; trial < 30; ++trial) {
        ExactMatrix m = random_matrix(rng, 7, 10, 2);
        SparseEchelon e(10);
        for (std::size_t i = 0; i < m.rows(); ++i) e.insert(to_sparse(m.row(i)));
        CHECK(e.rank() == m.rank());
        auto ker = e.kernel();
        CHECK(ker.size() == m.kernel().size());
        for (const auto& v : ker) CHECK(is_zero_vector(m.apply(to_dense(v, 10))));
    }
}

TEST_CASE("complex cohomology examples") {
    SUBCASE("zero complex") {
        CochainComplexQ cx{{0, 0}, {ExactMatrix(0, 0)}};
        CHECK(complex_cohomology(cx, 0).dimension == 0);
    }
    SUBCASE("Q -0-> Q") {
        CochainComplexQ cx{{1, 1}, {ExactMatrix(1, 1)}};
        CHECK(complex_cohomology(cx, 0).dimension == 1);
        CHECK(complex_cohomology(cx, 1).dimension == 1);
    }
    SUBCASE("Q -1-> Q is acyclic") {
        CochainComplexQ cx{{1, 1}, {ExactMatrix::identity(1)}};
        CHECK(complex_cohomology(cx, 0).dimension == 0);
        CHECK(complex_cohomology(cx, 1).dimension == 0);
    }
    SUBCASE("d∘d ≠ 0 is an integrity error") {
        CochainComplexQ cx{{1, 1, 1}, {ExactMatrix::identity(1), ExactMatrix::identity(1)}};
        CHECK_THROWS_AS(complex_cohomology(cx, 1), IntegrityError);
    }
}

TEST_CASE("cohomology rank formula matches an explicit quotient basis (property)") {
    std::mt19937_64 rng(oracle::seed() + 2);
    for (int trial = 0; trial < 25; ++trial) {
        // build d1∘d0 = 0 by taking d1 with rows in the left kernel of d0
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t a = dim(rng), b = dim(rng) + 2, c = dim(rng);
        ExactMatrix d0 = random_matrix(rng, b, a, 1);
        auto left = d0.transpose().kernel();
        ExactMatrix d1(c, b);
        std::uniform_int_distribution<int> v(-2, 2);
        for (std::size_t i = 0; i < c; ++i)
            for (const auto& w : left) {
                int s = v(rng);
                for (std::size_t j = 0; j < b; ++j) d1(i, j) += w[j] * s;
            }
        CochainComplexQ cx{{a, b, c}, {d0, d1}};
        REQUIRE(cx.is_complex());
        auto h = complex_cohomology(cx, 1);
        CHECK(h.basis.size() == h.dimension);
        CHECK(h.dimension == b - d1.rank() - d0.rank());
    }
}

TEST_CASE("finite-dimensional algebra: Q[t]/(t^3-1)") {
    const std::size_t n = 3;
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j][(i + j) % n] = 1;
    FinDimAlgebra A({"1", "t", "t^2"}, table, {1, 0, 0});
    CHECK(A.is_commutative());
    CHECK(A.is_associative());
    CHECK(A.is_unital());
    auto mp = A.minimal_polynomial(A.basis_vector(1));
    CHECK(mp == UPoly({-1, 0, 0, 1}));
    Vector tm1{-1, 1, 0};
    CHECK(A.ideal_dimension({tm1}) == 2);
    auto cert = A.ideal_member(Vector{1, -2, 1}, {tm1});
    REQUIRE(cert);
    CHECK(A.multiply((*cert)[0], tm1) == Vector{1, -2, 1});
    CHECK_FALSE(A.ideal_member(A.unit(), {tm1}));
}
