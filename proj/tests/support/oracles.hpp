// Independent reference computations used only by the test suites.
#ifndef ASTK_TESTS_ORACLES_HPP
#define ASTK_TESTS_ORACLES_HPP

#include "astk/algebra.hpp"
#include "astk/groebner.hpp"
#include "astk/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using astk::Poly;
using astk::Rational;

/// Seed from ASTK_SEED, falling back to a fixed value.
std::uint64_t seed();

/// Textbook Gaussian elimination over Q (no fraction-free tricks).
std::size_t naive_rank(std::vector<std::vector<Rational>> rows);

/// f ∈ (gens) decided on a degree window: is there a combination Σ c_i g_i = f with
/// deg(c_i g_i) ≤ window? Polynomial mode.
bool window_member(const Poly& f, const std::vector<Poly>& gens, int window);

/// Laurent analogue: cofactors supported on exponents in [-box, box]^n.
bool laurent_window_member(const Poly& f, const std::vector<Poly>& gens, int box);

/// Random polynomial with `terms` terms, total degree ≤ max_degree, small coefficients.
Poly random_poly(std::mt19937_64& rng, const astk::RingPtr& ring, int max_degree, int terms);

/// e_k(t_1..t_n) by summing over k-subsets of the variables.
Poly elementary_by_subsets(const astk::RingPtr& ring, unsigned k);

/// dim H^k, k ≤ max_degree, of the unnormalized cobar complex of Q[Z/n]^* (group-like basis),
/// built from tuples directly.
std::vector<std::size_t> cobar_mu_cohomology(unsigned n, unsigned max_degree);

/// dim HH_k, k ≤ max_degree, from the full (unnormalized) Hochschild complex A^{⊗(n+1)}.
std::vector<std::size_t> hochschild_unnormalized(const astk::FinDimAlgebra& a, unsigned max_degree);

}  // namespace oracle

#endif
