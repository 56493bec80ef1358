#ifndef ASTK_COMPLETION_HPP
#define ASTK_COMPLETION_HPP

#include "astk/algebra.hpp"
#include "astk/groebner.hpp"
#include "astk/matrix.hpp"
#include "astk/rep_ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace astk {

/// R/I^{N+1} for R a (Laurent) polynomial ring modulo `relations`, with a monomial basis,
/// structure constants and the quotient map.
struct TruncatedQuotient {
    RingPtr ring;
    std::vector<Poly> relations;
    IdealGens ideal;
    int precision = 0;
    /// Zero ideal on an infinite-dimensional ring: the quotient is the ring itself and
    /// carries no finite basis.
    bool identity_quotient = false;

    std::vector<Monomial> basis_monomials;  // in the working ring of `reducer`
    std::vector<std::string> basis_labels;
    std::map<Monomial, std::size_t> basis_index;
    FinDimAlgebra algebra;
    /// Images of the ring variables (and of their inverses in Laurent mode).
    std::vector<std::string> generator_names;
    std::vector<Vector> generator_images;
    std::shared_ptr<const IdealMembership> reducer;

    std::size_t dim() const { return basis_monomials.size(); }
    /// Coordinates of the image of f.
    Vector coordinates(const Poly& f) const;
    /// A representative in the ambient ring.
    Poly lift(const Vector& v) const;
};

/// Ideal generators of I^k (all products of k generators).
std::vector<Poly> ideal_power(const std::vector<Poly>& gens, unsigned k);

TruncatedQuotient complete_truncated(const IdealGens& ideal, int precision, const std::vector<Poly>& relations = {});

/// Matrix of the canonical surjection R/I^{N+1} → R/I^{M+1}, M ≤ N.
ExactMatrix lowering_map(const TruncatedQuotient& high, const TruncatedQuotient& low);

/// Coordinates of f in another basis of the quotient (elements given as ambient
/// polynomials), or nullopt when those elements are not a basis.
std::optional<Vector> coordinates_in(const TruncatedQuotient& q, const std::vector<Poly>& basis, const Poly& f);

/// Structure-level checks: commutativity, associativity, unit, and that the quotient map
/// is multiplicative on the generator images.
bool quotient_is_consistent(const TruncatedQuotient& q);

struct IdempotentSet {
    FinDimAlgebra algebra;
    Vector separating;
    UPoly minimal_polynomial;
    std::vector<Vector> idempotents;
    /// The coprime factor of the minimal polynomial belonging to each idempotent.
    std::vector<UPoly> factors;
    std::vector<std::size_t> dims;
    /// Index of the factor on which the augmentation is nonzero.
    std::optional<std::size_t> augmentation_local;
    /// False when an unfactored residual or a non-separating element may hide a finer split.
    bool complete = true;
    std::vector<std::string> notes;

    /// e² = e, e_i e_j = 0 for i ≠ j, Σ e_i = 1.
    bool laws_hold() const;
};

/// Splits a commutative algebra along the factorization of the minimal polynomial of a
/// separating element: rational linear factors, then cyclotomic factors, then the residual.
/// `augmentation` is a covector (ring map to Q). Candidates: `hint` first, then seeded
/// random combinations of basis vectors.
IdempotentSet idempotent_split(const FinDimAlgebra& alg, const Vector& augmentation,
                               const std::optional<Vector>& hint = std::nullopt);

enum class SearchStatus { Pass, Undetermined };

struct ContainmentReport {
    std::string h_name, g_name;
    RepRingPtr h;
    std::vector<Poly> h_generators;           // I_H in R(H)
    std::vector<Poly> restricted_generators;  // res(I_G) in R(H)
    std::vector<Poly> relations;              // of the carrier of R(H)
    unsigned n_max = 0;
    std::optional<unsigned> exponent;
    /// Products of `exponent` generators of I_H in the ideal of restricted generators.
    std::vector<MembershipCertificate> forward;
    /// Restricted generators in I_H.
    std::vector<MembershipCertificate> reverse;
    /// For each m below the exponent: a product of m generators outside the ideal.
    std::vector<std::pair<unsigned, Poly>> lower_witnesses;
    bool augmentation_vanishes = true;
    bool reverse_holds = true;
    SearchStatus status = SearchStatus::Undetermined;

    /// Re-validates every certificate from its stored data alone.
    bool audit() const;
};

/// Least n ≤ n_max with I_H^n ⊆ res(I_G)·R(H), plus res(I_G) ⊆ I_H.
ContainmentReport containment_exponent(const RepRingPtr& h, const RepRingPtr& g, unsigned n_max,
                                       Exec exec = Exec::Parallel);

/// Multisets of size k drawn from {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, unsigned k);

struct KoszulReport {
    std::size_t vars = 0;
    int precision = 0;
    std::vector<Poly> sequence;
    std::size_t node_dim = 0;            // R/(r_i^{N+1})
    std::size_t node_prediction = 0;     // (N+1)^k · dim R/(r)
    std::size_t koszul_side_dim = 0;     // node / I^{N+1}
    std::size_t adic_side_dim = 0;       // R/I^{N+1}
    std::vector<std::size_t> adic_tower;   // dims of R/I^{m+1}, m = 0..N
    std::vector<std::size_t> koszul_tower; // dims of node_m / I^{m+1}
    /// Matrix of the map induced by the identity of R, Koszul side → adic side.
    ExactMatrix witness;
    bool isomorphic = false;
    bool regular_prediction_holds = false;
};

/// Degree-0 comparison of the Koszul-cube node with the I-adic truncation, I = (seq).
KoszulReport koszul_completion_check(const RingPtr& ring, const std::vector<Poly>& seq, int precision);

}  // namespace astk

#endif
