#ifndef ASTK_REP_RING_HPP
#define ASTK_REP_RING_HPP

#include "astk/algebra.hpp"
#include "astk/groebner.hpp"
#include "astk/groups.hpp"

#include <memory>
#include <string>
#include <vector>

namespace astk {

enum class RepModel { LaurentInvariant, Polynomial, CyclicQuotient, FiniteFree };

std::string model_name(RepModel m);

/// Presentation of the representation ring, rationalized. Integral structure is kept
/// by construction: every distinguished generator and structure constant is integral.
struct RepRingPresentation {
    GroupSpec group;
    RepModel model = RepModel::LaurentInvariant;

    // polynomial-type carriers
    RingPtr ring;
    /// cyclic_orders[i] = n imposes t_i^n = 1 (0 = no relation).
    std::vector<unsigned> cyclic_orders;
    /// Each block of variables is permuted by a symmetric factor of the Weyl group.
    std::vector<std::vector<std::size_t>> weyl_blocks;
    /// Point at which the augmentation evaluates a carrier polynomial.
    std::vector<Rational> unit_point;
    /// Ring generators of the carrier (e_i, e_n^{-1}, c, t, x_i) with display names.
    std::vector<Poly> distinguished;
    std::vector<std::string> distinguished_names;
    /// Augmentation-ideal generators and their display names.
    std::vector<Poly> ideal_generators;
    std::vector<std::string> ideal_names;

    // finite-free carrier
    std::shared_ptr<const FiniteGroupData> finite;
    FinDimAlgebra algebra;  // basis = rational irreducible characters

    bool polynomial_type() const { return model != RepModel::FiniteFree; }
    /// Normal form modulo the cyclic relations.
    Poly reduce(const Poly& f) const;
    /// The relations t^n − 1 of cyclic factors.
    std::vector<Poly> relations() const;
    /// Symmetrization check under the Weyl group.
    bool weyl_invariant(const Poly& f) const;
};

using RepRingPtr = std::shared_ptr<const RepRingPresentation>;

/// Element of a representation ring. Polynomial-type models store `value`,
/// the finite-free model stores `coords` (coefficients on irreducible characters).
class RepElement {
public:
    RepElement() = default;
    /// Throws DomainError if f is not Weyl-invariant or lives in another ring.
    static RepElement from_poly(RepRingPtr owner, const Poly& f);
    static RepElement from_coords(RepRingPtr owner, Vector coords);
    static RepElement one(RepRingPtr owner);
    static RepElement zero(RepRingPtr owner);
    static RepElement constant(RepRingPtr owner, const Rational& c);

    const RepRingPtr& owner() const { return owner_; }
    const Poly& value() const { return value_; }
    const Vector& coords() const { return coords_; }

    friend RepElement operator+(const RepElement& a, const RepElement& b);
    friend RepElement operator-(const RepElement& a, const RepElement& b);
    friend RepElement operator*(const RepElement& a, const RepElement& b);
    RepElement pow(unsigned k) const;
    bool operator==(const RepElement& o) const;
    bool is_zero() const;
    std::string to_string() const;

private:
    RepRingPtr owner_;
    Poly value_;
    Vector coords_;
};

RepRingPtr rep_ring(const GroupSpec& g);

/// Generators of the augmentation ideal, as ring elements.
std::vector<RepElement> as_ideal_elements(const RepRingPtr& r);
/// Same generators as an ideal of the carrier ring (polynomial-type models only).
IdealGens as_ideal(const RepRingPtr& r);

Rational augmentation(const RepElement& v);

/// Restriction along a supported embedding H ⊂ G:
/// GL(n) ⊃ T^n, G_m ⊃ μ_n, SL2 ⊃ T^1, and G ⊃ G (identity).
RepElement restriction(const RepRingPtr& g, const RepRingPtr& h, const RepElement& v);
/// Character restriction to a subgroup; embedding[i] is the image in G of element i of H.
RepElement restriction_finite(const RepRingPtr& g, const RepRingPtr& h, const std::vector<std::size_t>& embedding,
                              const RepElement& v);
bool restriction_supported(const GroupSpec& g, const GroupSpec& h);

/// ψ_ℓ. Finite groups need power maps for ℓ in the group file.
RepElement adams(unsigned ell, const RepElement& v);

/// Σ_χ (dim χ / ⟨χ,χ⟩)·[χ]; finite groups and μ_n.
RepElement regular_representation(const RepRingPtr& r);

/// Class function values of a finite-free element, one per conjugacy class.
std::vector<Rational> character_values(const RepElement& v);
/// Decomposes a class function into the rational irreducible characters.
RepElement from_class_function(const RepRingPtr& r, const std::vector<Rational>& values);

/// Eigen-analysis of ψ_ℓ on Laurent polynomials in one variable of exponent |k| ≤ window:
/// the largest subspace mapped into itself, the characteristic polynomial of ψ_ℓ on it,
/// its rational eigenvalues and their eigenspaces.
struct AdamsEigen {
    unsigned ell = 2;
    int window = 6;
    std::vector<Poly> stable_basis;
    UPoly characteristic;
    std::vector<Rational> eigenvalues;
    std::vector<std::vector<Poly>> eigenspaces;
};
AdamsEigen adams_eigenspaces(unsigned ell, int window);

/// Characteristic polynomial by the Faddeev–LeVerrier recursion.
UPoly characteristic_polynomial(const ExactMatrix& a);

}  // namespace astk

#endif
