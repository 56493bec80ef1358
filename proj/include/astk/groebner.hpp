#ifndef ASTK_GROEBNER_HPP
#define ASTK_GROEBNER_HPP

#include "astk/polynomial.hpp"
#include "astk/term_order.hpp"

#include <optional>
#include <vector>

namespace astk {

/// A finite generating list of an ideal; all generators live in `ring`.
struct IdealGens {
    RingPtr ring;
    std::vector<Poly> generators;

    IdealGens() = default;
    IdealGens(RingPtr r, std::vector<Poly> gens);

    std::size_t size() const { return generators.size(); }
};

/// Witness that target = Σ coefficients[i]·generators[i].
struct MembershipCertificate {
    std::vector<Poly> generators;
    std::vector<Poly> coefficients;
    Poly target;

    /// Re-evaluates the combination exactly; needs nothing but the stored data.
    bool validate() const;
};

struct Division {
    std::vector<Poly> quotients;
    Poly remainder;
};

struct GroebnerBasis {
    std::vector<Poly> basis;
    TermOrder order;
    IdealGens source;
    /// cofactors[j][i]: basis[j] = Σ_i cofactors[j][i]·source.generators[i]. Empty if untracked.
    std::vector<std::vector<Poly>> cofactors;

    /// Full multivariate division by the basis.
    Division divide(const Poly& f) const;
    Poly normal_form(const Poly& f) const { return divide(f).remainder; }
    bool is_unit_ideal() const;

    /// Leading monomial of a basis element under `order`.
    Monomial leading_monomial(std::size_t j) const;

    /// Buchberger's criterion: every S-polynomial of basis pairs reduces to zero.
    bool satisfies_buchberger() const;
    /// Every source generator reduces to zero.
    bool contains_source() const;
};

Monomial leading_monomial(const Poly& f, const TermOrder& order);
Rational leading_coefficient(const Poly& f, const TermOrder& order);
Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order);

/// Reduced Gröbner basis by Buchberger's algorithm with the normal selection strategy
/// (lcm degree, then pair indices). Rational coefficients and polynomial mode only.
GroebnerBasis groebner_basis(const IdealGens& gens, const TermOrder& order, bool track_cofactors = true);

/// Certificate from a basis computed with cofactors, or nullopt if f reduces to nonzero.
std::optional<MembershipCertificate> member_via(const GroebnerBasis& gb, const Poly& f);

std::optional<MembershipCertificate> ideal_member(const Poly& f, const IdealGens& gens,
                                                  const TermOrder& order);

/// Membership in the Laurent ring through the saturation variable s with s·x_1···x_n − 1.
std::optional<MembershipCertificate> laurent_member(const Poly& f, const IdealGens& gens);

/// Decides membership of many elements in J + (relations) inside the (Laurent or
/// polynomial) ambient ring of J. The Gröbner basis is computed once at construction.
/// Certificates align with J's generators followed by the relations.
class IdealMembership {
public:
    IdealMembership(IdealGens ideal, std::vector<Poly> relations = {});

    std::optional<MembershipCertificate> member(const Poly& f) const;
    /// Normal form of the shifted element in the working polynomial ring; zero iff member.
    Poly working_normal_form(const Poly& f) const;

    /// Image of f under the ring embedding into the working polynomial ring
    /// (x_i^{-1} ↦ s·∏_{j≠i} x_j in the Laurent case).
    Poly embed(const Poly& f) const;
    /// Normal form of embed(f): the canonical representative of f modulo the ideal.
    Poly normal_form(const Poly& f) const { return gb_.normal_form(embed(f)); }
    /// Back from the working ring (s ↦ (x_1···x_n)^{-1}).
    Poly to_ambient(const Poly& p) const { return from_working(p); }
    const RingPtr& working_ring() const { return working_; }
    /// Monomials of the working ring not divisible by any leading monomial, in
    /// descending order, or nullopt when the quotient is infinite-dimensional.
    std::optional<std::vector<Monomial>> standard_monomials() const;
    const std::vector<Poly>& all_generators() const { return all_gens_; }
    const GroebnerBasis& basis() const { return gb_; }

private:
    Poly to_working(const Poly& f, Monomial& shift) const;
    Poly from_working(const Poly& p) const;

    RingPtr ambient_;
    RingPtr working_;
    std::vector<Poly> all_gens_;
    std::vector<Monomial> gen_shifts_;
    GroebnerBasis gb_;
    bool laurent_ = false;
};

}  // namespace astk

#endif
