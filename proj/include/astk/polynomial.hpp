#ifndef ASTK_POLYNOMIAL_HPP
#define ASTK_POLYNOMIAL_HPP

#include "astk/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace astk {

enum class CoeffDomain { Integers, Rationals };
enum class RingMode { Polynomial, Laurent };

/// Ambient (Laurent) polynomial ring: variable names, coefficient domain, mode.
struct Ring {
    std::vector<std::string> variables;
    CoeffDomain coeffs = CoeffDomain::Rationals;
    RingMode mode = RingMode::Polynomial;

    std::size_t nvars() const { return variables.size(); }
    bool laurent() const { return mode == RingMode::Laurent; }
    bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables,
                  RingMode mode = RingMode::Polynomial,
                  CoeffDomain coeffs = CoeffDomain::Rationals);

/// Same variables and mode, coefficients lifted to the rationals.
RingPtr rationalized(const RingPtr& ring);

/// Exponent vector, one slot per ring variable. Negative entries only in Laurent mode.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Sparse exact polynomial over a shared Ring. Terms are kept in descending
/// lexicographic order of exponent vectors and never carry zero coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, std::size_t index, int power = 1);
    static Poly monomial(RingPtr ring, Monomial exps, const Rational& c = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;

    /// Adds c·m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    /// Multiplication by the monomial c·m.
    Poly mul_term(const Monomial& m, const Rational& c) const;
    /// Nonnegative power; negative powers are allowed for Laurent monomials only.
    Poly pow(unsigned k) const;

    bool operator==(const Poly& other) const;

    /// Minimum exponent of each variable over the support (0 for the zero polynomial).
    Monomial min_exponents() const;
    /// Largest total degree occurring (0 for the zero polynomial).
    int degree() const;
    bool has_negative_exponents() const;

    /// Evaluates at a rational point (Laurent points must be nonzero).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Ring homomorphism defined by images of the variables (images share a ring).
    /// Negative exponents require an image for the inverse, supplied in `inverses`.
    Poly substitute(const std::vector<Poly>& images,
                    const std::vector<Poly>& inverses = {}) const;

    /// Re-homes the terms in another ring with the same number of variables.
    Poly with_ring(RingPtr ring) const;

    /// Human-readable form, e.g. "x^2*y - 3/2*x^-1 + 1".
    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

void require_same_ring(const Poly& a, const Poly& b);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Reads the to_string() syntax back: sums of products of rationals, variables with integer
/// exponents (negative ones in Laurent mode only) and parenthesized sums with nonnegative
/// exponents. "2x" is read as 2*x. Throws DomainError on malformed input.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace astk

#endif
