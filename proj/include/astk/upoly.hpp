#ifndef ASTK_UPOLY_HPP
#define ASTK_UPOLY_HPP

#include "astk/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace astk {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly x_power(unsigned k, const Rational& c = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly monic() const;
    Rational operator()(const Rational& x) const;
    UPoly derivative() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& a);
    bool operator==(const UPoly&) const = default;

    /// Euclidean division: a = q·b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    UPoly pow(unsigned k) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct Bezout {
    UPoly g, s, t;  // s·a + t·b = g, g monic
};
Bezout extended_gcd(const UPoly& a, const UPoly& b);

/// Rational roots with multiplicities via the rational root theorem.
std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p);

/// The d-th cyclotomic polynomial.
UPoly cyclotomic(unsigned d);

}  // namespace astk

#endif
