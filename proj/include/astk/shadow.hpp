#ifndef ASTK_SHADOW_HPP
#define ASTK_SHADOW_HPP

#include "astk/algebra.hpp"
#include "astk/upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace astk {

using GradedDims = std::map<unsigned, std::size_t>;

/// HH_i(Q[x]/(f)) for i ≤ N from the 2-periodic complex A ← A ← A ← …
/// with differentials 0 (odd) and multiplication by f'(x) (even).
GradedDims hh_monogenic(const UPoly& f, unsigned max_degree);

/// f = x²
GradedDims hh_dual_numbers(unsigned max_degree);

/// HH_i from the normalized Hochschild complex A ⊗ Ā^{⊗n}. The unit must be basis vector 0.
GradedDims hh_bar_complex(const FinDimAlgebra& a, unsigned max_degree);

/// p/q with q(0) ≠ 0, reduced, q(0) = 1. Stands in for an element of Q[[x]].
class RationalSeries {
public:
    RationalSeries() : num_(), den_(UPoly::constant(1)) {}
    RationalSeries(UPoly num, UPoly den);
    static RationalSeries polynomial(UPoly p) { return RationalSeries(std::move(p), UPoly::constant(1)); }

    const UPoly& numerator() const { return num_; }
    const UPoly& denominator() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Coefficients of x^0..x^precision.
    std::vector<Rational> expand(unsigned precision) const;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    bool operator==(const RationalSeries&) const = default;
    std::string to_string() const;

private:
    UPoly num_, den_;
};

enum class ShadowBase { Rationals, DualNumbers };
std::string shadow_base_name(ShadowBase b);
FinDimAlgebra shadow_base_algebra(ShadowBase b);

struct ShadowDegree {
    unsigned degree = 0;
    std::size_t coefficient_dim = 0;  // reduced HH in degree + 1
    std::size_t polynomial_rank = 0;  // coefficient_dim · (P + 1)
    std::size_t series_rank = 0;      // same truncation of the series corner
    std::size_t inclusion_kernel = 0;
};

struct ShadowPair {
    ShadowBase base = ShadowBase::DualNumbers;
    unsigned max_degree = 0;
    unsigned precision = 0;
    std::string shared_summand;  // carried as a label on both sides
    GradedDims hh;
    GradedDims reduced_hh;
    std::vector<ShadowDegree> degrees;
};

ShadowPair bga_shadow(ShadowBase base, unsigned max_degree, unsigned precision);

struct DefectWitness {
    unsigned degree = 0;
    RationalSeries series;
    std::size_t coefficient_dim = 0;
    /// Rank of the reduction map to the control row in this degree.
    std::size_t control_image_rank = 0;

    /// Room in the pullback (the reduction map has a kernel in this degree) and
    /// non-polynomiality, re-derived by polynomial division.
    bool validate() const;
};

struct DefectReport {
    ShadowBase base = ShadowBase::DualNumbers;
    unsigned max_degree = 0;
    std::vector<std::size_t> coefficient_dims;  // degrees 1..N, top row
    std::vector<std::size_t> control_dims;      // degrees 1..N, base Q row
    std::vector<DefectWitness> witnesses;
    bool cartesian = false;
    std::string scope_note;
};

/// The comparison square poly/base, series/base, poly/Q, series/Q per degree 1..N.
/// Throws DomainError for N = 0 and IntegrityError if base Q[ε] yields no witness.
DefectReport pullback_defect(unsigned max_degree, ShadowBase base = ShadowBase::DualNumbers);

}  // namespace astk

#endif
