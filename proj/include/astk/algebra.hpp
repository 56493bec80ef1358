#ifndef ASTK_ALGEBRA_HPP
#define ASTK_ALGEBRA_HPP

#include "astk/matrix.hpp"
#include "astk/upoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace astk {

/// Finite-dimensional algebra over Q given by structure constants:
/// basis_i · basis_j = Σ_k table[i][j][k] basis_k.
class FinDimAlgebra {
public:
    FinDimAlgebra() = default;
    FinDimAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> table, Vector unit);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vector& unit() const { return unit_; }
    const std::vector<std::vector<Vector>>& table() const { return table_; }

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector power(const Vector& a, unsigned k) const;
    Vector basis_vector(std::size_t i) const;
    Vector zero() const { return Vector(dim(), Rational(0)); }
    /// Matrix of v ↦ a·v.
    ExactMatrix multiplication_matrix(const Vector& a) const;
    Vector evaluate(const UPoly& p, const Vector& a) const;
    /// Monic polynomial of least degree killing a (Krylov sequence).
    UPoly minimal_polynomial(const Vector& a) const;

    bool is_commutative() const;
    bool is_associative() const;
    bool is_unital() const;

    /// Dimension of the ideal generated by the given elements.
    std::size_t ideal_dimension(const std::vector<Vector>& gens) const;
    /// Coefficients c_i (algebra elements) with Σ c_i·gens[i] = f, or nullopt.
    std::optional<std::vector<Vector>> ideal_member(const Vector& f, const std::vector<Vector>& gens) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> table_;
    Vector unit_;
};

/// Witness that target = Σ coefficients[i]·generators[i] inside a finite-dimensional algebra.
struct AlgebraCertificate {
    std::shared_ptr<const FinDimAlgebra> algebra;
    std::vector<Vector> generators;
    std::vector<Vector> coefficients;
    Vector target;
    bool validate() const;
};

/// Q[var]/(m) with basis 1, var, ..., var^{deg m − 1}. m must have positive degree.
FinDimAlgebra quotient_algebra(const UPoly& m, const std::string& var = "t");

}  // namespace astk

#endif
