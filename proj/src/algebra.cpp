#include "astk/algebra.hpp"

namespace astk {

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> table, Vector unit)
    : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n || unit_.size() != n) throw DomainError("structure constants do not match dimension");
    for (const auto& row : table_) {
        if (row.size() != n) throw DomainError("structure constants do not match dimension");
        for (const auto& v : row)
            if (v.size() != n) throw DomainError("structure constants do not match dimension");
    }
}

Vector FinDimAlgebra::basis_vector(std::size_t i) const {
    Vector v(dim(), Rational(0));
    v.at(i) = 1;
    return v;
}

Vector FinDimAlgebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t n = dim();
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const Rational ab = a[i] * b[j];
            const Vector& t = table_[i][j];
            for (std::size_t k = 0; k < n; ++k)
                if (t[k] != 0) out[k] += ab * t[k];
        }
    }
    return out;
}

Vector FinDimAlgebra::power(const Vector& a, unsigned k) const {
    Vector r = unit_;
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

ExactMatrix FinDimAlgebra::multiplication_matrix(const Vector& a) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
    return ExactMatrix::from_columns(cols, dim());
}

Vector FinDimAlgebra::evaluate(const UPoly& p, const Vector& a) const {
    Vector acc = zero();
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = multiply(acc, a);
        for (std::size_t i = 0; i < dim(); ++i) acc[i] += p.coeffs()[k] * unit_[i];
    }
    return acc;
}

UPoly FinDimAlgebra::minimal_polynomial(const Vector& a) const {
    std::vector<Vector> powers{unit_};
    for (std::size_t k = 1; k <= dim() + 1; ++k) {
        Vector next = multiply(powers.back(), a);
        // solve Σ c_i a^i = a^k over the previous powers
        ExactMatrix m = ExactMatrix::from_columns(powers, dim());
        auto sol = m.solve(next);
        if (sol) {
            std::vector<Rational> coeffs(k + 1, Rational(0));
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*sol)[i];
            coeffs[k] = 1;
            return UPoly(std::move(coeffs));
        }
        powers.push_back(std::move(next));
    }
    throw IntegrityError("minimal polynomial search exceeded the dimension");
}

bool FinDimAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

bool FinDimAlgebra::is_associative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) {
                Vector left = multiply(table_[i][j], basis_vector(k));
                Vector right = multiply(basis_vector(i), table_[j][k]);
                if (left != right) return false;
            }
    return true;
}

bool FinDimAlgebra::is_unital() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        Vector e = basis_vector(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e) return false;
    }
    return true;
}

std::size_t FinDimAlgebra::ideal_dimension(const std::vector<Vector>& gens) const {
    std::vector<Vector> span;
    for (const auto& g : gens)
        for (std::size_t j = 0; j < dim(); ++j) span.push_back(multiply(basis_vector(j), g));
    return vector_rank(span, dim());
}

std::optional<std::vector<Vector>> FinDimAlgebra::ideal_member(const Vector& f, const std::vector<Vector>& gens) const {
    const std::size_t n = dim();
    std::vector<Vector> cols;
    for (const auto& g : gens)
        for (std::size_t j = 0; j < n; ++j) cols.push_back(multiply(basis_vector(j), g));
    std::vector<Vector> coeffs(gens.size(), zero());
    if (is_zero_vector(f)) return coeffs;
    if (cols.empty()) return std::nullopt;
    auto sol = ExactMatrix::from_columns(cols, n).solve(f);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) coeffs[i][j] = (*sol)[i * n + j];
    return coeffs;
}

bool AlgebraCertificate::validate() const {
    if (!algebra || generators.size() != coefficients.size()) return false;
    Vector sum = algebra->zero();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        Vector p = algebra->multiply(coefficients[i], generators[i]);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += p[k];
    }
    return sum == target;
}

FinDimAlgebra quotient_algebra(const UPoly& m, const std::string& var) {
    const int d = m.degree();
    if (d < 1) throw DomainError("quotient_algebra needs a modulus of positive degree");
    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto r = UPoly::divmod(UPoly::x_power(static_cast<unsigned>(i + j)), m).second;
            for (std::size_t k = 0; k < n; ++k) table[i][j][k] = r.coeff(k);
        }
    Vector unit(n, Rational(0));
    unit[0] = 1;
    return FinDimAlgebra(labels, table, unit);
}

}  // namespace astk
