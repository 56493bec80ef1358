#ifndef ASTK_MATRIX_HPP
#define ASTK_MATRIX_HPP

#include "astk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace astk {

using Vector = std::vector<Rational>;

/// Execution policy for the elimination kernels. The serial path is the reference
/// implementation; the parallel path splits row updates across OpenMP threads.
enum class Exec { Serial, Parallel };

namespace kernels {

using IntRow = std::vector<Integer>;

/// Fraction-free row echelon form: rows[r] has its first nonzero entry in pivots[r].
struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots;
};

/// Bareiss elimination on an integer matrix, one thread.
Echelon bareiss_serial(std::vector<IntRow> m, std::size_t cols);
/// Bareiss elimination with the per-step row updates distributed by OpenMP.
Echelon bareiss_parallel(std::vector<IntRow> m, std::size_t cols);

}  // namespace kernels

/// Dense exact rational matrix, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static ExactMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Vector apply(const Vector& v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const ExactMatrix&) const = default;

    /// Rows stacked below this matrix (column counts must match).
    ExactMatrix vstack(const ExactMatrix& below) const;

    std::size_t rank(Exec exec = Exec::Parallel) const;
    /// Basis of the null space, in reduced form: one vector per free column.
    std::vector<Vector> kernel(Exec exec = Exec::Parallel) const;
    /// Basis of the column space (the pivot columns).
    std::vector<Vector> image(Exec exec = Exec::Parallel) const;
    /// Some x with A·x = b, or nullopt if inconsistent.
    std::optional<Vector> solve(const Vector& b, Exec exec = Exec::Parallel) const;

    /// Echelon form of the row-scaled integer matrix.
    kernels::Echelon echelon(Exec exec = Exec::Parallel) const;
    /// Reduced row echelon form over Q plus pivot columns.
    std::pair<std::vector<Vector>, std::vector<std::size_t>> rref(Exec exec = Exec::Parallel) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank of a set of vectors of common length.
std::size_t vector_rank(const std::vector<Vector>& vs, std::size_t dim);
bool is_zero_vector(const Vector& v);

}  // namespace astk

#endif
