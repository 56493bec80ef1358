#ifndef ASTK_SPARSE_HPP
#define ASTK_SPARSE_HPP

#include "astk/matrix.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace astk {

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// a + s·b
SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t dim);

/// Linear map stored by columns: columns[j] is the image of basis vector j.
struct SparseMap {
    std::size_t rows = 0;
    std::vector<SparseVec> columns;

    std::size_t cols() const { return columns.size(); }
    SparseVec apply(const SparseVec& v) const;
    /// this ∘ other
    SparseMap compose(const SparseMap& other) const;
    SparseMap scaled(const Rational& s) const;
    friend SparseMap operator+(const SparseMap& a, const SparseMap& b);
    bool operator==(const SparseMap&) const = default;
    /// Row-major copy (each row as a sparse vector over the column indices).
    std::vector<SparseVec> row_vectors() const;
    ExactMatrix to_dense() const;
};

/// Incremental exact Gaussian elimination over sparse rows. Pivot rows are kept with a
/// leading 1; `reduce()` turns the stored rows into reduced row echelon form.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

    /// Adds a row; returns false if it was dependent on the rows already present.
    bool insert(SparseVec v);
    std::size_t rank() const { return pivots_.size(); }
    /// Reduced form of v against the current pivots (zero iff v lies in the row span).
    SparseVec residue(SparseVec v) const;

    void reduce();
    /// Null-space basis of the inserted rows, one vector per free column (calls reduce()).
    std::vector<SparseVec> kernel();
    const std::map<std::uint32_t, SparseVec>& pivots() const { return pivots_; }

private:
    std::size_t dim_;
    std::map<std::uint32_t, SparseVec> pivots_;
};

}  // namespace astk

#endif
