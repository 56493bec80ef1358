#include "astk/matrix.hpp"

#include <sstream>

namespace astk {

namespace kernels {

namespace {

// Row update for step (r, c): row_i := (p·row_i − row_i[c]·row_r) / prev on columns > c.
void update_row(IntRow& row, const IntRow& pivot_row, std::size_t c, std::size_t cols, const Integer& prev) {
    const Integer p = pivot_row[c];
    const Integer f = row[c];
    Integer tmp;
    for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = p * row[j];
        if (f != 0) tmp -= f * pivot_row[j];
        if (prev != 1)
            mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        else
            row[j] = tmp;
    }
    row[c] = 0;
}

template <bool Parallel>
Echelon bareiss(std::vector<IntRow> m, std::size_t cols) {
    const std::size_t nrows = m.size();
    Echelon e;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) std::swap(m[p], m[r]);
        const IntRow& pivot_row = m[r];
        const long first = static_cast<long>(r + 1), last = static_cast<long>(nrows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long i = first; i < last; ++i) update_row(m[i], pivot_row, c, cols, prev);
        } else {
            for (long i = first; i < last; ++i) update_row(m[i], pivot_row, c, cols, prev);
        }
        prev = m[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

}  // namespace

Echelon bareiss_serial(std::vector<IntRow> m, std::size_t cols) { return bareiss<false>(std::move(m), cols); }
Echelon bareiss_parallel(std::vector<IntRow> m, std::size_t cols) { return bareiss<true>(std::move(m), cols); }

}  // namespace kernels

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    ExactMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Vector ExactMatrix::row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vector ExactMatrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector ExactMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DomainError("vector length does not match matrix columns");
    Vector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& below) const {
    if (below.cols_ != cols_ && rows_ > 0 && below.rows_ > 0) throw DomainError("vstack column mismatch");
    ExactMatrix r(rows_ + below.rows_, rows_ > 0 ? cols_ : below.cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + data_.size());
    return r;
}

kernels::Echelon ExactMatrix::echelon(Exec exec) const {
    std::vector<kernels::IntRow> m(rows_, kernels::IntRow(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& d = (*this)(i, j).get_den();
            if (d != 1) l = lcm(l, Integer(d));
        }
        for (std::size_t j = 0; j < cols_; ++j) m[i][j] = Integer((*this)(i, j) * l);
    }
    return exec == Exec::Parallel ? kernels::bareiss_parallel(std::move(m), cols_)
                                  : kernels::bareiss_serial(std::move(m), cols_);
}

std::pair<std::vector<Vector>, std::vector<std::size_t>> ExactMatrix::rref(Exec exec) const {
    kernels::Echelon e = echelon(exec);
    const std::size_t r = e.rows.size();
    std::vector<Vector> rows(r, Vector(cols_));
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& p = e.rows[i][e.pivots[i]];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (e.rows[i][j] == 0) continue;
            rows[i][j] = Rational(e.rows[i][j], p);
            rows[i][j].canonicalize();
        }
    }
    // rational back-substitution
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = e.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = rows[k][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < cols_; ++j)
                if (rows[i][j] != 0) rows[k][j] -= f * rows[i][j];
        }
    }
    return {std::move(rows), std::move(e.pivots)};
}

std::size_t ExactMatrix::rank(Exec exec) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return echelon(exec).rows.size();
}

std::vector<Vector> ExactMatrix::kernel(Exec exec) const {
    std::vector<Vector> basis;
    if (cols_ == 0) return basis;
    auto [rows, pivots] = rows_ == 0 ? std::pair<std::vector<Vector>, std::vector<std::size_t>>{} : rref(exec);
    std::vector<int> pivot_row(cols_, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_row[f] >= 0) continue;
        Vector v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> ExactMatrix::image(Exec exec) const {
    std::vector<Vector> basis;
    if (rows_ == 0 || cols_ == 0) return basis;
    for (std::size_t c : echelon(exec).pivots) basis.push_back(column(c));
    return basis;
}

std::optional<Vector> ExactMatrix::solve(const Vector& b, Exec exec) const {
    if (b.size() != rows_) throw DomainError("right-hand side length mismatch");
    ExactMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    Vector x(cols_, Rational(0));
    if (rows_ == 0) return x;
    auto [rows, pivots] = aug.rref(exec);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;
        x[pivots[i]] = rows[i][cols_];
    }
    return x;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << format_rational((*this)(i, j));
        out << "]\n";
    }
    return out.str();
}

std::size_t vector_rank(const std::vector<Vector>& vs, std::size_t dim) {
    if (vs.empty() || dim == 0) return 0;
    return ExactMatrix::from_rows(vs, dim).rank();
}

bool is_zero_vector(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace astk
