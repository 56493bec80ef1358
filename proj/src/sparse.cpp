#include "astk/sparse.hpp"

#include <algorithm>

namespace astk {

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
    if (s == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec to_sparse(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return s;
}

Vector to_dense(const SparseVec& v, std::size_t dim) {
    Vector d(dim, Rational(0));
    for (const auto& [i, x] : v) d.at(i) = x;
    return d;
}

SparseVec SparseMap::apply(const SparseVec& v) const {
    // accumulate through a map to avoid repeated merges
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [j, x] : v) {
        if (j >= columns.size()) throw DomainError("sparse map applied to out-of-range index");
        for (const auto& [i, y] : columns[j]) acc[i] += x * y;
    }
    SparseVec out;
    for (auto& [i, x] : acc)
        if (x != 0) out.emplace_back(i, std::move(x));
    return out;
}

SparseMap SparseMap::compose(const SparseMap& other) const {
    if (other.rows != cols()) throw DomainError("sparse map composition shape mismatch");
    SparseMap r{rows, {}};
    r.columns.reserve(other.cols());
    for (const auto& col : other.columns) r.columns.push_back(apply(col));
    return r;
}

SparseMap SparseMap::scaled(const Rational& s) const {
    SparseMap r = *this;
    if (s == 0) {
        for (auto& c : r.columns) c.clear();
        return r;
    }
    for (auto& c : r.columns)
        for (auto& [i, x] : c) x *= s;
    return r;
}

SparseMap operator+(const SparseMap& a, const SparseMap& b) {
    if (a.rows != b.rows || a.cols() != b.cols()) throw DomainError("sparse map sum shape mismatch");
    SparseMap r{a.rows, {}};
    r.columns.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) r.columns.push_back(sparse_axpy(a.columns[j], 1, b.columns[j]));
    return r;
}

std::vector<SparseVec> SparseMap::row_vectors() const {
    std::vector<SparseVec> out(rows);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, x] : columns[j]) out[i].emplace_back(static_cast<std::uint32_t>(j), x);
    return out;
}

ExactMatrix SparseMap::to_dense() const {
    ExactMatrix m(rows, cols());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, x] : columns[j]) m(i, j) = x;
    return m;
}

SparseVec SparseEchelon::residue(SparseVec v) const {
    // eliminate pivot columns left to right; entries before the cursor are final
    std::size_t k = 0;
    while (k < v.size()) {
        auto it = pivots_.find(v[k].first);
        if (it == pivots_.end()) {
            ++k;
            continue;
        }
        Rational f = v[k].second;
        v = sparse_axpy(v, -f, it->second);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    for (const auto& [i, x] : v)
        if (i >= dim_) throw DomainError("sparse row index out of range");
    // only the leading entry must avoid existing pivots
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        Rational f = v.front().second;
        v = sparse_axpy(v, -f, it->second);
    }
    if (v.empty()) return false;
    Rational inv = 1 / v.front().second;
    for (auto& [i, x] : v) x *= inv;
    const std::uint32_t lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
}

void SparseEchelon::reduce() {
    // back-substitution from the last pivot to the first
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseVec& row = it->second;
        SparseVec out;
        out.push_back(row.front());
        SparseVec tail(row.begin() + 1, row.end());
        std::size_t k = 0;
        while (k < tail.size()) {
            auto p = pivots_.find(tail[k].first);
            if (p == pivots_.end()) {
                ++k;
                continue;
            }
            Rational f = tail[k].second;
            tail = sparse_axpy(tail, -f, p->second);
        }
        out.insert(out.end(), tail.begin(), tail.end());
        row = std::move(out);
    }
}

std::vector<SparseVec> SparseEchelon::kernel() {
    reduce();
    std::vector<bool> is_pivot(dim_, false);
    for (const auto& [c, row] : pivots_) is_pivot[c] = true;
    // column f of the reduced rows: which pivot rows mention it
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> mentions(dim_);
    for (const auto& [c, row] : pivots_)
        for (std::size_t k = 1; k < row.size(); ++k) mentions[row[k].first].emplace_back(c, row[k].second);
    std::vector<SparseVec> basis;
    for (std::uint32_t f = 0; f < dim_; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        for (const auto& [c, x] : mentions[f]) v.emplace_back(c, -x);
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace astk
