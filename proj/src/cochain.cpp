#include "astk/cochain.hpp"

namespace astk {

bool CochainComplexQ::is_complex() const {
    if (dims.empty()) return differentials.empty();
    if (differentials.size() + 1 != dims.size() && differentials.size() != dims.size()) return false;
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        const auto& d = differentials[k];
        const std::size_t target = k + 1 < dims.size() ? dims[k + 1] : 0;
        if (d.cols() != dims[k] || d.rows() != target) return false;
    }
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
        const auto& a = differentials[k];
        const auto& b = differentials[k + 1];
        if (a.rows() == 0 || b.rows() == 0 || a.cols() == 0) continue;
        if (!(b * a).is_zero()) return false;
    }
    return true;
}

CohomologyResult complex_cohomology(const CochainComplexQ& cx, std::size_t k) {
    if (k >= cx.levels()) throw DomainError("cohomological degree out of range");
    if (!cx.is_complex()) throw IntegrityError("malformed cochain complex: shape mismatch or d∘d ≠ 0");
    const std::size_t dim = cx.dims[k];
    CohomologyResult res;
    if (dim == 0) return res;

    std::vector<Vector> kernel;
    if (k < cx.differentials.size() && cx.differentials[k].rows() > 0) {
        kernel = cx.differentials[k].kernel();
    } else {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim, Rational(0));
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    }
    std::vector<Vector> image;
    if (k > 0 && cx.dims[k - 1] > 0) image = cx.differentials[k - 1].image();

    res.kernel_dim = kernel.size();
    res.image_rank = image.size();
    res.dimension = res.kernel_dim - res.image_rank;

    // extend a basis of the image to one of the kernel; the added vectors represent H^k
    std::vector<Vector> span = image;
    std::size_t r = vector_rank(span, dim);
    for (const auto& v : kernel) {
        span.push_back(v);
        std::size_t nr = vector_rank(span, dim);
        if (nr > r) {
            res.basis.push_back(v);
            r = nr;
        } else {
            span.pop_back();
        }
    }
    return res;
}

}  // namespace astk
