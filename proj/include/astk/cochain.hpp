#ifndef ASTK_COCHAIN_HPP
#define ASTK_COCHAIN_HPP

#include "astk/matrix.hpp"

#include <vector>

namespace astk {

/// Finite cochain complex of Q-vector spaces: dims[k] and ∂^k : C^k → C^{k+1}
/// stored as a dims[k+1] × dims[k] matrix.
struct CochainComplexQ {
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> differentials;

    std::size_t levels() const { return dims.size(); }
    /// Shapes match and ∂^{k+1}∘∂^k = 0 for every k.
    bool is_complex() const;
};

struct CohomologyResult {
    std::size_t dimension = 0;
    /// Representatives in C^k of a basis of ker ∂^k / im ∂^{k−1}.
    std::vector<Vector> basis;
    std::size_t kernel_dim = 0;
    std::size_t image_rank = 0;
};

/// dim H^k = nullity(∂^k) − rank(∂^{k−1}), with explicit representatives.
/// Throws IntegrityError when ∂∘∂ ≠ 0 or shapes disagree.
CohomologyResult complex_cohomology(const CochainComplexQ& cx, std::size_t k);

}  // namespace astk

#endif
