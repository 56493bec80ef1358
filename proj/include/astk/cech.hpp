#ifndef ASTK_CECH_HPP
#define ASTK_CECH_HPP

#include "astk/groups.hpp"
#include "astk/matrix.hpp"
#include "astk/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace astk {

/// Finite-dimensional commutative Hopf algebra over Q by structure tensors.
/// comult[i] is indexed by a·dim + b for the basis tensor a⊗b; antipode is stored by columns.
struct HopfAlgebraData {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVec>> mult;
    SparseVec unit;
    std::vector<SparseVec> comult;
    Vector counit;
    std::vector<SparseVec> antipode;
    /// dim of the invariant it is compared against (class functions); 0 if not known
    std::size_t genuine_dim = 0;

    std::size_t dim() const { return labels.size(); }
    /// First violated axiom, if any.
    std::optional<std::string> axiom_failure() const;
};

/// μ_n: Q[t]/(t^n − 1), t group-like. Finite G: functions on G, δ basis.
/// Products are tensor products. Throws DomainError on infinite groups.
HopfAlgebraData hopf_from_group(const GroupSpec& g);
HopfAlgebraData hopf_tensor(const HopfAlgebraData& a, const HopfAlgebraData& b);

/// Levels H^{⊗m}, m = 0..truncation. Basis index of a⊗…: base-dim digits, first slot most significant.
struct CosimplicialAlgebra {
    HopfAlgebraData hopf;
    unsigned truncation = 0;
    std::vector<std::size_t> level_dims;
    /// cofaces[m][i]: level m → m+1, i = 0..m+1
    std::vector<std::vector<SparseMap>> cofaces;
    /// codegeneracies[m][j]: level m+1 → m, j = 0..m
    std::vector<std::vector<SparseMap>> codegeneracies;

    std::optional<std::string> identity_failure() const;
};

CosimplicialAlgebra cech_nerve(const HopfAlgebraData& h, unsigned truncation, Exec exec = Exec::Parallel);

/// Σ (−1)^i d^i : level m → m+1.
SparseMap alternating_coface(const CosimplicialAlgebra& cs, unsigned m);

struct CohomologyReport {
    std::string hopf;
    unsigned truncation = 0;
    unsigned max_degree = 0;
    std::vector<std::size_t> level_dims;
    std::vector<std::size_t> normalized_dims;
    /// (dim − 1)^m: kernel of every counit slot
    std::vector<std::size_t> predicted_normalized_dims;
    std::vector<std::size_t> h_dims;
    std::vector<Vector> h0_basis;  // in level 0
    std::size_t equalizer_dim = 0;
    std::size_t genuine_dim = 0;
    bool squares_to_zero = false;
};

CohomologyReport normalized_cohomology(const CosimplicialAlgebra& cs, unsigned max_degree);

struct DescentGap {
    unsigned n = 1;
    std::size_t genuine = 0;
    std::size_t totalization = 0;
    std::size_t completed = 0;
    std::vector<std::size_t> h_dims;
    bool gap = false;        // genuine ≠ totalization
    bool reconciled = false; // totalization = completed
};

/// μ_n only.
DescentGap descent_gap(const GroupSpec& g, unsigned truncation = 4, unsigned max_degree = 2);

}  // namespace astk

#endif
