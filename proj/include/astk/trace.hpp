#ifndef ASTK_TRACE_HPP
#define ASTK_TRACE_HPP

#include "astk/completion.hpp"
#include "astk/rep_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace astk {

enum class ClassModel { FiniteClasses, LaurentSelf, SymmetricLaurent, CyclicSelf, SL2Trace };

std::string class_model_name(ClassModel m);

/// Class functions on G. Polynomial carriers: LaurentSelf (tori, μ_n products), CyclicSelf
/// (Q[t]/(t^n−1)), SymmetricLaurent (GL(n) as Q[e_1..e_n, f]/(e_n·f − 1)), SL2Trace (Q[c]).
/// FiniteClasses: Q^{#classes} with componentwise product.
struct ClassFunctionRing {
    GroupSpec group;
    ClassModel model = ClassModel::LaurentSelf;
    RepRingPtr rep;

    RingPtr ring;
    std::vector<Poly> relations;
    std::vector<Rational> unit_point;
    unsigned gl_rank = 0;

    std::shared_ptr<const FiniteGroupData> finite;
    std::shared_ptr<const FinDimAlgebra> algebra;

    bool polynomial_type() const { return model != ClassModel::FiniteClasses; }
    /// Canonical representative (cyclic exponents reduced, e_n·f cancelled).
    Poly reduce(const Poly& f) const;
};

using ClassRingPtr = std::shared_ptr<const ClassFunctionRing>;

struct ClassFunction {
    ClassRingPtr owner;
    Poly value;
    Vector coords;

    bool operator==(const ClassFunction& o) const { return owner == o.owner && value == o.value && coords == o.coords; }
    std::string to_string() const;
};

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

ClassRingPtr class_function_ring(const GroupSpec& g);
/// Uses an existing representation ring so that traces of its elements are accepted.
ClassRingPtr class_function_ring(const RepRingPtr& rep);

/// Evaluation at the identity element.
Rational unit_evaluation(const ClassFunction& f);

ClassFunction dennis_trace(const ClassRingPtr& ring, const RepElement& v);

/// Generators of the kernel of unit_evaluation.
std::vector<ClassFunction> unit_ideal_J(const ClassRingPtr& ring);

/// Rewrites a symmetric polynomial in t_1..t_n as a polynomial in the elementary symmetric
/// functions. The target ring's first n variables are e_1..e_n. Throws DomainError if f
/// is not symmetric.
Poly symmetric_to_elementary(const Poly& f, const RingPtr& e_ring);

struct RadicalReport {
    std::string group;
    ClassRingPtr ring;
    unsigned n_max = 0;
    std::optional<unsigned> exponent;
    std::vector<ClassFunction> j_generators;
    std::vector<ClassFunction> trace_generators;  // tr(I_G)
    // polynomial carriers
    std::vector<MembershipCertificate> forward;  // products of J generators ∈ (tr I_G)
    std::vector<MembershipCertificate> reverse;  // tr I_G generators ∈ J
    // finite carriers
    std::vector<AlgebraCertificate> forward_alg;
    std::vector<AlgebraCertificate> reverse_alg;
    bool unit_evaluation_vanishes = true;
    bool reverse_holds = true;
    std::vector<std::pair<unsigned, std::string>> lower_witnesses;
    SearchStatus status = SearchStatus::Undetermined;

    bool audit() const;
};

/// J_G^n ⊆ tr(I_G)·O(G)^G ⊆ J_G with the least n ≤ n_max.
RadicalReport radical_compare(const GroupSpec& g, unsigned n_max, Exec exec = Exec::Parallel);

struct UnipotentReport {
    std::string group;
    std::string carrier;           // description of O(G)
    std::size_t function_ring_dim = 0;  // 0 when infinite-dimensional
    std::vector<std::string> extended_j;   // generators of J·O(G)
    std::vector<std::string> identity_ideal;  // generators of I_e
    std::vector<MembershipCertificate> j_in_ie;
    std::vector<MembershipCertificate> ie_in_radical;
    std::vector<AlgebraCertificate> j_in_ie_alg;
    std::vector<AlgebraCertificate> ie_in_radical_alg;
    std::vector<unsigned> radical_powers;  // power used for each I_e generator
    unsigned power_bound = 0;
    bool ie_maximal = false;       // O(G)/I_e ≅ Q
    std::optional<bool> separable; // μ_n: gcd(t^n − 1, n t^{n−1}) = 1
    std::vector<std::string> zero_set;  // finite groups: elements where every J generator vanishes
    bool holds = false;

    bool audit() const;
};

/// √(J_G·O(G)) = I_e for nice G (tori, μ_n, finite groups and products of these).
UnipotentReport unipotent_reduced_check(const GroupSpec& g, unsigned power_bound = 4);

}  // namespace astk

#endif
