#ifndef ASTK_TERM_ORDER_HPP
#define ASTK_TERM_ORDER_HPP

#include "astk/polynomial.hpp"

#include <string>
#include <vector>

namespace astk {

/// Monomial order on exponent vectors. `permutation[k]` is the variable placed at
/// position k (position 0 is the most significant). Elimination orders compare
/// block by block, graded reverse lex inside each block.
struct TermOrder {
    enum class Kind { GradedReverseLex, Lex, Elimination };

    Kind kind = Kind::GradedReverseLex;
    std::vector<std::size_t> permutation;
    std::vector<std::size_t> blocks;

    static TermOrder grevlex(std::size_t nvars);
    static TermOrder lex(std::size_t nvars);
    static TermOrder elimination(std::vector<std::size_t> block_sizes);

    std::size_t nvars() const { return permutation.size(); }

    /// Negative, zero or positive as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string kind_name() const;
    static Kind parse_kind(const std::string& name);

    bool operator==(const TermOrder&) const = default;
};

/// Strict-weak "descending" comparator usable as a std::map ordering.
struct DescendingBy {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace astk

#endif
