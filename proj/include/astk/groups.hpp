#ifndef ASTK_GROUPS_HPP
#define ASTK_GROUPS_HPP

#include "astk/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace astk {

/// Validation failure while loading a group file; the message names the violated invariant.
class LoadError : public Error {
public:
    using Error::Error;
};

/// Finite group given by its multiplication table, conjugacy classes and a rational
/// character table (one row per class).
struct FiniteGroupData {
    struct Character {
        std::string name;
        Rational dim;
        std::vector<Rational> values;  // one per class
    };

    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> multiplication;  // multiplication[a][b] = a·b
    std::vector<std::vector<std::size_t>> classes;
    std::vector<Character> characters;
    /// power_maps[ℓ][c]: class of g^ℓ for g in class c (optional data).
    std::map<unsigned, std::vector<std::size_t>> power_maps;

    // derived on validation
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> class_of;
    std::size_t identity_class = 0;
    /// Σ dim² = |G| and every row has norm 1 (absolutely irreducible rows).
    bool split = true;

    std::size_t order() const { return elements.size(); }
    std::size_t class_count() const { return classes.size(); }
    std::size_t index_of(const std::string& element) const;
    /// Σ_c |c| a(c) b(c) / |G| (characters are rational, so real-valued).
    Rational inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    std::size_t power(std::size_t g, unsigned l) const;
};

/// Checks the group axioms and character-table invariants and fills the derived fields.
/// Throws LoadError naming the first violated invariant.
void validate_finite_group(FiniteGroupData& g);

/// Parses the group-file JSON text.
std::shared_ptr<const FiniteGroupData> parse_finite_group(const std::string& json_text);
std::shared_ptr<const FiniteGroupData> load_finite_group(const std::string& path);

/// Direct product G×H with product classes and product characters.
std::shared_ptr<const FiniteGroupData> direct_product(const FiniteGroupData& a, const FiniteGroupData& b);
/// The one-element group.
std::shared_ptr<const FiniteGroupData> trivial_group();

struct SplitTorus {
    unsigned rank = 1;
};
struct GeneralLinear {
    unsigned n = 2;
};
struct SpecialLinear2 {};
struct RootsOfUnity {
    unsigned n = 2;
};
struct FiniteGroup {
    std::shared_ptr<const FiniteGroupData> data;
};
struct GroupSpec;
struct ProductGroup {
    std::vector<GroupSpec> factors;
};

struct GroupSpec {
    std::variant<SplitTorus, GeneralLinear, SpecialLinear2, RootsOfUnity, FiniteGroup, ProductGroup> kind;

    std::string name() const;
    bool is_finite() const;
    /// Finite locally free group or torus (extensions of the former by the latter via products).
    bool is_nice() const;
};

/// Directory of bundled group files ($ASTK_DATA_DIR/groups, else the source tree's data/groups).
std::string bundled_group_dir();

/// "gm", "t<r>" / "torus<r>", "gl<n>", "sl2", "mu<n>", "trivial", a path to a group file,
/// a bundled group name such as "s3", or factors joined by "*" for products.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace astk

#endif
