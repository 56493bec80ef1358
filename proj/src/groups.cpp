#include "astk/groups.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace astk {

using nlohmann::json;

std::size_t FiniteGroupData::index_of(const std::string& element) const {
    auto it = std::find(elements.begin(), elements.end(), element);
    if (it == elements.end()) throw DomainError("group " + name + " has no element '" + element + "'");
    return static_cast<std::size_t>(it - elements.begin());
}

Rational FiniteGroupData::inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    Rational s = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) s += Rational(static_cast<long>(classes[c].size())) * a[c] * b[c];
    return s / static_cast<long>(order());
}

std::size_t FiniteGroupData::power(std::size_t g, unsigned l) const {
    std::size_t r = identity;
    for (unsigned k = 0; k < l; ++k) r = multiplication[r][g];
    return r;
}

void validate_finite_group(FiniteGroupData& g) {
    const std::size_t n = g.elements.size();
    auto el = [&](std::size_t i) { return "'" + g.elements[i] + "'"; };
    if (n == 0) throw LoadError("group has no elements");
    if (g.multiplication.size() != n) throw LoadError("multiplication table is not |G|×|G|");
    for (const auto& row : g.multiplication) {
        if (row.size() != n) throw LoadError("multiplication table is not |G|×|G|");
        for (std::size_t v : row)
            if (v >= n) throw LoadError("multiplication table entry out of range");
    }
    const auto& m = g.multiplication;
    // identity
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = m[e][a] == a && m[a][e] == a;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw LoadError("identity: no two-sided identity element");
    // associativity
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (m[m[a][b]][c] != m[a][m[b][c]])
                    throw LoadError("associativity fails for triple (" + el(a) + ", " + el(b) + ", " + el(c) + ")");
    // inverses
    g.inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (m[a][b] == g.identity && m[b][a] == g.identity) g.inverse[a] = b;
        if (g.inverse[a] == n) throw LoadError("inverses: element " + el(a) + " has no two-sided inverse");
    }
    // classes partition G and are conjugation orbits
    g.class_of.assign(n, g.classes.size());
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        if (g.classes[c].empty()) throw LoadError("classes: empty conjugacy class");
        for (std::size_t a : g.classes[c]) {
            if (a >= n) throw LoadError("classes: element index out of range");
            if (g.class_of[a] != g.classes.size()) throw LoadError("classes: element " + el(a) + " listed twice");
            g.class_of[a] = c;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (g.class_of[a] == g.classes.size()) throw LoadError("classes: element " + el(a) + " is in no class");
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        const std::size_t a = g.classes[c].front();
        std::set<std::size_t> orbit;
        for (std::size_t x = 0; x < n; ++x) orbit.insert(m[m[x][a]][g.inverse[x]]);
        std::set<std::size_t> listed(g.classes[c].begin(), g.classes[c].end());
        if (orbit != listed) throw LoadError("classes: class of " + el(a) + " is not a conjugacy class");
    }
    g.identity_class = g.class_of[g.identity];
    // character table
    const std::size_t k = g.classes.size();
    if (g.characters.size() != k)
        throw LoadError("character table: " + std::to_string(g.characters.size()) + " rows for " + std::to_string(k) +
                        " conjugacy classes");
    for (const auto& ch : g.characters) {
        if (ch.values.size() != k) throw LoadError("character table: row " + ch.name + " has wrong length");
        if (ch.values[g.identity_class] != ch.dim)
            throw LoadError("character table: row " + ch.name + " has dim different from its value at the identity");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.inner_product(g.characters[i].values, g.characters[j].values) != 0)
                throw LoadError("character table: rows " + g.characters[i].name + " and " + g.characters[j].name +
                                " are not orthogonal");
    Rational dim_sq = 0;
    g.split = true;
    for (const auto& ch : g.characters) {
        dim_sq += ch.dim * ch.dim;
        if (g.inner_product(ch.values, ch.values) != 1) g.split = false;
    }
    if (dim_sq != static_cast<long>(n)) g.split = false;
    // optional power maps
    for (const auto& [l, pm] : g.power_maps) {
        if (pm.size() != k) throw LoadError("power map " + std::to_string(l) + " has wrong length");
        for (std::size_t c = 0; c < k; ++c)
            if (g.class_of[g.power(g.classes[c].front(), l)] != pm[c])
                throw LoadError("power map " + std::to_string(l) + " disagrees with the multiplication table");
    }
}

namespace {

Rational json_rational(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw LoadError("expected a rational as string \"num/den\" or integer");
}

}  // namespace

std::shared_ptr<const FiniteGroupData> parse_finite_group(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw LoadError(std::string("malformed JSON: ") + e.what());
    }
    auto g = std::make_shared<FiniteGroupData>();
    try {
        g->name = j.value("name", std::string("G"));
        g->elements = j.at("elements").get<std::vector<std::string>>();
        g->multiplication = j.at("multiplication").get<std::vector<std::vector<std::size_t>>>();
        g->classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
        for (const auto& row : j.at("characters")) {
            FiniteGroupData::Character ch;
            ch.name = row.at("name").get<std::string>();
            ch.dim = json_rational(row.at("dim"));
            for (const auto& v : row.at("values")) ch.values.push_back(json_rational(v));
            g->characters.push_back(std::move(ch));
        }
        if (j.contains("power_maps"))
            for (const auto& [key, val] : j.at("power_maps").items())
                g->power_maps[static_cast<unsigned>(std::stoul(key))] = val.get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
        throw LoadError(std::string("group file does not match schema: ") + e.what());
    } catch (const DomainError& e) {
        throw LoadError(std::string("group file does not match schema: ") + e.what());
    } catch (const std::logic_error&) {
        throw LoadError("group file does not match schema: power map keys must be integers");
    }
    validate_finite_group(*g);
    return g;
}

std::shared_ptr<const FiniteGroupData> load_finite_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open group file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_finite_group(buf.str());
}

std::shared_ptr<const FiniteGroupData> trivial_group() {
    auto g = std::make_shared<FiniteGroupData>();
    g->name = "trivial";
    g->elements = {"e"};
    g->multiplication = {{0}};
    g->classes = {{0}};
    g->characters = {{"triv", Rational(1), {Rational(1)}}};
    validate_finite_group(*g);
    return g;
}

std::shared_ptr<const FiniteGroupData> direct_product(const FiniteGroupData& a, const FiniteGroupData& b) {
    auto g = std::make_shared<FiniteGroupData>();
    g->name = a.name + "x" + b.name;
    const std::size_t nb = b.order();
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) g->elements.push_back("(" + x + "," + y + ")");
    const std::size_t n = g->elements.size();
    g->multiplication.assign(n, std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            g->multiplication[p][q] = a.multiplication[p / nb][q / nb] * nb + b.multiplication[p % nb][q % nb];
    for (const auto& ca : a.classes)
        for (const auto& cb : b.classes) {
            std::vector<std::size_t> cls;
            for (std::size_t x : ca)
                for (std::size_t y : cb) cls.push_back(x * nb + y);
            std::sort(cls.begin(), cls.end());
            g->classes.push_back(std::move(cls));
        }
    for (const auto& xa : a.characters)
        for (const auto& xb : b.characters) {
            FiniteGroupData::Character ch{xa.name + "*" + xb.name, xa.dim * xb.dim, {}};
            for (const auto& va : xa.values)
                for (const auto& vb : xb.values) ch.values.push_back(va * vb);
            g->characters.push_back(std::move(ch));
        }
    validate_finite_group(*g);
    return g;
}

std::string GroupSpec::name() const {
    struct Namer {
        std::string operator()(const SplitTorus& t) const { return t.rank == 1 ? "gm" : "t" + std::to_string(t.rank); }
        std::string operator()(const GeneralLinear& g) const { return "gl" + std::to_string(g.n); }
        std::string operator()(const SpecialLinear2&) const { return "sl2"; }
        std::string operator()(const RootsOfUnity& m) const { return "mu" + std::to_string(m.n); }
        std::string operator()(const FiniteGroup& f) const { return f.data->name; }
        std::string operator()(const ProductGroup& p) const {
            std::string s;
            for (std::size_t i = 0; i < p.factors.size(); ++i) s += (i ? "*" : "") + p.factors[i].name();
            return s;
        }
    };
    return std::visit(Namer{}, kind);
}

bool GroupSpec::is_finite() const {
    if (std::holds_alternative<RootsOfUnity>(kind) || std::holds_alternative<FiniteGroup>(kind)) return true;
    if (const auto* p = std::get_if<ProductGroup>(&kind))
        return std::all_of(p->factors.begin(), p->factors.end(), [](const GroupSpec& f) { return f.is_finite(); });
    return false;
}

bool GroupSpec::is_nice() const {
    if (std::holds_alternative<SplitTorus>(kind)) return true;
    if (std::holds_alternative<RootsOfUnity>(kind) || std::holds_alternative<FiniteGroup>(kind)) return true;
    if (const auto* p = std::get_if<ProductGroup>(&kind))
        return std::all_of(p->factors.begin(), p->factors.end(), [](const GroupSpec& f) { return f.is_nice(); });
    return false;
}

namespace {

bool parse_suffix(const std::string& text, const std::string& prefix, unsigned& out) {
    if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string rest = text.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
    out = static_cast<unsigned>(std::stoul(rest));
    return true;
}

}  // namespace

std::string bundled_group_dir() {
    if (const char* env = std::getenv("ASTK_DATA_DIR")) return std::string(env) + "/groups";
    return std::string(ASTK_DEFAULT_DATA_DIR) + "/groups";
}

GroupSpec parse_group_spec(const std::string& text) {
    if (text.find('*') != std::string::npos) {
        ProductGroup p;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, '*')) p.factors.push_back(parse_group_spec(part));
        return GroupSpec{p};
    }
    unsigned k = 0;
    if (text == "gm" || text == "Gm") return GroupSpec{SplitTorus{1}};
    if (text == "sl2" || text == "SL2") return GroupSpec{SpecialLinear2{}};
    if (text == "trivial") return GroupSpec{FiniteGroup{trivial_group()}};
    if (parse_suffix(text, "torus", k) || parse_suffix(text, "t", k)) {
        if (k == 0) throw DomainError("torus rank must be positive");
        return GroupSpec{SplitTorus{k}};
    }
    if (parse_suffix(text, "gl", k)) {
        if (k == 0) throw DomainError("GL(n) needs n ≥ 1");
        return GroupSpec{GeneralLinear{k}};
    }
    if (parse_suffix(text, "mu", k) || parse_suffix(text, "mu_", k)) {
        if (k == 0) throw DomainError("mu_n needs n ≥ 1");
        return GroupSpec{RootsOfUnity{k}};
    }
    if (text.size() > 5 && text.substr(text.size() - 5) == ".json") return GroupSpec{FiniteGroup{load_finite_group(text)}};
    const std::string bundled = bundled_group_dir() + "/" + text + ".json";
    if (std::ifstream(bundled).good()) return GroupSpec{FiniteGroup{load_finite_group(bundled)}};
    throw UnsupportedError("unknown group specification '" + text + "'");
}

}  // namespace astk
