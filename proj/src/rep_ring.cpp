#include "astk/rep_ring.hpp"

#include <algorithm>
#include <numeric>

namespace astk {

std::string model_name(RepModel m) {
    switch (m) {
        case RepModel::LaurentInvariant: return "laurent-invariant";
        case RepModel::Polynomial: return "polynomial";
        case RepModel::CyclicQuotient: return "cyclic-quotient";
        case RepModel::FiniteFree: return "finite-free";
    }
    return "?";
}

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// e_1..e_k of the given variables
std::vector<Poly> elementary_symmetric(const RingPtr& ring, const std::vector<std::size_t>& vars) {
    std::vector<Poly> e(vars.size() + 1, Poly(ring));
    e[0] = Poly::constant(ring, 1);
    for (std::size_t v : vars) {
        Poly t = Poly::variable(ring, v);
        for (std::size_t i = vars.size(); i >= 1; --i) e[i] += t * e[i - 1];
    }
    return e;
}

Poly swap_variables(const Poly& f, std::size_t i, std::size_t j) {
    Poly r(f.ring());
    for (const auto& [key, c] : f.terms()) {
        Monomial m = key;
        std::swap(m[i], m[j]);
        r.add_term(m, c);
    }
    return r;
}

struct Builder {
    std::vector<std::string> names;
    std::vector<unsigned> orders;
    std::vector<std::vector<std::size_t>> blocks;
    // per factor: kind and variable range
    struct Factor {
        enum { Torus, GL, Mu } kind;
        std::size_t first, count;
        unsigned n;
    };
    std::vector<Factor> factors;

    void add(const GroupSpec& g, bool single) {
        const std::string tag = single ? "" : std::to_string(factors.size() + 1);
        const std::size_t first = names.size();
        if (const auto* t = std::get_if<SplitTorus>(&g.kind)) {
            for (unsigned i = 0; i < t->rank; ++i) {
                names.push_back(t->rank == 1 && single ? "x" : "x" + tag + (tag.empty() ? "" : "_") + std::to_string(i + 1));
                orders.push_back(0);
            }
            factors.push_back({Factor::Torus, first, t->rank, 0});
        } else if (const auto* gl = std::get_if<GeneralLinear>(&g.kind)) {
            std::vector<std::size_t> block;
            for (unsigned i = 0; i < gl->n; ++i) {
                block.push_back(names.size());
                names.push_back("t" + tag + (tag.empty() ? "" : "_") + std::to_string(i + 1));
                orders.push_back(0);
            }
            if (gl->n > 1) blocks.push_back(block);
            factors.push_back({Factor::GL, first, gl->n, gl->n});
        } else if (const auto* mu = std::get_if<RootsOfUnity>(&g.kind)) {
            names.push_back(single ? "t" : "z" + tag);
            orders.push_back(mu->n);
            factors.push_back({Factor::Mu, first, 1, mu->n});
        } else {
            throw UnsupportedError("group " + g.name() + " cannot be a factor of a Laurent-type product");
        }
    }
};

void fill_laurent(RepRingPresentation& r, const Builder& b) {
    r.ring = make_ring(b.names, RingMode::Laurent);
    r.cyclic_orders = b.orders;
    r.weyl_blocks = b.blocks;
    r.unit_point.assign(b.names.size(), Rational(1));
    for (const auto& f : b.factors) {
        if (f.kind == Builder::Factor::GL) {
            std::vector<std::size_t> vars(f.count);
            std::iota(vars.begin(), vars.end(), f.first);
            auto e = elementary_symmetric(r.ring, vars);
            const std::string suffix = b.factors.size() == 1 ? "" : "[" + b.names[f.first] + "..]";
            for (unsigned i = 1; i <= f.count; ++i) {
                r.distinguished.push_back(e[i]);
                r.distinguished_names.push_back("e" + std::to_string(i) + suffix);
                r.ideal_generators.push_back(e[i] - Poly::constant(r.ring, Rational(binomial(f.count, i))));
                r.ideal_names.push_back("e" + std::to_string(i) + suffix + " - " + binomial(f.count, i).get_str());
            }
            Monomial inv(b.names.size(), 0);
            for (std::size_t v = f.first; v < f.first + f.count; ++v) inv[v] = -1;
            r.distinguished.push_back(Poly::monomial(r.ring, inv));
            r.distinguished_names.push_back("e" + std::to_string(f.count) + suffix + "^-1");
        } else {
            for (std::size_t v = f.first; v < f.first + f.count; ++v) {
                r.distinguished.push_back(Poly::variable(r.ring, v));
                r.distinguished_names.push_back(b.names[v]);
                if (f.kind == Builder::Factor::Torus) {
                    r.distinguished.push_back(Poly::variable(r.ring, v, -1));
                    r.distinguished_names.push_back(b.names[v] + "^-1");
                }
                r.ideal_generators.push_back(Poly::variable(r.ring, v) - Poly::constant(r.ring, 1));
                r.ideal_names.push_back(b.names[v] + " - 1");
            }
        }
    }
}

void fill_finite(RepRingPresentation& r, std::shared_ptr<const FiniteGroupData> data) {
    r.model = RepModel::FiniteFree;
    r.finite = data;
    const auto& g = *data;
    const std::size_t k = g.class_count();
    std::size_t trivial = k;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(g.characters[i].name);
        if (std::all_of(g.characters[i].values.begin(), g.characters[i].values.end(),
                        [](const Rational& v) { return v == 1; }))
            trivial = i;
    }
    if (trivial == k) throw UnsupportedError("character table of " + g.name + " has no trivial row");
    std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k, Vector(k, Rational(0))));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> prod(k);
            for (std::size_t c = 0; c < k; ++c) prod[c] = g.characters[i].values[c] * g.characters[j].values[c];
            std::vector<Rational> check(k, Rational(0));
            for (std::size_t l = 0; l < k; ++l) {
                const auto& chi = g.characters[l].values;
                Rational n = g.inner_product(prod, chi) / g.inner_product(chi, chi);
                table[i][j][l] = n;
                for (std::size_t c = 0; c < k; ++c) check[c] += n * chi[c];
            }
            if (check != prod)
                throw UnsupportedError("products of characters of " + g.name + " leave the span of the table");
        }
    Vector unit(k, Rational(0));
    unit[trivial] = 1;
    r.algebra = FinDimAlgebra(labels, table, unit);
}

}  // namespace

Poly RepRingPresentation::reduce(const Poly& f) const {
    if (!polynomial_type()) throw DomainError("reduce: finite-free model has no carrier polynomial");
    if (std::all_of(cyclic_orders.begin(), cyclic_orders.end(), [](unsigned n) { return n == 0; })) return f;
    Poly r(ring);
    for (const auto& [key, c] : f.terms()) {
        Monomial m = key;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (cyclic_orders[i] != 0) {
                const int n = static_cast<int>(cyclic_orders[i]);
                m[i] = ((m[i] % n) + n) % n;
            }
        r.add_term(m, c);
    }
    return r;
}

std::vector<Poly> RepRingPresentation::relations() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
        if (cyclic_orders[i] != 0)
            out.push_back(Poly::variable(ring, i, static_cast<int>(cyclic_orders[i])) - Poly::constant(ring, 1));
    return out;
}

bool RepRingPresentation::weyl_invariant(const Poly& f) const {
    for (const auto& block : weyl_blocks)
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            if (!(swap_variables(f, block[i], block[i + 1]) == f)) return false;
    return true;
}

RepRingPtr rep_ring(const GroupSpec& g) {
    auto r = std::make_shared<RepRingPresentation>();
    r->group = g;
    if (std::holds_alternative<SplitTorus>(g.kind) || std::holds_alternative<GeneralLinear>(g.kind)) {
        Builder b;
        b.add(g, true);
        r->model = RepModel::LaurentInvariant;
        fill_laurent(*r, b);
    } else if (std::holds_alternative<SpecialLinear2>(g.kind)) {
        r->model = RepModel::Polynomial;
        r->ring = make_ring({"c"});
        r->cyclic_orders = {0};
        r->unit_point = {Rational(2)};
        r->distinguished = {Poly::variable(r->ring, 0)};
        r->distinguished_names = {"c"};
        r->ideal_generators = {Poly::variable(r->ring, 0) - Poly::constant(r->ring, 2)};
        r->ideal_names = {"c - 2"};
    } else if (const auto* mu = std::get_if<RootsOfUnity>(&g.kind)) {
        r->model = RepModel::CyclicQuotient;
        r->ring = make_ring({"t"});
        r->cyclic_orders = {mu->n};
        r->unit_point = {Rational(1)};
        r->distinguished = {Poly::variable(r->ring, 0)};
        r->distinguished_names = {"t"};
        r->ideal_generators = {r->reduce(Poly::variable(r->ring, 0) - Poly::constant(r->ring, 1))};
        r->ideal_names = {"t - 1"};
    } else if (const auto* f = std::get_if<FiniteGroup>(&g.kind)) {
        fill_finite(*r, f->data);
    } else {
        const auto& factors = std::get<ProductGroup>(g.kind).factors;
        if (factors.empty()) throw DomainError("empty product group");
        const bool all_finite_tables = std::all_of(factors.begin(), factors.end(), [](const GroupSpec& x) {
            return std::holds_alternative<FiniteGroup>(x.kind);
        });
        if (all_finite_tables) {
            auto data = std::get<FiniteGroup>(factors[0].kind).data;
            for (std::size_t i = 1; i < factors.size(); ++i)
                data = direct_product(*data, *std::get<FiniteGroup>(factors[i].kind).data);
            fill_finite(*r, data);
        } else {
            Builder b;
            for (const auto& x : factors) b.add(x, false);
            r->model = RepModel::LaurentInvariant;
            fill_laurent(*r, b);
        }
    }
    if (r->model == RepModel::FiniteFree) {
        const auto& g2 = *r->finite;
        for (std::size_t i = 0; i < g2.class_count(); ++i) {
            if (r->algebra.unit()[i] == 1) continue;
            r->ideal_names.push_back("[" + g2.characters[i].name + "] - " + format_rational(g2.characters[i].dim));
        }
    }
    return r;
}

RepElement RepElement::from_poly(RepRingPtr owner, const Poly& f) {
    if (!owner->polynomial_type()) throw DomainError("finite-free model takes coefficient vectors");
    if (f.ring() && !same_ring(f.ring(), owner->ring)) throw DomainError("element lives in a different ring");
    RepElement e;
    e.value_ = owner->reduce(f.ring() ? f : f.with_ring(owner->ring));
    if (!owner->weyl_invariant(e.value_))
        throw DomainError("element " + e.value_.to_string() + " is not Weyl-invariant");
    e.owner_ = std::move(owner);
    return e;
}

RepElement RepElement::from_coords(RepRingPtr owner, Vector coords) {
    if (owner->polynomial_type()) throw DomainError("polynomial-type model takes carrier polynomials");
    if (coords.size() != owner->algebra.dim()) throw DomainError("coefficient vector has wrong length");
    RepElement e;
    e.owner_ = std::move(owner);
    e.coords_ = std::move(coords);
    return e;
}

RepElement RepElement::constant(RepRingPtr owner, const Rational& c) {
    if (owner->polynomial_type()) return from_poly(owner, Poly::constant(owner->ring, c));
    Vector v = owner->algebra.unit();
    for (auto& x : v) x *= c;
    return from_coords(owner, v);
}

RepElement RepElement::one(RepRingPtr owner) { return constant(std::move(owner), 1); }
RepElement RepElement::zero(RepRingPtr owner) { return constant(std::move(owner), 0); }

namespace {

void require_same_owner(const RepElement& a, const RepElement& b) {
    if (a.owner() != b.owner()) throw DomainError("elements of different representation rings");
}

}  // namespace

RepElement operator+(const RepElement& a, const RepElement& b) {
    require_same_owner(a, b);
    if (a.owner_->polynomial_type()) return RepElement::from_poly(a.owner_, a.value_ + b.value_);
    Vector v = a.coords_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords_[i];
    return RepElement::from_coords(a.owner_, v);
}

RepElement operator-(const RepElement& a, const RepElement& b) {
    require_same_owner(a, b);
    if (a.owner_->polynomial_type()) return RepElement::from_poly(a.owner_, a.value_ - b.value_);
    Vector v = a.coords_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords_[i];
    return RepElement::from_coords(a.owner_, v);
}

RepElement operator*(const RepElement& a, const RepElement& b) {
    require_same_owner(a, b);
    if (a.owner_->polynomial_type()) return RepElement::from_poly(a.owner_, a.value_ * b.value_);
    return RepElement::from_coords(a.owner_, a.owner_->algebra.multiply(a.coords_, b.coords_));
}

RepElement RepElement::pow(unsigned k) const {
    RepElement r = one(owner_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool RepElement::operator==(const RepElement& o) const {
    return owner_ == o.owner_ && value_ == o.value_ && coords_ == o.coords_;
}

bool RepElement::is_zero() const {
    if (owner_->polynomial_type()) return value_.is_zero();
    return is_zero_vector(coords_);
}

std::string RepElement::to_string() const {
    if (owner_->polynomial_type()) return value_.to_string();
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (!s.empty()) s += coords_[i] < 0 ? " - " : " + ";
        else if (coords_[i] < 0) s += "-";
        Rational a = abs(coords_[i]);
        if (a != 1) s += format_rational(a) + "*";
        s += "[" + owner_->algebra.labels()[i] + "]";
    }
    return s.empty() ? "0" : s;
}

std::vector<RepElement> as_ideal_elements(const RepRingPtr& r) {
    std::vector<RepElement> out;
    if (r->polynomial_type()) {
        for (const auto& g : r->ideal_generators) out.push_back(RepElement::from_poly(r, g));
        return out;
    }
    const auto& g = *r->finite;
    for (std::size_t i = 0; i < g.class_count(); ++i) {
        if (r->algebra.unit()[i] == 1) continue;
        Vector v = r->algebra.basis_vector(i);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= g.characters[i].dim * r->algebra.unit()[j];
        out.push_back(RepElement::from_coords(r, v));
    }
    return out;
}

IdealGens as_ideal(const RepRingPtr& r) {
    if (!r->polynomial_type()) throw UnsupportedError("finite-free models have no carrier polynomial ring");
    return IdealGens(r->ring, r->ideal_generators);
}

Rational augmentation(const RepElement& v) {
    const auto& r = *v.owner();
    if (r.polynomial_type()) return v.value().evaluate(r.unit_point);
    Rational s = 0;
    for (std::size_t i = 0; i < v.coords().size(); ++i) s += v.coords()[i] * r.finite->characters[i].dim;
    return s;
}

bool restriction_supported(const GroupSpec& g, const GroupSpec& h) {
    if (g.name() == h.name()) return true;
    if (const auto* gl = std::get_if<GeneralLinear>(&g.kind))
        if (const auto* t = std::get_if<SplitTorus>(&h.kind)) return gl->n == t->rank;
    if (const auto* t = std::get_if<SplitTorus>(&g.kind))
        if (std::holds_alternative<RootsOfUnity>(h.kind)) return t->rank == 1;
    if (std::holds_alternative<SpecialLinear2>(g.kind))
        if (const auto* t = std::get_if<SplitTorus>(&h.kind)) return t->rank == 1;
    return false;
}

RepElement restriction(const RepRingPtr& g, const RepRingPtr& h, const RepElement& v) {
    if (v.owner() != g) throw DomainError("restriction: element does not belong to the source ring");
    if (!restriction_supported(g->group, h->group))
        throw UnsupportedError("restriction " + g->group.name() + " ⊃ " + h->group.name() + " is not supported");
    if (g->group.name() == h->group.name()) {
        if (g->polynomial_type()) return RepElement::from_poly(h, v.value().with_ring(h->ring));
        return RepElement::from_coords(h, v.coords());
    }
    if (std::holds_alternative<GeneralLinear>(g->group.kind)) return RepElement::from_poly(h, v.value().with_ring(h->ring));
    if (std::holds_alternative<SplitTorus>(g->group.kind)) {
        Poly out(h->ring);
        for (const auto& [m, c] : v.value().terms()) out.add_term(m, c);
        return RepElement::from_poly(h, out);  // exponents reduced mod n
    }
    // SL2 ⊃ T^1: c ↦ x + x^{-1}
    Poly image = Poly::variable(h->ring, 0) + Poly::variable(h->ring, 0, -1);
    return RepElement::from_poly(h, v.value().substitute({image}));
}

std::vector<Rational> character_values(const RepElement& v) {
    const auto& r = *v.owner();
    if (r.polynomial_type()) throw DomainError("character values need a finite-free model");
    const std::size_t k = r.finite->class_count();
    std::vector<Rational> out(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) out[c] += v.coords()[i] * r.finite->characters[i].values[c];
    return out;
}

RepElement from_class_function(const RepRingPtr& r, const std::vector<Rational>& values) {
    const auto& g = *r->finite;
    const std::size_t k = g.class_count();
    if (values.size() != k) throw DomainError("class function has wrong length");
    Vector coords(k);
    std::vector<Rational> check(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        const auto& chi = g.characters[i].values;
        coords[i] = g.inner_product(values, chi) / g.inner_product(chi, chi);
        for (std::size_t c = 0; c < k; ++c) check[c] += coords[i] * chi[c];
    }
    if (check != values) throw DomainError("class function is outside the span of the character table");
    return RepElement::from_coords(r, coords);
}

RepElement restriction_finite(const RepRingPtr& g, const RepRingPtr& h, const std::vector<std::size_t>& embedding,
                              const RepElement& v) {
    if (g->model != RepModel::FiniteFree || h->model != RepModel::FiniteFree)
        throw UnsupportedError("character restriction needs finite groups");
    const auto& G = *g->finite;
    const auto& H = *h->finite;
    if (embedding.size() != H.order()) throw DomainError("embedding has wrong length");
    for (std::size_t a = 0; a < H.order(); ++a)
        for (std::size_t b = 0; b < H.order(); ++b)
            if (embedding[H.multiplication[a][b]] != G.multiplication[embedding[a]][embedding[b]])
                throw DomainError("embedding is not a homomorphism");
    auto vals = character_values(v);
    std::vector<Rational> res(H.class_count());
    for (std::size_t c = 0; c < H.class_count(); ++c) res[c] = vals[G.class_of[embedding[H.classes[c].front()]]];
    return from_class_function(h, res);
}

namespace {

// ψ_ℓ(x + x^{-1}) = x^ℓ + x^{-ℓ} as a polynomial in c
Poly chebyshev_like(const RingPtr& ring, unsigned ell) {
    Poly c = Poly::variable(ring, 0);
    Poly prev = Poly::constant(ring, 2), cur = c;
    if (ell == 0) return prev;
    for (unsigned k = 1; k < ell; ++k) {
        Poly next = c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

RepElement adams(unsigned ell, const RepElement& v) {
    if (ell == 0) throw DomainError("adams: ℓ must be positive");
    const auto& r = v.owner();
    switch (r->model) {
        case RepModel::LaurentInvariant:
        case RepModel::CyclicQuotient: {
            Poly out(r->ring);
            for (const auto& [key, c] : v.value().terms()) {
                Monomial m = key;
                for (int& e : m) e *= static_cast<int>(ell);
                out.add_term(m, c);
            }
            return RepElement::from_poly(r, out);
        }
        case RepModel::Polynomial:
            return RepElement::from_poly(r, v.value().substitute({chebyshev_like(r->ring, ell)}));
        case RepModel::FiniteFree: {
            const auto& g = *r->finite;
            auto it = g.power_maps.find(ell);
            if (it == g.power_maps.end() && ell != 1)
                throw UnsupportedError("adams on " + g.name + " needs the power map for ℓ = " + std::to_string(ell) +
                                       " in the group file");
            auto vals = character_values(v);
            std::vector<Rational> out(vals.size());
            for (std::size_t c = 0; c < vals.size(); ++c) out[c] = ell == 1 ? vals[c] : vals[it->second[c]];
            return from_class_function(r, out);
        }
    }
    throw DomainError("adams: unknown model");
}

RepElement regular_representation(const RepRingPtr& r) {
    if (r->model == RepModel::FiniteFree) {
        std::vector<Rational> vals(r->finite->class_count(), Rational(0));
        vals[r->finite->identity_class] = static_cast<long>(r->finite->order());
        return from_class_function(r, vals);
    }
    if (r->model == RepModel::CyclicQuotient) {
        Poly s(r->ring);
        for (unsigned k = 0; k < r->cyclic_orders[0]; ++k) s.add_term({static_cast<int>(k)}, 1);
        return RepElement::from_poly(r, s);
    }
    throw UnsupportedError("regular representation needs a finite group");
}

UPoly characteristic_polynomial(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    ExactMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
        m = am;
        ExactMatrix t = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return UPoly(c);
}

AdamsEigen adams_eigenspaces(unsigned ell, int window) {
    if (ell < 2 || window < 0) throw DomainError("adams_eigenspaces needs ℓ ≥ 2 and window ≥ 0");
    AdamsEigen out;
    out.ell = ell;
    out.window = window;
    const int big = static_cast<int>(ell) * window;
    const std::size_t dim = static_cast<std::size_t>(2 * big + 1);
    auto idx = [&](int k) { return static_cast<std::size_t>(k + big); };
    auto psi = [&](const Vector& v) {
        Vector w(dim, Rational(0));
        for (int k = -big; k <= big; ++k)
            if (v[idx(k)] != 0) {
                const long long e = static_cast<long long>(k) * ell;
                if (e < -big || e > big) throw IntegrityError("adams window overflow");
                w[idx(static_cast<int>(e))] = v[idx(k)];
            }
        return w;
    };
    std::vector<Vector> basis;
    for (int k = -window; k <= window; ++k) {
        Vector v(dim, Rational(0));
        v[idx(k)] = 1;
        basis.push_back(v);
    }
    while (!basis.empty()) {
        const std::size_t b = basis.size();
        std::vector<Vector> cols;
        for (const auto& v : basis) cols.push_back(psi(v));
        for (const auto& v : basis) {
            Vector neg = v;
            for (auto& x : neg) x = -x;
            cols.push_back(neg);
        }
        auto ker = ExactMatrix::from_columns(cols, dim).kernel();
        std::vector<Vector> next;
        for (const auto& kv : ker) {
            Vector w(dim, Rational(0));
            for (std::size_t j = 0; j < b; ++j)
                if (kv[j] != 0)
                    for (std::size_t i = 0; i < dim; ++i) w[i] += kv[j] * basis[j][i];
            next.push_back(w);
        }
        auto [rows, piv] = ExactMatrix::from_rows(next, dim).rref();
        next.assign(rows.begin(), rows.begin() + static_cast<long>(piv.size()));
        if (next.size() == b) {
            basis = next;
            break;
        }
        basis = next;
    }
    auto ring = make_ring({"x"}, RingMode::Laurent);
    auto to_poly = [&](const Vector& v) {
        Poly p(ring);
        for (int k = -big; k <= big; ++k)
            if (v[idx(k)] != 0) p.add_term({k}, v[idx(k)]);
        return p;
    };
    for (const auto& v : basis) out.stable_basis.push_back(to_poly(v));
    const std::size_t b = basis.size();
    if (b == 0) {
        out.characteristic = UPoly::constant(1);
        return out;
    }
    ExactMatrix bm = ExactMatrix::from_columns(basis, dim);
    ExactMatrix a(b, b);
    for (std::size_t j = 0; j < b; ++j) {
        auto sol = bm.solve(psi(basis[j]));
        if (!sol) throw IntegrityError("stable subspace is not invariant");
        for (std::size_t i = 0; i < b; ++i) a(i, j) = (*sol)[i];
    }
    out.characteristic = characteristic_polynomial(a);
    for (const auto& [root, mult] : rational_roots(out.characteristic)) {
        (void)mult;
        out.eigenvalues.push_back(root);
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    for (const auto& lam : out.eigenvalues) {
        ExactMatrix shifted = a;
        for (std::size_t i = 0; i < b; ++i) shifted(i, i) -= lam;
        std::vector<Poly> space;
        for (const auto& kv : shifted.kernel()) space.push_back(to_poly(bm.apply(kv)));
        out.eigenspaces.push_back(space);
    }
    return out;
}

}  // namespace astk
