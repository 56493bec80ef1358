#include "astk/trace.hpp"

#include <algorithm>

namespace astk {

std::string class_model_name(ClassModel m) {
    switch (m) {
        case ClassModel::FiniteClasses: return "finite-classes";
        case ClassModel::LaurentSelf: return "laurent-self";
        case ClassModel::SymmetricLaurent: return "symmetric-laurent";
        case ClassModel::CyclicSelf: return "cyclic-self";
        case ClassModel::SL2Trace: return "sl2-trace";
    }
    return "?";
}

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void require_owner(const ClassFunction& a, const ClassFunction& b) {
    if (a.owner != b.owner) throw DomainError("class functions on different groups");
}

ClassFunction make_poly(const ClassRingPtr& r, const Poly& f) { return ClassFunction{r, r->reduce(f), {}}; }
ClassFunction make_vec(const ClassRingPtr& r, Vector v) { return ClassFunction{r, Poly(), std::move(v)}; }

}  // namespace

Poly ClassFunctionRing::reduce(const Poly& f) const {
    switch (model) {
        case ClassModel::LaurentSelf:
        case ClassModel::CyclicSelf:
            return rep->reduce(f);
        case ClassModel::SymmetricLaurent: {
            Poly r(ring);
            const std::size_t en = gl_rank - 1, fv = gl_rank;
            for (const auto& [key, c] : f.terms()) {
                Monomial m = key;
                const int k = std::min(m[en], m[fv]);
                m[en] -= k;
                m[fv] -= k;
                r.add_term(m, c);
            }
            return r;
        }
        default:
            return f;
    }
}

std::string ClassFunction::to_string() const {
    if (owner->polynomial_type()) return value.to_string();
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + format_rational(coords[i]);
    return s + ")";
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    require_owner(a, b);
    if (a.owner->polynomial_type()) return make_poly(a.owner, a.value + b.value);
    Vector v = a.coords;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coords[i];
    return make_vec(a.owner, v);
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    require_owner(a, b);
    if (a.owner->polynomial_type()) return make_poly(a.owner, a.value - b.value);
    Vector v = a.coords;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coords[i];
    return make_vec(a.owner, v);
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    require_owner(a, b);
    if (a.owner->polynomial_type()) return make_poly(a.owner, a.value * b.value);
    return make_vec(a.owner, a.owner->algebra->multiply(a.coords, b.coords));
}

ClassRingPtr class_function_ring(const RepRingPtr& rep) {
    auto r = std::make_shared<ClassFunctionRing>();
    r->group = rep->group;
    r->rep = rep;
    switch (rep->model) {
        case RepModel::FiniteFree: {
            r->model = ClassModel::FiniteClasses;
            r->finite = rep->finite;
            const auto& g = *rep->finite;
            const std::size_t k = g.class_count();
            std::vector<std::string> labels;
            for (const auto& c : g.classes) labels.push_back("[" + g.elements[c.front()] + "]");
            std::vector<std::vector<Vector>> table(k, std::vector<Vector>(k, Vector(k, Rational(0))));
            for (std::size_t i = 0; i < k; ++i) table[i][i][i] = 1;
            r->algebra = std::make_shared<FinDimAlgebra>(labels, table, Vector(k, Rational(1)));
            break;
        }
        case RepModel::CyclicQuotient:
            r->model = ClassModel::CyclicSelf;
            r->ring = rep->ring;
            r->relations = rep->relations();
            r->unit_point = rep->unit_point;
            break;
        case RepModel::Polynomial:
            r->model = ClassModel::SL2Trace;
            r->ring = rep->ring;
            r->unit_point = rep->unit_point;
            break;
        case RepModel::LaurentInvariant: {
            if (rep->weyl_blocks.empty()) {
                r->model = ClassModel::LaurentSelf;
                r->ring = rep->ring;
                r->relations = rep->relations();
                r->unit_point = rep->unit_point;
                break;
            }
            const auto* gl = std::get_if<GeneralLinear>(&rep->group.kind);
            if (!gl) throw UnsupportedError("class functions of " + rep->group.name() + " are not modelled");
            r->model = ClassModel::SymmetricLaurent;
            r->gl_rank = gl->n;
            std::vector<std::string> names;
            for (unsigned i = 1; i <= gl->n; ++i) {
                names.push_back("e" + std::to_string(i));
                r->unit_point.push_back(Rational(binomial(gl->n, i)));
            }
            names.push_back("f");
            r->unit_point.push_back(Rational(1));
            r->ring = make_ring(names);
            r->relations = {Poly::variable(r->ring, gl->n - 1) * Poly::variable(r->ring, gl->n) -
                            Poly::constant(r->ring, 1)};
            break;
        }
    }
    return r;
}

ClassRingPtr class_function_ring(const GroupSpec& g) { return class_function_ring(rep_ring(g)); }

Rational unit_evaluation(const ClassFunction& f) {
    if (f.owner->polynomial_type()) return f.value.evaluate(f.owner->unit_point);
    return f.coords[f.owner->finite->identity_class];
}

Poly symmetric_to_elementary(const Poly& f, const RingPtr& e_ring) {
    const RingPtr& t_ring = f.ring();
    const std::size_t n = t_ring->nvars();
    if (e_ring->nvars() < n) throw DomainError("target ring needs one variable per elementary function");
    std::vector<Poly> e(n + 1, Poly(t_ring));
    e[0] = Poly::constant(t_ring, 1);
    for (std::size_t v = 0; v < n; ++v) {
        Poly t = Poly::variable(t_ring, v);
        for (std::size_t i = v + 1; i >= 1; --i) e[i] += t * e[i - 1];
    }
    Poly rest = f;
    Poly out(e_ring);
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().begin();
        for (std::size_t i = 0; i < n; ++i)
            if (lead[i] < 0 || (i + 1 < n && lead[i] < lead[i + 1]))
                throw DomainError("polynomial " + f.to_string() + " is not symmetric");
        Monomial em(e_ring->nvars(), 0);
        Poly prod = Poly::constant(t_ring, c);
        for (std::size_t i = 0; i < n; ++i) {
            const int a = lead[i] - (i + 1 < n ? lead[i + 1] : 0);
            em[i] = a;
            if (a > 0) prod = prod * e[i + 1].pow(static_cast<unsigned>(a));
        }
        out.add_term(em, c);
        rest -= prod;
    }
    return out;
}

ClassFunction dennis_trace(const ClassRingPtr& ring, const RepElement& v) {
    if (v.owner() != ring->rep) throw DomainError("dennis_trace: element belongs to another representation ring");
    switch (ring->model) {
        case ClassModel::FiniteClasses:
            return make_vec(ring, character_values(v));
        case ClassModel::SymmetricLaurent: {
            const std::size_t n = ring->gl_rank;
            int k = 0;
            for (int m : v.value().min_exponents()) k = std::max(k, -m);
            Poly shifted = v.value().mul_term(Monomial(n, k), 1);
            Poly e = symmetric_to_elementary(shifted, ring->ring);
            e = e * Poly::variable(ring->ring, n).pow(static_cast<unsigned>(k));
            return make_poly(ring, e);
        }
        default:
            return make_poly(ring, v.value());
    }
}

std::vector<ClassFunction> unit_ideal_J(const ClassRingPtr& ring) {
    std::vector<ClassFunction> out;
    switch (ring->model) {
        case ClassModel::FiniteClasses: {
            const auto& g = *ring->finite;
            for (std::size_t c = 0; c < g.class_count(); ++c) {
                if (c == g.identity_class) continue;
                Vector v(g.class_count(), Rational(0));
                v[c] = 1;
                out.push_back(make_vec(ring, v));
            }
            break;
        }
        case ClassModel::SymmetricLaurent:
            for (unsigned i = 0; i < ring->gl_rank; ++i)
                out.push_back(make_poly(ring, Poly::variable(ring->ring, i) - Poly::constant(ring->ring, ring->unit_point[i])));
            break;
        default:
            for (std::size_t i = 0; i < ring->ring->nvars(); ++i)
                out.push_back(make_poly(ring, Poly::variable(ring->ring, i) - Poly::constant(ring->ring, ring->unit_point[i])));
    }
    return out;
}

bool RadicalReport::audit() const {
    for (const auto& c : forward)
        if (!c.validate()) return false;
    for (const auto& c : reverse)
        if (!c.validate()) return false;
    for (const auto& c : forward_alg)
        if (!c.validate()) return false;
    for (const auto& c : reverse_alg)
        if (!c.validate()) return false;
    if (!exponent) return true;
    const std::size_t expected = multisets(j_generators.size(), *exponent).size();
    const std::size_t got = ring->polynomial_type() ? forward.size() : forward_alg.size();
    if (j_generators.empty()) return got == 0;
    if (got != expected) return false;
    std::size_t idx = 0;
    for (const auto& ms : multisets(j_generators.size(), *exponent)) {
        ClassFunction p = j_generators[ms[0]];
        for (std::size_t i = 1; i < ms.size(); ++i) p = p * j_generators[ms[i]];
        if (ring->polynomial_type() ? !(forward[idx].target == p.value) : forward_alg[idx].target != p.coords)
            return false;
        ++idx;
    }
    return true;
}

RadicalReport radical_compare(const GroupSpec& g, unsigned n_max, Exec exec) {
    auto rep = rep_ring(g);
    auto cr = class_function_ring(rep);
    RadicalReport out;
    out.group = g.name();
    out.ring = cr;
    out.n_max = n_max;
    out.j_generators = unit_ideal_J(cr);
    for (const auto& x : as_ideal_elements(rep)) {
        auto t = dennis_trace(cr, x);
        if (unit_evaluation(t) != 0) out.unit_evaluation_vanishes = false;
        out.trace_generators.push_back(t);
    }
    const bool poly = cr->polynomial_type();
    std::optional<IdealMembership> fwd, rev;
    std::vector<Vector> jvec, tvec;
    if (poly) {
        std::vector<Poly> jp, tp;
        for (const auto& x : out.j_generators) jp.push_back(x.value);
        for (const auto& x : out.trace_generators) tp.push_back(x.value);
        rev.emplace(IdealGens(cr->ring, jp), cr->relations);
        fwd.emplace(IdealGens(cr->ring, tp), cr->relations);
        for (const auto& t : tp) {
            auto c = rev->member(t);
            if (c) out.reverse.push_back(*c);
            else out.reverse_holds = false;
        }
    } else {
        for (const auto& x : out.j_generators) jvec.push_back(x.coords);
        for (const auto& x : out.trace_generators) tvec.push_back(x.coords);
        for (const auto& t : tvec) {
            auto c = cr->algebra->ideal_member(t, jvec);
            if (c) out.reverse_alg.push_back(AlgebraCertificate{cr->algebra, jvec, *c, t});
            else out.reverse_holds = false;
        }
    }
    for (unsigned n = 1; n <= n_max; ++n) {
        auto sets = multisets(out.j_generators.size(), n);
        std::vector<ClassFunction> products;
        for (const auto& ms : sets) {
            ClassFunction p = out.j_generators[ms[0]];
            for (std::size_t i = 1; i < ms.size(); ++i) p = p * out.j_generators[ms[i]];
            products.push_back(p);
        }
        const long count = static_cast<long>(products.size());
        std::vector<std::optional<MembershipCertificate>> pc(poly ? products.size() : 0);
        std::vector<std::optional<AlgebraCertificate>> ac(poly ? 0 : products.size());
        std::vector<std::string> errors(products.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
        for (long i = 0; i < count; ++i) {
            try {
                if (poly) {
                    pc[i] = fwd->member(products[i].value);
                } else {
                    auto c = cr->algebra->ideal_member(products[i].coords, tvec);
                    if (c) ac[i] = AlgebraCertificate{cr->algebra, tvec, *c, products[i].coords};
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty()) throw IntegrityError("radical search: " + e);
        std::optional<std::size_t> missing;
        for (std::size_t i = 0; i < products.size() && !missing; ++i)
            if (poly ? !pc[i] : !ac[i]) missing = i;
        if (missing) {
            out.lower_witnesses.emplace_back(n, products[*missing].to_string());
            continue;
        }
        out.exponent = n;
        for (auto& c : pc) out.forward.push_back(std::move(*c));
        for (auto& c : ac) out.forward_alg.push_back(std::move(*c));
        out.status = SearchStatus::Pass;
        break;
    }
    return out;
}

bool UnipotentReport::audit() const {
    for (const auto* list : {&j_in_ie, &ie_in_radical})
        for (const auto& c : *list)
            if (!c.validate()) return false;
    for (const auto* list : {&j_in_ie_alg, &ie_in_radical_alg})
        for (const auto& c : *list)
            if (!c.validate()) return false;
    return true;
}

UnipotentReport unipotent_reduced_check(const GroupSpec& g, unsigned power_bound) {
    if (!g.is_nice())
        throw DomainError(g.name() + " is not nice: only extensions of finite groups by tori are accepted");
    UnipotentReport out;
    out.group = g.name();
    out.power_bound = power_bound;
    auto rep = rep_ring(g);
    if (rep->model == RepModel::FiniteFree) {
        const auto& G = *rep->finite;
        const std::size_t n = G.order();
        out.carrier = "Q^" + std::to_string(n) + " (functions on the elements)";
        out.function_ring_dim = n;
        std::vector<std::string> labels(G.elements);
        std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n, Rational(0))));
        for (std::size_t i = 0; i < n; ++i) table[i][i][i] = 1;
        auto alg = std::make_shared<FinDimAlgebra>(labels, table, Vector(n, Rational(1)));
        std::vector<Vector> jext, ie;
        for (std::size_t c = 0; c < G.class_count(); ++c) {
            if (c == G.identity_class) continue;
            Vector v(n, Rational(0));
            for (std::size_t x : G.classes[c]) v[x] = 1;
            jext.push_back(v);
            out.extended_j.push_back("1_[" + G.elements[G.classes[c].front()] + "]");
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (x == G.identity) continue;
            Vector v(n, Rational(0));
            v[x] = 1;
            ie.push_back(v);
            out.identity_ideal.push_back("delta_" + G.elements[x]);
        }
        bool ok = true;
        for (const auto& j : jext) {
            auto c = alg->ideal_member(j, ie);
            if (!c) ok = false;
            else out.j_in_ie_alg.push_back(AlgebraCertificate{alg, ie, *c, j});
        }
        for (const auto& d : ie) {
            bool found = false;
            for (unsigned m = 1; m <= power_bound && !found; ++m) {
                Vector p = alg->power(d, m);
                auto c = alg->ideal_member(p, jext);
                if (c) {
                    out.ie_in_radical_alg.push_back(AlgebraCertificate{alg, jext, *c, p});
                    out.radical_powers.push_back(m);
                    found = true;
                }
            }
            ok = ok && found;
        }
        out.ie_maximal = n - alg->ideal_dimension(ie) == 1;
        for (std::size_t x = 0; x < n; ++x) {
            bool vanish = true;
            for (const auto& j : jext) vanish = vanish && j[x] == 0;
            if (vanish) out.zero_set.push_back(G.elements[x]);
        }
        out.holds = ok && out.ie_maximal && out.zero_set == std::vector<std::string>{G.elements[G.identity]};
        return out;
    }
    auto cr = class_function_ring(rep);
    std::vector<Poly> jext, ie;
    for (const auto& j : unit_ideal_J(cr)) {
        jext.push_back(j.value);
        out.extended_j.push_back(j.value.to_string());
    }
    for (std::size_t v = 0; v < cr->ring->nvars(); ++v) {
        ie.push_back(Poly::variable(cr->ring, v) - Poly::constant(cr->ring, 1));
        out.identity_ideal.push_back(ie.back().to_string());
    }
    out.carrier = cr->ring->laurent() ? "Laurent ring" : "polynomial ring";
    if (!cr->relations.empty()) {
        out.carrier += " modulo";
        for (const auto& r : cr->relations) out.carrier += " (" + r.to_string() + ")";
    }
    bool infinite = std::any_of(rep->cyclic_orders.begin(), rep->cyclic_orders.end(), [](unsigned k) { return k == 0; });
    if (!infinite) {
        std::size_t d = 1;
        for (unsigned k : rep->cyclic_orders) d *= k;
        out.function_ring_dim = d;
    }
    IdealMembership in_ie(IdealGens(cr->ring, ie), cr->relations);
    IdealMembership in_j(IdealGens(cr->ring, jext), cr->relations);
    bool ok = true;
    for (const auto& j : jext) {
        auto c = in_ie.member(j);
        if (!c) ok = false;
        else out.j_in_ie.push_back(*c);
    }
    for (const auto& d : ie) {
        bool found = false;
        for (unsigned m = 1; m <= power_bound && !found; ++m) {
            auto c = in_j.member(cr->reduce(d.pow(m)));
            if (c) {
                out.ie_in_radical.push_back(*c);
                out.radical_powers.push_back(m);
                found = true;
            }
        }
        ok = ok && found;
    }
    out.ie_maximal = complete_truncated(IdealGens(cr->ring, ie), 0, cr->relations).dim() == 1;
    if (const auto* mu = std::get_if<RootsOfUnity>(&g.kind)) {
        UPoly m = UPoly::x_power(mu->n) - UPoly::constant(1);
        out.separable = gcd(m, m.derivative()).degree() == 0;
    }
    out.holds = ok && out.ie_maximal && out.separable.value_or(true);
    return out;
}

}  // namespace astk
