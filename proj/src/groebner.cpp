#include "astk/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace astk {

IdealGens::IdealGens(RingPtr r, std::vector<Poly> gens) : ring(std::move(r)), generators(std::move(gens)) {
    for (auto& g : generators) {
        if (!g.ring()) g = g.with_ring(ring);
        if (!same_ring(g.ring(), ring)) throw DomainError("ideal generator lives in a different ring");
    }
}

bool MembershipCertificate::validate() const {
    if (generators.size() != coefficients.size()) return false;
    Poly sum(target.ring());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        sum += coefficients[i] * generators[i];
    }
    return sum == target;
}

namespace {

using OPoly = std::map<Monomial, Rational, DescendingBy>;

OPoly to_ordered(const Poly& p, const TermOrder& order) {
    OPoly r(DescendingBy{&order});
    for (const auto& [m, c] : p.terms()) r.emplace(m, c);
    return r;
}

Poly from_ordered(const OPoly& p, const RingPtr& ring) {
    Poly r(ring);
    for (const auto& [m, c] : p) r.add_term(m, c);
    return r;
}

void add_scaled(OPoly& h, const OPoly& g, const Monomial& shift, const Rational& coef) {
    for (const auto& [m, c] : g) {
        Monomial mm = monomial_mul(m, shift);
        auto [it, inserted] = h.try_emplace(std::move(mm), c * coef);
        if (!inserted) {
            it->second += c * coef;
            if (it->second == 0) h.erase(it);
        }
    }
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

struct Element {
    OPoly poly;
    std::vector<Poly> cofactors;
};

// Full reduction of h by `basis` (monic elements). Quotient terms are accumulated per
// basis index when `quotients` is non-null.
OPoly reduce_full(OPoly h, const std::vector<const OPoly*>& basis, std::vector<Poly>* quotients,
                  const RingPtr& ring, const TermOrder& order) {
    OPoly rem(DescendingBy{&order});
    while (!h.empty()) {
        auto it = h.begin();
        const Monomial m = it->first;
        const Rational c = it->second;
        bool reduced = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const OPoly& g = *basis[j];
            const auto& [lm, lc] = *g.begin();
            if (!monomial_divides(lm, m)) continue;
            Monomial t = monomial_quotient(m, lm);
            Rational coef = c / lc;
            add_scaled(h, g, t, -coef);
            if (quotients) (*quotients)[j].add_term(t, coef);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.emplace(m, c);
            h.erase(h.begin());
        }
    }
    (void)ring;
    return rem;
}

void make_monic(Element& e) {
    Rational lc = e.poly.begin()->second;
    if (lc == 1) return;
    Rational inv = 1 / lc;
    for (auto& [m, c] : e.poly) c *= inv;
    for (auto& cf : e.cofactors) cf *= inv;
}

std::vector<Poly> combine_cofactors(const std::vector<Poly>& base, const std::vector<Poly>& quotients,
                                    const std::vector<const Element*>& elems, const RingPtr& ring) {
    std::vector<Poly> out = base;
    for (std::size_t j = 0; j < quotients.size(); ++j) {
        if (quotients[j].is_zero()) continue;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Poly& cf = elems[j]->cofactors[i];
            if (cf.is_zero()) continue;
            out[i] -= quotients[j] * cf;
        }
    }
    (void)ring;
    return out;
}

void check_engine_ring(const RingPtr& ring) {
    if (!ring) throw DomainError("ideal has no ring");
    if (ring->coeffs == CoeffDomain::Integers)
        throw DomainError("Groebner engine works over the rationals; lift integer coefficients first");
    if (ring->laurent()) throw DomainError("Groebner engine needs polynomial mode; use laurent_member");
}

}  // namespace

Monomial leading_monomial(const Poly& f, const TermOrder& order) {
    if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order.compare(m, *best) > 0) best = &m;
    return *best;
}

Rational leading_coefficient(const Poly& f, const TermOrder& order) {
    return f.coeff(leading_monomial(f, order));
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order) {
    Monomial lf = leading_monomial(f, order), lg = leading_monomial(g, order);
    Monomial l = monomial_lcm(lf, lg);
    Poly a = f.mul_term(monomial_quotient(l, lf), 1 / f.coeff(lf));
    Poly b = g.mul_term(monomial_quotient(l, lg), 1 / g.coeff(lg));
    return a - b;
}

Monomial GroebnerBasis::leading_monomial(std::size_t j) const { return astk::leading_monomial(basis.at(j), order); }

Division GroebnerBasis::divide(const Poly& f) const {
    const RingPtr& ring = source.ring;
    std::vector<OPoly> ordered;
    ordered.reserve(basis.size());
    for (const auto& g : basis) ordered.push_back(to_ordered(g, order));
    std::vector<const OPoly*> ptrs;
    for (const auto& g : ordered) ptrs.push_back(&g);
    std::vector<Poly> q(basis.size(), Poly(ring));
    OPoly r = reduce_full(to_ordered(f, order), ptrs, &q, ring, order);
    return Division{std::move(q), from_ordered(r, ring)};
}

bool GroebnerBasis::is_unit_ideal() const {
    return basis.size() == 1 && basis[0] == Poly::constant(source.ring, 1);
}

bool GroebnerBasis::satisfies_buchberger() const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_polynomial(basis[i], basis[j], order)).is_zero()) return false;
    return true;
}

bool GroebnerBasis::contains_source() const {
    for (const auto& g : source.generators)
        if (!normal_form(g).is_zero()) return false;
    return true;
}

GroebnerBasis groebner_basis(const IdealGens& gens, const TermOrder& order, bool track) {
    check_engine_ring(gens.ring);
    const RingPtr& ring = gens.ring;
    if (order.nvars() != ring->nvars()) throw DomainError("term order size does not match ring");
    const std::size_t ns = gens.size();

    std::vector<Element> G;
    for (std::size_t i = 0; i < ns; ++i) {
        if (gens.generators[i].is_zero()) continue;
        Element e{to_ordered(gens.generators[i], order), {}};
        if (track) {
            e.cofactors.assign(ns, Poly(ring));
            e.cofactors[i] = Poly::constant(ring, 1);
        }
        make_monic(e);
        G.push_back(std::move(e));
    }

    // pending pairs keyed by (deg lcm, i, j)
    std::set<std::tuple<int, std::size_t, std::size_t>> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_index;
    auto lm = [&](std::size_t k) -> const Monomial& { return G[k].poly.begin()->first; };
    auto add_pair = [&](std::size_t i, std::size_t j) {
        pending.emplace(total_degree(monomial_lcm(lm(i), lm(j))), i, j);
        pending_index.emplace(i, j);
    };
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending_index.count({a, b}) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        pending_index.erase({i, j});
        (void)deg;
        const Monomial l = monomial_lcm(lm(i), lm(j));
        // product criterion
        if (total_degree(l) == total_degree(lm(i)) + total_degree(lm(j))) {
            bool coprime = true;
            for (std::size_t v = 0; v < l.size(); ++v)
                if (lm(i)[v] != 0 && lm(j)[v] != 0) coprime = false;
            if (coprime) continue;
        }
        // chain criterion
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (monomial_divides(lm(k), l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
        }
        if (chain) continue;

        Monomial ti = monomial_quotient(l, lm(i)), tj = monomial_quotient(l, lm(j));
        OPoly s(DescendingBy{&order});
        add_scaled(s, G[i].poly, ti, 1);
        add_scaled(s, G[j].poly, tj, -1);
        std::vector<Poly> scof;
        if (track) {
            scof.assign(ns, Poly(ring));
            for (std::size_t a = 0; a < ns; ++a) {
                if (!G[i].cofactors[a].is_zero()) scof[a] += G[i].cofactors[a].mul_term(ti, 1);
                if (!G[j].cofactors[a].is_zero()) scof[a] -= G[j].cofactors[a].mul_term(tj, 1);
            }
        }
        std::vector<const OPoly*> ptrs;
        std::vector<const Element*> elems;
        for (const auto& e : G) {
            ptrs.push_back(&e.poly);
            elems.push_back(&e);
        }
        std::vector<Poly> q(G.size(), Poly(ring));
        OPoly r = reduce_full(std::move(s), ptrs, track ? &q : nullptr, ring, order);
        if (r.empty()) continue;
        Element e{std::move(r), {}};
        if (track) e.cofactors = combine_cofactors(scof, q, elems, ring);
        make_monic(e);
        G.push_back(std::move(e));
        const std::size_t n = G.size() - 1;
        for (std::size_t k = 0; k < n; ++k) add_pair(k, n);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < G.size() && !drop; ++b) {
            if (a == b || !monomial_divides(lm(b), lm(a))) continue;
            if (lm(b) != lm(a) || b < a) drop = true;
        }
        if (!drop) keep.push_back(a);
    }
    std::vector<Element> M;
    for (std::size_t a : keep) M.push_back(std::move(G[a]));

    // interreduce tails
    for (std::size_t a = 0; a < M.size(); ++a) {
        std::vector<const OPoly*> ptrs;
        std::vector<const Element*> elems;
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < M.size(); ++b) {
            if (b == a) continue;
            ptrs.push_back(&M[b].poly);
            elems.push_back(&M[b]);
            idx.push_back(b);
        }
        std::vector<Poly> q(ptrs.size(), Poly(ring));
        OPoly r = reduce_full(M[a].poly, ptrs, track ? &q : nullptr, ring, order);
        if (track) M[a].cofactors = combine_cofactors(M[a].cofactors, q, elems, ring);
        M[a].poly = std::move(r);
        make_monic(M[a]);
    }
    std::sort(M.begin(), M.end(), [&](const Element& x, const Element& y) {
        return order.compare(x.poly.begin()->first, y.poly.begin()->first) > 0;
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.source = gens;
    for (auto& e : M) {
        gb.basis.push_back(from_ordered(e.poly, ring));
        if (track) gb.cofactors.push_back(std::move(e.cofactors));
    }
    return gb;
}

std::optional<MembershipCertificate> member_via(const GroebnerBasis& gb, const Poly& f) {
    if (f.ring() && !same_ring(f.ring(), gb.source.ring)) throw DomainError("ring mismatch in membership test");
    const RingPtr& ring = gb.source.ring;
    MembershipCertificate cert{gb.source.generators,
                               std::vector<Poly>(gb.source.size(), Poly(ring)), f.ring() ? f : f.with_ring(ring)};
    if (f.is_zero()) return cert;
    if (gb.cofactors.size() != gb.basis.size() && !gb.basis.empty())
        throw DomainError("membership certificates need a basis computed with cofactors");
    Division d = gb.divide(f);
    if (!d.remainder.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j < d.quotients.size(); ++j) {
        if (d.quotients[j].is_zero()) continue;
        for (std::size_t i = 0; i < cert.coefficients.size(); ++i)
            if (!gb.cofactors[j][i].is_zero()) cert.coefficients[i] += d.quotients[j] * gb.cofactors[j][i];
    }
    if (!cert.validate()) throw IntegrityError("membership certificate failed to validate");
    return cert;
}

std::optional<MembershipCertificate> ideal_member(const Poly& f, const IdealGens& gens, const TermOrder& order) {
    check_engine_ring(gens.ring);
    if (f.ring() && !same_ring(f.ring(), gens.ring)) throw DomainError("ring mismatch in membership test");
    return member_via(groebner_basis(gens, order, true), f);
}

std::optional<MembershipCertificate> laurent_member(const Poly& f, const IdealGens& gens) {
    if (f.ring() && !same_ring(f.ring(), gens.ring)) throw DomainError("ring mismatch in membership test");
    return IdealMembership(gens).member(f);
}

// --- IdealMembership --------------------------------------------------------

IdealMembership::IdealMembership(IdealGens ideal, std::vector<Poly> relations) : ambient_(ideal.ring) {
    if (!ambient_) throw DomainError("ideal has no ring");
    if (ambient_->coeffs == CoeffDomain::Integers)
        throw DomainError("membership runs over the rationals; lift integer coefficients first");
    all_gens_ = ideal.generators;
    for (auto& r : relations) {
        if (!same_ring(r.ring(), ambient_)) throw DomainError("relation lives in a different ring");
        all_gens_.push_back(std::move(r));
    }
    laurent_ = ambient_->laurent();
    const std::size_t n = ambient_->nvars();
    std::vector<Poly> work;
    if (laurent_) {
        std::vector<std::string> names{"_s"};
        for (const auto& v : ambient_->variables) names.push_back(v);
        working_ = make_ring(names, RingMode::Polynomial, CoeffDomain::Rationals);
        for (const auto& g : all_gens_) {
            Monomial shift;
            work.push_back(to_working(g, shift));
            gen_shifts_.push_back(shift);
        }
        Monomial all(n + 1, 1);
        Poly sat = Poly::monomial(working_, all) - Poly::constant(working_, 1);
        work.push_back(sat);
        gb_ = groebner_basis(IdealGens(working_, work), TermOrder::elimination({1, n}), true);
    } else {
        working_ = ambient_;
        gb_ = groebner_basis(IdealGens(working_, all_gens_), TermOrder::grevlex(n), true);
    }
}

Poly IdealMembership::to_working(const Poly& f, Monomial& shift) const {
    if (!laurent_) {
        shift.assign(ambient_->nvars(), 0);
        return f;
    }
    shift = f.min_exponents();
    for (int& e : shift) e = std::min(e, 0);
    Poly r(working_);
    for (const auto& [m, c] : f.terms()) {
        Monomial w(m.size() + 1, 0);
        for (std::size_t i = 0; i < m.size(); ++i) w[i + 1] = m[i] - shift[i];
        r.add_term(w, c);
    }
    return r;
}

Poly IdealMembership::from_working(const Poly& p) const {
    if (!laurent_) return p;
    Poly r(ambient_);
    for (const auto& [w, c] : p.terms()) {
        Monomial m(w.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = w[i + 1] - w[0];
        r.add_term(m, c);
    }
    return r;
}

Poly IdealMembership::embed(const Poly& f) const {
    if (!laurent_) return f;
    Poly r(working_);
    for (const auto& [m, c] : f.terms()) {
        int k = 0;
        for (int e : m) k = std::max(k, -e);
        Monomial w(m.size() + 1, k);
        for (std::size_t i = 0; i < m.size(); ++i) w[i + 1] = m[i] + k;
        r.add_term(w, c);
    }
    return r;
}

std::optional<std::vector<Monomial>> IdealMembership::standard_monomials() const {
    const std::size_t n = working_->nvars();
    std::vector<Monomial> leads;
    for (std::size_t j = 0; j < gb_.basis.size(); ++j) leads.push_back(gb_.leading_monomial(j));
    if (gb_.is_unit_ideal()) return std::vector<Monomial>{};
    // bound each variable by a pure-power leading monomial
    std::vector<int> bound(n, -1);
    for (const auto& m : leads) {
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) {
                ++nz;
                var = i;
            }
        if (nz == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& m : leads)
            if (monomial_divides(m, cur)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(cur);
        std::size_t i = 0;
        while (i < n && ++cur[i] >= bound[i]) cur[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return gb_.order.compare(a, b) > 0; });
    return out;
}

Poly IdealMembership::working_normal_form(const Poly& f) const {
    Monomial shift;
    return gb_.normal_form(to_working(f, shift));
}

std::optional<MembershipCertificate> IdealMembership::member(const Poly& f) const {
    if (f.ring() && !same_ring(f.ring(), ambient_)) throw DomainError("ring mismatch in membership test");
    Poly target = f.ring() ? f : f.with_ring(ambient_);
    MembershipCertificate cert{all_gens_, std::vector<Poly>(all_gens_.size(), Poly(ambient_)), target};
    if (target.is_zero()) return cert;
    Monomial shift;
    auto inner = member_via(gb_, to_working(target, shift));
    if (!inner) return std::nullopt;
    for (std::size_t i = 0; i < all_gens_.size(); ++i) {
        Poly c = from_working(inner->coefficients[i]);
        if (laurent_) {
            Monomial m(shift.size());
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = shift[v] - gen_shifts_[i][v];
            c = c.mul_term(m, 1);
        }
        cert.coefficients[i] = std::move(c);
    }
    // the saturation relation's coefficient vanishes after s ↦ (x_1···x_n)^{-1}
    if (!cert.validate()) throw IntegrityError("translated Laurent certificate failed to validate");
    return cert;
}

}  // namespace astk
