#include "astk/completion.hpp"

#include <algorithm>
#include <random>

namespace astk {

std::vector<std::vector<std::size_t>> multisets(std::size_t n, unsigned k) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    std::vector<std::size_t> cur(k, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[i - 1];
    }
    return out;
}

std::vector<Poly> ideal_power(const std::vector<Poly>& gens, unsigned k) {
    std::vector<Poly> out;
    if (gens.empty()) return out;
    for (const auto& ms : multisets(gens.size(), k)) {
        Poly p = Poly::constant(gens[0].ring(), 1);
        for (std::size_t i : ms) p = p * gens[i];
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

namespace {

Vector working_coordinates(const TruncatedQuotient& q, const Poly& working) {
    Poly nf = q.reducer->basis().normal_form(working);
    Vector v(q.dim(), Rational(0));
    for (const auto& [m, c] : nf.terms()) {
        auto it = q.basis_index.find(m);
        if (it == q.basis_index.end()) throw IntegrityError("normal form left the standard monomials");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

Vector TruncatedQuotient::coordinates(const Poly& f) const {
    if (identity_quotient) throw DomainError("identity quotient has no finite coordinates");
    Poly g = f.ring() ? f : f.with_ring(ring);
    if (!same_ring(g.ring(), ring)) {
        if (g.ring()->variables != ring->variables || g.ring()->mode != ring->mode)
            throw DomainError("element lives in a different ring");
        g = g.with_ring(ring);
    }
    return working_coordinates(*this, reducer->embed(g));
}

Poly TruncatedQuotient::lift(const Vector& v) const {
    Poly working(reducer->working_ring());
    for (std::size_t i = 0; i < dim(); ++i) working.add_term(basis_monomials[i], v[i]);
    return reducer->to_ambient(working);
}

TruncatedQuotient complete_truncated(const IdealGens& ideal_in, int precision, const std::vector<Poly>& relations_in) {
    if (precision < 0) throw DomainError("precision must be nonnegative");
    if (!ideal_in.ring) throw DomainError("ideal has no ring");
    TruncatedQuotient q;
    q.ring = rationalized(ideal_in.ring);
    q.precision = precision;
    std::vector<Poly> gens;
    for (const auto& g : ideal_in.generators)
        if (!g.is_zero()) gens.push_back(g.with_ring(q.ring));
    for (const auto& r : relations_in)
        if (!r.is_zero()) q.relations.push_back(r.with_ring(q.ring));
    q.ideal = IdealGens(q.ring, gens);
    if (gens.empty() && q.relations.empty()) {
        q.identity_quotient = true;
        return q;
    }
    auto power = ideal_power(gens, static_cast<unsigned>(precision + 1));
    q.reducer = std::make_shared<IdealMembership>(IdealGens(q.ring, power), q.relations);
    auto std_monomials = q.reducer->standard_monomials();
    if (!std_monomials) {
        if (gens.empty()) {
            q.identity_quotient = true;
            return q;
        }
        throw UnsupportedError("R/I^" + std::to_string(precision + 1) +
                               " is infinite-dimensional; the ideal does not cut out a finite subscheme");
    }
    q.basis_monomials = *std_monomials;
    for (std::size_t i = 0; i < q.basis_monomials.size(); ++i) {
        q.basis_index[q.basis_monomials[i]] = i;
        q.basis_labels.push_back(q.reducer->to_ambient(Poly::monomial(q.reducer->working_ring(), q.basis_monomials[i])).to_string());
    }
    const std::size_t n = q.dim();
    if (n == 0) {
        q.algebra = FinDimAlgebra({}, {}, {});
        return q;
    }
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            table[i][j] = working_coordinates(
                q, Poly::monomial(q.reducer->working_ring(), monomial_mul(q.basis_monomials[i], q.basis_monomials[j])));
            table[j][i] = table[i][j];
        }
    q.algebra = FinDimAlgebra(q.basis_labels, table, q.coordinates(Poly::constant(q.ring, 1)));
    for (std::size_t v = 0; v < q.ring->nvars(); ++v) {
        q.generator_names.push_back(q.ring->variables[v]);
        q.generator_images.push_back(q.coordinates(Poly::variable(q.ring, v)));
        if (q.ring->laurent()) {
            q.generator_names.push_back(q.ring->variables[v] + "^-1");
            q.generator_images.push_back(q.coordinates(Poly::variable(q.ring, v, -1)));
        }
    }
    return q;
}

ExactMatrix lowering_map(const TruncatedQuotient& high, const TruncatedQuotient& low) {
    if (low.precision > high.precision) throw DomainError("lowering map needs M ≤ N");
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < high.dim(); ++i) cols.push_back(low.coordinates(high.lift(high.algebra.basis_vector(i))));
    return ExactMatrix::from_columns(cols, low.dim());
}

std::optional<Vector> coordinates_in(const TruncatedQuotient& q, const std::vector<Poly>& basis, const Poly& f) {
    if (basis.size() != q.dim()) return std::nullopt;
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(q.coordinates(b));
    ExactMatrix m = ExactMatrix::from_columns(cols, q.dim());
    if (m.rank() != q.dim()) return std::nullopt;
    return m.solve(q.coordinates(f));
}

bool quotient_is_consistent(const TruncatedQuotient& q) {
    if (q.identity_quotient || q.dim() == 0) return true;
    if (!q.algebra.is_commutative() || !q.algebra.is_associative() || !q.algebra.is_unital()) return false;
    for (std::size_t v = 0; v < q.ring->nvars(); ++v) {
        Poly x = Poly::variable(q.ring, v);
        for (std::size_t w = 0; w < q.ring->nvars(); ++w) {
            Poly y = Poly::variable(q.ring, w);
            if (q.coordinates(x * y) != q.algebra.multiply(q.coordinates(x), q.coordinates(y))) return false;
        }
        if (q.ring->laurent()) {
            Poly xi = Poly::variable(q.ring, v, -1);
            if (q.algebra.multiply(q.coordinates(x), q.coordinates(xi)) != q.algebra.unit()) return false;
        }
    }
    return true;
}

bool IdempotentSet::laws_hold() const {
    Vector sum = algebra.zero();
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        if (algebra.multiply(idempotents[i], idempotents[i]) != idempotents[i]) return false;
        for (std::size_t j = i + 1; j < idempotents.size(); ++j)
            if (!is_zero_vector(algebra.multiply(idempotents[i], idempotents[j]))) return false;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += idempotents[i][k];
    }
    return sum == algebra.unit();
}

namespace {

unsigned totient(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

struct Factorization {
    std::vector<std::pair<UPoly, unsigned>> factors;  // irreducible, multiplicity
    UPoly residual;                                   // monic, unfactored (1 if fully factored)
};

Factorization partial_factor(const UPoly& m) {
    Factorization f;
    UPoly work = m.monic();
    for (const auto& [r, k] : rational_roots(work)) {
        UPoly lin({-r, Rational(1)});
        f.factors.emplace_back(lin, k);
        work = UPoly::divmod(work, lin.pow(k)).first;
    }
    const unsigned bound = static_cast<unsigned>(2 * work.degree() * work.degree() + 2);
    for (unsigned d = 3; d <= bound && work.degree() > 0; ++d) {
        if (static_cast<int>(totient(d)) > work.degree()) continue;
        UPoly phi = cyclotomic(d);
        unsigned k = 0;
        while (work.degree() >= phi.degree()) {
            auto [quot, rem] = UPoly::divmod(work, phi);
            if (!rem.is_zero()) break;
            work = quot;
            ++k;
        }
        if (k > 0) f.factors.emplace_back(phi, k);
    }
    f.residual = work.monic();
    return f;
}

IdempotentSet split_with(const FinDimAlgebra& alg, const Vector& aug, const Vector& a) {
    IdempotentSet s;
    s.algebra = alg;
    s.separating = a;
    s.minimal_polynomial = alg.minimal_polynomial(a);
    auto fz = partial_factor(s.minimal_polynomial);
    std::vector<UPoly> groups;
    bool squarefree = true;
    for (const auto& [p, k] : fz.factors) {
        groups.push_back(p.pow(k));
        if (k > 1) squarefree = false;
    }
    if (fz.residual.degree() > 0) {
        groups.push_back(fz.residual);
        s.complete = false;
        s.notes.push_back("residual factor " + fz.residual.to_string() + " has no rational or cyclotomic factors");
        if (gcd(fz.residual, fz.residual.derivative()).degree() > 0) squarefree = false;
    }
    if (!squarefree) s.notes.push_back("minimal polynomial is not squarefree; factors carry nilpotents");
    if (s.minimal_polynomial.degree() != static_cast<int>(alg.dim())) {
        s.complete = false;
        s.notes.push_back("separating element generates a proper subalgebra");
    }
    const UPoly& m = s.minimal_polynomial;
    for (const auto& q : groups) {
        UPoly cof = UPoly::divmod(m, q).first;
        Bezout b = extended_gcd(cof, q);
        if (b.g.degree() != 0) throw IntegrityError("factor groups of the minimal polynomial are not coprime");
        UPoly e = UPoly::divmod(b.s * cof, m).second;
        Vector ev = alg.evaluate(e, a);
        s.idempotents.push_back(ev);
        s.factors.push_back(q);
        s.dims.push_back(alg.multiplication_matrix(ev).rank());
    }
    for (std::size_t i = 0; i < s.idempotents.size(); ++i) {
        Rational val = 0;
        for (std::size_t k = 0; k < aug.size(); ++k) val += aug[k] * s.idempotents[i][k];
        if (val != 0) s.augmentation_local = i;
    }
    return s;
}

}  // namespace

IdempotentSet idempotent_split(const FinDimAlgebra& alg, const Vector& augmentation, const std::optional<Vector>& hint) {
    if (!alg.is_commutative()) throw DomainError("idempotent_split needs a commutative algebra");
    if (augmentation.size() != alg.dim()) throw DomainError("augmentation covector has wrong length");
    if (alg.dim() == 1) return split_with(alg, augmentation, alg.unit());
    std::vector<Vector> candidates;
    if (hint) candidates.push_back(*hint);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int k = 0; k < 8; ++k) {
        Vector v(alg.dim());
        for (auto& x : v) x = coef(rng);
        candidates.push_back(v);
    }
    std::optional<IdempotentSet> best;
    for (const auto& c : candidates) {
        auto s = split_with(alg, augmentation, c);
        const bool better = !best || s.idempotents.size() > best->idempotents.size() || (s.complete && !best->complete);
        if (better) best = std::move(s);
        if (best->complete) break;
    }
    return *best;
}

bool ContainmentReport::audit() const {
    for (const auto& c : forward)
        if (!c.validate()) return false;
    for (const auto& c : reverse)
        if (!c.validate()) return false;
    if (exponent) {
        auto products = ideal_power(h_generators, *exponent);
        if (products.size() != forward.size()) return false;
        for (std::size_t i = 0; i < products.size(); ++i) {
            Poly p = h->polynomial_type() ? h->reduce(products[i]) : products[i];
            if (!(forward[i].target == p)) return false;
        }
        for (const auto& c : forward)
            if (c.generators.size() < restricted_generators.size()) return false;
    }
    for (std::size_t i = 0; i < reverse.size(); ++i)
        if (!(reverse[i].target == restricted_generators[i])) return false;
    return true;
}

ContainmentReport containment_exponent(const RepRingPtr& h, const RepRingPtr& g, unsigned n_max, Exec exec) {
    if (!restriction_supported(g->group, h->group))
        throw UnsupportedError("no supported restriction " + g->group.name() + " ⊃ " + h->group.name());
    if (!h->polynomial_type()) throw UnsupportedError("containment search runs on polynomial-type carriers");
    ContainmentReport rep;
    rep.h = h;
    rep.h_name = h->group.name();
    rep.g_name = g->group.name();
    rep.n_max = n_max;
    rep.h_generators = h->ideal_generators;
    rep.relations = h->relations();
    for (const auto& e : as_ideal_elements(g)) {
        Poly r = restriction(g, h, e).value();
        if (r.evaluate(h->unit_point) != 0) rep.augmentation_vanishes = false;
        rep.restricted_generators.push_back(r);
    }
    IdealMembership fwd(IdealGens(h->ring, rep.restricted_generators), rep.relations);
    IdealMembership rev(IdealGens(h->ring, rep.h_generators), rep.relations);
    for (const auto& r : rep.restricted_generators) {
        auto c = rev.member(r);
        if (!c) {
            rep.reverse_holds = false;
            continue;
        }
        rep.reverse.push_back(*c);
    }
    for (unsigned n = 1; n <= n_max; ++n) {
        auto products = ideal_power(rep.h_generators, n);
        for (auto& p : products) p = h->reduce(p);
        std::vector<std::optional<MembershipCertificate>> certs(products.size());
        std::vector<std::string> errors(products.size());
        const long count = static_cast<long>(products.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
        for (long i = 0; i < count; ++i) {
            try {
                certs[i] = fwd.member(products[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (const auto& e : errors)
            if (!e.empty()) throw IntegrityError("containment search: " + e);
        std::optional<std::size_t> missing;
        for (std::size_t i = 0; i < certs.size() && !missing; ++i)
            if (!certs[i]) missing = i;
        if (missing) {
            rep.lower_witnesses.emplace_back(n, products[*missing]);
            continue;
        }
        rep.exponent = n;
        for (auto& c : certs) rep.forward.push_back(std::move(*c));
        rep.status = SearchStatus::Pass;
        break;
    }
    return rep;
}

KoszulReport koszul_completion_check(const RingPtr& ring_in, const std::vector<Poly>& seq_in, int precision) {
    if (ring_in->laurent()) throw DomainError("Koszul check runs in a polynomial ring");
    if (precision < 0) throw DomainError("precision must be nonnegative");
    KoszulReport rep;
    auto ring = rationalized(ring_in);
    for (const auto& r : seq_in) rep.sequence.push_back(r.with_ring(ring));
    rep.vars = ring->nvars();
    rep.precision = precision;
    const unsigned e = static_cast<unsigned>(precision + 1);
    auto powers = [&](unsigned k) {
        std::vector<Poly> out;
        for (const auto& r : rep.sequence) out.push_back(r.pow(k));
        return out;
    };
    auto finite_dim = [&](const std::vector<Poly>& gens) {
        IdealMembership m(IdealGens(ring, gens));
        auto sm = m.standard_monomials();
        if (!sm) throw UnsupportedError("sequence does not cut out a finite quotient");
        return sm->size();
    };
    rep.node_dim = finite_dim(powers(e));
    std::size_t base = finite_dim(rep.sequence);
    rep.node_prediction = base;
    for (std::size_t i = 0; i < rep.sequence.size(); ++i) rep.node_prediction *= e;
    rep.regular_prediction_holds = rep.node_dim == rep.node_prediction;
    IdealGens I(ring, rep.sequence);
    auto adic = complete_truncated(I, precision);
    auto kos = complete_truncated(I, precision, powers(e));
    rep.adic_side_dim = adic.dim();
    rep.koszul_side_dim = kos.dim();
    for (int m = 0; m <= precision; ++m) {
        rep.adic_tower.push_back(complete_truncated(I, m).dim());
        rep.koszul_tower.push_back(complete_truncated(I, m, powers(static_cast<unsigned>(m + 1))).dim());
    }
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < kos.dim(); ++i) cols.push_back(adic.coordinates(kos.lift(kos.algebra.basis_vector(i))));
    rep.witness = ExactMatrix::from_columns(cols, adic.dim());
    bool iso = kos.dim() == adic.dim() && rep.witness.rank() == adic.dim();
    for (std::size_t i = 0; iso && i < kos.dim(); ++i)
        for (std::size_t j = i; iso && j < kos.dim(); ++j) {
            Vector lhs = rep.witness.apply(kos.algebra.multiply(kos.algebra.basis_vector(i), kos.algebra.basis_vector(j)));
            Vector rhs = adic.algebra.multiply(rep.witness.column(i), rep.witness.column(j));
            iso = lhs == rhs;
        }
    rep.isomorphic = iso;
    return rep;
}

}  // namespace astk
