#include "astk/cech.hpp"

#include "astk/cochain.hpp"
#include "astk/completion.hpp"

#include <map>

namespace astk {

namespace {

using Acc = std::map<std::uint32_t, Rational>;

SparseVec from_acc(const Acc& acc) {
    SparseVec v;
    for (const auto& [i, x] : acc)
        if (x != 0) v.emplace_back(i, x);
    return v;
}

SparseVec single(std::size_t i, const Rational& c = 1) { return c == 0 ? SparseVec{} : SparseVec{{static_cast<std::uint32_t>(i), c}}; }

SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t bsize) {
    SparseVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) out.emplace_back(static_cast<std::uint32_t>(i * bsize + j), x * y);
    return out;  // already sorted
}

std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

SparseVec mul(const HopfAlgebraData& h, const SparseVec& a, const SparseVec& b) {
    Acc acc;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            for (const auto& [k, z] : h.mult[i][j]) acc[k] += x * y * z;
    return from_acc(acc);
}

// linear map on one tensor factor of a vector indexed over H^{⊗slots}
template <class F>
SparseVec on_slot(const SparseVec& v, std::size_t d, unsigned slots, unsigned slot, std::size_t out_size, F f) {
    const std::size_t after = ipow(d, slots - 1 - slot);
    Acc acc;
    for (const auto& [idx, x] : v) {
        const std::size_t pre = idx / (after * d), s = (idx / after) % d, suf = idx % after;
        for (const auto& [k, y] : f(s)) acc[static_cast<std::uint32_t>((pre * out_size + k) * after + suf)] += x * y;
    }
    return from_acc(acc);
}

Rational counit_of(const HopfAlgebraData& h, const SparseVec& v) {
    Rational r = 0;
    for (const auto& [i, x] : v) r += x * h.counit[i];
    return r;
}

}  // namespace

std::optional<std::string> HopfAlgebraData::axiom_failure() const {
    const std::size_t d = dim();
    if (mult.size() != d || comult.size() != d || counit.size() != d || antipode.size() != d)
        return "structure tensors have the wrong size";
    for (std::size_t i = 0; i < d; ++i) {
        if (mult[i].size() != d) return "multiplication table has the wrong size";
        for (std::size_t j = 0; j < d; ++j) {
            if (mult[i][j] != mult[j][i]) return "multiplication is not commutative at (" + labels[i] + ", " + labels[j] + ")";
            for (std::size_t k = 0; k < d; ++k)
                if (mul(*this, mult[i][j], single(k)) != mul(*this, single(i), mult[j][k]))
                    return "multiplication is not associative at (" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
        }
        if (mul(*this, unit, single(i)) != single(i)) return "unit fails on " + labels[i];
    }
    if (counit_of(*this, unit) != 1) return "counit of the unit is not 1";
    {
        Acc acc;
        for (const auto& [i, x] : unit)
            for (const auto& [k, y] : comult[i]) acc[k] += x * y;
        if (from_acc(acc) != kron(unit, unit, d)) return "comultiplication does not preserve the unit";
    }
    auto delta = [&](std::size_t s) -> const SparseVec& { return comult[s]; };
    auto eps = [&](std::size_t s) { return counit[s] == 0 ? SparseVec{} : SparseVec{{0, counit[s]}}; };
    auto anti = [&](std::size_t s) -> const SparseVec& { return antipode[s]; };
    for (std::size_t i = 0; i < d; ++i) {
        const SparseVec& c = comult[i];
        if (on_slot(c, d, 2, 0, d * d, delta) != on_slot(c, d, 2, 1, d * d, delta))
            return "comultiplication is not coassociative on " + labels[i];
        if (on_slot(c, d, 2, 0, 1, eps) != single(i) || on_slot(c, d, 2, 1, 1, eps) != single(i))
            return "counit law fails on " + labels[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (counit_of(*this, mult[i][j]) != counit[i] * counit[j]) return "counit is not multiplicative";
            // Δ(ab) = Δ(a)Δ(b) in H⊗H
            Acc lhs;
            for (const auto& [k, x] : mult[i][j])
                for (const auto& [t, y] : comult[k]) lhs[t] += x * y;
            Acc rhs;
            for (const auto& [p, x] : comult[i])
                for (const auto& [q, y] : comult[j])
                    for (const auto& [l, u] : mult[p / d][q / d])
                        for (const auto& [r, w] : mult[p % d][q % d]) rhs[static_cast<std::uint32_t>(l * d + r)] += x * y * u * w;
            if (from_acc(lhs) != from_acc(rhs))
                return "comultiplication is not multiplicative at (" + labels[i] + ", " + labels[j] + ")";
        }
        for (unsigned side = 0; side < 2; ++side) {
            SparseVec applied = on_slot(c, d, 2, side, d, anti);
            Acc acc;
            for (const auto& [idx, x] : applied)
                for (const auto& [k, y] : mult[idx / d][idx % d]) acc[k] += x * y;
            SparseVec want;
            for (const auto& [k, y] : unit) want.emplace_back(k, y * counit[i]);
            if (counit[i] == 0) want.clear();
            if (from_acc(acc) != want) return "antipode law fails on " + labels[i];
        }
    }
    return std::nullopt;
}

HopfAlgebraData hopf_tensor(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    HopfAlgebraData h;
    h.name = a.name + "*" + b.name;
    for (const auto& x : a.labels)
        for (const auto& y : b.labels) h.labels.push_back(x + "⊗" + y);
    h.mult.assign(d, std::vector<SparseVec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h.mult[i][j] = kron(a.mult[i / db][j / db], b.mult[i % db][j % db], db);
    h.unit = kron(a.unit, b.unit, db);
    h.counit.resize(d);
    h.comult.resize(d);
    h.antipode.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        h.counit[i] = a.counit[i / db] * b.counit[i % db];
        h.antipode[i] = kron(a.antipode[i / db], b.antipode[i % db], db);
        Acc acc;  // (a1⊗a2)⊗(b1⊗b2) ↦ (a1⊗b1)⊗(a2⊗b2)
        for (const auto& [p, x] : a.comult[i / db])
            for (const auto& [q, y] : b.comult[i % db]) {
                const std::size_t left = (p / da) * db + q / db, right = (p % da) * db + q % db;
                acc[static_cast<std::uint32_t>(left * d + right)] += x * y;
            }
        h.comult[i] = from_acc(acc);
    }
    h.genuine_dim = a.genuine_dim * b.genuine_dim;
    return h;
}

HopfAlgebraData hopf_from_group(const GroupSpec& g) {
    HopfAlgebraData h;
    h.name = g.name();
    if (const auto* mu = std::get_if<RootsOfUnity>(&g.kind)) {
        const unsigned n = mu->n;
        h.mult.assign(n, std::vector<SparseVec>(n));
        for (unsigned i = 0; i < n; ++i) {
            h.labels.push_back("t^" + std::to_string(i));
            for (unsigned j = 0; j < n; ++j) h.mult[i][j] = single((i + j) % n);
            h.comult.push_back(single(static_cast<std::size_t>(i) * n + i));
            h.counit.push_back(1);
            h.antipode.push_back(single((n - i) % n));
        }
        h.unit = single(0);
        h.genuine_dim = n;
    } else if (const auto* fg = std::get_if<FiniteGroup>(&g.kind)) {
        const auto& G = *fg->data;
        const std::size_t n = G.order();
        h.mult.assign(n, std::vector<SparseVec>(n));
        std::vector<Acc> co(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) co[G.multiplication[a][b]][static_cast<std::uint32_t>(a * n + b)] += 1;
        for (std::size_t i = 0; i < n; ++i) {
            h.labels.push_back("δ_" + G.elements[i]);
            h.mult[i][i] = single(i);
            h.unit.emplace_back(static_cast<std::uint32_t>(i), Rational(1));
            h.comult.push_back(from_acc(co[i]));
            h.counit.push_back(i == G.identity ? 1 : 0);
            h.antipode.push_back(single(G.inverse[i]));
        }
        h.genuine_dim = G.class_count();
    } else if (const auto* pg = std::get_if<ProductGroup>(&g.kind)) {
        h = hopf_from_group(pg->factors.at(0));
        for (std::size_t i = 1; i < pg->factors.size(); ++i) h = hopf_tensor(h, hopf_from_group(pg->factors[i]));
        h.name = g.name();
    } else {
        throw DomainError(g.name() + " is not finite; the Čech nerve needs a finite group scheme");
    }
    if (auto bad = h.axiom_failure()) throw IntegrityError("Hopf axioms fail for " + h.name + ": " + *bad);
    return h;
}

namespace {

SparseMap build_coface(const HopfAlgebraData& h, unsigned m, unsigned i, Exec exec) {
    const std::size_t d = h.dim(), src = ipow(d, m);
    SparseMap f;
    f.rows = src * d;
    f.columns.resize(src);
    const long count = static_cast<long>(src);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
    for (long c = 0; c < count; ++c) {
        const std::size_t idx = static_cast<std::size_t>(c);
        if (i == 0) {
            f.columns[idx] = kron(h.unit, single(idx), src);
        } else if (i == m + 1) {
            f.columns[idx] = kron(single(idx), h.unit, d);
        } else {
            f.columns[idx] = on_slot(single(idx), d, m, i - 1, d * d, [&](std::size_t s) -> const SparseVec& { return h.comult[s]; });
        }
    }
    return f;
}

SparseMap build_codegeneracy(const HopfAlgebraData& h, unsigned m, unsigned j, Exec exec) {
    const std::size_t d = h.dim(), src = ipow(d, m + 1);
    SparseMap f;
    f.rows = ipow(d, m);
    f.columns.resize(src);
    const long count = static_cast<long>(src);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
    for (long c = 0; c < count; ++c) {
        const std::size_t idx = static_cast<std::size_t>(c);
        const std::size_t after = ipow(d, m - j);
        const std::size_t pre = idx / (after * d), s = (idx / after) % d, suf = idx % after;
        f.columns[idx] = single(pre * after + suf, h.counit[s]);
    }
    return f;
}

std::string ident(const char* what, unsigned m, unsigned a, unsigned b) {
    return std::string(what) + " fails at level " + std::to_string(m) + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

CosimplicialAlgebra cech_nerve(const HopfAlgebraData& h, unsigned truncation, Exec exec) {
    if (truncation < 2) throw DomainError("cech_nerve needs truncation at least 2");
    if (auto bad = h.axiom_failure()) throw IntegrityError("Hopf axioms fail for " + h.name + ": " + *bad);
    CosimplicialAlgebra cs;
    cs.hopf = h;
    cs.truncation = truncation;
    for (unsigned m = 0; m <= truncation; ++m) cs.level_dims.push_back(ipow(h.dim(), m));
    for (unsigned m = 0; m < truncation; ++m) {
        std::vector<SparseMap> d, s;
        for (unsigned i = 0; i <= m + 1; ++i) d.push_back(build_coface(h, m, i, exec));
        for (unsigned j = 0; j <= m; ++j) s.push_back(build_codegeneracy(h, m, j, exec));
        cs.cofaces.push_back(std::move(d));
        cs.codegeneracies.push_back(std::move(s));
    }
    if (auto bad = cs.identity_failure()) throw IntegrityError("cosimplicial identity: " + *bad);
    return cs;
}

std::optional<std::string> CosimplicialAlgebra::identity_failure() const {
    const unsigned M = truncation;
    // d^j d^i = d^i d^{j-1}, i < j
    for (unsigned m = 0; m + 2 <= M; ++m)
        for (unsigned j = 1; j <= m + 2; ++j)
            for (unsigned i = 0; i < j; ++i)
                if (!(cofaces[m + 1][j].compose(cofaces[m][i]) == cofaces[m + 1][i].compose(cofaces[m][j - 1])))
                    return ident("d^j d^i = d^i d^{j-1}", m, i, j);
    // s^j s^i = s^i s^{j+1}, i ≤ j
    for (unsigned m = 0; m + 2 <= M; ++m)
        for (unsigned j = 0; j <= m; ++j)
            for (unsigned i = 0; i <= j; ++i)
                if (!(codegeneracies[m][j].compose(codegeneracies[m + 1][i]) ==
                      codegeneracies[m][i].compose(codegeneracies[m + 1][j + 1])))
                    return ident("s^j s^i = s^i s^{j+1}", m, i, j);
    // mixed relations, level m → m+1 → m
    for (unsigned m = 0; m + 1 <= M; ++m)
        for (unsigned j = 0; j <= m; ++j)
            for (unsigned i = 0; i <= m + 1; ++i) {
                SparseMap lhs = codegeneracies[m][j].compose(cofaces[m][i]);
                SparseMap rhs;
                if (i == j || i == j + 1) {
                    rhs.rows = level_dims[m];
                    for (std::size_t c = 0; c < level_dims[m]; ++c) rhs.columns.push_back(single(c));
                } else if (i < j) {
                    rhs = cofaces[m - 1][i].compose(codegeneracies[m - 1][j - 1]);
                } else {
                    rhs = cofaces[m - 1][i - 1].compose(codegeneracies[m - 1][j]);
                }
                if (!(lhs == rhs)) return ident("s^j d^i", m, i, j);
            }
    return std::nullopt;
}

SparseMap alternating_coface(const CosimplicialAlgebra& cs, unsigned m) {
    SparseMap out = cs.cofaces.at(m)[0];
    for (unsigned i = 1; i <= m + 1; ++i) out = out + cs.cofaces[m][i].scaled(i % 2 ? -1 : 1);
    return out;
}

CohomologyReport normalized_cohomology(const CosimplicialAlgebra& cs, unsigned max_degree) {
    if (max_degree >= cs.truncation) throw DomainError("max degree must stay below the truncation");
    CohomologyReport r;
    r.hopf = cs.hopf.name;
    r.truncation = cs.truncation;
    r.max_degree = max_degree;
    r.level_dims = cs.level_dims;
    r.genuine_dim = cs.hopf.genuine_dim;
    const unsigned top = max_degree + 1;

    // normalized subspaces: kernels of all codegeneracies
    std::vector<std::vector<SparseVec>> basis(top + 1);
    std::vector<std::vector<std::uint32_t>> free_cols(top + 1);
    basis[0] = {single(0)};
    free_cols[0] = {0};
    for (unsigned m = 1; m <= top; ++m) {
        SparseEchelon e(cs.level_dims[m]);
        for (const auto& s : cs.codegeneracies[m - 1])
            for (auto& row : s.row_vectors()) e.insert(std::move(row));
        basis[m] = e.kernel();
        for (std::uint32_t c = 0; c < cs.level_dims[m]; ++c)
            if (!e.pivots().count(c)) free_cols[m].push_back(c);
    }
    for (unsigned m = 0; m <= top; ++m) {
        r.normalized_dims.push_back(basis[m].size());
        r.predicted_normalized_dims.push_back(ipow(cs.hopf.dim() - 1, m));
    }

    r.squares_to_zero = true;
    for (unsigned m = 0; m + 2 <= cs.truncation; ++m) {
        SparseMap dd = alternating_coface(cs, m + 1).compose(alternating_coface(cs, m));
        for (const auto& c : dd.columns) r.squares_to_zero = r.squares_to_zero && c.empty();
    }

    CochainComplexQ cx;
    cx.dims = r.normalized_dims;
    for (unsigned m = 0; m < top; ++m) {
        SparseMap delta = alternating_coface(cs, m);
        std::map<std::uint32_t, std::size_t> where;
        for (std::size_t k = 0; k < free_cols[m + 1].size(); ++k) where[free_cols[m + 1][k]] = k;
        ExactMatrix mat(basis[m + 1].size(), basis[m].size());
        for (std::size_t c = 0; c < basis[m].size(); ++c) {
            SparseVec w = delta.apply(basis[m][c]);
            SparseVec back;
            for (const auto& [idx, x] : w) {
                auto it = where.find(idx);
                if (it == where.end()) continue;
                mat(it->second, c) = x;
                back = sparse_axpy(back, x, basis[m + 1][it->second]);
            }
            if (back != w) throw IntegrityError("coboundary leaves the normalized subcomplex");
        }
        cx.differentials.push_back(std::move(mat));
    }
    for (unsigned k = 0; k <= max_degree; ++k) {
        auto h = complex_cohomology(cx, k);
        r.h_dims.push_back(h.dimension);
        if (k == 0)
            for (const auto& v : h.basis) r.h0_basis.push_back(v);
    }
    ExactMatrix eq = cs.cofaces[0][0].to_dense() - cs.cofaces[0][1].to_dense();
    r.equalizer_dim = eq.kernel().size();
    return r;
}

DescentGap descent_gap(const GroupSpec& g, unsigned truncation, unsigned max_degree) {
    const auto* mu = std::get_if<RootsOfUnity>(&g.kind);
    if (!mu) throw DomainError("descent_gap is defined for mu<n> only");
    DescentGap out;
    out.n = mu->n;
    auto cs = cech_nerve(hopf_from_group(g), truncation);
    auto rep = normalized_cohomology(cs, max_degree);
    out.genuine = rep.genuine_dim;
    out.totalization = rep.h_dims[0];
    out.h_dims = rep.h_dims;
    auto alg = quotient_algebra(UPoly::x_power(mu->n) - UPoly::constant(1));
    std::optional<Vector> hint;
    if (alg.dim() > 1) hint = alg.basis_vector(1);
    auto split = idempotent_split(alg, Vector(alg.dim(), Rational(1)), hint);
    if (!split.augmentation_local) throw IntegrityError("no augmentation-local factor");
    out.completed = split.dims[*split.augmentation_local];
    out.gap = out.genuine != out.totalization;
    out.reconciled = out.totalization == out.completed;
    return out;
}

}  // namespace astk
