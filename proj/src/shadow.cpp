#include "astk/shadow.hpp"

#include "astk/matrix.hpp"

namespace astk {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// normalized Hochschild chains: a0 ∈ [0,d), a1..an ∈ [1,d)
struct BarChains {
    const FinDimAlgebra& a;
    std::size_t d;

    std::size_t dim(unsigned n) const { return d * ipow(d - 1, n); }
    std::vector<std::size_t> decode(std::size_t idx, unsigned n) const {
        std::vector<std::size_t> s(n + 1);
        for (unsigned k = n; k >= 1; --k) {
            s[k] = idx % (d - 1) + 1;
            idx /= d - 1;
        }
        s[0] = idx;
        return s;
    }
    std::size_t encode(const std::vector<std::size_t>& s) const {
        std::size_t idx = s[0];
        for (std::size_t k = 1; k < s.size(); ++k) idx = idx * (d - 1) + (s[k] - 1);
        return idx;
    }

    ExactMatrix boundary(unsigned n) const {
        ExactMatrix m(dim(n - 1), dim(n));
        for (std::size_t c = 0; c < dim(n); ++c) {
            auto s = decode(c, n);
            auto emit = [&](std::size_t pos, const Vector& prod, std::vector<std::size_t> rest, const Rational& sign) {
                for (std::size_t b = 0; b < d; ++b) {
                    if (prod[b] == 0 || (pos > 0 && b == 0)) continue;
                    rest[pos] = b;
                    m(encode(rest), c) += sign * prod[b];
                }
            };
            {
                std::vector<std::size_t> rest(s.begin() + 1, s.end());
                rest[0] = 0;
                emit(0, a.table()[s[0]][s[1]], rest, 1);
            }
            for (unsigned i = 1; i < n; ++i) {
                std::vector<std::size_t> rest(s.begin(), s.end());
                rest.erase(rest.begin() + i + 1);
                emit(i, a.table()[s[i]][s[i + 1]], rest, i % 2 ? -1 : 1);
            }
            {
                std::vector<std::size_t> rest(s.begin(), s.end() - 1);
                emit(0, a.table()[s[n]][s[0]], rest, n % 2 ? -1 : 1);
            }
        }
        return m;
    }
};

}  // namespace

GradedDims hh_monogenic(const UPoly& f, unsigned max_degree) {
    if (f.degree() < 1) throw DomainError("hh_monogenic needs a polynomial of positive degree");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    FinDimAlgebra a = quotient_algebra(f, "x");
    UPoly fp = UPoly::divmod(f.derivative(), f).second;
    Vector fv(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) fv[k] = fp.coeff(k);
    const std::size_t r = a.multiplication_matrix(fv).rank();
    // rank of the differential C_i → C_{i−1}
    auto rank = [&](unsigned i) -> std::size_t { return i >= 2 && i % 2 == 0 ? r : 0; };
    GradedDims out;
    for (unsigned i = 0; i <= max_degree; ++i) out[i] = d - rank(i) - rank(i + 1);
    return out;
}

GradedDims hh_dual_numbers(unsigned max_degree) { return hh_monogenic(UPoly::x_power(2), max_degree); }

GradedDims hh_bar_complex(const FinDimAlgebra& a, unsigned max_degree) {
    const std::size_t d = a.dim();
    if (d == 0 || a.unit() != a.basis_vector(0)) throw DomainError("bar complex needs the unit as basis vector 0");
    BarChains ch{a, d};
    std::vector<std::size_t> ranks(max_degree + 2, 0);
    for (unsigned n = 1; n <= max_degree + 1; ++n) {
        if (d == 1) break;
        ranks[n] = ch.boundary(n).rank();
    }
    GradedDims out;
    for (unsigned n = 0; n <= max_degree; ++n) out[n] = ch.dim(n) - ranks[n] - ranks[n + 1];
    return out;
}

RationalSeries::RationalSeries(UPoly num, UPoly den) {
    if (den.is_zero() || den.coeff(0) == 0) throw DomainError("series denominator must not vanish at 0");
    if (num.is_zero()) {
        num_ = UPoly();
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = UPoly::divmod(num, g).first;
        den = UPoly::divmod(den, g).first;
    }
    Rational s = 1 / den.coeff(0);
    num_ = s * num;
    den_ = s * den;
}

std::vector<Rational> RationalSeries::expand(unsigned precision) const {
    std::vector<Rational> c(precision + 1, Rational(0));
    for (unsigned k = 0; k <= precision; ++k) {
        Rational v = num_.coeff(k);
        for (unsigned j = 1; j <= k && static_cast<int>(j) <= den_.degree(); ++j) v -= den_.coeff(j) * c[k - j];
        c[k] = v / den_.coeff(0);
    }
    return c;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return RationalSeries(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalSeries::to_string() const {
    if (is_polynomial()) return num_.to_string("x");
    return "(" + num_.to_string("x") + ")/(" + den_.to_string("x") + ")";
}

std::string shadow_base_name(ShadowBase b) { return b == ShadowBase::Rationals ? "Q" : "Q[e]"; }

FinDimAlgebra shadow_base_algebra(ShadowBase b) {
    return b == ShadowBase::Rationals ? quotient_algebra(UPoly::x_power(1), "x") : quotient_algebra(UPoly::x_power(2), "e");
}

namespace {

UPoly base_relation(ShadowBase b) { return UPoly::x_power(b == ShadowBase::Rationals ? 1 : 2); }

// rank in HH_n of the map induced by the ring map sending basis vector i of `src` to phi[i] in `dst`
std::size_t induced_rank(const FinDimAlgebra& src, const FinDimAlgebra& dst, const std::vector<Vector>& phi, unsigned n) {
    BarChains s{src, src.dim()}, t{dst, dst.dim()};
    if (t.dim(n) == 0) return 0;
    ExactMatrix map(t.dim(n), s.dim(n));
    for (std::size_t c = 0; c < s.dim(n); ++c) {
        auto idx = s.decode(c, n);
        // tensor product of the images, dropping unit components past slot 0
        std::vector<std::pair<std::vector<std::size_t>, Rational>> acc{{{}, Rational(1)}};
        for (unsigned k = 0; k <= n; ++k) {
            std::vector<std::pair<std::vector<std::size_t>, Rational>> next;
            for (const auto& [pre, x] : acc)
                for (std::size_t b = k ? 1 : 0; b < dst.dim(); ++b) {
                    if (phi[idx[k]][b] == 0) continue;
                    auto p = pre;
                    p.push_back(b);
                    next.emplace_back(std::move(p), x * phi[idx[k]][b]);
                }
            acc = std::move(next);
        }
        for (const auto& [p, x] : acc) map(t.encode(p), c) += x;
    }
    ExactMatrix z = n ? s.boundary(n) : ExactMatrix(0, s.dim(0));
    std::vector<Vector> cycles = z.rows() ? z.kernel() : [&] {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < s.dim(n); ++i) {
            Vector v(s.dim(n), Rational(0));
            v[i] = 1;
            all.push_back(v);
        }
        return all;
    }();
    std::vector<Vector> bounds;
    if (t.dim(n + 1)) {
        ExactMatrix bt = t.boundary(n + 1);
        for (std::size_t j = 0; j < bt.cols(); ++j) bounds.push_back(bt.column(j));
    }
    std::vector<Vector> joint = bounds;
    for (const auto& z0 : cycles) joint.push_back(map.apply(z0));
    return vector_rank(joint, t.dim(n)) - vector_rank(bounds, t.dim(n));
}

}  // namespace

ShadowPair bga_shadow(ShadowBase base, unsigned max_degree, unsigned precision) {
    ShadowPair p;
    p.base = base;
    p.max_degree = max_degree;
    p.precision = precision;
    p.shared_summand = "HC^-(" + shadow_base_name(base) + ")";
    p.hh = hh_monogenic(base_relation(base), max_degree + 1);
    for (const auto& [i, dim] : p.hh) p.reduced_hh[i] = dim - (i == 0 ? 1 : 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        ShadowDegree s;
        s.degree = d;
        s.coefficient_dim = p.reduced_hh.at(d + 1);
        s.polynomial_rank = s.coefficient_dim * (precision + 1);
        s.series_rank = s.coefficient_dim * (precision + 1);
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < s.coefficient_dim; ++c)
            for (unsigned k = 0; k <= precision; ++k) {
                Vector col(s.series_rank, Rational(0));
                auto e = RationalSeries::polynomial(UPoly::x_power(k)).expand(precision);
                for (unsigned j = 0; j <= precision; ++j) col[c * (precision + 1) + j] = e[j];
                cols.push_back(col);
            }
        s.inclusion_kernel = s.polynomial_rank - vector_rank(cols, s.series_rank);
        p.degrees.push_back(s);
    }
    return p;
}

bool DefectWitness::validate() const {
    const UPoly& q = series.denominator();
    if (q.is_zero() || q.coeff(0) == 0) return false;
    UPoly g = gcd(series.numerator(), q);
    UPoly reduced = g.is_zero() || g.degree() <= 0 ? q : UPoly::divmod(q, g).first;
    return reduced.degree() > 0 && coefficient_dim > control_image_rank;
}

DefectReport pullback_defect(unsigned max_degree, ShadowBase base) {
    if (max_degree == 0) throw DomainError("pullback_defect needs degree bound at least 1");
    DefectReport r;
    r.base = base;
    r.max_degree = max_degree;
    r.scope_note = "HC^- shadow only; the transport to K-theory is not modelled";
    auto top = bga_shadow(base, max_degree, 0);
    auto control = bga_shadow(ShadowBase::Rationals, max_degree, 0);
    FinDimAlgebra src = shadow_base_algebra(base), dst = shadow_base_algebra(ShadowBase::Rationals);
    std::vector<Vector> phi;  // x ↦ 0
    for (std::size_t i = 0; i < src.dim(); ++i) phi.push_back(Vector{i == 0 ? Rational(1) : Rational(0)});
    for (unsigned d = 1; d <= max_degree; ++d) {
        const std::size_t c = top.degrees[d].coefficient_dim;
        r.coefficient_dims.push_back(c);
        r.control_dims.push_back(control.degrees[d].coefficient_dim);
        if (c == 0) continue;
        const std::size_t img = induced_rank(src, dst, phi, d + 1);
        if (img == c) continue;  // the row maps isomorphically: no room for a defect
        DefectWitness w;
        w.degree = d;
        w.series = RationalSeries(UPoly::constant(1), UPoly({1, -1}));
        w.coefficient_dim = c;
        w.control_image_rank = img;
        r.witnesses.push_back(w);
    }
    r.cartesian = r.witnesses.empty();
    if (base == ShadowBase::DualNumbers && r.cartesian) throw IntegrityError("no defect found over Q[e]");
    return r;
}

}  // namespace astk
