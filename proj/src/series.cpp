#include "astk/series.hpp"

#include <algorithm>
#include <sstream>

namespace astk {

TruncSeries::TruncSeries(std::vector<std::string> variables, int precision)
    : vars_(std::move(variables)), precision_(precision) {
    if (precision < 0) throw DomainError("series precision must be nonnegative");
}

TruncSeries TruncSeries::constant(std::vector<std::string> variables, int precision, const Rational& c) {
    TruncSeries s(std::move(variables), precision);
    s.add_term(Monomial(s.nvars(), 0), c);
    return s;
}

TruncSeries TruncSeries::variable(std::vector<std::string> variables, int precision, std::size_t index) {
    TruncSeries s(std::move(variables), precision);
    Monomial m(s.nvars(), 0);
    m.at(index) = 1;
    s.add_term(m, 1);
    return s;
}

TruncSeries TruncSeries::univariate(const std::string& var, int precision, const std::vector<Rational>& coeffs) {
    TruncSeries s({var}, precision);
    for (std::size_t k = 0; k < coeffs.size(); ++k) s.add_term(Monomial{static_cast<int>(k)}, coeffs[k]);
    return s;
}

Rational TruncSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::coeff(int k) const {
    if (nvars() != 1) throw DomainError("coefficient index needs a univariate series");
    return coeff(Monomial{k});
}

Rational TruncSeries::constant_term() const { return coeff(Monomial(nvars(), 0)); }

void TruncSeries::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars()) throw DomainError("monomial length does not match series variables");
    for (int e : m)
        if (e < 0) throw DomainError("negative exponent in power series");
    if (c == 0 || total_degree(m) > precision_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int TruncSeries::order() const {
    int best = precision_ + 1;
    for (const auto& [m, c] : terms_) best = std::min(best, total_degree(m));
    return best;
}

TruncSeries TruncSeries::truncate(int precision) const {
    TruncSeries r(vars_, std::min(precision, precision_));
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (vars_ != o.vars_) throw DomainError("series live in different variables");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_compatible(o);
    if (o.precision_ < precision_) *this = truncate(o.precision_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_compatible(o);
    if (o.precision_ < precision_) *this = truncate(o.precision_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries r(a.vars_, std::min(a.precision_, b.precision_));
    for (const auto& [ma, ca] : a.terms_) {
        const int da = total_degree(ma);
        if (da > r.precision_) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + total_degree(mb) > r.precision_) continue;
            r.add_term(monomial_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

TruncSeries operator*(const Rational& s, TruncSeries a) {
    if (s == 0) {
        a.terms_.clear();
        return a;
    }
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
}

TruncSeries TruncSeries::pow(unsigned k) const {
    TruncSeries r = constant(vars_, precision_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

TruncSeries TruncSeries::inverse() const {
    const Rational c0 = constant_term();
    if (c0 == 0) throw DomainError("series with zero constant term is not invertible");
    // 1/(c0(1+h)) = c0^{-1} Σ (−h)^k
    TruncSeries h = (1 / c0) * (*this) - constant(vars_, precision_, 1);
    TruncSeries sum = constant(vars_, precision_, 1);
    TruncSeries term = sum;
    for (int k = 1; k <= precision_; ++k) {
        term = Rational(-1) * (term * h);
        sum += term;
    }
    return (1 / c0) * sum;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return vars_ == o.vars_ && precision_ == o.precision_ && terms_ == o.terms_;
}

std::string TruncSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        out << (first ? "" : " + ") << format_rational(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            out << '*' << vars_[i];
            if (m[i] != 1) out << '^' << m[i];
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << (precision_ + 1) << ")";
    return out.str();
}

TruncSeries series_log(const TruncSeries& f) {
    if (f.constant_term() != 1) throw DomainError("series_log needs constant term 1");
    const auto one = TruncSeries::constant(f.variables(), f.precision(), 1);
    const TruncSeries h = f - one;
    TruncSeries sum(f.variables(), f.precision());
    TruncSeries power = one;
    for (int k = 1; k <= f.precision(); ++k) {
        power = power * h;
        Rational coef(k % 2 == 1 ? 1 : -1, k);
        coef.canonicalize();
        sum += coef * power;
    }
    return sum;
}

TruncSeries series_exp(const TruncSeries& g) {
    if (g.constant_term() != 0) throw DomainError("series_exp needs zero constant term");
    TruncSeries sum = TruncSeries::constant(g.variables(), g.precision(), 1);
    TruncSeries term = sum;
    for (int k = 1; k <= g.precision(); ++k) {
        term = Rational(1, k) * (term * g);
        sum += term;
    }
    return sum;
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
    if (f.nvars() != 1) throw DomainError("series_compose needs a univariate outer series");
    if (g.constant_term() != 0) throw DomainError("inner series must have zero constant term");
    const int prec = std::min(f.precision(), g.precision());
    const TruncSeries inner = g.truncate(prec);
    // Horner: f(g) = c0 + g(c1 + g(c2 + ...))
    TruncSeries acc(g.variables(), prec);
    for (int k = prec; k >= 0; --k) {
        acc = acc * inner;
        acc += TruncSeries::constant(g.variables(), prec, f.coeff(k));
    }
    return acc;
}

}  // namespace astk
