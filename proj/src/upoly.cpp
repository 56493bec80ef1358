#include "astk/upoly.hpp"

#include <map>
#include <sstream>

namespace astk {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_power(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    return (1 / c_.back()) * (*this);
}

Rational UPoly::operator()(const Rational& x) const {
    Rational r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& v : r) v *= s;
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        Rational f = rem[k] / b.c_.back();
        if (f == 0) continue;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::pow(unsigned k) const {
    UPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Rational mag = abs(c_[k]);
        out << (c_[k] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        if (mag != 1 || k == 0) out << format_rational(mag) << (k > 0 ? "*" : "");
        if (k >= 1) out << var;
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = UPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Bezout extended_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1{}, t0{}, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = UPoly::divmod(r0, r1);
        UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const UPoly& p) {
    std::vector<std::pair<Rational, unsigned>> roots;
    if (p.degree() <= 0) return roots;
    UPoly work = p;
    unsigned zero_mult = 0;
    while (!work.is_zero() && work.coeff(0) == 0) {
        work = UPoly::divmod(work, UPoly::x_power(1)).first;
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    if (work.degree() <= 0) return roots;
    // scale to integer coefficients
    Integer l = 1;
    for (const auto& c : work.coeffs()) l = lcm(l, Integer(c.get_den()));
    std::vector<Integer> ic;
    for (const auto& c : work.coeffs()) ic.push_back(Integer(c * l));
    auto ps = divisors(ic.front());
    auto qs = divisors(ic.back());
    std::map<Rational, bool> tried;
    for (const auto& pn : ps)
        for (const auto& qd : qs)
            for (int sign : {1, -1}) {
                Rational cand(sign * pn, qd);
                cand.canonicalize();
                if (tried[cand]) continue;
                tried[cand] = true;
                unsigned mult = 0;
                UPoly lin({-cand, Rational(1)});
                while (work.degree() >= 1 && work(cand) == 0) {
                    work = UPoly::divmod(work, lin).first;
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(cand, mult);
            }
    return roots;
}

UPoly cyclotomic(unsigned d) {
    if (d == 0) throw DomainError("cyclotomic index must be positive");
    UPoly p = UPoly::x_power(d) - UPoly::constant(1);
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) p = UPoly::divmod(p, cyclotomic(e)).first;
    return p;
}

}  // namespace astk
