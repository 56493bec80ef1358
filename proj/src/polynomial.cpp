#include "astk/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace astk {

RingPtr make_ring(std::vector<std::string> variables, RingMode mode, CoeffDomain coeffs) {
    return std::make_shared<const Ring>(Ring{std::move(variables), coeffs, mode});
}

RingPtr rationalized(const RingPtr& ring) {
    if (ring->coeffs == CoeffDomain::Rationals) return ring;
    return make_ring(ring->variables, ring->mode, CoeffDomain::Rationals);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring()) return;
    if (!same_ring(a.ring(), b.ring())) throw DomainError("ring mismatch between polynomials");
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(ring);
    p.add_term(Monomial(ring->nvars(), 0), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index, int power) {
    Monomial m(ring->nvars(), 0);
    m.at(index) = power;
    return monomial(std::move(ring), std::move(m));
}

Poly Poly::monomial(RingPtr ring, Monomial exps, const Rational& c) {
    if (exps.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
    if (!ring->laurent())
        for (int e : exps)
            if (e < 0) throw DomainError("negative exponent in polynomial mode");
    Poly p(std::move(ring));
    p.add_term(exps, c);
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
    if (!ring_) return 0;
    return coeff(Monomial(ring_->nvars(), 0));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (!ring_) ring_ = other.ring_;
    require_same_ring(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (!ring_) ring_ = other.ring_;
    require_same_ring(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly r(a.ring() ? a.ring() : b.ring());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(monomial_mul(mm, m), cc * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

bool Poly::operator==(const Poly& other) const {
    if (ring_ && other.ring_ && !same_ring(ring_, other.ring_)) return false;
    return terms_ == other.terms_;
}

Monomial Poly::min_exponents() const {
    Monomial r(ring_ ? ring_->nvars() : 0, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            r = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], m[i]);
        }
    }
    return r;
}

int Poly::degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int t = total_degree(m);
        if (first || t > d) d = t;
        first = false;
    }
    return d;
}

bool Poly::has_negative_exponents() const {
    for (const auto& [m, c] : terms_)
        for (int e : m)
            if (e < 0) return true;
    return false;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational r = 1;
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw DomainError("negative power of zero in evaluation");
        b = 1 / b;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (ring_ && point.size() != ring_->nvars()) throw DomainError("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= rational_pow(point[i], m[i]);
        sum += t;
    }
    return sum;
}

Poly Poly::substitute(const std::vector<Poly>& images, const std::vector<Poly>& inverses) const {
    if (images.size() != (ring_ ? ring_->nvars() : 0))
        throw DomainError("substitution needs one image per variable");
    if (images.empty()) return *this;
    RingPtr target = images.front().ring();
    // cache powers per variable
    std::vector<std::map<int, Poly>> cache(images.size());
    auto power = [&](std::size_t v, int e) -> const Poly& {
        auto it = cache[v].find(e);
        if (it != cache[v].end()) return it->second;
        Poly p;
        if (e >= 0) {
            p = images[v].pow(static_cast<unsigned>(e));
        } else {
            if (inverses.size() != images.size() || !inverses[v].ring())
                throw DomainError("negative exponent needs an inverse image");
            p = inverses[v].pow(static_cast<unsigned>(-e));
        }
        return cache[v].emplace(e, std::move(p)).first->second;
    };
    Poly result(target);
    for (const auto& [m, c] : terms_) {
        Poly t = constant(target, c);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] != 0) t = t * power(v, m[v]);
        result += t;
    }
    return result;
}

Poly Poly::with_ring(RingPtr ring) const {
    if (ring_ && ring->nvars() != ring_->nvars()) throw DomainError("variable count mismatch");
    Poly r(std::move(ring));
    r.terms_ = terms_;
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        bool unit_monomial = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        bool wrote = false;
        if (mag != 1 || unit_monomial) {
            out << format_rational(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << '*';
            out << (ring_ ? ring_->variables[i] : "v" + std::to_string(i));
            if (m[i] != 1) out << '^' << m[i];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace astk
