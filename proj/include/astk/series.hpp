#ifndef ASTK_SERIES_HPP
#define ASTK_SERIES_HPP

#include "astk/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace astk {

/// Power series truncated by total degree. Every value carries its precision N:
/// terms of total degree > N are discarded. Binary operations on mixed precisions
/// run at the smaller one.
class TruncSeries {
public:
    using TermMap = std::map<Monomial, Rational>;

    TruncSeries(std::vector<std::string> variables, int precision);
    static TruncSeries constant(std::vector<std::string> variables, int precision, const Rational& c);
    /// The series u_index (a single variable).
    static TruncSeries variable(std::vector<std::string> variables, int precision, std::size_t index = 0);
    /// Univariate series from coefficients c_0, c_1, ... (truncated to precision).
    static TruncSeries univariate(const std::string& var, int precision, const std::vector<Rational>& coeffs);

    const std::vector<std::string>& variables() const { return vars_; }
    int precision() const { return precision_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }

    Rational coeff(const Monomial& m) const;
    /// Univariate convenience accessor.
    Rational coeff(int k) const;
    Rational constant_term() const;
    void add_term(const Monomial& m, const Rational& c);

    /// Lowest total degree with a nonzero term (precision + 1 for the zero series).
    int order() const;
    bool is_zero() const { return terms_.empty(); }

    TruncSeries truncate(int precision) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const Rational& s, TruncSeries a);

    TruncSeries pow(unsigned k) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    bool operator==(const TruncSeries& o) const;

    std::string to_string() const;

private:
    void check_compatible(const TruncSeries& o) const;
    std::vector<std::string> vars_;
    int precision_;
    TermMap terms_;
};

/// log f = Σ_{k≥1} (−1)^{k+1} (f−1)^k / k. Requires constant term 1.
TruncSeries series_log(const TruncSeries& f);
/// exp g = Σ g^k / k!. Requires zero constant term.
TruncSeries series_exp(const TruncSeries& g);
/// f(g) for univariate f; g must have zero constant term. Result at the common precision.
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

}  // namespace astk

#endif
