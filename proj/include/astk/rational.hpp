#ifndef ASTK_RATIONAL_HPP
#define ASTK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace astk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (ring mismatch, wrong mode, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A structure failed a self-check (d∘d ≠ 0, Hopf axiom, cosimplicial identity).
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// The requested group, pair or model is outside the supported catalog.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Parses "n", "-n" or "n/d". Throws DomainError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "n" or "n/d" form.
std::string format_rational(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace astk

#endif
