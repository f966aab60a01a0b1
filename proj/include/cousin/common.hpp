#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cousin {

using Int = mpz_class;
using Rational = mpq_class;

// Arithmetic-level misuse: division by zero, mismatched field parameters,
// non-real input to a sign query.
struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid input to an operation whose precondition the caller
// violated (singular base change, invalid structure, non-sub-Hodge subspace...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed documents and I/O failures.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// mpq_class does not canonicalize (num, den) constructions on its own.
Rational ratio(long num, long den);
Rational ratio(const Int& num, const Int& den);

int sign(const Rational& x);

// "p/q" with q > 0 and gcd(p, q) = 1, or plain "p" when q = 1.
std::string rational_str(const Rational& x);
Rational parse_rational(std::string_view text);

bool is_squarefree_positive(long m);

}  // namespace cousin
