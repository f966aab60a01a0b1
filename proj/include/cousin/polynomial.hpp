#pragma once

#include <vector>

#include "cousin/matrix.hpp"

namespace cousin {

class RatPoly;

// Quotient and remainder with deg(rem) < deg(divisor).
struct PolyDivMod;

// Univariate polynomial over Q, coefficient of x^k at position k. No stored
// trailing zeros; the zero polynomial has an empty coefficient list.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const Rational& lead() const;

  RatPoly operator+(const RatPoly& y) const;
  RatPoly operator-(const RatPoly& y) const;
  RatPoly operator*(const RatPoly& y) const;
  RatPoly scaled(const Rational& c) const;
  bool operator==(const RatPoly& y) const { return c_ == y.c_; }
  bool operator!=(const RatPoly& y) const { return !(*this == y); }

  PolyDivMod divmod(const RatPoly& divisor) const;

  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  static RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic (or zero)

  std::string str() const;

 private:
  std::vector<Rational> c_;
  void trim();
};

struct PolyDivMod {
  RatPoly quot, rem;
};

struct PolyFactor {
  RatPoly factor;  // monic irreducible
  int multiplicity;
};

// input = unit * prod factor^multiplicity. Factors are monic irreducible,
// sorted by degree then lexicographically by coefficients. Supports degrees
// up to 16; beyond that throws DomainError.
struct Factorization {
  Rational unit;
  std::vector<PolyFactor> factors;
};
Factorization factor_poly(const RatPoly& f);

// Monic minimal polynomial of a square rational matrix.
RatPoly minimal_polynomial(const Mat& t);

// p(t) for a square matrix t.
Mat eval_at_matrix(const RatPoly& p, const Mat& t);

}  // namespace cousin
