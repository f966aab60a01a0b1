#pragma once

#include <array>
#include <string>

#include "cousin/common.hpp"

namespace cousin {

// Element of K = Q(i, sqrt(m)) for a squarefree m >= 1, stored on the basis
// {1, s, i, i*s} with s = sqrt(m):
//
//   x = a0 + a1*s + a2*i + a3*i*s.
//
// For m = 1 the field degenerates to Q(i); s = 1 is folded away so that
// a1 = a3 = 0 always holds there. Every element carries its own m and binary
// operations insist on matching parameters; crossing fields is only possible
// through embedded().
class FieldElem {
 public:
  FieldElem() : m_(1) {}
  explicit FieldElem(Rational a0, long m = 1)
      : FieldElem(std::move(a0), Rational(0), Rational(0), Rational(0), m) {}
  FieldElem(Rational a0, Rational a1, Rational a2, Rational a3, long m);

  static FieldElem zero(long m) { return FieldElem(Rational(0), m); }
  static FieldElem one(long m) { return FieldElem(Rational(1), m); }
  static FieldElem of_int(long v, long m) { return FieldElem(Rational(v), m); }
  static FieldElem i_unit(long m);
  static FieldElem sqrt_m(long m);

  long field_param() const { return m_; }
  const Rational& coeff(int k) const { return a_[static_cast<size_t>(k)]; }

  bool is_zero() const;
  // Zero i-components, i.e. lies in the real subfield Q(sqrt(m)).
  bool is_real() const { return a_[2] == 0 && a_[3] == 0; }
  bool is_rational() const { return is_real() && a_[1] == 0; }
  // Valid only when is_rational().
  const Rational& rational_value() const;

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& y) const;
  FieldElem operator-(const FieldElem& y) const;
  FieldElem operator*(const FieldElem& y) const;
  FieldElem operator/(const FieldElem& y) const;
  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }
  FieldElem& operator/=(const FieldElem& y) { return *this = *this / y; }

  bool operator==(const FieldElem& y) const;
  bool operator!=(const FieldElem& y) const { return !(*this == y); }

  // Complex conjugation i -> -i; the nontrivial automorphism over Q(sqrt(m)).
  FieldElem conj() const;
  // s -> -s; used for rationalizing denominators.
  FieldElem galois() const;
  FieldElem inv() const;

  // x = real_part() + i_unit * imag_part(), both parts in Q(sqrt(m)).
  FieldElem real_part() const;
  FieldElem imag_part() const;

  // Sign of the real number a0 + a1*sqrt(m). Throws FieldError when the
  // element has a nonzero imaginary component.
  int sign_real() const;

  // Reinterpret in Q(i, sqrt(new_m)). Allowed when new_m equals m or the
  // element has no s-component (so it lies in Q(i), common to both fields).
  FieldElem embedded(long new_m) const;

  std::string str() const;

 private:
  long m_;
  std::array<Rational, 4> a_{};  // a0, a1, a2, a3

  void check_same_field(const FieldElem& y) const;
};

FieldElem operator*(const Rational& c, const FieldElem& x);

}  // namespace cousin
