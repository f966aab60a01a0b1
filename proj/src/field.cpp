#include "cousin/field.hpp"

#include <sstream>

namespace cousin {

FieldElem::FieldElem(Rational a0, Rational a1, Rational a2, Rational a3, long m) : m_(m) {
  if (!is_squarefree_positive(m)) {
    throw FieldError("field parameter must be squarefree and positive, got " + std::to_string(m));
  }
  a_[0] = std::move(a0);
  a_[1] = std::move(a1);
  a_[2] = std::move(a2);
  a_[3] = std::move(a3);
  if (m_ == 1) {
    // s = 1: fold the s-components away to keep the representation unique.
    a_[0] += a_[1];
    a_[2] += a_[3];
    a_[1] = 0;
    a_[3] = 0;
  }
}

FieldElem FieldElem::i_unit(long m) {
  return FieldElem(Rational(0), Rational(0), Rational(1), Rational(0), m);
}

FieldElem FieldElem::sqrt_m(long m) {
  return FieldElem(Rational(0), Rational(1), Rational(0), Rational(0), m);
}

bool FieldElem::is_zero() const {
  return a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0;
}

const Rational& FieldElem::rational_value() const {
  if (!is_rational()) throw FieldError("element is not rational: " + str());
  return a_[0];
}

void FieldElem::check_same_field(const FieldElem& y) const {
  if (m_ != y.m_) {
    throw FieldError("mismatched field parameters " + std::to_string(m_) + " and " +
                     std::to_string(y.m_));
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  for (auto& c : r.a_) c = -c;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& y) const {
  check_same_field(y);
  FieldElem r(*this);
  for (int k = 0; k < 4; ++k) r.a_[static_cast<size_t>(k)] += y.a_[static_cast<size_t>(k)];
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& y) const {
  check_same_field(y);
  FieldElem r(*this);
  for (int k = 0; k < 4; ++k) r.a_[static_cast<size_t>(k)] -= y.a_[static_cast<size_t>(k)];
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& y) const {
  check_same_field(y);
  // Write x = A + B*i, y = C + D*i with A, B, C, D in Q(sqrt(m)); multiply as
  // complex numbers, and inside Q(sqrt(m)) use (a + b*s)(c + d*s) = ac + bd*m + (ad + bc)s.
  const Rational& a = a_[0];
  const Rational& b = a_[1];
  const Rational& b2 = a_[2];
  const Rational& b3 = a_[3];
  const Rational& c = y.a_[0];
  const Rational& d = y.a_[1];
  const Rational& d2 = y.a_[2];
  const Rational& d3 = y.a_[3];
  Rational m(m_);
  // Real part: A*C - B*D.
  Rational r0 = a * c + b * d * m - (b2 * d2 + b3 * d3 * m);
  Rational r1 = a * d + b * c - (b2 * d3 + b3 * d2);
  // Imaginary part: A*D + B*C.
  Rational r2 = a * d2 + b * d3 * m + b2 * c + b3 * d * m;
  Rational r3 = a * d3 + b * d2 + b2 * d + b3 * c;
  return FieldElem(r0, r1, r2, r3, m_);
}

FieldElem FieldElem::operator/(const FieldElem& y) const { return *this * y.inv(); }

bool FieldElem::operator==(const FieldElem& y) const {
  return m_ == y.m_ && a_ == y.a_;
}

FieldElem FieldElem::conj() const {
  return FieldElem(a_[0], a_[1], -a_[2], -a_[3], m_);
}

FieldElem FieldElem::galois() const {
  return FieldElem(a_[0], -a_[1], a_[2], -a_[3], m_);
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw FieldError("division by zero");
  // x * conj(x) is real; multiplying further by its s-conjugate lands in Q.
  FieldElem n1 = *this * conj();                 // in Q(sqrt(m))
  FieldElem n2 = n1 * n1.galois();               // rational
  Rational norm = n2.a_[0];
  if (norm == 0) throw FieldError("internal: zero norm for nonzero element");
  FieldElem r = conj() * n1.galois();            // x^{-1} * norm
  for (auto& c : r.a_) c /= norm;
  return r;
}

FieldElem FieldElem::real_part() const {
  return FieldElem(a_[0], a_[1], Rational(0), Rational(0), m_);
}

FieldElem FieldElem::imag_part() const {
  return FieldElem(a_[2], a_[3], Rational(0), Rational(0), m_);
}

int FieldElem::sign_real() const {
  if (!is_real()) throw FieldError("sign of a non-real element: " + str());
  const Rational& a = a_[0];
  const Rational& b = a_[1];
  int sa = sign(a);
  int sb = sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(m) has the sign of the larger square.
  Rational lhs = a * a;
  Rational rhs = b * b * Rational(m_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;  // a^2 = b^2 m is impossible for m > 1 squarefree, a, b != 0
}

FieldElem FieldElem::embedded(long new_m) const {
  if (new_m == m_) return *this;
  if (a_[1] != 0 || a_[3] != 0) {
    throw FieldError("cannot embed " + str() + " into field with parameter " +
                     std::to_string(new_m));
  }
  return FieldElem(a_[0], Rational(0), a_[2], Rational(0), new_m);
}

std::string FieldElem::str() const {
  static const char* names[4] = {"", "s", "i", "i*s"};
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = a_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!first && c > 0) out << "+";
    if (k == 0) {
      out << rational_str(c);
    } else if (c == 1) {
      out << names[k];
    } else if (c == -1) {
      out << "-" << names[k];
    } else {
      out << rational_str(c) << "*" << names[k];
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

FieldElem operator*(const Rational& c, const FieldElem& x) {
  return FieldElem(c, x.field_param()) * x;
}

}  // namespace cousin
