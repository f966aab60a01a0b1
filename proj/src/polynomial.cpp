#include "cousin/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cousin/linalg.hpp"

namespace cousin {

void RatPoly::trim() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

const Rational& RatPoly::lead() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& y) const {
  std::vector<Rational> out(std::max(c_.size(), y.c_.size()), Rational(0));
  for (size_t k = 0; k < out.size(); ++k) out[k] = coeff(static_cast<int>(k)) + y.coeff(static_cast<int>(k));
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& y) const {
  std::vector<Rational> out(std::max(c_.size(), y.c_.size()), Rational(0));
  for (size_t k = 0; k < out.size(); ++k) out[k] = coeff(static_cast<int>(k)) - y.coeff(static_cast<int>(k));
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& y) const {
  if (is_zero() || y.is_zero()) return RatPoly();
  std::vector<Rational> out(c_.size() + y.c_.size() - 1, Rational(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < y.c_.size(); ++b) out[a + b] += c_[a] * y.c_[b];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= c;
  return RatPoly(std::move(out));
}

PolyDivMod RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(c_);
  const int dd = divisor.degree();
  const int dq = degree() - dd;
  if (dq < 0) return {RatPoly(), *this};
  std::vector<Rational> quot(static_cast<size_t>(dq) + 1, Rational(0));
  for (int k = dq; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + dd)] / divisor.lead();
    quot[static_cast<size_t>(k)] = q;
    if (sign(q) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * divisor.coeff(j);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
  return scaled(Rational(1) / lead());
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly u = a, v = b;
  while (!v.is_zero()) {
    RatPoly r = u.divmod(v).rem;
    u = v;
    v = r;
  }
  return u.is_zero() ? u : u.monic();
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (sign(c) == 0) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    Rational ac = abs(c);
    if (k == 0 || ac != 1) os << rational_str(ac);
    if (k > 0) {
      if (ac != 1) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

// Integer polynomial helpers for the factor search. Coefficient of x^k at
// position k, trailing zeros trimmed.
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Int ieval(const IPoly& p, const Int& x) {
  Int acc = 0;
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Clears denominators and the content: primitive integer polynomial with
// positive leading coefficient, plus the rational unit relating the two.
IPoly primitive_part(const RatPoly& f, Rational* unit) {
  Int den = 1;
  for (int k = 0; k <= f.degree(); ++k) den = lcm(den, f.coeff(k).get_den());
  IPoly p(static_cast<size_t>(f.degree()) + 1);
  for (int k = 0; k <= f.degree(); ++k) {
    Rational scaled = f.coeff(k) * Rational(den);
    p[static_cast<size_t>(k)] = scaled.get_num();
  }
  Int content = 0;
  for (const Int& c : p) content = gcd(content, c);
  if (sgn(p.back()) < 0) content = -content;
  for (Int& c : p) c /= content;
  if (unit) *unit = ratio(content, den);
  return p;
}

RatPoly to_rational(const IPoly& p) {
  std::vector<Rational> c(p.size());
  for (size_t k = 0; k < p.size(); ++k) c[k] = Rational(p[k]);
  return RatPoly(std::move(c));
}

// All divisors of |v| with both signs, |v| > 0 required. Sorted by absolute
// value, positive before negative, so small factors are attempted first.
std::vector<Int> signed_divisors(const Int& v) {
  Int a = abs(v);
  if (sgn(a) == 0) throw DomainError("divisor enumeration of zero");
  std::vector<Int> small, large;
  Int d = 1;
  while (d * d <= a) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
    ++d;
    if (d > 2000000) throw DomainError("factor search value out of range");
  }
  std::vector<Int> divs(small);
  divs.insert(divs.end(), large.rbegin(), large.rend());
  std::vector<Int> out;
  for (const Int& x : divs) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

// Lagrange interpolation through (xs[k], ys[k]); nullopt stands for a leading
// degree drop (handled by the caller via the degree check).
RatPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  RatPoly acc;
  for (size_t k = 0; k < xs.size(); ++k) {
    RatPoly term = RatPoly::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      term = term * (RatPoly::x() - RatPoly::constant(Rational(xs[j])));
      denom *= Rational(xs[k] - xs[j]);
    }
    acc = acc + term.scaled(Rational(ys[k]) / denom);
  }
  return acc;
}

bool integer_coeffs(const RatPoly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k).get_den() != 1) return false;
  return true;
}

// One factor of the square-free primitive integer polynomial h with
// 2 <= deg <= deg(h)/2, or zero if none exists (h irreducible over Q, given
// that rational roots were already removed). Finite search over divisor
// tuples of evaluations at small integer points, with the congruence filter
// g(a) = g(b) mod (a - b) pruning inconsistent branches.
RatPoly kronecker_factor(const IPoly& h) {
  const int deg = static_cast<int>(h.size()) - 1;
  std::vector<Int> xs;
  for (long t = 0; static_cast<int>(xs.size()) <= deg / 2; ++t) {
    long pt = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);  // 0, -1, 1, -2, 2, ...
    xs.push_back(Int(pt));
  }
  std::vector<std::vector<Int>> divs;
  for (const Int& x : xs) divs.push_back(signed_divisors(ieval(h, x)));

  RatPoly hq = to_rational(h);
  for (int d = 2; d <= deg / 2; ++d) {
    // Candidate values g(xs[k]) for k = 0..d; the first point is kept
    // positive since g and -g generate the same factor.
    std::vector<Int> ys(static_cast<size_t>(d) + 1);
    RatPoly found;
    auto search = [&](auto&& self, int level) -> bool {
      const auto& options = divs[static_cast<size_t>(level)];
      size_t limit = (level == 0) ? options.size() / 2 : options.size();
      for (size_t t = 0; t < limit; ++t) {
        Int y = (level == 0) ? options[2 * t] : options[t];
        bool consistent = true;
        for (int j = 0; j < level; ++j) {
          Int gap = xs[static_cast<size_t>(level)] - xs[static_cast<size_t>(j)];
          if ((y - ys[static_cast<size_t>(j)]) % gap != 0) {
            consistent = false;
            break;
          }
        }
        if (!consistent) continue;
        ys[static_cast<size_t>(level)] = y;
        if (level == d) {
          std::vector<Int> px(xs.begin(), xs.begin() + d + 1);
          RatPoly cand = interpolate(px, ys);
          if (cand.degree() == d && integer_coeffs(cand) && hq.divmod(cand).rem.is_zero()) {
            found = cand;
            return true;
          }
        } else if (self(self, level + 1)) {
          return true;
        }
      }
      return false;
    };
    if (search(search, 0)) return found;
  }
  return RatPoly();
}

// Monic irreducible factors of a monic square-free polynomial.
std::vector<RatPoly> factor_squarefree(const RatPoly& input) {
  std::vector<RatPoly> out;
  RatPoly f = input;
  // Rational roots first: p/q with p | constant term, q | leading term of the
  // primitive integer model.
  bool found = true;
  while (found && f.degree() >= 1) {
    found = false;
    IPoly p = primitive_part(f, nullptr);
    if (sgn(p.front()) == 0) {
      out.push_back(RatPoly::x());
      f = f.divmod(RatPoly::x()).quot;
      found = true;
      continue;
    }
    for (const Int& num : signed_divisors(p.front())) {
      for (const Int& den : signed_divisors(p.back())) {
        if (sgn(den) < 0) continue;
        if (gcd(abs(num), den) != 1) continue;
        Rational root = ratio(num, den);
        if (sign(f.eval(root)) == 0) {
          RatPoly lin = RatPoly::x() - RatPoly::constant(root);
          out.push_back(lin);
          f = f.divmod(lin).quot;
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  while (f.degree() >= 2) {
    IPoly h = primitive_part(f, nullptr);
    RatPoly g = kronecker_factor(h);
    if (g.is_zero()) break;  // irreducible
    out.push_back(g.monic());
    f = f.divmod(g.monic()).quot;
  }
  if (f.degree() >= 1) out.push_back(f.monic());
  return out;
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    Rational ca = a.coeff(k), cb = b.coeff(k);
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

Factorization factor_poly(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (f.degree() > 16) throw DomainError("factorization supported up to degree 16");
  Factorization out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;

  // Yun square-free decomposition of the monic part.
  RatPoly w = f.monic();
  RatPoly g = RatPoly::gcd(w, w.derivative());
  RatPoly r = w.divmod(g).quot;
  int mult = 1;
  while (r.degree() > 0) {
    RatPoly y = RatPoly::gcd(r, g);
    RatPoly part = r.divmod(y).quot;
    if (part.degree() > 0)
      for (const RatPoly& irr : factor_squarefree(part)) out.factors.push_back({irr, mult});
    g = g.divmod(y).quot;
    r = y;
    ++mult;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
  return out;
}

RatPoly minimal_polynomial(const Mat& t) {
  if (!t.is_square()) throw DomainError("minimal polynomial requires a square matrix");
  const int n = t.rows();
  if (n == 0) return RatPoly::constant(Rational(1));

  // Vectorized powers of t; the first linear dependency gives the monic
  // minimal polynomial.
  std::vector<Mat> powers;
  Mat pw = Mat::identity(n, t.field_param());
  for (int k = 0; k <= n * n; ++k) {
    Mat flat(n * n, 1, t.field_param());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) flat.at(a * n + b, 0) = pw.at(a, b);
    Mat prev(n * n, static_cast<int>(powers.size()), t.field_param());
    for (size_t j = 0; j < powers.size(); ++j)
      for (int a = 0; a < n * n; ++a) prev.at(a, static_cast<int>(j)) = powers[j].at(a, 0);
    if (!powers.empty() && rank(Mat::hstack(prev, flat)) == static_cast<int>(powers.size())) {
      Mat coeffs = solve_unique(prev, flat);
      std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
      for (int j = 0; j < k; ++j) {
        if (!coeffs.at(j, 0).is_rational())
          throw DomainError("minimal polynomial requires rational coefficients");
        c[static_cast<size_t>(j)] = -coeffs.at(j, 0).rational_value();
      }
      c[static_cast<size_t>(k)] = Rational(1);
      return RatPoly(std::move(c));
    }
    powers.push_back(flat);
    pw = pw * t;
  }
  throw DomainError("minimal polynomial search failed to terminate");
}

Mat eval_at_matrix(const RatPoly& p, const Mat& t) {
  if (!t.is_square()) throw DomainError("polynomial evaluation requires a square matrix");
  Mat acc = Mat::zero(t.rows(), t.cols(), t.field_param());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * t;
    if (sign(p.coeff(k)) != 0) {
      Mat c = Mat::identity(t.rows(), t.field_param()).scaled(FieldElem(p.coeff(k), t.field_param()));
      acc = acc + c;
    }
  }
  return acc;
}

}  // namespace cousin
