#include "cousin/common.hpp"

namespace cousin {

Rational ratio(long num, long den) { return ratio(Int(num), Int(den)); }

Rational ratio(const Int& num, const Int& den) {
  if (den == 0) throw FieldError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int sign(const Rational& x) { return sgn(x); }

std::string rational_str(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  for (size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    if (!ok) throw ParseError("bad character in rational literal: " + s);
  }
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
    return ratio(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("unparseable rational literal: " + s);
  }
}

bool is_squarefree_positive(long m) {
  if (m < 1) return false;
  for (long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace cousin
