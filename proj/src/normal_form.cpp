#include "cousin/normal_form.hpp"

#include <sstream>

namespace cousin {

IMat::IMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

IMat IMat::identity(int n) {
  IMat r(n, n);
  for (int k = 0; k < n; ++k) r.at(k, k) = 1;
  return r;
}

Int& IMat::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

const Int& IMat::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

IMat IMat::operator*(const IMat& y) const {
  if (cols_ != y.rows_) throw DomainError("integer matrix product shape mismatch");
  IMat r(rows_, y.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < y.cols_; ++j) r.at(i, j) += a * y.at(k, j);
    }
  return r;
}

bool IMat::operator==(const IMat& y) const {
  return rows_ == y.rows_ && cols_ == y.cols_ && e_ == y.e_;
}

IMat IMat::transpose() const {
  IMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IMat::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IMat::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IMat::add_row(int a, int b, const Int& f) {
  if (f == 0) return;
  for (int j = 0; j < cols_; ++j) at(a, j) += f * at(b, j);
}

void IMat::add_col(int a, int b, const Int& f) {
  if (f == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, a) += f * at(i, b);
}

void IMat::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IMat::negate_col(int a) {
  for (int i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

Int IMat::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  int n = rows_;
  if (n == 0) return Int(1);
  IMat a(*this);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::string IMat::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j).get_str();
    out << "]";
    if (i + 1 < rows_) out << "\n";
  }
  return out.str();
}

HermiteResult hermite_normal_form(const IMat& a) {
  IMat h(a);
  IMat u = IMat::identity(a.rows());
  int row = 0;
  for (int c = 0; c < h.cols() && row < h.rows(); ++c) {
    // Reduce rows >= row until column c has at most one nonzero entry there.
    for (;;) {
      int best = -1;
      for (int i = row; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        if (best < 0 || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      if (best < 0) break;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool clean = true;
      for (int i = row + 1; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(row, c);  // truncated division shrinks |entry|
        h.add_row(i, row, -q);
        u.add_row(i, row, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(row, c) == 0) continue;
    if (h.at(row, c) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    // Entries above the pivot land in [0, pivot).
    for (int i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(row, c).get_mpz_t());
      h.add_row(i, row, -q);
      u.add_row(i, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IMat& a) {
  IMat d(a);
  IMat u = IMat::identity(a.rows());
  IMat v = IMat::identity(a.cols());
  int n = std::min(d.rows(), d.cols());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the working block moves to (t, t).
      int bi = -1, bj = -1;
      for (int i = t; i < d.rows(); ++i) {
        for (int j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (bi < 0 || abs(d.at(i, j)) < abs(d.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) break;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      bool dirty = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot must divide the rest of the block for the divisor chain.
      bool fixed = true;
      for (int i = t + 1; i < d.rows() && fixed; ++i) {
        for (int j = t + 1; j < d.cols() && fixed; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, Int(1));
            u.add_row(t, i, Int(1));
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (t < n && d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  SmithResult r{std::move(d), std::move(u), std::move(v), {}};
  for (int t = 0; t < n; ++t) {
    if (r.d.at(t, t) != 0) r.divisors.push_back(r.d.at(t, t));
  }
  return r;
}

IMat integer_kernel(const IMat& a) {
  SmithResult s = smith_normal_form(a);
  int n = a.cols();
  int rk = static_cast<int>(s.divisors.size());
  IMat k(n, n - rk);
  for (int j = rk; j < n; ++j) {
    for (int i = 0; i < n; ++i) k.at(i, j - rk) = s.v.at(i, j);
  }
  // Canonical column form via row-Hermite of the transpose.
  HermiteResult h = hermite_normal_form(k.transpose());
  IMat canon(n, n - rk);
  for (int r = 0; r < n - rk; ++r)
    for (int c = 0; c < n; ++c) canon.at(c, r) = h.h.at(r, c);
  return canon;
}

IMat integer_kernel_of_rational(const Mat& a) {
  if (!a.is_rational()) throw DomainError("integer_kernel_of_rational: matrix is not rational");
  IMat scaled(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    Int l(1);
    for (int j = 0; j < a.cols(); ++j) l = lcm(l, a.at(i, j).rational_value().get_den());
    for (int j = 0; j < a.cols(); ++j) {
      Rational v = a.at(i, j).rational_value() * Rational(l);
      scaled.at(i, j) = v.get_num();
    }
  }
  return integer_kernel(scaled);
}

Mat to_field_matrix(const IMat& a, long m) {
  Mat r(a.rows(), a.cols(), m);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = FieldElem(Rational(a.at(i, j)), m);
  return r;
}

IMat to_integer_matrix(const Mat& a) {
  IMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& v = a.at(i, j).rational_value();
      if (v.get_den() != 1) throw DomainError("to_integer_matrix: non-integral entry");
      r.at(i, j) = v.get_num();
    }
  return r;
}

}  // namespace cousin
