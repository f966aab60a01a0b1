#include "cousin/linalg.hpp"

namespace cousin {

Echelon row_echelon(const Mat& a) {
  Mat r(a);
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < r.cols() && row < r.rows(); ++c) {
    int p = -1;
    for (int i = row; i < r.rows(); ++i) {
      if (!r.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
    }
    FieldElem inv = r.at(row, c).inv();
    for (int j = c; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, c).is_zero()) continue;
      FieldElem f = r.at(i, c);
      for (int j = c; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

int rank(const Mat& a) { return static_cast<int>(row_echelon(a).pivot_cols.size()); }

Mat kernel_basis(const Mat& a) {
  Echelon e = row_echelon(a);
  int n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  int free_count = n - static_cast<int>(e.pivot_cols.size());
  Mat k(n, free_count, a.field_param());
  int out = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    k.at(c, out) = FieldElem::one(a.field_param());
    for (size_t pi = 0; pi < e.pivot_cols.size(); ++pi) {
      // Row pi of the echelon form reads x_{pivot} + sum coef * x_{free} = 0.
      k.at(e.pivot_cols[pi], out) = -e.rref.at(static_cast<int>(pi), c);
    }
    ++out;
  }
  return Subspace::span(k).basis();
}

Mat solve_unique(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.field_param() != b.field_param()) {
    throw DomainError("solve_unique: shape or field mismatch");
  }
  Echelon e = row_echelon(Mat::hstack(a, b));
  int k = a.cols();
  for (int c : e.pivot_cols) {
    if (c >= k) throw DomainError("solve_unique: inconsistent system");
  }
  if (static_cast<int>(e.pivot_cols.size()) != k) {
    throw DomainError("solve_unique: solution is not unique");
  }
  Mat x(k, b.cols(), a.field_param());
  for (int i = 0; i < k; ++i) {
    // Full column rank: pivot i sits in column i.
    for (int j = 0; j < b.cols(); ++j) x.at(i, j) = e.rref.at(i, k + j);
  }
  return x;
}

Subspace Subspace::span(const Mat& columns) {
  Subspace s;
  s.ambient_ = columns.rows();
  s.m_ = columns.field_param();
  Echelon e = row_echelon(columns.transpose());
  int d = static_cast<int>(e.pivot_cols.size());
  Mat basis(columns.rows(), d, columns.field_param());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < columns.rows(); ++j) basis.at(j, i) = e.rref.at(i, j);
  }
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::zero(int ambient, long m) { return span(Mat(ambient, 0, m)); }

Subspace Subspace::full(int ambient, long m) { return span(Mat::identity(ambient, m)); }

bool Subspace::contains(const std::vector<FieldElem>& v) const {
  return contains_columns(Mat::column(v));
}

bool Subspace::contains_columns(const Mat& vectors) const {
  if (vectors.rows() != ambient_) throw DomainError("contains: ambient mismatch");
  return rank(Mat::hstack(basis_, vectors)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return contains_columns(other.basis_); }

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && m_ == other.m_ && basis_ == other.basis_;
}

Subspace Subspace::intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_ != t.ambient_ || s.m_ != t.m_) throw DomainError("intersect: ambient mismatch");
  Mat joint = Mat::hstack(s.basis_, t.basis_);
  Mat k = kernel_basis(joint);  // (ds + dt) x c, with S x + T y = 0
  Mat x(s.dim(), k.cols(), s.m_);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < k.cols(); ++j) x.at(i, j) = k.at(i, j);
  return span(s.basis_ * x);
}

Subspace Subspace::sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_ != t.ambient_ || s.m_ != t.m_) throw DomainError("sum: ambient mismatch");
  return span(Mat::hstack(s.basis_, t.basis_));
}

Mat Subspace::annihilator() const { return kernel_basis(basis_.transpose()).transpose(); }

Subspace Subspace::conj() const { return span(basis_.conj()); }

bool Subspace::is_conj_stable() const { return conj() == *this; }

Subspace Subspace::embedded(long new_m) const { return span(basis_.embedded(new_m)); }

namespace {

// Expand the K-linear system a x = 0 in a rational unknown x into the
// equivalent rational system: each K-row yields four rows, one per component
// along {1, s, i, i*s}, in that order.
Mat rational_condition_matrix(const Mat& a) {
  Mat out(4 * a.rows(), a.cols(), a.field_param());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      for (int comp = 0; comp < 4; ++comp) {
        out.at(4 * r + comp, c) = FieldElem(a.at(r, c).coeff(comp), a.field_param());
      }
    }
  }
  return out;
}

}  // namespace

Mat rational_kernel(const Mat& a) {
  Mat k = kernel_basis(rational_condition_matrix(a));
  if (!k.is_rational()) throw DomainError("internal: rational kernel left the rationals");
  return k;
}

Subspace rational_points(const Subspace& s) {
  return Subspace::span(rational_kernel(s.annihilator()));
}

Mat conj_fixed_points(const Subspace& s) {
  if (!s.is_conj_stable()) throw DomainError("conj_fixed_points: subspace is not conj-stable");
  long m = s.field_param();
  const Mat& b = s.basis();
  Mat cand(s.ambient(), 2 * b.cols(), m);
  FieldElem minus_i = -FieldElem::i_unit(m);
  for (int c = 0; c < b.cols(); ++c) {
    for (int r = 0; r < s.ambient(); ++r) {
      FieldElem w = b.at(r, c);
      cand.at(r, 2 * c) = w + w.conj();
      cand.at(r, 2 * c + 1) = minus_i * (w - w.conj());
    }
  }
  Mat fixed = Subspace::span(cand).basis();
  if (!fixed.is_real()) throw DomainError("internal: conj-fixed basis has imaginary entries");
  if (fixed.cols() != s.dim()) {
    throw DomainError("internal: conj-fixed point count differs from dim_K");
  }
  return fixed;
}

}  // namespace cousin
