#include "cousin/matrix.hpp"

#include <sstream>

namespace cousin {

Mat::Mat(int rows, int cols, long m) : rows_(rows), cols_(cols), m_(m) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), FieldElem::zero(m));
}

Mat Mat::identity(int n, long m) {
  Mat r(n, n, m);
  for (int k = 0; k < n; ++k) r.at(k, k) = FieldElem::one(m);
  return r;
}

Mat Mat::column(const std::vector<FieldElem>& entries) {
  if (entries.empty()) throw DomainError("column from empty entry list");
  Mat r(static_cast<int>(entries.size()), 1, entries[0].field_param());
  for (size_t k = 0; k < entries.size(); ++k) r.at(static_cast<int>(k), 0) = entries[k];
  return r;
}

FieldElem& Mat::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

const FieldElem& Mat::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return e_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

void Mat::check_same_shape(const Mat& y) const {
  if (rows_ != y.rows_ || cols_ != y.cols_ || m_ != y.m_) {
    throw DomainError("matrix shape or field mismatch");
  }
}

Mat Mat::operator+(const Mat& y) const {
  check_same_shape(y);
  Mat r(*this);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += y.e_[k];
  return r;
}

Mat Mat::operator-(const Mat& y) const {
  check_same_shape(y);
  Mat r(*this);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= y.e_[k];
  return r;
}

Mat Mat::operator-() const {
  Mat r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

Mat Mat::operator*(const Mat& y) const {
  if (cols_ != y.rows_ || m_ != y.m_) throw DomainError("matrix product shape or field mismatch");
  Mat r(rows_, y.cols_, m_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const FieldElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < y.cols_; ++j) {
        r.at(i, j) += a * y.at(k, j);
      }
    }
  }
  return r;
}

Mat Mat::scaled(const FieldElem& c) const {
  Mat r(*this);
  for (auto& x : r.e_) x = x * c;
  return r;
}

bool Mat::operator==(const Mat& y) const {
  return rows_ == y.rows_ && cols_ == y.cols_ && m_ == y.m_ && e_ == y.e_;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, m_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r(*this);
  for (auto& x : r.e_) x = x.conj();
  return r;
}

std::vector<FieldElem> Mat::col(int c) const {
  std::vector<FieldElem> v;
  v.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

void Mat::set_col(int c, const std::vector<FieldElem>& v) {
  if (static_cast<int>(v.size()) != rows_) throw DomainError("column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, c) = v[static_cast<size_t>(i)];
}

Mat Mat::columns(const std::vector<int>& idx) const {
  Mat r(rows_, static_cast<int>(idx.size()), m_);
  for (size_t j = 0; j < idx.size(); ++j) r.set_col(static_cast<int>(j), col(idx[j]));
  return r;
}

Mat Mat::top_left(int rows, int cols) const {
  if (rows > rows_ || cols > cols_) throw DomainError("top_left exceeds matrix size");
  Mat r(rows, cols, m_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  if (a.rows_ != b.rows_ || a.m_ != b.m_) throw DomainError("hstack shape or field mismatch");
  Mat r(a.rows_, a.cols_ + b.cols_, a.m_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ == 0 && a.rows_ == 0) return b;
  if (b.cols_ == 0 && b.rows_ == 0) return a;
  if (a.cols_ != b.cols_ || a.m_ != b.m_) throw DomainError("vstack shape or field mismatch");
  Mat r(a.rows_ + b.rows_, a.cols_, a.m_);
  for (int j = 0; j < a.cols_; ++j) {
    for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_rational() const {
  for (const auto& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

bool Mat::is_real() const {
  for (const auto& x : e_)
    if (!x.is_real()) return false;
  return true;
}

Mat Mat::embedded(long new_m) const {
  Mat r(rows_, cols_, new_m);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).embedded(new_m);
  return r;
}

FieldElem Mat::determinant() const {
  if (!is_square()) throw DomainError("determinant of a non-square matrix");
  Mat a(*this);
  int n = rows_;
  FieldElem det = FieldElem::one(m_);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return FieldElem::zero(m_);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    FieldElem inv = a.at(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      FieldElem f = a.at(r, c) * inv;
      for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return det;
}

Mat Mat::inverse() const {
  if (!is_square()) throw DomainError("inverse of a non-square matrix");
  int n = rows_;
  Mat a(*this);
  Mat inv = Mat::identity(n, m_);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw DomainError("matrix is singular");
    if (pivot != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    }
    FieldElem p = a.at(c, c).inv();
    for (int j = 0; j < n; ++j) {
      a.at(c, j) *= p;
      inv.at(c, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c).is_zero()) continue;
      FieldElem f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::string Mat::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
    out << "]";
    if (i + 1 < rows_) out << "\n";
  }
  out << "]";
  return out.str();
}

std::vector<FieldElem> apply_matrix(const Mat& a, const std::vector<FieldElem>& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw DomainError("apply: size mismatch");
  std::vector<FieldElem> r(static_cast<size_t>(a.rows()), FieldElem::zero(a.field_param()));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r[static_cast<size_t>(i)] += a.at(i, j) * v[static_cast<size_t>(j)];
  }
  return r;
}

}  // namespace cousin
