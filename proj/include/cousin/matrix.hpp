#pragma once

#include <vector>

#include "cousin/field.hpp"

namespace cousin {

// Dense matrix over K = Q(i, sqrt(m)). All entries share the matrix's field
// parameter. A dimension of zero is legal; the canonical empty matrix keeps
// its other dimension so stacking stays well-defined.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), m_(1) {}
  Mat(int rows, int cols, long m);

  static Mat identity(int n, long m);
  static Mat zero(int rows, int cols, long m) { return Mat(rows, cols, m); }
  // Column vector from entries.
  static Mat column(const std::vector<FieldElem>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long field_param() const { return m_; }

  FieldElem& at(int r, int c);
  const FieldElem& at(int r, int c) const;

  Mat operator+(const Mat& y) const;
  Mat operator-(const Mat& y) const;
  Mat operator*(const Mat& y) const;
  Mat operator-() const;
  Mat scaled(const FieldElem& c) const;
  bool operator==(const Mat& y) const;
  bool operator!=(const Mat& y) const { return !(*this == y); }

  Mat transpose() const;
  Mat conj() const;
  Mat conj_transpose() const { return conj().transpose(); }

  std::vector<FieldElem> col(int c) const;
  void set_col(int c, const std::vector<FieldElem>& v);
  Mat columns(const std::vector<int>& idx) const;
  Mat top_left(int rows, int cols) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const;
  bool is_square() const { return rows_ == cols_; }

  Mat embedded(long new_m) const;

  FieldElem determinant() const;
  Mat inverse() const;  // throws DomainError when singular

  std::string str() const;

 private:
  int rows_, cols_;
  long m_;
  std::vector<FieldElem> e_;  // row-major

  void check_same_shape(const Mat& y) const;
};

// Matrix-vector product. (Named to stay clear of std::apply under ADL.)
std::vector<FieldElem> apply_matrix(const Mat& a, const std::vector<FieldElem>& v);

}  // namespace cousin
