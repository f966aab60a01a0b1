#pragma once

#include <vector>

#include "cousin/matrix.hpp"

namespace cousin {

// Dense integer matrix used for lattice computations.
class IMat {
 public:
  IMat() : rows_(0), cols_(0) {}
  IMat(int rows, int cols);
  static IMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c);
  const Int& at(int r, int c) const;

  IMat operator*(const IMat& y) const;
  bool operator==(const IMat& y) const;
  bool operator!=(const IMat& y) const { return !(*this == y); }
  IMat transpose() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[a] += f * row[b]
  void add_row(int a, int b, const Int& f);
  void add_col(int a, int b, const Int& f);
  void negate_row(int a);
  void negate_col(int a);

  // Exact integer determinant (Bareiss).
  Int determinant() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// h = u * a with u unimodular; h in row Hermite normal form: pivot columns
// strictly increasing, pivots positive, zeros below each pivot, entries above
// reduced into [0, pivot). Zero rows at the bottom.
struct HermiteResult {
  IMat h, u;
};
HermiteResult hermite_normal_form(const IMat& a);

// d = u * a * v with u, v unimodular, d diagonal with nonnegative entries and
// divisors[k] | divisors[k+1]. divisors lists the nonzero diagonal.
struct SmithResult {
  IMat d, u, v;
  std::vector<Int> divisors;
};
SmithResult smith_normal_form(const IMat& a);

// Columns form a Z-basis of {x in Z^n : a x = 0}; the basis generates the
// full (saturated) kernel lattice and is in canonical (column-Hermite) form.
IMat integer_kernel(const IMat& a);

// Same, for a rational condition matrix: rows are scaled integral first.
IMat integer_kernel_of_rational(const Mat& a);

// Entry-wise conversions.
Mat to_field_matrix(const IMat& a, long m);
// Requires every entry integral.
IMat to_integer_matrix(const Mat& a);

}  // namespace cousin
