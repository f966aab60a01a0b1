#pragma once

#include "cousin/matrix.hpp"

namespace cousin {

struct Echelon {
  Mat rref;                     // reduced row echelon form, pivots 1, pivot columns cleared
  std::vector<int> pivot_cols;  // strictly increasing
};

Echelon row_echelon(const Mat& a);
int rank(const Mat& a);

// Columns span the right null space {x : a x = 0}; canonical reduced
// column-echelon basis.
Mat kernel_basis(const Mat& a);

// Unique X with a X = b; requires a of full column rank and the system
// consistent, otherwise throws DomainError.
Mat solve_unique(const Mat& a, const Mat& b);

// Subspace of K^n presented by its canonical basis: the reduced
// column-echelon form of any spanning set. Equal subspaces compare equal
// entry-wise.
class Subspace {
 public:
  Subspace() = default;
  // Canonicalizes the column span of the given matrix.
  static Subspace span(const Mat& columns);
  static Subspace zero(int ambient, long m);
  static Subspace full(int ambient, long m);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  long field_param() const { return m_; }
  const Mat& basis() const { return basis_; }

  bool contains(const std::vector<FieldElem>& v) const;
  bool contains_columns(const Mat& vectors) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  static Subspace intersect(const Subspace& s, const Subspace& t);
  static Subspace sum(const Subspace& s, const Subspace& t);

  // Rows c with c v = 0 for all v in the subspace; (ambient - dim) rows.
  Mat annihilator() const;

  Subspace conj() const;
  bool is_conj_stable() const;
  Subspace embedded(long new_m) const;

 private:
  int ambient_ = 0;
  long m_ = 1;
  Mat basis_;  // ambient x dim
};

// Q-basis (columns) of the rational solutions {x in Q^n : a x = 0} of a
// K-linear system, obtained by expanding each K-condition into four rational
// conditions along the basis {1, s, i, i*s}.
Mat rational_kernel(const Mat& a);

// Largest Q-rational subspace contained in S, returned with a rational
// canonical basis.
Subspace rational_points(const Subspace& s);

// Q(sqrt(m))-basis (columns, real entries) of the conjugation-fixed vectors
// of a conj-stable subspace; as many columns as dim_K S. Throws DomainError
// when S is not conj-stable.
Mat conj_fixed_points(const Subspace& s);

}  // namespace cousin
