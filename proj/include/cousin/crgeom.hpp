#pragma once

#include <string>
#include <vector>

#include "cousin/hodge.hpp"

namespace cousin {

// Linear CR geometry over the exact field. C^N is carried as K^{2N} with
// interleaved (Re, Im) coordinate pairs; a real subspace is a conj-stable
// K-subspace, spanned by conjugation-fixed vectors. All intersections with
// the multiplication-by-i operator happen in that model, so every computation
// is exact.

// 2N x 2N multiplication by i: (x, y) -> (-y, x) on each coordinate pair.
Mat mult_i_operator(int n_complex, long m);

// Complex coordinates -> interleaved real model: z_k -> (Re z_k, Im z_k).
std::vector<FieldElem> realify(const std::vector<FieldElem>& z);
Mat realify_columns(const Mat& z);

// The (+i)-eigenvector of mult_i_operator lying over the complex vector w:
// w_k -> (w_k, -i w_k). realify(z) = (lift(z) + conj lift(z)) / 2.
std::vector<FieldElem> holomorphic_lift(const std::vector<FieldElem>& w);
Mat holomorphic_lift_columns(const Mat& w);

// Distinguished complex directions of a real space: h10 and conj(h10) meet
// only in 0. The underlying subspace is h10 + conj(h10); the complex
// structure multiplies h10 by i.
struct CRSpace {
  int ambient = 0;  // real dimension of the model the columns live in
  long m = 1;
  Subspace h10;
};

// Quotient complex directions: f10 + conj(f10) is the whole space. The real
// form of f10 ∩ conj(f10) is the kernel F; the complex structure lives on
// the quotient by F.
struct CoCRSpace {
  int ambient = 0;
  long m = 1;
  Subspace f10;
};

// Compatible pair: h10 ⊆ f10, f10 ∩ conj(h10) = 0, f10 + conj(f10)
// everything, dim h10 + dim f10 = ambient. Equivalently the underlying real
// space splits as H ⊕ F.
struct BiCR {
  int ambient = 0;
  long m = 1;
  Subspace h10;
  Subspace f10;
};

bool valid_cr(const CRSpace& x);
bool valid_cocr(const CoCRSpace& x);
bool valid_bicr(const BiCR& x);
void require_cr(const CRSpace& x);
void require_cocr(const CoCRSpace& x);
void require_bicr(const BiCR& x);

// CR structure a real subspace V of C^N inherits: H = V ∩ iV with
// multiplication by i. V must be conj-stable with ambient 2N.
CRSpace induced_cr(int n_complex, const Subspace& v);

// Co-CR structure on W/V for W = C^N as a real space: F is the image of iV,
// and W/(V + iV) keeps the complex multiplication. The quotient chart drops
// the pivot coordinates of V's canonical basis, keeping the non-pivot
// coordinates in their original order.
CoCRSpace induced_cocr(int n_complex, const Subspace& v);

// Operator presentation of a CR space: a conj-fixed basis of the underlying
// real subspace H together with the matrix of multiplication by i in that
// basis.
struct CROperator {
  Mat h_basis;  // ambient x dim H, conjugation-fixed columns
  Mat i_on_h;   // square, entries in the real subfield, squares to -1
};

CROperator cr_operator(const CRSpace& x);
// Inverse direction: h10 = h_basis applied to the (+i)-eigenspace of i_on_h.
// Throws DomainError when i_on_h does not square to -1 or h_basis is
// degenerate.
CRSpace cr_from_operator(int ambient, long m, const Mat& h_basis, const Mat& i_on_h);

// Weight-2 structures and compatible pairs carry the same data:
// h10 = V^{2,0} and f10 = V^{2,0} + V^{1,1}.
BiCR bicr_from_hodge(const HodgeStructure& h);
// Back: V^{2,0} = h10, V^{1,1} = f10 ∩ conj(f10), V^{0,2} = conj(h10).
// Throws DomainError when the input invariants fail.
HodgeStructure hodge_from_bicr(const BiCR& b);

struct CRLinearReport {
  bool linear = true;
  std::vector<FieldElem> witness;  // real vector in the source H on failure
  std::string message;
};

// f restricted to H_X lands in H_Y and commutes with multiplication by i.
// Checked on the conj-fixed basis of H_X, in order; the witness is the first
// basis vector that fails. f must be a real matrix of matching shape.
CRLinearReport cr_linear_check(const Mat& f, const CRSpace& x, const CRSpace& y);

// Complex coordinates of the projection onto the p >= q part of a weight-2
// structure, one column per ambient coordinate: the first h20 + h11 rows of
// the inverse of the concatenated piece basis.
Mat upper_projection_coordinates(const HodgeStructure& h);

// The projection of the real points into the p >= q part is injective; its
// image inherits a CR structure from the ambient complex space. True when
// that induced structure has underlying subspace the image of the real form
// of V^{2,0} + V^{0,2} and its complex multiplication matches the one
// transported from the structure.
bool induced_cr_image_check(const HodgeStructure& h);

}  // namespace cousin
