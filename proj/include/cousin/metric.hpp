#pragma once

#include <vector>

#include "cousin/crgeom.hpp"
#include "cousin/polarization.hpp"
#include "cousin/tori.hpp"

namespace cousin {

// A direction pair together with a pseudo-metric on the real model: g is
// negative definite and complex-invariant on the underlying H, positive
// definite on the real form F of f10 ∩ conj(f10), and the two are
// g-orthogonal.
struct CRHermitian {
  BiCR bicr;
  Mat g;  // symmetric, conjugation-fixed entries, on the bicr ambient
};

bool valid_cr_hermitian(const CRHermitian& x);
void require_cr_hermitian(const CRHermitian& x);

// A polarization of a weight 2 structure is exactly such a pseudo-metric on
// the lattice coordinates: g = q, directions from the piece splitting.
CRHermitian cr_hermitian_from_polarization(const HodgeStructure& h, const Mat& q);

// Energy of the straight closed loop t -> t v, t in [0,1]: the exact value
// g(v, v). v must be an integer vector.
FieldElem geodesic_action(const Mat& g, const std::vector<FieldElem>& v);

struct PolarizedMetricReport {
  bool polarized = true;
  std::vector<FieldElem> witness;  // integer vector with irrational action
};

// Whether g(v, v) is rational for every v in Z^r. Decided finitely: by the
// polarization identity it suffices that the actions of e_j and of e_j + e_k
// are rational. Witnesses are reported in that scan order.
PolarizedMetricReport is_polarized_metric(const Mat& g, int r);

// Period data plus a positive Hermitian form on its ambient, stored as the
// real part and the imaginary part on the interleaved real model.
// Valid when the form is positive definite, the group has no characters, and
// the metric induced on the maximal compact subgroup gives every lattice
// loop a rational action.
struct AbelianCousinData {
  PeriodData periods;
  Mat h_re;
  Mat h_im;
};

bool valid_abelian_cousin(const AbelianCousinData& a);
void require_abelian_cousin(const AbelianCousinData& a);

// Extends a polarization to a Hermitian form on the whole connected group of
// a weight 2 structure: on the split H + F + iF of the real model of the
// jacobi_group ambient the form is -q on H, q on F, the transported q on iF,
// with the three blocks mutually orthogonal. The metric induced back on the
// maximal compact subgroup restricts to q on the lattice; that coincidence
// is verified internally.
AbelianCousinData hermitian_extension(const HodgeStructure& h, const Mat& q);

// Pseudo-metric a positive Hermitian form leaves on a conjugation-stable
// real subspace v: sign flipped on H = v ∩ iv, kept on the h-orthogonal
// complement of H in v. Returned in the canonical conjugation-fixed
// coordinates of v.
CRHermitian induced_cr_hermitian(const Mat& h_re, const Subspace& v);

struct ReconstructedStructure {
  HodgeStructure structure;
  Mat polarization;
};

// Weight 2 structure on the lattice of valid abelian Cousin data: V^{2,0} is
// the holomorphic direction the maximal compact inherits, V^{1,1} the
// complexified metric complement, and the polarization is the induced
// pseudo-metric read on the lattice. Validity, the polarization conditions
// and the Cousin property are asserted on the output.
ReconstructedStructure reconstruct(const AbelianCousinData& a);

}  // namespace cousin
