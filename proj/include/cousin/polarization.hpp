#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cousin/hodge.hpp"
#include "cousin/polynomial.hpp"

namespace cousin {

// i^k in K.
FieldElem i_power(int k, long m);

// Leading-principal-minor test for a Hermitian matrix. 0 when positive
// definite, otherwise the 1-based index of the first minor that is not
// strictly positive. Minors of a Hermitian matrix are real; a non-real minor
// means the input was not Hermitian and raises DomainError.
int first_nonpositive_minor(const Mat& gram);

// Gram matrix of h^{p,q}(u, v) = i^{p-q} q(u, conj v) on the stored piece
// basis; Hermitian whenever q has the right symmetry.
Mat piece_gram(const HodgeStructure& h, const Mat& q, int p, int qq);

struct PolarizationReport {
  bool valid = true;
  // 1: symmetry q^T = (-1)^n q; 2: a forbidden piece pairing is nonzero;
  // 3: a piece Gram matrix is not positive definite.
  int condition = 0;
  std::pair<int, int> piece_a{-1, -1};
  std::pair<int, int> piece_b{-1, -1};  // condition 2 only
  int minor_index = 0;                  // condition 3 only, 1-based
  std::string message;
};

// Conditions are checked in order 1, 2, 3; within a condition pieces are
// scanned in the stored order (p descending), so the first failure is
// deterministic. Requires a valid structure and a rational square q.
PolarizationReport validate_polarization(const HodgeStructure& h, const Mat& q);
void require_polarization(const HodgeStructure& h, const Mat& q);

// {v : q(v, w) = 0 for all w in W}. Throws DomainError when the restriction
// of q to W is degenerate (W + complement would not fill the space).
Subspace orthogonal_complement(const HodgeStructure& h, const Mat& q, const Subspace& w);

struct EndAlgebra {
  std::vector<Mat> basis;  // rational matrices, Q-basis of the endomorphisms
  int dim() const { return static_cast<int>(basis.size()); }
};
EndAlgebra endomorphism_algebra(const HodgeStructure& h);

struct Summand {
  IMat lattice;              // rank x w saturated columns, Hermite-canonical
  HodgeStructure structure;  // expressed in the lattice coordinates
  Mat polarization;          // restriction of q to the sub-lattice
  bool split_exhausted = true;
};

// Orthogonal splitting search: per level, try every endomorphism basis
// element and then 32 seeded random integer combinations; factor minimal
// polynomials and split along the first proper kernel found, take the
// q-orthogonal complement, recurse. Summands are emitted in depth-first
// order; a summand is flagged split_exhausted when no candidate split it.
std::vector<Summand> decompose(const HodgeStructure& h, const Mat& q, std::uint64_t seed);

struct HermitianPair {
  Mat g;  // symmetric positive definite, g(x, y) = q(I x, y)
  Mat q;
};

// Weight 1 only: the Riemann relations make g = I^T q symmetric positive
// definite, and h = g + i q is the associated Hermitian form.
HermitianPair hermitian_from_polarization_wt1(const HodgeStructure& h, const Mat& q);

}  // namespace cousin
