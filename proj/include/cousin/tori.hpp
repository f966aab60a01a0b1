#pragma once

#include <cstdint>
#include <vector>

#include "cousin/crgeom.hpp"
#include "cousin/hodge.hpp"
#include "cousin/normal_form.hpp"

namespace cousin {

// A quotient group C^N / (Z g_1 + ... + Z g_r), recorded through the lattice
// generators g_j in K^N.  Discreteness of the subgroup is equivalent to the
// generators being linearly independent over the reals, which is decidable
// exactly because the entries live in K.
struct PeriodData {
  int ambient_dim = 0;
  long m = 1;
  std::vector<std::vector<FieldElem>> generators;

  int rank() const { return static_cast<int>(generators.size()); }
};

// Generators as the columns of an ambient_dim x rank matrix.
Mat generator_matrix(const PeriodData& p);

// Generators in the 2N real model, interleaved (re, im) per coordinate.
Mat real_generator_matrix(const PeriodData& p);

// True iff the generators are R-linearly independent.  Shape or field
// mismatches between the generators and the ambient data throw.
bool valid_period_data(const PeriodData& p);
void require_period_data(const PeriodData& p);

// Period data of the torus V / image(lattice) attached to a weight 1
// structure: the ambient is V^{1,0} in its stored basis and generator j is
// the projection of lattice vector e_j onto V^{1,0} along V^{0,1}.
PeriodData weight1_torus(const HodgeStructure& h);

// The real operator with V^{1,0} as its (+i)-eigenspace, written on the
// lattice basis.  Weight 1 only.
Mat complex_structure_from_hodge(const HodgeStructure& h);

// Inverse dictionary: a matrix squaring to -1 with entries in Q(sqrt(m))
// determines the weight 1 structure with V^{1,0} = ker(I - i).
HodgeStructure hodge_from_complex_structure(const Mat& i_op);

// For compact period data (rank = 2 ambient_dim) the standard complex
// structure of C^N pulls back to the lattice basis; the result is the weight 1
// structure of that operator.
HodgeStructure hodge_from_compact_torus(const PeriodData& p);

// Period data of the connected complex Lie group attached to any valid
// structure: ambient = direct sum of the pieces with p <= q in stored order,
// generator j = projection of e_j onto that sum along the rest.
PeriodData jacobi_group(const HodgeStructure& h);

// The lattice R-span of a weight 2 structure split into its two canonical
// real directions: h_part spans the conjugation-fixed points of
// V^{2,0} + V^{0,2}, f_part those of V^{1,1}.  structure is the direction
// pair the splitting induces on the ambient space.
struct AbelTorus {
  BiCR structure;
  Mat h_part;
  Mat f_part;
};

AbelTorus abel_torus(const HodgeStructure& h);

// Coordinates of the projection of e_j onto V^{2,0} + V^{1,1} in the
// concatenated piece bases, assembled from the Abel torus splitting (the
// h_part goes through the projection onto V^{2,0}, the f_part through the
// inclusion into V^{1,1}) and checked against the direct projection.
Mat canonical_embedding(const HodgeStructure& h);

// Q-basis of the K-linear functionals on K^N taking rational values on every
// generator, as the columns of an N x d coefficient matrix.  The group is a
// Cousin group exactly when d = 0 and the ambient is spanned by the
// generators over K.
Mat character_space(const PeriodData& p);

// The three-part normal form of a connected abelian complex Lie group:
// linear_dim copies of C, a torus factor of dimension torus_rank carved out
// by the characters, and a residual part with no characters at all.
struct KopfermannInvariants {
  int linear_dim = 0;
  int torus_rank = 0;
  PeriodData cousin_part;
};

KopfermannInvariants kopfermann(const PeriodData& p);

// The real span of the generators in the 2N real model together with the
// complex directions it inherits.  Its K-dimension equals the lattice rank.
struct MaximalCompact {
  Subspace real_span;
  CRSpace induced;
};

MaximalCompact maximal_compact(const PeriodData& p);

enum class IsogenyVerdict { isogenous, not_isogenous, inconclusive };

// When the verdict is isogenous, witness is a primitive integer matrix that
// is a structure morphism with nonzero determinant, and kernel_order (the
// product of its Smith divisors) is the size of the kernel of the induced
// map on lattice quotients.  The |det| of the reported witness is minimal
// over every invertible candidate the search examined.
struct IsogenyReport {
  IsogenyVerdict verdict = IsogenyVerdict::inconclusive;
  IMat witness;
  Int kernel_order = 0;
};

// Searches the morphism space for an invertible element: every basis vector,
// then seeded random integer combinations, then for morphism spaces of
// dimension at most three a grid fine enough to be decisive either way.
// "not_isogenous" is only reported when no invertible element can exist.
IsogenyReport isogeny_check(const HodgeStructure& a, const HodgeStructure& b,
                            std::uint64_t seed = 0);

}  // namespace cousin
