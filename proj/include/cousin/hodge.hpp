#pragma once

#include <optional>
#include <vector>

#include "cousin/linalg.hpp"
#include "cousin/normal_form.hpp"

namespace cousin {

struct HodgePiece {
  int p, q;
  Mat basis;  // rank x h^{p,q}, columns span the piece
};

// Weight-n structure on the lattice Z^rank: a splitting of K^rank into pieces
// V^{p,q} (p + q = n) that complex conjugation swaps as conj(V^{p,q}) = V^{q,p}.
// Pieces are kept sorted by p descending; basis matrices are stored as given
// (not canonicalized), so equality of structures is tested through subspaces.
class HodgeStructure {
 public:
  HodgeStructure(int weight, int rank, long m, std::vector<HodgePiece> pieces);

  int weight() const { return weight_; }
  int rank() const { return rank_; }
  long field_param() const { return m_; }
  const std::vector<HodgePiece>& pieces() const { return pieces_; }

  // Zero-width matrix when the piece is absent.
  const Mat& piece_basis(int p, int q) const;
  int hodge_number(int p, int q) const;
  Subspace piece_space(int p, int q) const;

  // All piece bases side by side, p descending; square when the structure is
  // valid.
  Mat concatenated_basis() const;

  HodgeStructure embedded(long new_m) const;

 private:
  int weight_, rank_;
  long m_;
  std::vector<HodgePiece> pieces_;
  Mat empty_;
};

struct HodgeReport {
  bool valid = true;
  std::string failure;               // empty when valid
  std::vector<FieldElem> witness;    // may be empty
};

HodgeReport validate(const HodgeStructure& h);
void require_valid(const HodgeStructure& h);  // DomainError with the report text

// Structures agree piecewise as subspaces (same splitting, any basis choice).
bool same_structure(const HodgeStructure& a, const HodgeStructure& b);

// Forget the lattice: the Q-Hodge structure on Q^rank. The data is unchanged;
// only the reading of the standard basis differs, so this is the identity on
// the representation.
HodgeStructure extend_scalars(const HodgeStructure& h);

// Re-coordinatize so the given rational column basis becomes the lattice
// basis; pieces transform by basis^{-1}.
HodgeStructure choose_lattice(const HodgeStructure& h, const Mat& basis);

// Q-basis of rational matrices M with M V1^{p,q} contained in V2^{p,q} for
// every piece.
std::vector<Mat> hodge_morphisms(const HodgeStructure& h1, const HodgeStructure& h2);
bool is_hodge_morphism(const HodgeStructure& h1, const HodgeStructure& h2, const Mat& f);

enum class SubQuotientKind { sub, quotient };

struct SubQuotientResult {
  HodgeStructure structure;
  // sub: rank x w saturated lattice basis (columns, Hermite-canonical).
  // quotient: (rank - w) x rank projection chart with the sub-lattice as
  // kernel.
  IMat chart;
};

// W must satisfy dim W = sum over pieces of dim(W_K intersect V^{p,q}).
SubQuotientResult sub_quotient(const HodgeStructure& h, const Subspace& w, SubQuotientKind kind);

// Compatible field parameters: equal, or one side m = 1 (plain Q(i) data
// embeds into any Q(i, sqrt(m))).
long merge_field_param(long m1, long m2);
HodgeStructure direct_sum(const HodgeStructure& h1, const HodgeStructure& h2);

// Q-basis (columns) of the functionals on Q^rank whose K-extension kills
// every off-diagonal piece; the structure has a weight-0 quotient iff this
// space is nonzero.
Mat weight0_quotient_space(const HodgeStructure& h);
bool is_cousin(const HodgeStructure& h);

}  // namespace cousin
