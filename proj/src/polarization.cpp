#include "cousin/polarization.hpp"

#include <optional>
#include <random>
#include <sstream>

namespace cousin {

namespace {

std::string piece_name(int p, int q) {
  std::ostringstream os;
  os << "(" << p << "," << q << ")";
  return os.str();
}

Mat checked_form(const HodgeStructure& h, const Mat& q) {
  if (q.rows() != h.rank() || q.cols() != h.rank())
    throw DomainError("form must be square of size the rank");
  if (!q.is_rational()) throw DomainError("form must be rational");
  return q.field_param() == h.field_param() ? q : q.embedded(h.field_param());
}

}  // namespace

FieldElem i_power(int k, long m) {
  switch (((k % 4) + 4) % 4) {
    case 0: return FieldElem::one(m);
    case 1: return FieldElem::i_unit(m);
    case 2: return -FieldElem::one(m);
    default: return -FieldElem::i_unit(m);
  }
}

int first_nonpositive_minor(const Mat& gram) {
  if (!gram.is_square()) throw DomainError("minor test needs a square matrix");
  for (int k = 1; k <= gram.rows(); ++k) {
    FieldElem minor = gram.top_left(k, k).determinant();
    if (!minor.is_real()) throw DomainError("minor " + std::to_string(k) + " is not real: matrix is not Hermitian");
    if (minor.sign_real() <= 0) return k;
  }
  return 0;
}

Mat piece_gram(const HodgeStructure& h, const Mat& q, int p, int qq) {
  Mat form = checked_form(h, q);
  const Mat& b = h.piece_basis(p, qq);
  return (b.transpose() * form * b.conj()).scaled(i_power(p - qq, h.field_param()));
}

PolarizationReport validate_polarization(const HodgeStructure& h, const Mat& q) {
  require_valid(h);
  Mat form = checked_form(h, q);
  PolarizationReport rep;

  // 1: q^T = (-1)^n q.
  Mat expected = h.weight() % 2 == 0 ? form : -form;
  if (form.transpose() != expected) {
    rep.valid = false;
    rep.condition = 1;
    rep.message = h.weight() % 2 == 0 ? "form is not symmetric" : "form is not alternating";
    return rep;
  }

  // 2: q(V^{p,q}, V^{r,s}) = 0 unless (r,s) = (q,p).
  for (const auto& a : h.pieces())
    for (const auto& b : h.pieces()) {
      if (b.p == a.q && b.q == a.p) continue;
      Mat pairing = a.basis.transpose() * form * b.basis;
      if (!pairing.is_zero()) {
        rep.valid = false;
        rep.condition = 2;
        rep.piece_a = {a.p, a.q};
        rep.piece_b = {b.p, b.q};
        rep.message = "pieces " + piece_name(a.p, a.q) + " and " + piece_name(b.p, b.q) + " pair nontrivially";
        return rep;
      }
    }

  // 3: each Hermitian piece form is positive definite.
  for (const auto& a : h.pieces()) {
    Mat gram = piece_gram(h, form, a.p, a.q);
    int k = first_nonpositive_minor(gram);
    if (k > 0) {
      rep.valid = false;
      rep.condition = 3;
      rep.piece_a = {a.p, a.q};
      rep.minor_index = k;
      rep.message = "piece " + piece_name(a.p, a.q) + " Hermitian form fails at leading minor " + std::to_string(k);
      return rep;
    }
  }
  return rep;
}

void require_polarization(const HodgeStructure& h, const Mat& q) {
  PolarizationReport rep = validate_polarization(h, q);
  if (!rep.valid) throw DomainError("form is not a polarization: " + rep.message);
}

Subspace orthogonal_complement(const HodgeStructure& h, const Mat& q, const Subspace& w) {
  Mat form = checked_form(h, q);
  if (w.ambient() != h.rank()) throw DomainError("subspace ambient does not match the rank");
  Subspace wk = w.field_param() == h.field_param() ? w : w.embedded(h.field_param());
  // Conditions (q w_j)^T v = 0, one row per basis vector of W.
  Mat cond = (form * wk.basis()).transpose();
  Subspace comp = Subspace::span(kernel_basis(cond));
  if (comp.dim() + wk.dim() != h.rank() || Subspace::intersect(comp, wk).dim() != 0)
    throw DomainError("internal inconsistency: form restricted to the subspace is degenerate");
  return comp;
}

EndAlgebra endomorphism_algebra(const HodgeStructure& h) { return {hodge_morphisms(h, h)}; }

namespace {

// Candidate splitting subspace: first proper nonzero kernel of p_j(T) over
// the sorted irreducible factors of the minimal polynomial.
std::optional<Subspace> split_from(const Mat& t, int rank_here) {
  RatPoly mp = minimal_polynomial(t);
  Factorization fac = factor_poly(mp);
  for (const auto& pf : fac.factors) {
    Mat image = eval_at_matrix(pf.factor, t);
    Mat ker = kernel_basis(image);
    if (ker.cols() > 0 && ker.cols() < rank_here) return Subspace::span(ker);
  }
  return std::nullopt;
}

void decompose_rec(const HodgeStructure& h, const Mat& q, const IMat& lattice, std::mt19937_64& rng,
                   std::vector<Summand>& out) {
  const int w = h.rank();
  const long m = h.field_param();
  EndAlgebra end = endomorphism_algebra(h);

  std::vector<Mat> candidates;
  for (const Mat& b : end.basis) candidates.push_back(b);
  for (int trial = 0; trial < 32; ++trial) {
    Mat combo(w, w, m);
    for (const Mat& b : end.basis) {
      long c = static_cast<long>(rng() % 9) - 4;
      combo = combo + b.scaled(FieldElem::of_int(c, m));
    }
    candidates.push_back(std::move(combo));
  }

  for (const Mat& t : candidates) {
    auto found = split_from(t, w);
    if (!found) continue;
    Subspace sub = *found;
    Subspace comp = orthogonal_complement(h, q, sub);
    for (const Subspace* part : {&sub, &comp}) {
      auto piece = sub_quotient(h, *part, SubQuotientKind::sub);
      Mat chart_k = to_field_matrix(piece.chart, m);
      Mat q_part = chart_k.transpose() * q * chart_k;
      decompose_rec(piece.structure, q_part, lattice * piece.chart, rng, out);
    }
    return;
  }

  // No candidate split this level: emit a leaf in canonical coordinates.
  HermiteResult hn = hermite_normal_form(lattice.transpose());
  IMat canon = hn.h.transpose();
  Mat change = to_field_matrix(hn.u.transpose(), m);  // lattice * u^T = canon
  HodgeStructure structure = choose_lattice(h, change);
  Mat q_canon = change.transpose() * q * change;
  out.push_back({std::move(canon), std::move(structure), std::move(q_canon), true});
}

}  // namespace

std::vector<Summand> decompose(const HodgeStructure& h, const Mat& q, std::uint64_t seed) {
  require_polarization(h, q);
  if (h.rank() == 0) return {};
  Mat form = checked_form(h, q);
  std::mt19937_64 rng(seed);
  std::vector<Summand> out;
  decompose_rec(h, form, IMat::identity(h.rank()), rng, out);
  return out;
}

HermitianPair hermitian_from_polarization_wt1(const HodgeStructure& h, const Mat& q) {
  if (h.weight() != 1) throw DomainError("Hermitian pair extraction needs weight 1");
  require_polarization(h, q);
  Mat form = checked_form(h, q);
  const long m = h.field_param();
  const Mat& b10 = h.piece_basis(1, 0);
  Mat basis = Mat::hstack(b10, b10.conj());
  // I = basis * diag(i, ..., i, -i, ..., -i) * basis^{-1}.
  Mat d(h.rank(), h.rank(), m);
  for (int k = 0; k < b10.cols(); ++k) d.at(k, k) = FieldElem::i_unit(m);
  for (int k = b10.cols(); k < h.rank(); ++k) d.at(k, k) = -FieldElem::i_unit(m);
  Mat i_op = basis * d * basis.inverse();
  if (!i_op.is_real()) throw DomainError("internal inconsistency: complex structure is not real");
  Mat g = i_op.transpose() * form;
  if (g.transpose() != g || !g.is_rational())
    throw DomainError("internal inconsistency: q(I x, y) is not symmetric rational");
  if (first_nonpositive_minor(g) != 0)
    throw DomainError("internal inconsistency: q(I x, y) is not positive definite");
  return {g, form};
}

}  // namespace cousin
