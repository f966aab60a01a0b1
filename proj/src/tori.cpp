#include "cousin/tori.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "cousin/linalg.hpp"

namespace cousin {

namespace {

Mat top_rows(const Mat& a, int k) {
  Mat out(k, a.cols(), a.field_param());
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  return out;
}

Mat rows_from(const Mat& a, int k) {
  Mat out(a.rows() - k, a.cols(), a.field_param());
  for (int r = k; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r - k, c) = a.at(r, c);
  return out;
}

std::vector<std::vector<FieldElem>> columns_of(const Mat& a) {
  std::vector<std::vector<FieldElem>> out;
  out.reserve(static_cast<size_t>(a.cols()));
  for (int c = 0; c < a.cols(); ++c) out.push_back(a.col(c));
  return out;
}

FieldElem field_basis_elem(int c, long m) {
  switch (c) {
    case 0:
      return FieldElem::one(m);
    case 1:
      return FieldElem::sqrt_m(m);
    case 2:
      return FieldElem::i_unit(m);
    default:
      return FieldElem::i_unit(m) * FieldElem::sqrt_m(m);
  }
}

void check_weight(const HodgeStructure& h, int w, const char* what) {
  if (h.weight() != w) throw DomainError(std::string(what) + " needs a weight " + std::to_string(w) + " structure");
}

}  // namespace

Mat generator_matrix(const PeriodData& p) {
  if (p.ambient_dim < 0) throw DomainError("negative ambient dimension");
  if (!is_squarefree_positive(p.m)) throw DomainError("field parameter must be squarefree and positive");
  Mat g(p.ambient_dim, p.rank(), p.m);
  for (int j = 0; j < p.rank(); ++j) {
    const auto& gen = p.generators[static_cast<size_t>(j)];
    if (static_cast<int>(gen.size()) != p.ambient_dim)
      throw DomainError("generator length does not match the ambient dimension");
    for (int k = 0; k < p.ambient_dim; ++k) g.at(k, j) = gen[static_cast<size_t>(k)].embedded(p.m);
  }
  return g;
}

Mat real_generator_matrix(const PeriodData& p) { return realify_columns(generator_matrix(p)); }

bool valid_period_data(const PeriodData& p) {
  // Rank over the field equals rank over R because the entries are algebraic
  // over Q and rank is stable under field extension.
  return rank(real_generator_matrix(p)) == p.rank();
}

void require_period_data(const PeriodData& p) {
  if (!valid_period_data(p)) throw DomainError("period generators are not independent over the reals");
}

PeriodData weight1_torus(const HodgeStructure& h) {
  require_valid(h);
  check_weight(h, 1, "torus period data");
  const Mat coords = h.concatenated_basis().inverse();
  PeriodData out;
  out.ambient_dim = h.hodge_number(1, 0);
  out.m = h.field_param();
  out.generators = columns_of(top_rows(coords, out.ambient_dim));
  return out;
}

Mat complex_structure_from_hodge(const HodgeStructure& h) {
  require_valid(h);
  check_weight(h, 1, "the complex structure dictionary");
  const long m = h.field_param();
  const int n10 = h.hodge_number(1, 0);
  Mat d(h.rank(), h.rank(), m);
  for (int k = 0; k < h.rank(); ++k)
    d.at(k, k) = k < n10 ? FieldElem::i_unit(m) : -FieldElem::i_unit(m);
  const Mat c = h.concatenated_basis();
  Mat i_op = c * d * c.inverse();
  if (!i_op.is_real())
    throw DomainError("internal inconsistency: complex structure has entries outside the real subfield");
  return i_op;
}

HodgeStructure hodge_from_complex_structure(const Mat& i_op) {
  if (i_op.rows() != i_op.cols()) throw DomainError("complex structure must be square");
  if (!i_op.is_real()) throw DomainError("complex structure must have entries in the real subfield");
  const long m = i_op.field_param();
  const int n = i_op.rows();
  if (!((i_op * i_op) == -Mat::identity(n, m)))
    throw DomainError("operator does not square to minus the identity");
  const Mat v10 = kernel_basis(i_op - Mat::identity(n, m).scaled(FieldElem::i_unit(m)));
  std::vector<HodgePiece> pieces;
  if (v10.cols() > 0) {
    pieces.push_back({1, 0, v10});
    pieces.push_back({0, 1, v10.conj()});
  }
  HodgeStructure out(1, n, m, std::move(pieces));
  require_valid(out);
  return out;
}

HodgeStructure hodge_from_compact_torus(const PeriodData& p) {
  require_period_data(p);
  if (p.rank() != 2 * p.ambient_dim)
    throw DomainError("a compact quotient needs lattice rank twice the ambient dimension");
  const Mat greal = real_generator_matrix(p);
  const Mat i_op = greal.inverse() * mult_i_operator(p.ambient_dim, p.m) * greal;
  return hodge_from_complex_structure(i_op);
}

PeriodData jacobi_group(const HodgeStructure& h) {
  require_valid(h);
  // Pieces are stored with p descending, so the p <= q ones form a contiguous
  // tail of the concatenated basis.
  int upper = 0;
  int lower = 0;
  for (const auto& piece : h.pieces()) (piece.p > piece.q ? upper : lower) += piece.basis.cols();
  const Mat coords = h.concatenated_basis().inverse();
  PeriodData out;
  out.ambient_dim = lower;
  out.m = h.field_param();
  out.generators = columns_of(rows_from(coords, upper));
  if (!valid_period_data(out))
    throw DomainError("internal inconsistency: projected lattice is not discrete");
  return out;
}

AbelTorus abel_torus(const HodgeStructure& h) {
  require_valid(h);
  check_weight(h, 2, "the Abel torus");
  AbelTorus out;
  out.structure = bicr_from_hodge(h);
  const Subspace outer = Subspace::span(Mat::hstack(h.piece_basis(2, 0), h.piece_basis(0, 2)));
  out.h_part = conj_fixed_points(outer);
  out.f_part = conj_fixed_points(Subspace::span(h.piece_basis(1, 1)));
  return out;
}

Mat canonical_embedding(const HodgeStructure& h) {
  const AbelTorus parts = abel_torus(h);
  const long m = h.field_param();
  const int h20 = h.hodge_number(2, 0);
  const int dim_h = parts.h_part.cols();
  // Split each lattice basis vector along the two real directions.
  const Mat split_coords = Mat::hstack(parts.h_part, parts.f_part).inverse();
  const Mat h_vecs = parts.h_part * top_rows(split_coords, dim_h);
  const Mat f_vecs = parts.f_part * rows_from(split_coords, dim_h);
  // The h summand projects onto the (2,0) piece, the f summand includes into
  // the (1,1) piece.
  const Mat outer = Mat::hstack(h.piece_basis(2, 0), h.piece_basis(0, 2));
  const Mat winding = top_rows(solve_unique(outer, h_vecs), h20);
  const Mat inclusion = solve_unique(h.piece_basis(1, 1), f_vecs);
  Mat gamma = Mat::vstack(winding, inclusion);
  if (!(gamma == upper_projection_coordinates(h)))
    throw DomainError("internal inconsistency: embedding disagrees with the direct projection");
  return gamma;
}

Mat character_space(const PeriodData& p) {
  require_period_data(p);
  const Mat g = generator_matrix(p);
  const int n = p.ambient_dim;
  const int r = p.rank();
  // Unknowns: the rational components of each functional coefficient.
  // Conditions: the non-rational components of every value vanish.
  const std::vector<int> comps = p.m == 1 ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2, 3};
  const std::vector<int> conds = p.m == 1 ? std::vector<int>{2} : std::vector<int>{1, 2, 3};
  const int nc = static_cast<int>(comps.size());
  Mat sys(r * static_cast<int>(conds.size()), n * nc, 1);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < n; ++k)
      for (int ci = 0; ci < nc; ++ci) {
        const FieldElem contrib = field_basis_elem(comps[static_cast<size_t>(ci)], p.m) * g.at(k, j);
        for (int ri = 0; ri < static_cast<int>(conds.size()); ++ri)
          sys.at(j * static_cast<int>(conds.size()) + ri, k * nc + ci) =
              FieldElem(contrib.coeff(conds[static_cast<size_t>(ri)]));
      }
  const Mat ker = kernel_basis(sys);
  Mat out(n, ker.cols(), p.m);
  for (int t = 0; t < ker.cols(); ++t)
    for (int k = 0; k < n; ++k) {
      FieldElem v = FieldElem::zero(p.m);
      for (int ci = 0; ci < nc; ++ci)
        v = v + FieldElem(ker.at(k * nc + ci, t).rational_value(), p.m) *
                    field_basis_elem(comps[static_cast<size_t>(ci)], p.m);
      out.at(k, t) = v;
    }
  return out;
}

KopfermannInvariants kopfermann(const PeriodData& p) {
  require_period_data(p);
  const Mat g = generator_matrix(p);
  const Subspace span = Subspace::span(g);
  const int d = span.dim();

  PeriodData restricted;
  restricted.ambient_dim = d;
  restricted.m = p.m;
  restricted.generators =
      columns_of(d > 0 ? solve_unique(span.basis(), g) : Mat(0, p.rank(), p.m));

  const Mat chars = character_space(restricted);
  const int t = chars.cols();

  // Ambient of the residual part: common kernel of the characters.  The
  // character values on the generators form a rational matrix of full row
  // rank, so the characters are independent over the whole field and the
  // kernel has dimension d - t.
  const Mat wb = kernel_basis(chars.transpose());
  const Mat values = chars.transpose() * generator_matrix(restricted);
  const IMat sub_lattice = integer_kernel_of_rational(values);
  const Mat lat = generator_matrix(restricted) * to_field_matrix(sub_lattice, p.m);

  PeriodData cousin;
  cousin.ambient_dim = wb.cols();
  cousin.m = p.m;
  cousin.generators = columns_of(wb.cols() > 0 ? solve_unique(wb, lat) : Mat(0, lat.cols(), p.m));
  if (!valid_period_data(cousin))
    throw DomainError("internal inconsistency: residual period data is not discrete");

  KopfermannInvariants out;
  out.linear_dim = p.ambient_dim - d;
  out.torus_rank = t;
  out.cousin_part = std::move(cousin);
  return out;
}

MaximalCompact maximal_compact(const PeriodData& p) {
  require_period_data(p);
  MaximalCompact out;
  out.real_span = Subspace::span(real_generator_matrix(p));
  out.induced = induced_cr(p.ambient_dim, out.real_span);
  return out;
}

namespace {

struct WitnessCandidate {
  IMat witness;
  Int order;
};

// Scale a rational invertible matrix to a primitive integer one and measure
// the kernel of the induced map on lattice quotients.
WitnessCandidate integer_witness(const Mat& t) {
  const int n = t.rows();
  Int denom = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) denom = lcm(denom, t.at(r, c).rational_value().get_den());
  IMat w(n, n);
  Int content = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rational& v = t.at(r, c).rational_value();
      w.at(r, c) = v.get_num() * (denom / v.get_den());
      content = gcd(content, w.at(r, c));
    }
  if (content > 1)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) w.at(r, c) /= content;
  Int order = 1;
  for (const Int& div : smith_normal_form(w).divisors) order *= div;
  return {std::move(w), std::move(order)};
}

}  // namespace

IsogenyReport isogeny_check(const HodgeStructure& a, const HodgeStructure& b, std::uint64_t seed) {
  require_valid(a);
  require_valid(b);
  IsogenyReport out;
  if (a.weight() != b.weight() || a.rank() != b.rank()) {
    out.verdict = IsogenyVerdict::not_isogenous;
    return out;
  }
  const int r = a.rank();
  if (r == 0) {
    out.verdict = IsogenyVerdict::isogenous;
    out.kernel_order = 1;
    return out;
  }
  const std::vector<Mat> basis = hodge_morphisms(a, b);
  if (basis.empty()) {
    out.verdict = IsogenyVerdict::not_isogenous;
    return out;
  }
  const long m = basis.front().field_param();
  const int dim = static_cast<int>(basis.size());

  std::optional<WitnessCandidate> best;
  auto consider = [&](const Mat& t) {
    if (t.determinant().is_zero()) return;
    WitnessCandidate cand = integer_witness(t);
    if (!best || cand.order < best->order) best = std::move(cand);
  };

  for (const Mat& elem : basis) consider(elem);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    Mat t(r, r, m);
    for (const Mat& elem : basis) {
      const long c = static_cast<long>(rng() % 9) - 4;
      if (c != 0) t = t + elem.scaled(FieldElem::of_int(c, m));
    }
    consider(t);
  }

  if (!best && dim <= 3) {
    // The determinant is a polynomial of degree at most r in each of the dim
    // coefficients, so the grid {0..r}^dim refutes invertibility exactly.
    std::vector<int> x(static_cast<size_t>(dim), 0);
    for (;;) {
      Mat t(r, r, m);
      for (int k = 0; k < dim; ++k)
        if (x[static_cast<size_t>(k)] != 0)
          t = t + basis[static_cast<size_t>(k)].scaled(FieldElem::of_int(x[static_cast<size_t>(k)], m));
      consider(t);
      size_t k = 0;
      while (k < x.size() && x[k] == r) {
        x[k] = 0;
        ++k;
      }
      if (k == x.size()) break;
      ++x[k];
    }
    if (!best) {
      out.verdict = IsogenyVerdict::not_isogenous;
      return out;
    }
  }

  if (best) {
    out.verdict = IsogenyVerdict::isogenous;
    out.witness = std::move(best->witness);
    out.kernel_order = std::move(best->order);
  }
  return out;
}

}  // namespace cousin
