#include "cousin/metric.hpp"

#include <optional>
#include <utility>

#include "cousin/linalg.hpp"

namespace cousin {

namespace {

void check_metric_matrix(const Mat& g, int n, const char* what) {
  if (g.rows() != n || g.cols() != n)
    throw DomainError(std::string(what) + ": matrix does not match the ambient dimension");
  if (!g.is_real()) throw DomainError(std::string(what) + ": entries must be conjugation-fixed");
  if (!(g == g.transpose())) throw DomainError(std::string(what) + ": matrix must be symmetric");
}

Mat block_diag2(const Mat& a, const Mat& b, long m) {
  Mat out(a.rows() + b.rows(), a.cols() + b.cols(), m);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

// nullptr when valid, otherwise the failed invariant.
const char* cr_hermitian_failure(const CRHermitian& x) {
  require_bicr(x.bicr);
  const long m = x.bicr.m;
  const Mat g = x.g.field_param() == m ? x.g : x.g.embedded(m);
  check_metric_matrix(g, x.bicr.ambient, "pseudo-metric");

  const CROperator op = cr_operator(CRSpace{x.bicr.ambient, m, x.bicr.h10});
  const Mat gh = op.h_basis.transpose() * g * op.h_basis;
  if (first_nonpositive_minor(-gh) != 0) return "the metric is not negative definite on H";
  if (!(op.i_on_h.transpose() * gh * op.i_on_h == gh))
    return "the metric on H is not invariant under the complex structure";

  const Mat fb = conj_fixed_points(Subspace::intersect(x.bicr.f10, x.bicr.f10.conj()));
  const Mat gf = fb.transpose() * g * fb;
  if (first_nonpositive_minor(gf) != 0) return "the metric is not positive definite on F";
  if (!(op.h_basis.transpose() * g * fb).is_zero()) return "H and F are not orthogonal";
  return nullptr;
}

const char* abelian_cousin_failure(const AbelianCousinData& a) {
  require_period_data(a.periods);
  const long m = a.periods.m;
  const int n2 = 2 * a.periods.ambient_dim;
  check_metric_matrix(a.h_re, n2, "Hermitian real part");
  if (a.h_im.rows() != n2 || a.h_im.cols() != n2 || a.h_im.field_param() != a.h_re.field_param())
    throw DomainError("Hermitian imaginary part does not match the real part");
  const Mat j = mult_i_operator(a.periods.ambient_dim, m);
  const Mat h_re = a.h_re.field_param() == m ? a.h_re : a.h_re.embedded(m);
  const Mat h_im = a.h_im.field_param() == m ? a.h_im : a.h_im.embedded(m);
  if (!(j.transpose() * h_re * j == h_re))
    throw DomainError("Hermitian real part is not invariant under multiplication by i");
  if (!(h_im == j.transpose() * h_re))
    throw DomainError("imaginary part does not pair with the real part through i");

  if (first_nonpositive_minor(h_re) != 0) return "the Hermitian form is not positive definite";
  if (character_space(a.periods).cols() != 0) return "the group has a nontrivial character";

  const Mat greal = real_generator_matrix(a.periods);
  const CRHermitian induced = induced_cr_hermitian(h_re, Subspace::span(greal));
  const Mat chart = solve_unique(conj_fixed_points(Subspace::span(greal)), greal);
  const Mat on_lattice = chart.transpose() * induced.g * chart;
  if (!is_polarized_metric(on_lattice, a.periods.rank()).polarized)
    return "a lattice loop has an irrational action";
  return nullptr;
}

}  // namespace

bool valid_cr_hermitian(const CRHermitian& x) { return cr_hermitian_failure(x) == nullptr; }

void require_cr_hermitian(const CRHermitian& x) {
  if (const char* why = cr_hermitian_failure(x)) throw DomainError(why);
}

CRHermitian cr_hermitian_from_polarization(const HodgeStructure& h, const Mat& q) {
  require_polarization(h, q);
  if (h.weight() != 2) throw DomainError("direction pairs need a weight 2 structure");
  CRHermitian out{bicr_from_hodge(h), q.embedded(h.field_param())};
  require_cr_hermitian(out);
  return out;
}

FieldElem geodesic_action(const Mat& g, const std::vector<FieldElem>& v) {
  check_metric_matrix(g, g.rows(), "action metric");
  if (static_cast<int>(v.size()) != g.rows())
    throw DomainError("vector length does not match the metric");
  const long m = g.field_param();
  FieldElem value = FieldElem::zero(m);
  for (int r = 0; r < g.rows(); ++r) {
    const FieldElem& vr = v[static_cast<size_t>(r)];
    if (!vr.is_rational() || vr.rational_value().get_den() != 1)
      throw DomainError("action is defined for integer vectors");
    for (int c = 0; c < g.cols(); ++c)
      value = value + vr.embedded(m) * g.at(r, c) * v[static_cast<size_t>(c)].embedded(m);
  }
  return value;
}

PolarizedMetricReport is_polarized_metric(const Mat& g, int r) {
  check_metric_matrix(g, r, "metric");
  const long m = g.field_param();
  PolarizedMetricReport out;
  auto unit = [&](int j, int k) {
    std::vector<FieldElem> v(static_cast<size_t>(r), FieldElem::zero(m));
    v[static_cast<size_t>(j)] = FieldElem::one(m);
    v[static_cast<size_t>(k)] = FieldElem::one(m);
    return v;
  };
  for (int j = 0; j < r; ++j)
    if (!g.at(j, j).is_rational()) {
      out.polarized = false;
      out.witness = unit(j, j);
      return out;
    }
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k) {
      // With rational diagonal this is the rationality of 2 g(e_j, e_k).
      const FieldElem sum = g.at(j, j) + g.at(j, k) + g.at(k, j) + g.at(k, k);
      if (!sum.is_rational()) {
        out.polarized = false;
        out.witness = unit(j, k);
        return out;
      }
    }
  return out;
}

bool valid_abelian_cousin(const AbelianCousinData& a) { return abelian_cousin_failure(a) == nullptr; }

void require_abelian_cousin(const AbelianCousinData& a) {
  if (const char* why = abelian_cousin_failure(a)) throw DomainError(why);
}

AbelianCousinData hermitian_extension(const HodgeStructure& h, const Mat& q) {
  require_polarization(h, q);
  if (h.weight() != 2) throw DomainError("the Hermitian extension needs a weight 2 structure");
  const long m = h.field_param();
  const Mat qm = q.embedded(m);

  AbelianCousinData out;
  out.periods = jacobi_group(h);
  const int n_low = out.periods.ambient_dim;
  const AbelTorus parts = abel_torus(h);

  // Real images of the two lattice directions inside the group ambient.
  const Mat p_low = generator_matrix(out.periods);
  const Mat bh = realify_columns(p_low * parts.h_part);
  const Mat bf = realify_columns(p_low * parts.f_part);
  const Mat j = mult_i_operator(n_low, m);
  const Mat t = Mat::hstack(Mat::hstack(bh, bf), j * bf);
  const Mat gh = parts.h_part.transpose() * qm * parts.h_part;
  const Mat gf = parts.f_part.transpose() * qm * parts.f_part;
  const Mat blocks = block_diag2(-gh, block_diag2(gf, gf, m), m);
  const Mat t_inv = t.inverse();
  out.h_re = t_inv.transpose() * blocks * t_inv;
  out.h_im = j.transpose() * out.h_re;

  // The compact subgroup must get back exactly the polarization metric.
  const Mat greal = real_generator_matrix(out.periods);
  const Subspace vspan = Subspace::span(greal);
  const CRHermitian induced = induced_cr_hermitian(out.h_re, vspan);
  const Mat chart = solve_unique(conj_fixed_points(vspan), greal);
  if (!(chart.transpose() * induced.g * chart == qm))
    throw DomainError("internal inconsistency: the induced metric does not restrict to the form");
  return out;
}

CRHermitian induced_cr_hermitian(const Mat& h_re, const Subspace& v) {
  const int amb = h_re.rows();
  if (h_re.cols() != amb || amb % 2 != 0)
    throw DomainError("a Hermitian form lives on an even dimensional real model");
  const long m = merge_field_param(h_re.field_param(), v.field_param());
  const Mat h = h_re.embedded(m);
  check_metric_matrix(h, amb, "Hermitian real part");
  if (first_nonpositive_minor(h) != 0)
    throw DomainError("the Hermitian form must be positive definite");
  if (v.ambient() != amb) throw DomainError("subspace does not match the form's ambient");

  const Subspace vm = v.embedded(m);
  const CRSpace cr = induced_cr(amb / 2, vm);
  const Mat vb = conj_fixed_points(vm);
  const Mat bh = conj_fixed_points(Subspace::sum(cr.h10, cr.h10.conj()));
  const Subspace f =
      Subspace::intersect(vm, Subspace::span(kernel_basis(bh.transpose() * h)));
  const Mat bf = conj_fixed_points(f);

  const Mat bh_c = vb.cols() > 0 ? solve_unique(vb, bh) : Mat(0, bh.cols(), m);
  const Mat bf_c = vb.cols() > 0 ? solve_unique(vb, bf) : Mat(0, bf.cols(), m);
  const Mat t = Mat::hstack(bh_c, bf_c);
  if (t.rows() != t.cols())
    throw DomainError("internal inconsistency: H and its complement do not split the subspace");
  const Mat gh = bh.transpose() * h * bh;
  const Mat gf = bf.transpose() * h * bf;
  const Mat t_inv = t.inverse();
  const Mat g = t_inv.transpose() * block_diag2(-gh, gf, m) * t_inv;

  const Subspace h10 =
      vb.cols() > 0 ? Subspace::span(solve_unique(vb, cr.h10.basis())) : Subspace::zero(0, m);
  const Subspace f10 = Subspace::sum(h10, Subspace::span(bf_c));
  CRHermitian out{BiCR{vb.cols(), m, h10, f10}, g};
  require_cr_hermitian(out);
  return out;
}

ReconstructedStructure reconstruct(const AbelianCousinData& a) {
  require_abelian_cousin(a);
  const long m = a.periods.m;
  const int r = a.periods.rank();

  const Mat greal = real_generator_matrix(a.periods);
  const Subspace vspan = Subspace::span(greal);
  const CRHermitian induced = induced_cr_hermitian(a.h_re.embedded(m), vspan);
  const Mat chart = solve_unique(conj_fixed_points(vspan), greal);
  const Mat chart_inv = chart.inverse();

  // Back to lattice coordinates: holomorphic direction and the real middle.
  const Subspace v20 = Subspace::span(chart_inv * induced.bicr.h10.basis());
  const Subspace middle =
      Subspace::intersect(induced.bicr.f10, induced.bicr.f10.conj());
  const Subspace v11 = Subspace::span(chart_inv * middle.basis());

  std::vector<HodgePiece> pieces;
  if (v20.dim() > 0) pieces.push_back({2, 0, v20.basis()});
  if (v11.dim() > 0) pieces.push_back({1, 1, v11.basis()});
  if (v20.dim() > 0) pieces.push_back({0, 2, v20.basis().conj()});
  HodgeStructure structure(2, r, m, std::move(pieces));

  Mat q = chart.transpose() * induced.g * chart;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      if (!q.at(i, k).is_rational())
        throw DomainError("induced metric on the lattice has irrational entries");

  require_valid(structure);
  require_polarization(structure, q);
  if (!is_cousin(structure)) throw DomainError("reconstructed structure is not Cousin");
  return {std::move(structure), std::move(q)};
}

}  // namespace cousin
