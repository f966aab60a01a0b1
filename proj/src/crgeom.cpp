#include "cousin/crgeom.hpp"

namespace cousin {

Mat mult_i_operator(int n_complex, long m) {
  Mat j(2 * n_complex, 2 * n_complex, m);
  for (int k = 0; k < n_complex; ++k) {
    j.at(2 * k, 2 * k + 1) = -FieldElem::one(m);
    j.at(2 * k + 1, 2 * k) = FieldElem::one(m);
  }
  return j;
}

std::vector<FieldElem> realify(const std::vector<FieldElem>& z) {
  std::vector<FieldElem> out;
  out.reserve(2 * z.size());
  for (const FieldElem& c : z) {
    out.push_back(c.real_part());
    out.push_back(c.imag_part());
  }
  return out;
}

Mat realify_columns(const Mat& z) {
  Mat out(2 * z.rows(), z.cols(), z.field_param());
  for (int c = 0; c < z.cols(); ++c) out.set_col(c, realify(z.col(c)));
  return out;
}

std::vector<FieldElem> holomorphic_lift(const std::vector<FieldElem>& w) {
  std::vector<FieldElem> out;
  out.reserve(2 * w.size());
  for (const FieldElem& c : w) {
    out.push_back(c);
    out.push_back(-FieldElem::i_unit(c.field_param()) * c);
  }
  return out;
}

Mat holomorphic_lift_columns(const Mat& w) {
  Mat out(2 * w.rows(), w.cols(), w.field_param());
  for (int c = 0; c < w.cols(); ++c) out.set_col(c, holomorphic_lift(w.col(c)));
  return out;
}

bool valid_cr(const CRSpace& x) {
  return x.h10.ambient() == x.ambient && x.h10.field_param() == x.m &&
         Subspace::intersect(x.h10, x.h10.conj()).dim() == 0;
}

bool valid_cocr(const CoCRSpace& x) {
  return x.f10.ambient() == x.ambient && x.f10.field_param() == x.m &&
         Subspace::sum(x.f10, x.f10.conj()).dim() == x.ambient;
}

bool valid_bicr(const BiCR& x) {
  if (x.h10.ambient() != x.ambient || x.f10.ambient() != x.ambient) return false;
  if (x.h10.field_param() != x.m || x.f10.field_param() != x.m) return false;
  return x.f10.contains(x.h10) && Subspace::intersect(x.f10, x.h10.conj()).dim() == 0 &&
         Subspace::sum(x.f10, x.f10.conj()).dim() == x.ambient &&
         x.h10.dim() + x.f10.dim() == x.ambient;
}

void require_cr(const CRSpace& x) {
  if (!valid_cr(x)) throw DomainError("distinguished directions meet their conjugate");
}

void require_cocr(const CoCRSpace& x) {
  if (!valid_cocr(x)) throw DomainError("quotient directions do not span with their conjugate");
}

void require_bicr(const BiCR& x) {
  if (!valid_bicr(x)) throw DomainError("incompatible direction pair");
}

namespace {

void check_real_model(int n_complex, const Subspace& v) {
  if (v.ambient() != 2 * n_complex) throw DomainError("subspace does not live in the 2N real model");
  if (!v.is_conj_stable()) throw DomainError("subspace is not defined by conjugation-fixed vectors");
}

// A row is a pivot row when some column of the canonical basis has its first
// nonzero entry there.
std::vector<bool> pivot_rows(const Mat& basis) {
  std::vector<bool> pivot(static_cast<size_t>(basis.rows()), false);
  for (int c = 0; c < basis.cols(); ++c)
    for (int r = 0; r < basis.rows(); ++r)
      if (!basis.at(r, c).is_zero()) {
        pivot[static_cast<size_t>(r)] = true;
        break;
      }
  return pivot;
}

// Standard basis vectors at the non-pivot rows, in coordinate order.
Mat complement_columns(const Subspace& v) {
  std::vector<bool> pivot = pivot_rows(v.basis());
  Mat c(v.ambient(), v.ambient() - v.dim(), v.field_param());
  int k = 0;
  for (int r = 0; r < v.ambient(); ++r)
    if (!pivot[static_cast<size_t>(r)]) c.at(r, k++) = FieldElem::one(v.field_param());
  return c;
}

// Chart of the quotient by V: rows picking the complement coordinates of
// x = Vb a + Cb b. Kernel is exactly V.
Mat quotient_chart(const Subspace& v) {
  const int n = v.ambient();
  const int d = v.dim();
  Mat full = Mat::hstack(v.basis(), complement_columns(v)).inverse();
  Mat chart(n - d, n, v.field_param());
  for (int r = 0; r < n - d; ++r)
    for (int c = 0; c < n; ++c) chart.at(r, c) = full.at(d + r, c);
  return chart;
}

Mat eigenspace_plus_i(const Mat& op) {
  Mat shifted = op - Mat::identity(op.rows(), op.field_param()).scaled(FieldElem::i_unit(op.field_param()));
  return kernel_basis(shifted);
}

}  // namespace

CRSpace induced_cr(int n_complex, const Subspace& v) {
  check_real_model(n_complex, v);
  const long m = v.field_param();
  Mat j = mult_i_operator(n_complex, m);
  Subspace jv = Subspace::span(j * v.basis());
  Subspace h = Subspace::intersect(v, jv);
  Subspace h10 = Subspace::intersect(h, Subspace::span(eigenspace_plus_i(j)));
  return {2 * n_complex, m, h10};
}

CoCRSpace induced_cocr(int n_complex, const Subspace& v) {
  check_real_model(n_complex, v);
  const long m = v.field_param();
  const int n = 2 * n_complex;
  Mat j = mult_i_operator(n_complex, m);

  Mat pi = quotient_chart(v);  // (n - dim V) x n
  Subspace f = v.dim() == 0 ? Subspace::zero(n, m) : Subspace::span(pi * j * v.basis());
  const int u = n - v.dim();

  Mat rho = quotient_chart(f);  // (u - dim F) x u
  Mat sigma = rho * pi;         // kernel V + iV
  const int q = sigma.rows();

  // Section of sigma through the non-pivot coordinates of V + iV.
  Subspace viv = Subspace::sum(v, Subspace::span(j * v.basis()));
  Mat d = complement_columns(viv);
  Mat section = q == 0 ? Mat(n, 0, m) : d * (sigma * d).inverse();
  Mat jbar = sigma * j * section;
  if (!(jbar * jbar == -Mat::identity(q, m)))
    throw DomainError("internal inconsistency: quotient multiplication does not square to -1");

  // f10 = preimage in the quotient-of-V chart of the (+i)-eigenspace.
  Subspace e10 = Subspace::span(eigenspace_plus_i(jbar));
  Mat conditions = e10.annihilator() * rho;
  Subspace f10 = Subspace::span(kernel_basis(conditions));
  return {u, m, f10};
}

CROperator cr_operator(const CRSpace& x) {
  require_cr(x);
  Subspace hk = Subspace::sum(x.h10, x.h10.conj());
  Mat h_basis = conj_fixed_points(hk);
  const long m = x.m;
  const FieldElem iu = FieldElem::i_unit(m);
  // b_j = u_j + conj(u_j) with u_j in h10; multiplication by i sends it to
  // i u_j + conj(i u_j).
  Mat pair = Mat::hstack(x.h10.basis(), x.h10.basis().conj());
  Mat images(x.ambient, h_basis.cols(), m);
  if (h_basis.cols() > 0) {
    Mat coords = solve_unique(pair, h_basis);
    const int d = x.h10.dim();
    for (int c = 0; c < h_basis.cols(); ++c) {
      std::vector<FieldElem> img(static_cast<size_t>(x.ambient), FieldElem::zero(m));
      for (int r = 0; r < x.ambient; ++r) {
        FieldElem acc = FieldElem::zero(m);
        for (int k = 0; k < d; ++k) {
          acc += iu * x.h10.basis().at(r, k) * coords.at(k, c);
          acc -= iu * x.h10.basis().conj().at(r, k) * coords.at(d + k, c);
        }
        img[static_cast<size_t>(r)] = acc;
      }
      images.set_col(c, img);
    }
  }
  Mat i_on_h = h_basis.cols() == 0 ? Mat(0, 0, m) : solve_unique(h_basis, images);
  return {h_basis, i_on_h};
}

CRSpace cr_from_operator(int ambient, long m, const Mat& h_basis, const Mat& i_on_h) {
  if (h_basis.rows() != ambient) throw DomainError("basis does not match the ambient dimension");
  if (!h_basis.is_real()) throw DomainError("basis must be conjugation-fixed");
  if (rank(h_basis) != h_basis.cols()) throw DomainError("basis columns are dependent");
  if (i_on_h.rows() != h_basis.cols() || i_on_h.cols() != h_basis.cols())
    throw DomainError("operator shape does not match the basis");
  if (h_basis.cols() > 0 && !(i_on_h * i_on_h == -Mat::identity(i_on_h.rows(), i_on_h.field_param())))
    throw DomainError("operator does not square to -1");
  Mat eig = eigenspace_plus_i(i_on_h.embedded(m));
  Subspace h10 = eig.cols() == 0 ? Subspace::zero(ambient, m) : Subspace::span(h_basis * eig);
  CRSpace out{ambient, m, h10};
  require_cr(out);
  return out;
}

BiCR bicr_from_hodge(const HodgeStructure& h) {
  require_valid(h);
  if (h.weight() != 2) throw DomainError("direction pair extraction needs weight 2");
  Subspace h10 = Subspace::span(h.piece_basis(2, 0));
  Subspace f10 = Subspace::span(Mat::hstack(h.piece_basis(2, 0), h.piece_basis(1, 1)));
  return {h.rank(), h.field_param(), h10, f10};
}

HodgeStructure hodge_from_bicr(const BiCR& b) {
  require_bicr(b);
  Subspace v11 = Subspace::intersect(b.f10, b.f10.conj());
  std::vector<HodgePiece> pieces;
  if (b.h10.dim() > 0) pieces.push_back({2, 0, b.h10.basis()});
  if (v11.dim() > 0) pieces.push_back({1, 1, v11.basis()});
  if (b.h10.dim() > 0) pieces.push_back({0, 2, b.h10.conj().basis()});
  HodgeStructure out(2, b.ambient, b.m, pieces);
  HodgeReport rep = validate(out);
  if (!rep.valid) throw DomainError("directions do not assemble to a structure: " + rep.failure);
  return out;
}

CRLinearReport cr_linear_check(const Mat& f, const CRSpace& x, const CRSpace& y) {
  if (f.cols() != x.ambient || f.rows() != y.ambient) throw DomainError("map shape does not match the spaces");
  if (x.m != y.m || f.field_param() != x.m) throw DomainError("field parameters do not match");
  if (!f.is_real()) throw DomainError("map must have real entries");
  CROperator ox = cr_operator(x);
  CROperator oy = cr_operator(y);
  Subspace hy = ox.h_basis.cols() == 0 || oy.h_basis.cols() == 0 ? Subspace::zero(y.ambient, y.m)
                                                                 : Subspace::span(oy.h_basis);

  Mat image = f * ox.h_basis;
  for (int c = 0; c < image.cols(); ++c)
    if (!hy.contains(image.col(c)))
      return {false, ox.h_basis.col(c), "image leaves the distinguished subspace"};

  if (image.cols() > 0) {
    Mat lhs = f * (ox.h_basis * ox.i_on_h);
    Mat rhs = oy.h_basis * (oy.i_on_h * solve_unique(oy.h_basis, image));
    for (int c = 0; c < image.cols(); ++c)
      if (lhs.col(c) != rhs.col(c))
        return {false, ox.h_basis.col(c), "restriction is not complex linear"};
  }
  return {};
}

Mat upper_projection_coordinates(const HodgeStructure& h) {
  require_valid(h);
  if (h.weight() != 2) throw DomainError("upper projection needs weight 2");
  int upper = h.hodge_number(2, 0) + h.hodge_number(1, 1);
  Mat inv = h.concatenated_basis().inverse();
  Mat coords(upper, h.rank(), h.field_param());
  for (int r = 0; r < upper; ++r)
    for (int c = 0; c < h.rank(); ++c) coords.at(r, c) = inv.at(r, c);
  return coords;
}

bool induced_cr_image_check(const HodgeStructure& h) {
  const long m = h.field_param();
  Mat p = upper_projection_coordinates(h);
  const int n_complex = p.rows();
  Mat greal = realify_columns(p);
  Subspace v = Subspace::span(greal);
  if (v.dim() != h.rank()) throw DomainError("internal inconsistency: projection of the real points collapsed");

  CRSpace induced = induced_cr(n_complex, v);
  CROperator transported = cr_operator({h.rank(), m, Subspace::span(h.piece_basis(2, 0))});

  Mat image = greal * transported.h_basis;
  Subspace underlying = Subspace::sum(induced.h10, induced.h10.conj());
  if (image.cols() == 0) return underlying.dim() == 0;
  if (underlying != Subspace::span(image)) return false;
  Mat j = mult_i_operator(n_complex, m);
  return j * image == image * transported.i_on_h;
}

}  // namespace cousin
