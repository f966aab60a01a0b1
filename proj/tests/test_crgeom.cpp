#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cousin/crgeom.hpp"
#include "support/fixtures.hpp"

using namespace cousin;
using namespace cousin::testing;

namespace {

// Weight 2, rank 2: V^{2,0} = span(e1 + i e2) and its conjugate, no (1,1)
// part. The bi-CR picture degenerates to a plain complex structure.
HodgeStructure epart() {
  Mat v20 = mat(2, 1, 1, {fe(1), fi()});
  return HodgeStructure(2, 2, 1, {{2, 0, v20}, {0, 2, v20.conj()}});
}

HodgeStructure pure11() { return HodgeStructure(2, 2, 1, {{1, 1, Mat::identity(2, 1)}}); }

// Realified generators (1,1), (i,1), (0,s) of the rank 3 period fixture
// inside C^2: real span {(z, t) : t real}.
Subspace p3_real() {
  Mat gens = mat(4, 3, 2,
                 {fe(1, 2), fe(0, 2), fe(0, 2),
                  fe(0, 2), fe(1, 2), fe(0, 2),
                  fe(1, 2), fe(1, 2), fs(2),
                  fe(0, 2), fe(0, 2), fe(0, 2)});
  return Subspace::span(gens);
}

}  // namespace

TEST_CASE("multiplication by i on the real model") {
  Mat j = mult_i_operator(1, 1);
  CHECK(j == mat(2, 2, 1, {fe(0), fe(-1), fe(1), fe(0)}));
  Mat j2 = mult_i_operator(2, 2);
  CHECK(j2 * j2 == -Mat::identity(4, 2));
}

TEST_CASE("realification and holomorphic lift") {
  std::vector<FieldElem> z = {fe(1, 2) + fe(2, 2) * fi(2), fs(2)};
  std::vector<FieldElem> r = realify(z);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == fe(1, 2));
  CHECK(r[1] == fe(2, 2));
  CHECK(r[2] == fs(2));
  CHECK(r[3] == fe(0, 2));

  Mat w = mat(1, 1, 1, {fe(1)});
  Mat lift = holomorphic_lift_columns(w);
  CHECK(lift.col(0) == std::vector<FieldElem>{fe(1), -fi()});
  // Lift lands in the (+i)-eigenspace.
  Mat j = mult_i_operator(1, 1);
  CHECK(j * lift == lift.scaled(fi()));
  // realify is the conj-fixed part of the lift.
  Mat zc = Mat::column(z);
  Mat half = (holomorphic_lift_columns(zc) + holomorphic_lift_columns(zc).conj()).scaled(fq(1, 2, 2));
  CHECK(half == Mat::column(realify(z)));
}

TEST_CASE("induced distinguished directions") {
  // The whole plane keeps its complex structure.
  CRSpace full = induced_cr(1, Subspace::full(2, 1));
  CHECK(valid_cr(full));
  CHECK(full.h10.dim() == 1);
  CHECK(full.h10.contains(std::vector<FieldElem>{fe(1), -fi()}));

  // A real line is totally real.
  CRSpace line = induced_cr(1, Subspace::span(mat(2, 1, 1, {fe(1), fe(0)})));
  CHECK(line.h10.dim() == 0);

  // The period-fixture span {(z, t) : t real} keeps exactly the {t = 0} line.
  CRSpace p3 = induced_cr(2, p3_real());
  CHECK(valid_cr(p3));
  CHECK(p3.h10.dim() == 1);
  CHECK(p3.h10.contains(std::vector<FieldElem>{fe(1, 2), -fi(2), fe(0, 2), fe(0, 2)}));

  // Preconditions: conj-stability and the model dimension.
  CHECK_THROWS_AS(induced_cr(1, Subspace::span(mat(2, 1, 1, {fe(1), fi()}))), DomainError);
  CHECK_THROWS_AS(induced_cr(2, Subspace::full(2, 1)), DomainError);
}

TEST_CASE("induced quotient directions") {
  // V = 0: the quotient is the whole plane with its complex structure.
  CoCRSpace whole = induced_cocr(1, Subspace::zero(2, 1));
  CHECK(valid_cocr(whole));
  CHECK(whole.ambient == 2);
  CHECK(whole.f10.dim() == 1);
  CHECK(whole.f10.contains(std::vector<FieldElem>{fe(1), -fi()}));
  // F = f10 ∩ conj f10 is zero here.
  CHECK(Subspace::intersect(whole.f10, whole.f10.conj()).dim() == 0);

  // V = real axis in C: everything is quotiented into F.
  CoCRSpace axis = induced_cocr(1, Subspace::span(mat(2, 1, 1, {fe(1), fe(0)})));
  CHECK(valid_cocr(axis));
  CHECK(axis.ambient == 1);
  CHECK(axis.f10.dim() == 1);
  CHECK(Subspace::intersect(axis.f10, axis.f10.conj()).dim() == 1);

  // Period fixture: one real quotient direction, filled by F.
  CoCRSpace p3 = induced_cocr(2, p3_real());
  CHECK(valid_cocr(p3));
  CHECK(p3.ambient == 1);
  CHECK(p3.f10.dim() == 1);

  // V = realified z1-line: F = 0 and the second coordinate keeps i.
  Subspace zline = Subspace::span(imat(4, 2, 1, {1, 0, 0, 1, 0, 0, 0, 0}));
  CoCRSpace rest = induced_cocr(2, zline);
  CHECK(rest.ambient == 2);
  CHECK(rest.f10.dim() == 1);
  CHECK(rest.f10.contains(std::vector<FieldElem>{fe(1), -fi()}));
  CHECK(Subspace::intersect(rest.f10, rest.f10.conj()).dim() == 0);
}

TEST_CASE("operator dictionary") {
  // Operator e1 -> -e2, e2 -> e1 has (+i)-eigenvector e1 + i e2.
  Mat rot = mat(2, 2, 1, {fe(0), fe(1), fe(-1), fe(0)});
  CRSpace x = cr_from_operator(2, 1, Mat::identity(2, 1), rot);
  CHECK(x.h10.dim() == 1);
  CHECK(x.h10.contains(std::vector<FieldElem>{fe(1), fi()}));

  // The ambient complex plane decodes to the standard rotation.
  CRSpace full = induced_cr(1, Subspace::full(2, 1));
  CROperator op = cr_operator(full);
  CHECK(op.h_basis == Mat::identity(2, 1));
  CHECK(op.i_on_h == mult_i_operator(1, 1));

  // Round trips.
  CRSpace back = cr_from_operator(full.ambient, full.m, op.h_basis, op.i_on_h);
  CHECK(back.h10 == full.h10);

  CRSpace p3 = induced_cr(2, p3_real());
  CROperator p3op = cr_operator(p3);
  CHECK(p3op.h_basis.cols() == 2);
  CHECK(p3op.i_on_h * p3op.i_on_h == -Mat::identity(2, 2));
  CRSpace p3back = cr_from_operator(p3.ambient, p3.m, p3op.h_basis, p3op.i_on_h);
  CHECK(p3back.h10 == p3.h10);

  // Totally real: everything empty.
  CROperator none = cr_operator({2, 1, Subspace::zero(2, 1)});
  CHECK(none.h_basis.cols() == 0);
  CRSpace nothing = cr_from_operator(2, 1, none.h_basis, none.i_on_h);
  CHECK(nothing.h10.dim() == 0);

  // Operators that do not square to -1 are rejected.
  CHECK_THROWS_WITH_AS(cr_from_operator(2, 1, Mat::identity(2, 1), Mat::identity(2, 1)),
                       doctest::Contains("square"), DomainError);
  // Complex basis columns are rejected.
  CHECK_THROWS_AS(cr_from_operator(2, 1, mat(2, 1, 1, {fe(1), fi()}), Mat(1, 1, 1)), DomainError);
}

TEST_CASE("weight 2 structures and direction pairs carry the same data") {
  BiCR b4 = bicr_from_hodge(fix_h4());
  CHECK(valid_bicr(b4));
  CHECK(b4.h10.dim() == 1);
  CHECK(b4.f10.dim() == 3);
  CHECK(b4.h10.contains(std::vector<FieldElem>{fe(1), fi(), fe(0), fe(0)}));
  CHECK(b4.f10.contains(std::vector<FieldElem>{fe(0), fe(0), fe(1), fe(0)}));

  BiCR bc = bicr_from_hodge(fix_hc());
  CHECK(valid_bicr(bc));
  CHECK(bc.f10.dim() == 3);

  // Degenerate ends: no (1,1) part, and no (2,0) part.
  BiCR be = bicr_from_hodge(epart());
  CHECK(valid_bicr(be));
  CHECK(be.h10 == be.f10);
  CHECK(Subspace::sum(be.h10, be.h10.conj()).dim() == 2);

  BiCR b11 = bicr_from_hodge(pure11());
  CHECK(valid_bicr(b11));
  CHECK(b11.h10.dim() == 0);
  CHECK(b11.f10.dim() == 2);

  CHECK_THROWS_AS(bicr_from_hodge(fix_e()), DomainError);
}

TEST_CASE("direction pairs assemble back to structures") {
  for (const HodgeStructure& h : {fix_h4(), fix_hc(), epart(), pure11(), fix_h8()}) {
    HodgeStructure back = hodge_from_bicr(bicr_from_hodge(h));
    CHECK(same_structure(back, h));
  }

  // Violated invariants are refused: f10 too large for the h10 line.
  BiCR broken{2, 1, Subspace::span(mat(2, 1, 1, {fe(1), fi()})), Subspace::full(2, 1)};
  CHECK_FALSE(valid_bicr(broken));
  CHECK_THROWS_AS(hodge_from_bicr(broken), DomainError);
}

TEST_CASE("complex linearity check") {
  CRSpace std_plane{2, 1, Subspace::span(mat(2, 1, 1, {fe(1), -fi()}))};

  // Multiplication by i commutes with itself.
  CHECK(cr_linear_check(mult_i_operator(1, 1), std_plane, std_plane).linear);
  CHECK(cr_linear_check(Mat::identity(2, 1), std_plane, std_plane).linear);

  // Conjugation is antilinear: first basis vector already fails.
  Mat conj_map = diag(1, {1, -1});
  CRLinearReport rep = cr_linear_check(conj_map, std_plane, std_plane);
  CHECK_FALSE(rep.linear);
  CHECK(rep.witness == std::vector<FieldElem>{fe(1), fe(0)});
  CHECK(rep.message.find("complex linear") != std::string::npos);

  // Containment failure: identity into a totally real target.
  CRSpace p3 = induced_cr(2, p3_real());
  CRSpace flat{4, 2, Subspace::zero(4, 2)};
  rep = cr_linear_check(Mat::identity(4, 2), p3, flat);
  CHECK_FALSE(rep.linear);
  CHECK(rep.message.find("leaves the distinguished subspace") != std::string::npos);
  CHECK(rep.witness == std::vector<FieldElem>{fe(1, 2), fe(0, 2), fe(0, 2), fe(0, 2)});

  CHECK_THROWS_AS(cr_linear_check(Mat::identity(2, 1), p3, p3), DomainError);
}

TEST_CASE("projection coordinates onto the upper pieces") {
  Mat p = upper_projection_coordinates(fix_h4());
  REQUIRE(p.rows() == 3);
  REQUIRE(p.cols() == 4);
  CHECK(p.at(0, 0) == fq(1, 2));
  CHECK(p.at(0, 1) == -fq(1, 2) * fi());
  CHECK(p.at(1, 2) == fe(1));
  CHECK(p.at(2, 3) == fe(1));
  // The (2,0) basis projects to the first unit coordinate.
  Mat c20 = p * fix_h4().piece_basis(2, 0);
  CHECK(c20.at(0, 0) == fe(1));
  CHECK(c20.at(1, 0) == fe(0));
  CHECK(c20.at(2, 0) == fe(0));

  CHECK_THROWS_AS(upper_projection_coordinates(fix_e()), DomainError);
}

TEST_CASE("embedded real points inherit the transported structure") {
  CHECK(induced_cr_image_check(fix_h4()));
  CHECK(induced_cr_image_check(fix_hc()));
  CHECK(induced_cr_image_check(epart()));
  CHECK(induced_cr_image_check(pure11()));
  CHECK(induced_cr_image_check(fix_h8()));
}

TEST_CASE("the (1,1) image meets its rotation only in zero") {
  for (const HodgeStructure& h : {fix_h4(), fix_hc(), fix_h8()}) {
    Mat p = upper_projection_coordinates(h);
    Mat f_basis = conj_fixed_points(Subspace::span(h.piece_basis(1, 1)));
    Mat image = realify_columns(p * f_basis);
    Mat j = mult_i_operator(p.rows(), h.field_param());
    Subspace a = Subspace::span(image);
    Subspace b = Subspace::span(j * image);
    CHECK(a.dim() == f_basis.cols());
    CHECK(Subspace::intersect(a, b).dim() == 0);
  }
}

TEST_CASE("matching distinguished and quotient directions force a complex structure") {
  Subspace s = Subspace::span(mat(2, 1, 1, {fe(1), -fi()}));
  CRSpace as_cr{2, 1, s};
  CoCRSpace as_cocr{2, 1, s};
  CHECK(valid_cr(as_cr));
  CHECK(valid_cocr(as_cocr));
  CHECK(Subspace::sum(s, s.conj()).dim() == 2);
}
