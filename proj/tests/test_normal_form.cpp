#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cousin/normal_form.hpp"

using namespace cousin;

namespace {

IMat imat(int rows, int cols, std::initializer_list<long> entries) {
  IMat r(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = Int(*it++);
  return r;
}

bool is_unimodular(const IMat& u) {
  Int d = u.determinant();
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("integer determinants") {
  CHECK(imat(2, 2, {3, 1, 4, 2}).determinant() == 2);
  CHECK(imat(2, 2, {2, 0, 0, 3}).determinant() == 6);
  CHECK(imat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10}).determinant() == -3);
  CHECK(imat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).determinant() == 0);
  CHECK(IMat::identity(4).determinant() == 1);
}

TEST_CASE("hermite normal form") {
  IMat a = imat(2, 2, {4, 6, 2, 4});
  HermiteResult hr = hermite_normal_form(a);
  CHECK(hr.h == imat(2, 2, {2, 0, 0, 2}));
  CHECK(hr.u * a == hr.h);
  CHECK(is_unimodular(hr.u));

  IMat b = imat(2, 2, {1, 2, 3, 4});
  HermiteResult hb = hermite_normal_form(b);
  CHECK(hb.h == imat(2, 2, {1, 0, 0, 2}));
  CHECK(hb.u * b == hb.h);

  // Reduction above the pivot lands entries in [0, pivot).
  IMat c = imat(2, 2, {5, 7, 0, 3});
  HermiteResult hc = hermite_normal_form(c);
  CHECK(hc.h.at(0, 0) == 5);
  CHECK(hc.h.at(1, 1) == 3);
  CHECK(hc.h.at(0, 1) >= 0);
  CHECK(hc.h.at(0, 1) < 3);
  CHECK(hc.u * c == hc.h);

  // Rank-deficient input keeps its zero rows at the bottom.
  IMat d = imat(3, 2, {2, 4, 1, 2, 3, 6});
  HermiteResult hd = hermite_normal_form(d);
  CHECK(hd.h.at(0, 0) == 1);
  CHECK(hd.h.at(0, 1) == 2);
  for (int j = 0; j < 2; ++j) {
    CHECK(hd.h.at(1, j) == 0);
    CHECK(hd.h.at(2, j) == 0);
  }
}

TEST_CASE("smith normal form") {
  IMat a = imat(2, 2, {2, 0, 0, 3});
  SmithResult sa = smith_normal_form(a);
  CHECK(sa.divisors == std::vector<Int>{Int(1), Int(6)});
  CHECK(sa.u * a * sa.v == sa.d);
  CHECK(is_unimodular(sa.u));
  CHECK(is_unimodular(sa.v));

  SmithResult sb = smith_normal_form(imat(2, 2, {1, 2, 3, 4}));
  CHECK(sb.divisors == std::vector<Int>{Int(1), Int(2)});

  SmithResult sc = smith_normal_form(imat(2, 2, {2, 4, 4, 8}));
  CHECK(sc.divisors == std::vector<Int>{Int(2)});

  SmithResult sd = smith_normal_form(imat(2, 3, {6, 0, 0, 0, 10, 0}));
  CHECK(sd.divisors == std::vector<Int>{Int(2), Int(30)});

  CHECK(smith_normal_form(IMat(2, 2)).divisors.empty());
}

TEST_CASE("integer kernels are saturated and canonical") {
  IMat a = imat(1, 2, {2, 4});
  IMat k = integer_kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(1, 0) == -1);

  IMat b = imat(2, 3, {1, 1, 2, 0, 2, 2});
  IMat kb = integer_kernel(b);
  REQUIRE(kb.cols() == 1);
  CHECK(kb.at(0, 0) == 1);
  CHECK(kb.at(1, 0) == 1);
  CHECK(kb.at(2, 0) == -1);

  CHECK(integer_kernel(IMat::identity(3)).cols() == 0);
  CHECK(integer_kernel(IMat(2, 2)).cols() == 2);
}

TEST_CASE("kernels of rational matrices") {
  Mat a(1, 2, 1);
  a.at(0, 0) = FieldElem(ratio(1, 2), 1);
  a.at(0, 1) = FieldElem(ratio(1, 3), 1);
  IMat k = integer_kernel_of_rational(a);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(1, 0) == -3);
}

TEST_CASE("conversions between integer and field matrices") {
  IMat a = imat(2, 2, {1, -2, 0, 5});
  Mat f = to_field_matrix(a, 3);
  CHECK(f.at(0, 1) == FieldElem::of_int(-2, 3));
  CHECK(to_integer_matrix(f) == a);
  Mat half(1, 1, 1);
  half.at(0, 0) = FieldElem(ratio(1, 2), 1);
  CHECK_THROWS_AS(to_integer_matrix(half), DomainError);
}
