#pragma once

#include <vector>

#include "cousin/hodge.hpp"
#include "cousin/tori.hpp"

// Shared reference structures used across the test binaries. All expected
// values quoted in the tests were derived by hand from these definitions.
namespace cousin::testing {

inline FieldElem fe(long v, long m = 1) { return FieldElem::of_int(v, m); }
inline FieldElem fq(long num, long den, long m = 1) { return FieldElem(ratio(num, den), m); }
inline FieldElem fi(long m = 1) { return FieldElem::i_unit(m); }
inline FieldElem fs(long m) { return FieldElem::sqrt_m(m); }

// Row-major entry list; entries with a different field parameter are embedded.
inline Mat mat(int rows, int cols, long m, const std::vector<FieldElem>& entries) {
  Mat a(rows, cols, m);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const FieldElem& x = entries[static_cast<size_t>(r * cols + c)];
      a.at(r, c) = x.field_param() == m ? x : x.embedded(m);
    }
  return a;
}

inline Mat imat(int rows, int cols, long m, const std::vector<long>& entries) {
  Mat a(rows, cols, m);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a.at(r, c) = fe(entries[static_cast<size_t>(r * cols + c)], m);
  return a;
}

inline Mat diag(long m, const std::vector<long>& entries) {
  int n = static_cast<int>(entries.size());
  Mat a(n, n, m);
  for (int k = 0; k < n; ++k) a.at(k, k) = fe(entries[static_cast<size_t>(k)], m);
  return a;
}

// Weight 1, rank 2 over Q(i): V^{1,0} spanned by e1 + i e2. The complex
// torus it generates is the square elliptic curve C / (Z + iZ).
inline HodgeStructure fix_e() {
  Mat v10 = mat(2, 1, 1, {fe(1), fi()});
  return HodgeStructure(1, 2, 1, {{1, 0, v10}, {0, 1, v10.conj()}});
}

// Principal alternating form for fix_e.
inline Mat q_e() { return imat(2, 2, 1, {0, 1, -1, 0}); }

// Weight 2, rank 4 over Q(i): V^{2,0} = span(e1 + i e2), V^{1,1} = <e3, e4>.
// Has a two-dimensional weight-0 quotient space, so it is not Cousin.
inline HodgeStructure fix_h4() {
  Mat v20 = mat(4, 1, 1, {fe(1), fi(), fe(0), fe(0)});
  Mat v11 = imat(4, 2, 1, {0, 0, 0, 0, 1, 0, 0, 1});
  return HodgeStructure(2, 4, 1, {{2, 0, v20}, {1, 1, v11}, {0, 2, v20.conj()}});
}

// Symmetric form polarizing both fix_h4 and fix_hc.
inline Mat q4(long m = 1) { return diag(m, {-1, -1, 1, 1}); }

// Weight 2, rank 4 over Q(i, sqrt(2)): V^{2,0} = span(s e1 + i s e2 + e3 + i e4),
// V^{1,1} = <e1 + s e3, e2 + s e4>. Cousin: the weight-0 quotient space is 0.
inline HodgeStructure fix_hc() {
  const long m = 2;
  Mat v20 = mat(4, 1, m, {fs(m), fi(m) * fs(m), fe(1, m), fi(m)});
  Mat v11 = mat(4, 2, m,
                {fe(1, m), fe(0, m),
                 fe(0, m), fe(1, m),
                 fs(m), fe(0, m),
                 fe(0, m), fs(m)});
  return HodgeStructure(2, 4, m, {{2, 0, v20}, {1, 1, v11}, {0, 2, v20.conj()}});
}

// Weight 0, rank 2: pure (0,0). Generates (C*)^2; never Cousin.
inline HodgeStructure fix_w2() { return HodgeStructure(0, 2, 1, {{0, 0, Mat::identity(2, 1)}}); }

// Lattice of rank 3 in C^2 over Q(i, sqrt(2)). The quotient is a Cousin
// group: full linear span, yet no functional takes rational values on all
// three generators.
inline PeriodData fix_p3() {
  PeriodData p;
  p.ambient_dim = 2;
  p.m = 2;
  p.generators = {{fe(1, 2), fe(1, 2)}, {fi(2), fe(1, 2)}, {fe(0, 2), fs(2)}};
  return p;
}

// Rank 8 direct sum of fix_h4 (embedded into m = 2) and fix_hc.
inline HodgeStructure fix_h8() { return direct_sum(fix_h4(), fix_hc()); }

// Block polarization for fix_h8.
inline Mat q8() { return diag(2, {-1, -1, 1, 1, -1, -1, 1, 1}); }

}  // namespace cousin::testing
