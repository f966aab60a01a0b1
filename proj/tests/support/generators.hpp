#pragma once

// Seeded random producers for property tests: valid structures of any weight,
// polarized weight 2 structures assembled from primitive blocks, unimodular
// lattice changes, and integer matrices. Everything is deterministic in the
// passed engine.

#include <random>
#include <utility>
#include <vector>

#include "cousin/hodge.hpp"
#include "cousin/linalg.hpp"
#include "cousin/normal_form.hpp"
#include "support/fixtures.hpp"

namespace cousin::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline FieldElem random_field_elem(Rng& rng, long m, bool real_only = false) {
  const Rational a0(pick(rng, -2, 2));
  const Rational a1(m > 1 ? pick(rng, -2, 2) : 0);
  if (real_only) return FieldElem(a0, a1, Rational(0), Rational(0), m);
  const Rational a2(pick(rng, -2, 2));
  const Rational a3(m > 1 ? pick(rng, -2, 2) : 0);
  return FieldElem(a0, a1, a2, a3, m);
}

// A valid structure of the given weight and rank: conjugate-symmetric piece
// blocks assembled into an invertible matrix (middle piece real). Odd weights
// need even rank.
inline HodgeStructure random_structure(Rng& rng, int weight, int rank, long m) {
  const int pair_positions = (weight + 1) / 2;  // (p, q) with p + q = weight, p > q
  while (true) {
    std::vector<int> sizes(pair_positions, 0);
    int middle = 0;
    if (weight % 2 == 0) {
      int remaining = rank;
      for (int j = 0; j < pair_positions; ++j) {
        const int s = static_cast<int>(pick(rng, 0, remaining / 2));
        sizes[j] = s;
        remaining -= 2 * s;
      }
      middle = remaining;
    } else {
      int half = rank / 2;
      for (int j = 0; j < pair_positions; ++j) {
        const int s = (j + 1 == pair_positions) ? half : static_cast<int>(pick(rng, 0, half));
        sizes[j] = s;
        half -= s;
      }
    }

    std::vector<HodgePiece> pieces;
    Mat all(rank, 0, m);
    for (int j = 0; j < pair_positions; ++j) {
      if (sizes[j] == 0) continue;
      Mat block(rank, sizes[j], m);
      for (int r = 0; r < rank; ++r)
        for (int c = 0; c < sizes[j]; ++c) block.at(r, c) = random_field_elem(rng, m);
      pieces.push_back({weight - j, j, block});
      pieces.push_back({j, weight - j, block.conj()});
      all = Mat::hstack(Mat::hstack(all, block), block.conj());
    }
    if (middle > 0) {
      Mat block(rank, middle, m);
      for (int r = 0; r < rank; ++r)
        for (int c = 0; c < middle; ++c) block.at(r, c) = random_field_elem(rng, m, true);
      pieces.push_back({weight / 2, weight / 2, block});
      all = Mat::hstack(all, block);
    }
    if (rank > 0 && all.determinant().is_zero()) continue;
    return HodgeStructure(weight, rank, m, std::move(pieces));
  }
}

// Unimodular integer matrix: a product of shears and signed swaps.
inline Mat random_unimodular(Rng& rng, int n, long m) {
  Mat u = Mat::identity(n, m);
  if (n < 2) return u;
  for (int step = 0; step < 2 * n; ++step) {
    const int i = static_cast<int>(pick(rng, 0, n - 1));
    int j = static_cast<int>(pick(rng, 0, n - 2));
    if (j >= i) ++j;
    Mat e = Mat::identity(n, m);
    if (pick(rng, 0, 3) == 0) {
      e.at(i, i) = FieldElem::zero(m);
      e.at(j, j) = FieldElem::zero(m);
      e.at(i, j) = FieldElem::one(m);
      e.at(j, i) = FieldElem::of_int(-1, m);
    } else {
      e.at(i, j) = FieldElem::of_int(pick(rng, -2, 2), m);
    }
    u = u * e;
  }
  return u;
}

struct PolarizedPair {
  HodgeStructure h;
  Mat q;
};

// Polarized weight 2 structure: a direct sum of primitive polarized blocks
// conjugated by a random unimodular lattice change. Total rank <= 6.
inline PolarizedPair random_polarized(Rng& rng, long m) {
  std::vector<PolarizedPair> atoms;
  int total = 0;
  const int target = static_cast<int>(pick(rng, 1, 6));
  while (total < target) {
    const long kind = pick(rng, 0, 3);
    const long c = pick(rng, 1, 3);
    if (kind == 0 || total + 2 > target) {
      // One dimensional (1, 1) block.
      std::vector<HodgePiece> pieces{{1, 1, Mat::identity(1, m)}};
      atoms.push_back({HodgeStructure(2, 1, m, std::move(pieces)),
                       Mat::identity(1, m).scaled(FieldElem::of_int(c, m))});
      total += 1;
    } else if (kind == 3 && m == 2 && total + 4 <= target) {
      atoms.push_back({fix_hc(), q4(2)});
      total += 4;
    } else {
      // Rank two block with one dimensional (2, 0) piece spanned by
      // e1 + tau e2, tau = i t or i t sqrt(m).
      const long t = pick(rng, 1, 3);
      const bool with_root = (m > 1) && (kind == 2);
      const FieldElem tau = with_root
                                ? FieldElem(Rational(0), Rational(0), Rational(0), Rational(t), m)
                                : FieldElem(Rational(0), Rational(0), Rational(t), Rational(0), m);
      Mat basis(2, 1, m);
      basis.at(0, 0) = FieldElem::one(m);
      basis.at(1, 0) = tau;
      std::vector<HodgePiece> pieces{{2, 0, basis}, {0, 2, basis.conj()}};
      const long scale = t * t * (with_root ? m : 1);
      Mat q(2, 2, m);
      q.at(0, 0) = FieldElem::of_int(-c * scale, m);
      q.at(1, 1) = FieldElem::of_int(-c, m);
      atoms.push_back({HodgeStructure(2, 2, m, std::move(pieces)), q});
      total += 2;
    }
  }

  PolarizedPair out = atoms[0];
  for (size_t k = 1; k < atoms.size(); ++k) {
    const HodgeStructure sum = direct_sum(out.h, atoms[k].h);
    const int n1 = out.q.rows();
    const int n2 = atoms[k].q.rows();
    Mat q(n1 + n2, n2 + n1, sum.field_param());
    for (int r = 0; r < n1; ++r)
      for (int c = 0; c < n1; ++c) q.at(r, c) = out.q.at(r, c).embedded(sum.field_param());
    for (int r = 0; r < n2; ++r)
      for (int c = 0; c < n2; ++c)
        q.at(n1 + r, n1 + c) = atoms[k].q.at(r, c).embedded(sum.field_param());
    out = {sum, q};
  }

  const Mat u = random_unimodular(rng, out.h.rank(), out.h.field_param());
  return {choose_lattice(out.h, u), u.transpose() * out.q * u};
}

inline IMat random_integer_matrix(Rng& rng, int n, long bound = 9) {
  IMat a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = pick(rng, -bound, bound);
  return a;
}

inline std::vector<FieldElem> random_lattice_vector(Rng& rng, int n, long m, long bound = 5) {
  std::vector<FieldElem> v;
  for (int k = 0; k < n; ++k) v.push_back(FieldElem::of_int(pick(rng, -bound, bound), m));
  return v;
}

// Random Hermitian matrix over the field: real diagonal, conjugate-mirrored
// off-diagonal entries.
inline Mat random_hermitian(Rng& rng, int n, long m) {
  Mat h(n, n, m);
  for (int r = 0; r < n; ++r) {
    h.at(r, r) = random_field_elem(rng, m, true);
    for (int c = r + 1; c < n; ++c) {
      h.at(r, c) = random_field_elem(rng, m);
      h.at(c, r) = h.at(r, c).conj();
    }
  }
  return h;
}

}  // namespace cousin::testing
