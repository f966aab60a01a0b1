#include "cousin/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace cousin {

namespace {

std::string piece_name(int p, int q) {
  std::ostringstream os;
  os << "(" << p << "," << q << ")";
  return os.str();
}

}  // namespace

HodgeStructure::HodgeStructure(int weight, int rank, long m, std::vector<HodgePiece> pieces)
    : weight_(weight), rank_(rank), m_(m), pieces_(std::move(pieces)), empty_(rank > 0 ? Mat(rank, 0, m) : Mat()) {
  if (weight < 0) throw DomainError("weight must be nonnegative");
  if (rank < 0) throw DomainError("rank must be nonnegative");
  if (!is_squarefree_positive(m)) throw DomainError("field parameter must be squarefree and positive");
  for (auto& pc : pieces_) {
    if (pc.basis.cols() == 0) continue;
    if (pc.basis.rows() != rank_)
      throw DomainError("piece " + piece_name(pc.p, pc.q) + " has " + std::to_string(pc.basis.rows()) +
                        " rows, expected " + std::to_string(rank_));
    if (pc.basis.field_param() != m_) pc.basis = pc.basis.embedded(m_);
  }
  // Drop zero-width pieces, keep p descending.
  std::erase_if(pieces_, [](const HodgePiece& pc) { return pc.basis.cols() == 0; });
  std::sort(pieces_.begin(), pieces_.end(), [](const HodgePiece& a, const HodgePiece& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.q < b.q;
  });
  for (std::size_t k = 1; k < pieces_.size(); ++k)
    if (pieces_[k].p == pieces_[k - 1].p && pieces_[k].q == pieces_[k - 1].q)
      throw DomainError("duplicate piece " + piece_name(pieces_[k].p, pieces_[k].q));
}

const Mat& HodgeStructure::piece_basis(int p, int q) const {
  for (const auto& pc : pieces_)
    if (pc.p == p && pc.q == q) return pc.basis;
  return empty_;
}

int HodgeStructure::hodge_number(int p, int q) const { return piece_basis(p, q).cols(); }

Subspace HodgeStructure::piece_space(int p, int q) const {
  const Mat& b = piece_basis(p, q);
  if (b.cols() == 0) return Subspace::zero(rank_, m_);
  return Subspace::span(b);
}

Mat HodgeStructure::concatenated_basis() const {
  Mat acc(rank_, 0, m_);
  for (const auto& pc : pieces_) acc = Mat::hstack(acc, pc.basis);
  return acc;
}

HodgeStructure HodgeStructure::embedded(long new_m) const {
  std::vector<HodgePiece> ps;
  ps.reserve(pieces_.size());
  for (const auto& pc : pieces_) ps.push_back({pc.p, pc.q, pc.basis.embedded(new_m)});
  return HodgeStructure(weight_, rank_, new_m, std::move(ps));
}

HodgeReport validate(const HodgeStructure& h) {
  HodgeReport rep;
  auto fail = [&](std::string msg, std::vector<FieldElem> wit = {}) {
    rep.valid = false;
    rep.failure = std::move(msg);
    rep.witness = std::move(wit);
    return rep;
  };

  // Index discipline first: p, q >= 0 and p + q = weight.
  for (const auto& pc : h.pieces()) {
    if (pc.p < 0 || pc.q < 0)
      return fail("piece " + piece_name(pc.p, pc.q) + " has a negative index");
    if (pc.p + pc.q != h.weight())
      return fail("piece " + piece_name(pc.p, pc.q) + " does not sum to the weight " + std::to_string(h.weight()));
  }

  // The pieces must assemble a basis of K^rank.
  int total = 0;
  for (const auto& pc : h.pieces()) total += pc.basis.cols();
  if (total != h.rank())
    return fail("piece dimensions sum to " + std::to_string(total) + ", expected " + std::to_string(h.rank()));
  if (h.rank() > 0) {
    Mat c = h.concatenated_basis();
    Mat k = kernel_basis(c);
    if (k.cols() != 0) return fail("pieces do not span: concatenated basis is singular", k.col(0));
  }

  // conj(V^{p,q}) = V^{q,p}, witnessed by the first basis column that breaks
  // containment.
  for (const auto& pc : h.pieces()) {
    Subspace target = h.piece_space(pc.q, pc.p);
    Mat conj_basis = pc.basis.conj();
    if (pc.basis.cols() != h.hodge_number(pc.q, pc.p))
      return fail("conjugate of piece " + piece_name(pc.p, pc.q) + " cannot match " + piece_name(pc.q, pc.p) +
                  ": dimensions differ", conj_basis.col(0));
    for (int j = 0; j < conj_basis.cols(); ++j) {
      if (!target.contains(conj_basis.col(j)))
        return fail("conjugate of piece " + piece_name(pc.p, pc.q) + " is not contained in " + piece_name(pc.q, pc.p),
                    conj_basis.col(j));
    }
  }
  return rep;
}

void require_valid(const HodgeStructure& h) {
  HodgeReport rep = validate(h);
  if (!rep.valid) throw DomainError("invalid structure: " + rep.failure);
}

bool same_structure(const HodgeStructure& a, const HodgeStructure& b) {
  if (a.weight() != b.weight() || a.rank() != b.rank() || a.field_param() != b.field_param()) return false;
  if (a.pieces().size() != b.pieces().size()) return false;
  for (const auto& pc : a.pieces()) {
    if (pc.basis.cols() != b.hodge_number(pc.p, pc.q)) return false;
    if (!(a.piece_space(pc.p, pc.q) == b.piece_space(pc.p, pc.q))) return false;
  }
  return true;
}

HodgeStructure extend_scalars(const HodgeStructure& h) { return h; }

HodgeStructure choose_lattice(const HodgeStructure& h, const Mat& basis) {
  if (basis.rows() != h.rank() || basis.cols() != h.rank())
    throw DomainError("lattice basis must be square of size the rank");
  if (!basis.is_rational()) throw DomainError("lattice basis must be rational");
  Mat b = basis.field_param() == h.field_param() ? basis : basis.embedded(h.field_param());
  Mat inv = b.inverse();  // throws DomainError when singular
  std::vector<HodgePiece> ps;
  for (const auto& pc : h.pieces()) ps.push_back({pc.p, pc.q, inv * pc.basis});
  return HodgeStructure(h.weight(), h.rank(), h.field_param(), std::move(ps));
}

std::vector<Mat> hodge_morphisms(const HodgeStructure& h1, const HodgeStructure& h2) {
  if (h1.weight() != h2.weight()) throw DomainError("morphisms require equal weights");
  if (h1.field_param() != h2.field_param()) {
    long mm = merge_field_param(h1.field_param(), h2.field_param());
    return hodge_morphisms(h1.embedded(mm), h2.embedded(mm));
  }
  const int r1 = h1.rank(), r2 = h2.rank();
  const long m = h1.field_param();
  if (r1 == 0 || r2 == 0) return {};

  // Unknown: rational M (r2 x r1), flattened as column u * r1 + v for entry
  // M[u][v]. Each piece (p,q) of h1 contributes the K-linear conditions
  // A * M * B = 0 where A annihilates V2^{p,q} and B spans V1^{p,q}.
  std::vector<Mat> blocks;
  int total_rows = 0;
  for (const auto& pc : h1.pieces()) {
    const Mat& b = pc.basis;
    Mat ann = h2.piece_space(pc.p, pc.q).annihilator();
    if (ann.rows() == 0 || b.cols() == 0) continue;
    Mat cond(ann.rows() * b.cols(), r2 * r1, m);
    for (int a = 0; a < ann.rows(); ++a)
      for (int c = 0; c < b.cols(); ++c)
        for (int u = 0; u < r2; ++u)
          for (int v = 0; v < r1; ++v)
            cond.at(a * b.cols() + c, u * r1 + v) = ann.at(a, u) * b.at(v, c);
    total_rows += cond.rows();
    blocks.push_back(std::move(cond));
  }
  Mat big(0, 0, m);
  if (blocks.empty()) {
    big = Mat(0, r2 * r1, m);
    (void)total_rows;
  } else {
    big = blocks[0];
    for (std::size_t k = 1; k < blocks.size(); ++k) big = Mat::vstack(big, blocks[k]);
  }
  Mat sols = rational_kernel(big);
  std::vector<Mat> out;
  out.reserve(sols.cols());
  for (int j = 0; j < sols.cols(); ++j) {
    Mat f(r2, r1, m);
    for (int u = 0; u < r2; ++u)
      for (int v = 0; v < r1; ++v) f.at(u, v) = sols.at(u * r1 + v, j);
    out.push_back(std::move(f));
  }
  return out;
}

bool is_hodge_morphism(const HodgeStructure& h1, const HodgeStructure& h2, const Mat& f) {
  if (h1.weight() != h2.weight()) return false;
  if (h1.field_param() != h2.field_param()) {
    long mm = merge_field_param(h1.field_param(), h2.field_param());
    return is_hodge_morphism(h1.embedded(mm), h2.embedded(mm), f.embedded(mm));
  }
  if (f.rows() != h2.rank() || f.cols() != h1.rank()) return false;
  if (!f.is_rational()) return false;
  for (const auto& pc : h1.pieces()) {
    Subspace target = h2.piece_space(pc.p, pc.q);
    Mat image = f * pc.basis;
    for (int j = 0; j < image.cols(); ++j)
      if (!target.contains(image.col(j))) return false;
  }
  return true;
}

SubQuotientResult sub_quotient(const HodgeStructure& h, const Subspace& w, SubQuotientKind kind) {
  if (w.ambient() != h.rank()) throw DomainError("subspace ambient does not match the rank");
  if (!w.basis().is_rational()) throw DomainError("subspace must be rational");
  Subspace wk = w.field_param() == h.field_param() ? w : w.embedded(h.field_param());
  const long m = h.field_param();
  const int r = h.rank();
  const int dw = wk.dim();

  // Compatibility: W_K must split along the pieces.
  int split_total = 0;
  std::vector<std::pair<const HodgePiece*, Subspace>> sections;
  for (const auto& pc : h.pieces()) {
    Subspace sect = Subspace::intersect(wk, h.piece_space(pc.p, pc.q));
    split_total += sect.dim();
    sections.push_back({&pc, sect});
  }
  if (split_total != dw) {
    // Attribute the failure to the first piece whose intersection falls short
    // of the piece's own share of W.
    std::string at = "(none)";
    for (auto& [pc, sect] : sections)
      if (sect.dim() < std::min(pc->basis.cols(), dw)) {
        at = piece_name(pc->p, pc->q);
        break;
      }
    throw DomainError("subspace is not compatible with the splitting at piece " + at +
                      ": piece intersections sum to " + std::to_string(split_total) + " but dim W = " +
                      std::to_string(dw));
  }

  // Saturated integer form of W: columns of the integer kernel of its
  // annihilator, Hermite-canonical.
  Mat ann = wk.annihilator();
  IMat lattice = integer_kernel_of_rational(ann.rows() == 0 ? Mat(0, r, m) : ann);
  if (lattice.cols() != dw) throw DomainError("internal inconsistency: saturation rank mismatch");

  if (kind == SubQuotientKind::sub) {
    Mat lat_k = to_field_matrix(lattice, m);
    std::vector<HodgePiece> ps;
    for (auto& [pc, sect] : sections) {
      if (sect.dim() == 0) continue;
      Mat coords = solve_unique(lat_k, sect.basis());
      ps.push_back({pc->p, pc->q, std::move(coords)});
    }
    return {HodgeStructure(h.weight(), dw, m, std::move(ps)), std::move(lattice)};
  }

  // Quotient: U * lattice = [I_dw; 0] for the Smith transform U, so the last
  // r - dw rows of U project Z^r onto the quotient lattice.
  SmithResult sm = smith_normal_form(lattice);
  for (const Int& d : sm.divisors)
    if (d != 1) throw DomainError("internal inconsistency: saturated lattice has nontrivial divisors");
  IMat chart(r - dw, r);
  for (int i = 0; i < r - dw; ++i)
    for (int j = 0; j < r; ++j) chart.at(i, j) = sm.u.at(dw + i, j);
  Mat chart_k = to_field_matrix(chart, m);
  std::vector<HodgePiece> ps;
  for (auto& [pc, sect] : sections) {
    int image_dim = pc->basis.cols() - sect.dim();
    if (image_dim == 0) continue;
    Subspace img = Subspace::span(chart_k * pc->basis);
    if (img.dim() != image_dim) throw DomainError("internal inconsistency: quotient piece dimension");
    ps.push_back({pc->p, pc->q, img.basis()});
  }
  return {HodgeStructure(h.weight(), r - dw, m, std::move(ps)), std::move(chart)};
}

long merge_field_param(long m1, long m2) {
  if (m1 == m2) return m1;
  if (m1 == 1) return m2;
  if (m2 == 1) return m1;
  throw DomainError("incompatible field parameters " + std::to_string(m1) + " and " + std::to_string(m2));
}

HodgeStructure direct_sum(const HodgeStructure& h1, const HodgeStructure& h2) {
  if (h1.weight() != h2.weight()) throw DomainError("direct sum requires equal weights");
  long m = merge_field_param(h1.field_param(), h2.field_param());
  HodgeStructure a = h1.field_param() == m ? h1 : h1.embedded(m);
  HodgeStructure b = h2.field_param() == m ? h2 : h2.embedded(m);
  const int r1 = a.rank(), r2 = b.rank(), r = r1 + r2;

  std::vector<std::pair<int, int>> indices;
  for (const auto& pc : a.pieces()) indices.push_back({pc.p, pc.q});
  for (const auto& pc : b.pieces())
    if (a.hodge_number(pc.p, pc.q) == 0) indices.push_back({pc.p, pc.q});

  std::vector<HodgePiece> ps;
  for (auto [p, q] : indices) {
    const Mat& b1 = a.piece_basis(p, q);
    const Mat& b2 = b.piece_basis(p, q);
    Mat blk(r, b1.cols() + b2.cols(), m);
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < b1.cols(); ++j) blk.at(i, j) = b1.at(i, j);
    for (int i = 0; i < r2; ++i)
      for (int j = 0; j < b2.cols(); ++j) blk.at(r1 + i, b1.cols() + j) = b2.at(i, j);
    ps.push_back({p, q, std::move(blk)});
  }
  return HodgeStructure(h1.weight(), r, m, std::move(ps));
}

Mat weight0_quotient_space(const HodgeStructure& h) {
  const long m = h.field_param();
  const int r = h.rank();
  Mat off(r, 0, m);
  for (const auto& pc : h.pieces())
    if (pc.p != pc.q) off = Mat::hstack(off, pc.basis);
  if (r == 0) return Mat();
  return rational_kernel(off.transpose());
}

bool is_cousin(const HodgeStructure& h) { return weight0_quotient_space(h).cols() == 0; }

}  // namespace cousin
