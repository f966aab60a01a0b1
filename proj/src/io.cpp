#include "cousin/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cousin {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long integer_member(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<long>();
}

Rational rational_entry(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json field_to_json(const FieldElem& x) {
  Json out = Json::array();
  for (int k = 0; k < 4; ++k) out.push_back(rational_str(x.coeff(k)));
  return out;
}

FieldElem field_from_json(const Json& j, long m, const std::string& where) {
  if (!j.is_array() || j.size() != 4) fail(where, "expected an array of 4 rational strings");
  Rational c[4];
  for (int k = 0; k < 4; ++k) c[k] = rational_entry(j[k], where + "[" + std::to_string(k) + "]");
  return FieldElem(c[0], c[1], c[2], c[3], m);
}

Json matrix_to_json(const Mat& a) {
  Json out = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(field_to_json(a.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Mat matrix_from_json(const Json& j, long m, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array()) fail(where + "[" + std::to_string(r) + "]", "expected a row array");
    if (r == 0) cols = static_cast<int>(j[0].size());
    if (static_cast<int>(j[r].size()) != cols)
      fail(where + "[" + std::to_string(r) + "]", "rows have unequal lengths");
  }
  Mat out(rows, cols, m);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      out.at(r, c) = field_from_json(j[r][c], m, at);
    }
  return out;
}

Json integer_matrix_to_json(const IMat& a) {
  Json out = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

IMat integer_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = 0;
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array()) fail(where + "[" + std::to_string(r) + "]", "expected a row array");
    if (r == 0) cols = static_cast<int>(j[0].size());
    if (static_cast<int>(j[r].size()) != cols)
      fail(where + "[" + std::to_string(r) + "]", "rows have unequal lengths");
  }
  IMat out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const Json& cell = j[r][c];
      if (!cell.is_string()) fail(at, "expected an integer string");
      const std::string text = cell.get<std::string>();
      if (mpz_set_str(out.at(r, c).get_mpz_t(), text.c_str(), 10) != 0)
        fail(at, "not an integer: \"" + text + "\"");
    }
  return out;
}

Json vector_to_json(const std::vector<FieldElem>& v) {
  Json out = Json::array();
  for (const FieldElem& x : v) out.push_back(field_to_json(x));
  return out;
}

Json subspace_to_json(const Subspace& v) {
  Json out = Json::object();
  out["ambient_dim"] = v.ambient();
  out["basis"] = matrix_to_json(v.basis());
  return out;
}

Json hodge_to_json(const HodgeStructure& h) {
  Json out = Json::object();
  out["m"] = h.field_param();
  out["weight"] = h.weight();
  out["rank"] = h.rank();
  Json pieces = Json::array();
  for (const HodgePiece& piece : h.pieces()) {
    Json p = Json::object();
    p["p"] = piece.p;
    p["q"] = piece.q;
    p["basis"] = matrix_to_json(piece.basis);
    pieces.push_back(std::move(p));
  }
  out["pieces"] = std::move(pieces);
  return out;
}

Json hodge_to_json(const HodgeStructure& h, const Mat& q) {
  Json out = hodge_to_json(h);
  out["polarization"] = matrix_to_json(q);
  return out;
}

HodgeStructure hodge_from_json(const Json& j) {
  const std::string where = "structure";
  const long m = integer_member(j, "m", where);
  const long weight = integer_member(j, "weight", where);
  const long rank = integer_member(j, "rank", where);
  const Json& pieces_j = member(j, "pieces", where);
  if (!pieces_j.is_array()) fail(where + ".pieces", "expected an array");
  std::vector<HodgePiece> pieces;
  for (size_t k = 0; k < pieces_j.size(); ++k) {
    const std::string at = where + ".pieces[" + std::to_string(k) + "]";
    const Json& pj = pieces_j[k];
    HodgePiece piece;
    piece.p = static_cast<int>(integer_member(pj, "p", at));
    piece.q = static_cast<int>(integer_member(pj, "q", at));
    piece.basis = matrix_from_json(member(pj, "basis", at), m, at + ".basis");
    pieces.push_back(std::move(piece));
  }
  return HodgeStructure(static_cast<int>(weight), static_cast<int>(rank), m, std::move(pieces));
}

bool has_polarization(const Json& j) { return j.is_object() && j.contains("polarization"); }

Mat polarization_from_json(const Json& j) {
  const std::string where = "structure";
  const long m = integer_member(j, "m", where);
  return matrix_from_json(member(j, "polarization", where), m, where + ".polarization");
}

Json period_to_json(const PeriodData& p) {
  Json out = Json::object();
  out["m"] = p.m;
  out["ambient_dim"] = p.ambient_dim;
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(vector_to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

PeriodData period_from_json(const Json& j) {
  const std::string where = "periods";
  PeriodData out;
  out.m = integer_member(j, "m", where);
  out.ambient_dim = static_cast<int>(integer_member(j, "ambient_dim", where));
  const Json& gens = member(j, "generators", where);
  if (!gens.is_array()) fail(where + ".generators", "expected an array");
  for (size_t k = 0; k < gens.size(); ++k) {
    const std::string at = where + ".generators[" + std::to_string(k) + "]";
    const Json& gj = gens[k];
    if (!gj.is_array()) fail(at, "expected an array");
    std::vector<FieldElem> g;
    for (size_t c = 0; c < gj.size(); ++c)
      g.push_back(field_from_json(gj[c], out.m, at + "[" + std::to_string(c) + "]"));
    out.generators.push_back(std::move(g));
  }
  return out;
}

Json abelian_cousin_to_json(const AbelianCousinData& a) {
  Json out = Json::object();
  out["periods"] = period_to_json(a.periods);
  out["h_re"] = matrix_to_json(a.h_re);
  out["h_im"] = matrix_to_json(a.h_im);
  return out;
}

AbelianCousinData abelian_cousin_from_json(const Json& j) {
  const std::string where = "data";
  AbelianCousinData out;
  out.periods = period_from_json(member(j, "periods", where));
  out.h_re = matrix_from_json(member(j, "h_re", where), out.periods.m, where + ".h_re");
  out.h_im = matrix_from_json(member(j, "h_im", where), out.periods.m, where + ".h_im");
  return out;
}

Json load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace cousin
