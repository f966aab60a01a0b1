#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "cousin/hodge.hpp"
#include "cousin/metric.hpp"
#include "cousin/normal_form.hpp"
#include "cousin/tori.hpp"

// JSON documents with exact string rationals. The field parameter m travels
// once per document; every parser takes a `where` prefix so malformed input
// is reported by field path.

namespace cousin {

using Json = nlohmann::ordered_json;

// FieldElem <-> ["a0", "a1", "a2", "a3"], coordinates on the basis
// {1, sqrt(m), i, i sqrt(m)} as exact rational strings.
Json field_to_json(const FieldElem& x);
FieldElem field_from_json(const Json& j, long m, const std::string& where);

// Row-major nested arrays. An empty array is the 0 x 0 matrix.
Json matrix_to_json(const Mat& a);
Mat matrix_from_json(const Json& j, long m, const std::string& where);

// Integer matrices carry decimal string entries (arbitrary precision).
Json integer_matrix_to_json(const IMat& a);
IMat integer_matrix_from_json(const Json& j, const std::string& where);

Json vector_to_json(const std::vector<FieldElem>& v);

// { "ambient_dim": n, "basis": rows x dim matrix } with columns spanning.
Json subspace_to_json(const Subspace& v);

// { "m", "weight", "rank", "pieces": [{"p", "q", "basis"}], "polarization"? }.
// Columns of each "basis" span the piece.
Json hodge_to_json(const HodgeStructure& h);
Json hodge_to_json(const HodgeStructure& h, const Mat& q);
HodgeStructure hodge_from_json(const Json& j);
bool has_polarization(const Json& j);
Mat polarization_from_json(const Json& j);

// { "m", "ambient_dim", "generators": [[FieldElem, ...], ...] }.
Json period_to_json(const PeriodData& p);
PeriodData period_from_json(const Json& j);

// { "periods": PeriodData, "h_re": matrix, "h_im": matrix }.
Json abelian_cousin_to_json(const AbelianCousinData& a);
AbelianCousinData abelian_cousin_from_json(const Json& j);

// Reads and parses a file; ParseError names the file and the parse position.
Json load_document(const std::string& path);
// Canonical rendering: two-space indent, trailing newline. Serializing the
// same document always yields the same bytes.
std::string dump_document(const Json& j);

// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace cousin
