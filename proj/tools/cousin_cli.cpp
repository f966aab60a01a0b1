// Command line front end: parse JSON documents, run one operation, emit a
// deterministic JSON report. Exit status: 0 success, 1 domain error, 2 parse
// or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cousin/crgeom.hpp"
#include "cousin/hodge.hpp"
#include "cousin/io.hpp"
#include "cousin/metric.hpp"
#include "cousin/polarization.hpp"
#include "cousin/tori.hpp"

using namespace cousin;

namespace {

struct Command {
  std::string verb;
  std::vector<std::string> paths;
  std::uint64_t seed = 0;
  bool with_seed = false;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_document(const std::string& bytes, const std::string& path) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Mat required_polarization(const Json& doc) {
  if (!has_polarization(doc)) throw ParseError("structure.polarization: missing field");
  return polarization_from_json(doc);
}

std::string rational_text(const FieldElem& x) { return rational_str(x.rational_value()); }

Json run_validate(const Json& doc, int* status) {
  Json result = Json::object();
  try {
    const HodgeStructure h = hodge_from_json(doc);
    const HodgeReport r = validate(h);
    result["valid"] = r.valid;
    if (!r.valid) {
      result["failure"] = r.failure;
      result["witness"] = vector_to_json(r.witness);
      *status = 1;
    }
  } catch (const DomainError& e) {
    result["valid"] = false;
    result["failure"] = e.what();
    *status = 1;
  }
  return result;
}

Json run_polarize_check(const Json& doc, int* status) {
  const HodgeStructure h = hodge_from_json(doc);
  const Mat q = required_polarization(doc);
  require_valid(h);
  const PolarizationReport r = validate_polarization(h, q);
  Json result = Json::object();
  result["valid"] = r.valid;
  result["condition"] = r.condition;
  result["piece_a"] = Json::array({r.piece_a.first, r.piece_a.second});
  result["piece_b"] = Json::array({r.piece_b.first, r.piece_b.second});
  result["minor_index"] = r.minor_index;
  result["message"] = r.message;
  if (!r.valid) *status = 1;
  return result;
}

Json run_cousin_check(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  require_valid(h);
  Json result = Json::object();
  result["is_cousin"] = is_cousin(h);
  result["weight0_quotient_dim"] = weight0_quotient_space(h).cols();
  return result;
}

Json run_jacobi(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  require_valid(h);
  return period_to_json(jacobi_group(h));
}

Json run_abel(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  require_valid(h);
  const AbelTorus parts = abel_torus(h);
  Json result = Json::object();
  result["ambient_dim"] = parts.structure.ambient;
  result["m"] = parts.structure.m;
  result["H10"] = subspace_to_json(parts.structure.h10);
  result["F10"] = subspace_to_json(parts.structure.f10);
  result["h_part"] = matrix_to_json(parts.h_part);
  result["f_part"] = matrix_to_json(parts.f_part);
  return result;
}

Json run_embed_check(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  require_valid(h);
  const long m = h.field_param();
  const Mat gamma = canonical_embedding(h);
  const AbelTorus parts = abel_torus(h);
  const int upper_dim = h.hodge_number(2, 0) + h.hodge_number(1, 1);
  const CRSpace src{h.rank(), m, parts.structure.h10};
  const CRSpace tgt{2 * upper_dim, m,
                    Subspace::span(holomorphic_lift_columns(Mat::identity(upper_dim, m)))};
  Json result = Json::object();
  result["gamma"] = matrix_to_json(gamma);
  result["agrees_with_projection"] = (gamma == upper_projection_coordinates(h));
  result["cr_linear"] = cr_linear_check(realify_columns(gamma), src, tgt).linear;
  result["image_check"] = induced_cr_image_check(h);
  return result;
}

Json run_characters(const Json& doc) {
  const PeriodData p = period_from_json(doc);
  require_period_data(p);
  const Mat c = character_space(p);
  Json result = Json::object();
  result["dimension"] = c.cols();
  result["functionals"] = matrix_to_json(c);
  return result;
}

Json run_kopfermann(const Json& doc) {
  const PeriodData p = period_from_json(doc);
  require_period_data(p);
  const KopfermannInvariants k = kopfermann(p);
  Json result = Json::object();
  result["linear_dim"] = k.linear_dim;
  result["torus_rank"] = k.torus_rank;
  result["cousin_part"] = period_to_json(k.cousin_part);
  return result;
}

Json run_isogeny(const Json& a_doc, const Json& b_doc, std::uint64_t seed) {
  const HodgeStructure a = hodge_from_json(a_doc);
  const HodgeStructure b = hodge_from_json(b_doc);
  require_valid(a);
  require_valid(b);
  const IsogenyReport r = isogeny_check(a, b, seed);
  Json result = Json::object();
  switch (r.verdict) {
    case IsogenyVerdict::isogenous:
      result["verdict"] = "isogenous";
      result["kernel_order"] = r.kernel_order.get_str();
      result["witness"] = integer_matrix_to_json(r.witness);
      break;
    case IsogenyVerdict::not_isogenous:
      result["verdict"] = "not_isogenous";
      break;
    case IsogenyVerdict::inconclusive:
      result["verdict"] = "inconclusive";
      break;
  }
  return result;
}

Json run_decompose(const Json& doc, std::uint64_t seed) {
  const HodgeStructure h = hodge_from_json(doc);
  const Mat q = required_polarization(doc);
  require_valid(h);
  require_polarization(h, q);
  const std::vector<Summand> parts = decompose(h, q, seed);
  Json summands = Json::array();
  for (const Summand& part : parts) {
    Json s = Json::object();
    s["lattice"] = integer_matrix_to_json(part.lattice);
    s["structure"] = hodge_to_json(part.structure, part.polarization);
    s["split_exhausted"] = part.split_exhausted;
    summands.push_back(std::move(s));
  }
  Json result = Json::object();
  result["summands"] = std::move(summands);
  return result;
}

Json run_metric_extend(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  const Mat q = required_polarization(doc);
  const AbelianCousinData ext = hermitian_extension(h, q);
  Json result = abelian_cousin_to_json(ext);
  result["abelian_cousin"] = valid_abelian_cousin(ext);
  return result;
}

Json run_reconstruct(const Json& doc) {
  const AbelianCousinData a = abelian_cousin_from_json(doc);
  const ReconstructedStructure r = reconstruct(a);
  return hodge_to_json(r.structure, r.polarization);
}

Json run_actions(const Json& doc) {
  const HodgeStructure h = hodge_from_json(doc);
  const Mat q = required_polarization(doc);
  require_valid(h);
  require_polarization(h, q);
  const PolarizedMetricReport r = is_polarized_metric(q, h.rank());
  Json result = Json::object();
  result["polarized"] = r.polarized;
  if (!r.polarized) result["witness"] = vector_to_json(r.witness);
  Json actions = Json::array();
  for (int j = 0; j < h.rank(); ++j) {
    std::vector<FieldElem> e(h.rank(), FieldElem::zero(h.field_param()));
    e[j] = FieldElem::one(h.field_param());
    actions.push_back(rational_text(geodesic_action(q, e)));
  }
  result["diagonal_actions"] = std::move(actions);
  return result;
}

int run(const Command& cmd) {
  Json report = Json::object();
  report["format_version"] = "1";
  report["verb"] = cmd.verb;
  Json inputs = Json::array();
  std::vector<Json> docs;
  for (const std::string& path : cmd.paths) {
    const std::string bytes = read_file(path);
    Json entry = Json::object();
    entry["path"] = path;
    entry["digest"] = fnv1a_digest(bytes);
    inputs.push_back(std::move(entry));
    docs.push_back(parse_document(bytes, path));
  }
  report["inputs"] = std::move(inputs);
  if (cmd.with_seed) report["seed"] = cmd.seed;

  int status = 0;
  try {
    Json result;
    if (cmd.verb == "validate") result = run_validate(docs[0], &status);
    else if (cmd.verb == "polarize-check") result = run_polarize_check(docs[0], &status);
    else if (cmd.verb == "cousin-check") result = run_cousin_check(docs[0]);
    else if (cmd.verb == "jacobi") result = run_jacobi(docs[0]);
    else if (cmd.verb == "abel") result = run_abel(docs[0]);
    else if (cmd.verb == "embed-check") result = run_embed_check(docs[0]);
    else if (cmd.verb == "characters") result = run_characters(docs[0]);
    else if (cmd.verb == "kopfermann") result = run_kopfermann(docs[0]);
    else if (cmd.verb == "isogeny") result = run_isogeny(docs[0], docs[1], cmd.seed);
    else if (cmd.verb == "decompose") result = run_decompose(docs[0], cmd.seed);
    else if (cmd.verb == "metric-extend") result = run_metric_extend(docs[0]);
    else if (cmd.verb == "reconstruct") result = run_reconstruct(docs[0]);
    else if (cmd.verb == "actions") result = run_actions(docs[0]);
    report["result"] = std::move(result);
  } catch (const DomainError& e) {
    Json err = Json::object();
    err["kind"] = "domain";
    err["message"] = e.what();
    report["error"] = std::move(err);
    status = 1;
  } catch (const FieldError& e) {
    Json err = Json::object();
    err["kind"] = "field";
    err["message"] = e.what();
    report["error"] = std::move(err);
    status = 1;
  }

  const std::string text = dump_document(report);
  if (cmd.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cmd.out_path, std::ios::binary);
    if (!out) throw ParseError(cmd.out_path + ": cannot write file");
    out << text;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with rational Hodge structures and Cousin groups"};
  app.require_subcommand(1);

  Command cmd;
  bool json_flag = false;

  struct VerbEntry {
    const char* name;
    const char* help;
    int arity;
    bool seeded;
  };
  const std::vector<VerbEntry> verbs = {
      {"validate", "Check the structure invariants of a document", 1, false},
      {"polarize-check", "Check a polarization against its structure", 1, false},
      {"cousin-check", "Decide whether the structure generates a Cousin group", 1, false},
      {"jacobi", "Project the lattice into the non-positive pieces", 1, false},
      {"abel", "Split a weight 2 structure into its bi-CR parts", 1, false},
      {"embed-check", "Verify the canonical embedding properties", 1, false},
      {"characters", "Functionals with rational values on the periods", 1, false},
      {"kopfermann", "Three part normal form of the quotient group", 1, false},
      {"isogeny", "Search for an isogeny between two structures", 2, true},
      {"decompose", "Split a polarized structure into orthogonal summands", 1, true},
      {"metric-extend", "Extend a polarization to an ambient Hermitian metric", 1, false},
      {"reconstruct", "Recover a polarized structure from abelian Cousin data", 1, false},
      {"actions", "Closed geodesic actions of the lattice directions", 1, false},
  };

  for (const VerbEntry& entry : verbs) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->add_option("input", cmd.paths, "Input document path(s)")
        ->expected(entry.arity)
        ->required();
    if (entry.seeded) sub->add_option("--seed", cmd.seed, "Sampler seed")->default_val(0);
    sub->add_option("--out", cmd.out_path, "Write the report to this path");
    sub->add_flag("--json", json_flag, "Emit JSON (the default and only format)");
    sub->callback([&cmd, &entry] {
      cmd.verb = entry.name;
      cmd.with_seed = entry.seeded;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(cmd);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
