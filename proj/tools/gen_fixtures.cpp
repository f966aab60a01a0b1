// Regenerates the example documents under fixtures/. Run from the repository
// root (or pass the target directory) after changing the serialization.

#include <fstream>
#include <iostream>
#include <string>

#include "cousin/io.hpp"
#include "support/fixtures.hpp"

using namespace cousin;
using namespace cousin::testing;

namespace {

void write_doc(const std::string& dir, const std::string& name, const Json& doc) {
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << dump_document(doc);
  std::cout << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  write_doc(dir, "FIX-E.json", hodge_to_json(fix_e(), q_e()));
  write_doc(dir, "FIX-W2.json", hodge_to_json(fix_w2()));
  write_doc(dir, "FIX-H4.json", hodge_to_json(fix_h4(), q4()));
  write_doc(dir, "FIX-HC.json", hodge_to_json(fix_hc(), q4(2)));
  write_doc(dir, "FIX-H8.json", hodge_to_json(fix_h8(), q8()));
  write_doc(dir, "FIX-P3.json", period_to_json(fix_p3()));
  return 0;
}
