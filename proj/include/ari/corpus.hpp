// Corpus access: the derivations shipped with the kernel, as script files in
// a versioned directory, with golden reports alongside.
#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ari/script.hpp"

namespace ari {

struct UnknownEntry : std::runtime_error {
  explicit UnknownEntry(const std::string& name)
      : std::runtime_error("unknown corpus entry: " + name) {}
};

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "imp0",     "chin",     "chin2",      "chinfla2",   "intant",
      "intant2",  "contrap1", "contrap2",   "mtp1",       "mtp2",
      "appendixC", "appendixD1", "appendixD2", "main",
  };
  return names;
}

// Tiny axiom tables over raw integer codes, small enough for exhaustive
// bottom-up proof enumeration. They validate the proof-property evaluator
// and are plainly not the real system.
inline AxiomTable micro_table(const std::string& name) {
  if (name == "micro1") return AxiomTable::micro({0, 8});       // 8 = imp(0, 0)
  if (name == "micro2") return AxiomTable::micro({0, 1, 24});   // 24 = imp(1, 0)
  throw UnknownEntry(name);
}

inline std::string corpus_dir() {
  if (const char* env = std::getenv("ARI_CORPUS_DIR")) return env;
#ifdef ARI_CORPUS_DIR
  return ARI_CORPUS_DIR;
#else
  return "corpus";
#endif
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Script load_corpus(const std::string& name) {
  const auto& names = corpus_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownEntry(name);
  return parse_script(read_file(corpus_dir() + "/" + name + ".ari"));
}

}  // namespace ari
