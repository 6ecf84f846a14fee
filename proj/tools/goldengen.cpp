// Regenerates the golden reports for every corpus entry, plus the linked
// audit of the main presentation. Run from the repository root after any
// intentional corpus or checker change, then review the diff.
#include <fstream>
#include <iostream>

#include "ari/ari.hpp"

int main() {
  using namespace ari;
  std::string dir = corpus_dir();
  for (const auto& name : corpus_names()) {
    Script s = load_corpus(name);
    AuditReport r = check_script(s);
    std::ofstream out(dir + "/golden/" + name + ".json");
    out << report_to_json(r).dump(2) << "\n";
    std::cout << name << ": " << r.classification() << " failed=" << r.failed_lines << "\n";
  }
  // the linked audit
  Script main_s = load_corpus("main");
  AuditResult ar = audit(main_s, {{"mp-ind", load_corpus("appendixC")},
                                  {"line7", load_corpus("appendixD2")}});
  std::ofstream out(dir + "/golden/main_linked_audit.json");
  nlohmann::ordered_json j = report_to_json(ar.target);
  nlohmann::ordered_json linked;
  for (const auto& [key, lr] : ar.linked) linked[key] = report_to_json(lr);
  j["linked"] = linked;
  out << j.dump(2) << "\n";
  std::cout << "main_linked_audit: " << ar.target.classification()
            << " failed=" << ar.target.failed_lines << "\n";
  return 0;
}
