#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "ari/ari.hpp"

using namespace ari;

namespace {

std::string golden_path(const std::string& name) {
  return corpus_dir() + "/golden/" + name + ".json";
}

AuditReport checked(const std::string& name) { return check_script(load_corpus(name)); }

int primitive_lines(const Script& s) {
  int n = 0;
  for (const auto& e : s.entries) {
    if (auto* sl = std::get_if<ScriptLine>(&e)) {
      n += static_cast<int>(sl->width());
      if (!sl->first.suffix.empty()) --n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("every corpus entry parses and reproduces its golden report") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    AuditReport r = checked(name);
    std::string expected = read_file(golden_path(name));
    std::string actual = report_to_json(r).dump(2) + "\n";
    CHECK(actual == expected);
  }
}

TEST_CASE("unknown corpus entries are rejected") {
  CHECK_THROWS_AS(load_corpus("nope"), UnknownEntry);
}

TEST_CASE("derived-rule scripts are proofs with the fixed line counts") {
  const std::pair<const char*, int> expectations[] = {
      {"imp0", 5},    {"chin", 5},     {"chin2", 5},    {"chinfla2", 7}, {"intant", 8},
      {"intant2", 19}, {"contrap1", 12}, {"contrap2", 15}, {"mtp1", 17},   {"mtp2", 20},
  };
  for (const auto& [name, count] : expectations) {
    CAPTURE(name);
    Script s = load_corpus(name);
    AuditReport r = check_script(s);
    CHECK(r.failed_lines == 0);
    CHECK(r.classification() == "PROOF");
    CHECK(primitive_lines(s) == count);
  }
}

TEST_CASE("the mp-induction entry discharges c, d, b, a in order around the closing Gen") {
  Script s = load_corpus("appendixC");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");
  CHECK(primitive_lines(s) == 97);
  // discharge order: c at 97a, d at 97b, Gen at 97c, then b and a
  std::map<std::string, std::string> discharge_at;
  for (const auto& h : r.hypotheses) {
    CHECK(h.status() == "discharged");
    discharge_at[h.name] = h.discharged_at;
  }
  CHECK(discharge_at.at("c") == "97a");
  CHECK(discharge_at.at("d") == "97b");
  CHECK(discharge_at.at("b") == "97e");
  CHECK(discharge_at.at("a") == "97f");
  bool gen_between = false;
  for (const auto& v : r.verdicts)
    if (v.label == "97c" && v.schema_used == "Gen") gen_between = true;
  CHECK(gen_between);
  // the final formula is the mp-induction schema instance consumed by main
  Script main_s = load_corpus("main");
  const FormulaPtr* mp_ind = main_s.hypothesis("mp-ind");
  REQUIRE(mp_ind);
  CHECK(formula_eq(r.final_ast, *mp_ind));
}

TEST_CASE("the reflection entries are proofs modulo their declared lemmas") {
  {
    Script s = load_corpus("appendixD1");
    AuditReport r = check_script(s);
    CHECK(r.failed_lines == 0);
    CHECK(r.classification() == "PROOF");
    CHECK(primitive_lines(s) == 61);
    CHECK(r.axiom_decls_used == std::vector<std::string>{"Lemma-1", "Lemma-2*"});
  }
  {
    Script s = load_corpus("appendixD2");
    AuditReport r = check_script(s);
    CHECK(r.failed_lines == 0);
    CHECK(r.classification() == "PROOF");
    CHECK(primitive_lines(s) == 125);
    CHECK(r.axiom_decls_used == std::vector<std::string>{"Lemma-1", "Lemma-2"});
    // its final line is the basis formula that the main presentation links
    Script main_s = load_corpus("main");
    FormulaPtr line7;
    for (const auto& e : main_s.entries)
      if (auto* sl = std::get_if<ScriptLine>(&e))
        if (sl->last.str() == "7") line7 = sl->formula;
    REQUIRE(line7);
    CHECK(formula_eq(r.final_ast, line7));
  }
}

TEST_CASE("the main entry ends at the consistency formula") {
  Script s = load_corpus("main");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "DEDUCTION");
  // the final line is the negated provability-of-falsum equation, negation
  // expanded, at the least-counterexample description
  FormulaPtr con = negate(mk_atom(
      Pred::Eq, mk_app(Fn::ell, {omega_termoid(), vf_numeroid()}), mk_numeroid(0)));
  CHECK(formula_eq(r.final_ast, con));
  CHECK(r.qed_label == "686a");
  // unlinked, both hypotheses stand
  for (const auto& h : r.hypotheses) CHECK(h.status() == "undischarged");
  // and the chain-inference ledger includes line 7 when it is not linked away
  CHECK(r.rule_conclusions.at("chin").front() == "7");
  CHECK(r.rule_conclusions.at("chin").size() == 66);
}

TEST_CASE("golden determinism across repeated runs") {
  AuditReport a = checked("appendixD2");
  AuditReport b = checked("appendixD2");
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}
