#include <doctest.h>

#include "ari/ari.hpp"

using namespace ari;

namespace {

const char* kImp0Script = R"(script imp0_demo
logic open
system Ari
let A := eq(x1,num(0))
1. imp($A,imp($A,$A)) :: Imp1
2. imp($A,imp(imp($A,$A),$A)) :: Imp1
3. imp(imp($A,imp(imp($A,$A),$A)),imp(imp($A,imp($A,$A)),imp($A,$A))) :: Imp2
4. imp(imp($A,imp($A,$A)),imp($A,$A)) :: MP 2 3
5. imp($A,$A) :: MP 1 4
qed 5
)";

const char* kDeductionScript = R"(script modus_demo
logic open
system Ari
let A := eq(x1,num(0))
let B := lt(x1,x2)
hyp a : imp($A,$B)
hyp b : $A
1. $A :: Hyp b
2. imp($A,$B) :: Hyp a
3. $B :: MP 1 2
discharge b as 4
discharge a as 5
qed 5
)";

}  // namespace

TEST_CASE("a five-line identity proof checks as PROOF") {
  Script s = parse_script(kImp0Script);
  CHECK(s.name == "imp0_demo");
  CHECK(s.entries.size() == 5);
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");
  CHECK(r.qed_matches_final);
  CHECK(r.final_formula == "imp(eq(x1,num(0)),eq(x1,num(0)))");
}

TEST_CASE("discharges turn a deduction into a proof of the implication") {
  Script s = parse_script(kDeductionScript);
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");
  // b discharged first, then a: final is a > (b > B)
  CHECK(r.final_formula == "imp(imp(eq(x1,num(0)),lt(x1,x2)),imp(eq(x1,num(0)),lt(x1,x2)))");
  REQUIRE(r.hypotheses.size() == 2);
  CHECK(r.hypotheses[0].status() == "discharged");
  CHECK(r.hypotheses[1].status() == "discharged");
}

TEST_CASE("undischarged hypotheses classify as DEDUCTION") {
  Script s = parse_script(R"(script ded
logic open
system Ari
hyp h : eq(x1,num(0))
1. eq(x1,num(0)) :: Hyp h
qed 1
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "DEDUCTION");
  CHECK(r.hypotheses[0].status() == "undischarged");
  CHECK(r.hypotheses[0].load_bearing);
}

TEST_CASE("failure verdicts carry reasons, never exceptions") {
  Script s = parse_script(R"(script bad
logic open
system Ari
1. eq(num(0),num(0)) :: Ref
2. eq(num(1),num(1)) :: Ref
3. eq(num(2),num(2)) :: MP 1 2
qed 3
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 1);
  CHECK(r.classification() == "DEDUCTION");
  CHECK(r.verdicts[2].kind == VerdictKind::Failed);
  CHECK(r.verdicts[2].reason.find("implication") != std::string::npos);
}

TEST_CASE("wrong schema citations fail") {
  Script s = parse_script(R"(script bad2
logic open
system Ari
1. imp(eq(x1,num(0)),eq(x2,num(0))) :: Imp1
qed 1
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 1);
}

TEST_CASE("ranges expand to the stated widths") {
  Script s = parse_script(R"(script range_demo
logic open
system Ari
let A := eq(x1,num(0))
let B := lt(x1,x2)
let C := le(num(1),x2)
hyp a : imp($A,$B)
hyp b : imp($B,$C)
1. imp($A,$B) :: Hyp a
2. imp($B,$C) :: Hyp b
3.-7. imp($A,$C) :: DR chin 1 2
discharge b as 8
discharge a as 9
qed 9
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");
  CHECK(r.rule_conclusions.at("chin") == std::vector<std::string>{"7"});
  // a wrong width is rejected
  Script bad = parse_script(R"(script range_bad
logic open
system Ari
hyp a : imp(eq(x1,num(0)),lt(x1,x2))
hyp b : imp(lt(x1,x2),le(num(1),x2))
1. imp(eq(x1,num(0)),lt(x1,x2)) :: Hyp a
2. imp(lt(x1,x2),le(num(1),x2)) :: Hyp b
3.-8. imp(eq(x1,num(0)),le(num(1),x2)) :: DR chin 1 2
discharge b as 9
discharge a as 10
qed 10
)");
  AuditReport rb = check_script(bad);
  CHECK(rb.failed_lines == 1);
  CHECK(rb.verdicts[2].reason.find("width") != std::string::npos);
}

TEST_CASE("generalization bookkeeping") {
  // Gen over a variable free in an active hypothesis is recorded, and Gen
  // after discharge is clean
  Script s = parse_script(R"(script gen_demo
logic open
system Ari
hyp c : eq(x1,num(0))
1. eq(x1,num(0)) :: Hyp c
discharge c as 2
3. all(x1,imp(eq(x1,num(0)),eq(x1,num(0)))) :: Gen 2 x1
qed 3
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  bool has_capture = false;
  for (const auto& o : r.obligations)
    if (o.kind == ObligationKind::HypCaptureGen) has_capture = true;
  CHECK_FALSE(has_capture);

  Script cap = parse_script(R"(script gen_capture
logic open
system Ari
hyp c : eq(x1,num(0))
1. eq(x1,num(0)) :: Hyp c
2. all(x1,eq(x1,num(0))) :: Gen 1 x1
qed 2
)");
  AuditReport rc = check_script(cap);
  CHECK(rc.failed_lines == 0);
  bool captured = false;
  for (const auto& o : rc.obligations)
    if (o.kind == ObligationKind::HypCaptureGen) captured = true;
  CHECK(captured);

  // a parameter generalized before its hypotheses are discharged is flagged;
  // a hypothesis-free generalization over the same parameter is not
  Script par = parse_script(R"(script gen_param
logic open
system Ari
param x1
hyp c : eq(x1,num(0))
1. eq(x1,num(0)) :: Hyp c
2. all(x1,eq(x1,num(0))) :: Gen 1 x1
3. eq(x1,x1) :: Ref
4. all(x1,eq(x1,x1)) :: Gen 3 x1
qed 4
)");
  AuditReport rp = check_script(par);
  CHECK(rp.failed_lines == 0);
  int param_flags = 0;
  for (const auto& o : rp.obligations)
    if (o.kind == ObligationKind::ParamGen) ++param_flags;
  CHECK(param_flags == 1);
  for (const auto& o : rp.obligations)
    if (o.kind == ObligationKind::ParamGen) CHECK(o.origin == "2");

  // closed logic rejects Gen outright
  Script closed = parse_script(R"(script gen_closed
logic closed
system Ari
1. all(x1,eq(x1,x1)) :: Ref
2. all(x2,all(x1,eq(x1,x1))) :: Gen 1 x2
qed 2
)");
  AuditReport rx = check_script(closed);
  CHECK(rx.failed_lines >= 1);
}

TEST_CASE("bare discharge directives auto-label") {
  Script s = parse_script(R"(script bare
logic open
system Ari
hyp h : eq(x1,num(0))
hyp g : lt(x1,x2)
1. eq(x1,num(0)) :: Hyp h
2. lt(x1,x2) :: Hyp g
discharge g
discharge h
qed 2b
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");
  CHECK(r.verdicts[2].label == "2a");
  CHECK(r.verdicts[3].label == "2b");
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(parse_script("script x\n1. bot :: Ref\n"), MonotonicityError);  // no qed
  CHECK_THROWS_AS(parse_script("script x\n2. bot :: Imp0\n1. bot :: Imp0\nqed 1\n"),
                  MonotonicityError);
  CHECK_THROWS_AS(parse_script("script x\n1. bot :: Imp0\n1. bot :: Imp0\nqed 1\n"),
                  ScriptError);
  CHECK_THROWS_AS(parse_script("script x\nqed 1\n"), MonotonicityError);
  CHECK_THROWS_AS(parse_script("script x\n1. bot :: Zorp\nqed 1\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("script x\n1. eq(num(0) :: Ref\nqed 1\n"), ScriptError);
}

TEST_CASE("determinism and prefix monotonicity") {
  Script s = parse_script(kDeductionScript);
  AuditReport r1 = check_script(s);
  AuditReport r2 = check_script(s);
  CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());

  // appending lines never changes earlier verdicts
  Script longer = parse_script(R"(script modus_demo
logic open
system Ari
let A := eq(x1,num(0))
let B := lt(x1,x2)
hyp a : imp($A,$B)
hyp b : $A
1. $A :: Hyp b
2. imp($A,$B) :: Hyp a
3. $B :: MP 1 2
4. imp($B,or($B,$A)) :: Dis1
5. or($B,$A) :: MP 3 4
discharge b as 6
discharge a as 7
qed 7
)");
  AuditReport rl = check_script(longer);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rl.verdicts[i].kind == r1.verdicts[i].kind);
    CHECK(rl.verdicts[i].label == r1.verdicts[i].label);
  }
}

TEST_CASE("nu-schema lines and translation-backed schema lines") {
  Script s = parse_script(R"(script nu_demo
logic open
system AriNu
param x1
1. imp(eq(exp0(x1),exp0(x1)),imp(F(exp0(x1)),F(exp0(x1)))) :: LEA1nu
2. imp(F(vf),bot) :: Imp0
3. imp(eq(num(0),num(0)),imp(F(num(0)),F(num(0)))) :: LEA1nu
qed 3
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.nu_instances_deferred == 1);   // open subscript at line 1
  CHECK(r.nu_instances_replayed == 1);   // line 3 materializes
  CHECK(r.verdicts[1].reason.find("translating") != std::string::npos);
  bool feasibility = false;
  for (const auto& o : r.obligations)
    if (o.kind == ObligationKind::Feasibility) feasibility = true;
  CHECK(feasibility);
}

TEST_CASE("axiom declarations are ledgered, not failures") {
  Script s = parse_script(R"(script decl_demo
logic open
system Ari
axiomdecl Lemma-X : eq(num(7),num(7))
1. eq(num(7),num(7)) :: AxiomDecl Lemma-X
qed 1
)");
  AuditReport r = check_script(s);
  CHECK(r.failed_lines == 0);
  CHECK(r.classification() == "PROOF");  // proofs modulo declared axioms
  REQUIRE(r.axiom_decls_used.size() == 1);
  CHECK(r.axiom_decls_used[0] == "Lemma-X");
  CHECK_FALSE(r.residue_empty());
}

TEST_CASE("linkage discharges hypotheses and imports residue") {
  Script target = parse_script(R"(script target
logic open
system Ari
hyp lemma : eq(num(7),num(7))
1. eq(num(7),num(7)) :: Hyp lemma
2. imp(eq(num(7),num(7)),or(eq(num(7),num(7)),bot)) :: Dis1
3. or(eq(num(7),num(7)),bot) :: MP 1 2
qed 3
)");
  Script lemma_proof = parse_script(R"(script lemma_proof
logic open
system Ari
axiomdecl Inner : eq(num(7),num(7))
1. eq(num(7),num(7)) :: AxiomDecl Inner
qed 1
)");
  AuditResult ar = audit(target, {{"lemma", lemma_proof}});
  CHECK(ar.linkage_errors.empty());
  CHECK(ar.target.failed_lines == 0);
  CHECK(ar.target.classification() == "PROOF");
  REQUIRE(ar.target.hypotheses.size() == 1);
  CHECK(ar.target.hypotheses[0].status() == "discharged-by-linkage");
  REQUIRE(ar.target.imported_residue.size() == 1);
  CHECK(ar.target.imported_residue[0] == "Inner");

  // a mismatched link is reported
  Script wrong = parse_script(R"(script wrong
logic open
system Ari
1. eq(num(8),num(8)) :: Ref
qed 1
)");
  AuditResult bad = audit(target, {{"lemma", wrong}});
  CHECK_FALSE(bad.linkage_errors.empty());
  CHECK(bad.linkage_errors[0].find("LinkageMismatch") != std::string::npos);
}

TEST_CASE("empty corpus audit leaves every hypothesis undischarged") {
  Script target = parse_script(R"(script t
logic open
system Ari
hyp h1 : eq(num(1),num(1))
hyp h2 : eq(num(2),num(2))
1. eq(num(1),num(1)) :: Hyp h1
2. eq(num(2),num(2)) :: Hyp h2
qed 2
)");
  AuditResult ar = audit(target, {});
  for (const auto& h : ar.target.hypotheses) CHECK(h.status() == "undischarged");
  CHECK(ar.target.classification() == "DEDUCTION");
}

TEST_CASE("report formats agree on verdict counts") {
  Script s = parse_script(kDeductionScript);
  AuditReport r = check_script(s);
  auto j = report_to_json(r);
  std::string text = report_to_text(r);
  CHECK(j["verdicts"].size() == r.verdicts.size());
  CHECK(text.find("PROOF") != std::string::npos);
  // a structured report is valid JSON and stable
  CHECK(nlohmann::json::parse(j.dump()) == nlohmann::json::parse(report_to_json(r).dump()));
}

TEST_CASE("sba lines respect strict capture with per-line override") {
  const char* text = R"(script sba_cap
logic open
system Ari
1. imp(all(x2,exists(x1,lt(x1,x2))),exists(x1,lt(x1,x1))) :: SBA1 @ x1{PERM}
qed 1
)";
  std::string strict_text = text;
  std::size_t pos = strict_text.find("{PERM}");
  strict_text.replace(pos, 6, "");
  Script strict_script = parse_script(strict_text);
  AuditReport strict_report = check_script(strict_script);
  CHECK(strict_report.failed_lines == 1);

  std::string permissive_text = text;
  pos = permissive_text.find("{PERM}");
  permissive_text.replace(pos, 6, " permissive");
  Script permissive_script = parse_script(permissive_text);
  AuditReport permissive_report = check_script(permissive_script);
  CHECK(permissive_report.failed_lines == 0);
  bool violated_recorded = false;
  for (const auto& o : permissive_report.obligations)
    if (o.kind == ObligationKind::FreeFor && o.violated) violated_recorded = true;
  CHECK(violated_recorded);
}
