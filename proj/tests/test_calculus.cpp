#include <doctest.h>

#include <random>

#include "ari/ari.hpp"

using namespace ari;

static FormulaPtr F(const char* text) { return parse_formula(text); }

TEST_CASE("propositional schema recognizers") {
  auto A = F("eq(x1,num(0))");
  auto B = F("lt(x1,x2)");
  auto C = F("le(num(1),x2)");

  CHECK(try_schema(SchemaId::Imp1, mk_imp(A, mk_imp(B, A)), false).has_value());
  // equal metavariables still give an Imp1 instance
  CHECK(try_schema(SchemaId::Imp1, mk_imp(A, mk_imp(A, A)), false).has_value());
  CHECK_FALSE(try_schema(SchemaId::Imp1, mk_imp(A, mk_imp(B, B)), false).has_value());
  CHECK(try_schema(SchemaId::Imp0, mk_imp(A, A), false).has_value());
  CHECK(try_schema(SchemaId::Imp3, mk_imp(falsum(), B), false).has_value());
  CHECK_FALSE(try_schema(SchemaId::Imp3, mk_imp(A, B), false).has_value());

  FormulaPtr imp2 = mk_imp(mk_imp(A, mk_imp(B, C)),
                           mk_imp(mk_imp(A, B), mk_imp(A, C)));
  CHECK(try_schema(SchemaId::Imp2, imp2, false).has_value());

  CHECK(try_schema(SchemaId::Con1, mk_imp(mk_and(A, B), A), false).has_value());
  CHECK(try_schema(SchemaId::Con2, mk_imp(mk_and(A, B), B), false).has_value());
  CHECK(try_schema(SchemaId::Con3, mk_imp(A, mk_imp(B, mk_and(A, B))), false).has_value());
  CHECK(try_schema(SchemaId::Dis1, mk_imp(A, mk_or(A, B)), false).has_value());
  CHECK(try_schema(SchemaId::Dis2, mk_imp(B, mk_or(A, B)), false).has_value());
  FormulaPtr dis3 = mk_imp(mk_and(mk_imp(A, C), mk_imp(B, C)), mk_imp(mk_or(A, B), C));
  CHECK(try_schema(SchemaId::Dis3, dis3, false).has_value());
}

TEST_CASE("quantifier schema recognizers") {
  auto A = F("eq(num(2),num(2))");       // x1 not free
  auto Cx = F("eq(x1,num(0))");          // x1 free
  CHECK(try_schema(SchemaId::Fi1, mk_imp(mk_forall(1, A), A), false).has_value());
  CHECK(try_schema(SchemaId::Fi2, mk_imp(A, mk_forall(1, A)), false).has_value());
  CHECK(try_schema(SchemaId::Fi3, mk_imp(A, mk_exists(1, A)), false).has_value());
  CHECK(try_schema(SchemaId::Fi4, mk_imp(mk_exists(1, A), A), false).has_value());
  // WBA needs the variable to occur freely and the same variable on both sides
  CHECK(try_schema(SchemaId::WBAA, mk_imp(mk_forall(1, Cx), Cx), false).has_value());
  CHECK_FALSE(try_schema(SchemaId::WBAA, mk_imp(mk_forall(1, A), A), false).has_value());
  CHECK(try_schema(SchemaId::WBAE, mk_imp(Cx, mk_exists(1, Cx)), false).has_value());
  auto disq_ok = mk_imp(mk_forall(1, mk_imp(Cx, A)),
                        mk_imp(mk_forall(1, Cx), mk_forall(1, A)));
  CHECK(try_schema(SchemaId::DisQ, disq_ok, false).has_value());
  // mismatched bodies break the distribution shape
  auto disq_bad = mk_imp(mk_forall(1, mk_imp(Cx, A)),
                         mk_imp(mk_forall(1, A), mk_forall(1, Cx)));
  CHECK_FALSE(try_schema(SchemaId::DisQ, disq_bad, false).has_value());
  auto br = mk_imp(mk_forall(1, mk_imp(Cx, A)), mk_imp(mk_exists(1, Cx), A));
  CHECK(try_schema(SchemaId::BR, br, false).has_value());
}

TEST_CASE("equality schema recognizers") {
  CHECK(try_schema(SchemaId::Ref, F("eq(add(x1,num(2)),add(x1,num(2)))"), false).has_value());
  CHECK_FALSE(try_schema(SchemaId::Ref, F("eq(x1,x2)"), false).has_value());
  CHECK(try_schema(SchemaId::SymEq, F("imp(eq(x1,x2),eq(x2,x1))"), false).has_value());
  // LEA1: r = s > (P(r,t) > P(s,t))
  CHECK(try_schema(SchemaId::LEA1Eq,
                   F("imp(eq(ell1(x1),num(0)),imp(eq(ell1(x1),num(1)),eq(num(0),num(1))))"),
                   false)
            .has_value());
  // LEA2: r = s > (P(t,r) > P(t,s))
  CHECK(try_schema(SchemaId::LEA2Eq,
                   F("imp(eq(mp(exp1(x1),exp2(x1)),num(4)),imp(eq(x1,mp(exp1(x1),exp2(x1))),eq(x1,num(4))))"),
                   false)
            .has_value());
  // replacement: sg-occurrence replaced by num(0)
  CHECK(try_schema(SchemaId::LEArp,
                   F("imp(eq(sg(x2),num(0)),eq(mul(x1,sg(x2)),mul(x1,num(0))))"), false)
            .has_value());
  CHECK_FALSE(try_schema(SchemaId::LEArp,
                         F("imp(eq(sg(x2),num(0)),eq(mul(x1,sg(x2)),mul(x2,num(0))))"), false)
                  .has_value());
}

TEST_CASE("substitution axioms emit obligations") {
  // ES: exists x1 (x1 = t), x1 not free in t
  auto es = try_schema(SchemaId::ES, F("exists(x1,eq(x1,num(4)))"), false);
  REQUIRE(es.has_value());
  CHECK(es->obligations.size() == 2);

  // SBA1 at t: all x1 C(x1) > C(t)
  FormulaPtr ax = F("all(x1,eq(x1,x1))");
  FormulaPtr inst = F("imp(all(x1,eq(x1,x1)),eq(num(3),num(3)))");
  auto m = try_schema(SchemaId::SBA1, inst, false, parse_termoid("num(3)"));
  REQUIRE(m.has_value());
  for (const auto& o : m->obligations) CHECK_FALSE(o.violated);
  // wrong termoid annotation fails
  CHECK_FALSE(try_schema(SchemaId::SBA1, inst, false, parse_termoid("num(4)")).has_value());
  // SBA2: C(t) > exists x1 C(x1)
  FormulaPtr inst2 = F("imp(eq(num(3),num(3)),exists(x1,eq(x1,x1)))");
  CHECK(try_schema(SchemaId::SBA2, inst2, false, parse_termoid("num(3)")).has_value());
  // capture is recorded on the FreeFor obligation
  FormulaPtr capt = F("imp(all(x2,exists(x1,lt(x1,x2))),exists(x1,lt(x1,x1)))");
  auto mc = try_schema(SchemaId::SBA1, capt, false, parse_termoid("x1"));
  REQUIRE(mc.has_value());
  bool violated = false;
  for (const auto& o : mc->obligations)
    if (o.kind == ObligationKind::FreeFor && o.violated) violated = true;
  CHECK(violated);
}

TEST_CASE("non-logical recognizers") {
  CHECK(try_schema(SchemaId::TND, F("or(eq(x1,num(0)),neg(eq(x1,num(0))))"), false).has_value());
  CHECK(try_schema(SchemaId::DNE, F("imp(neg(neg(eq(x1,num(0)))),eq(x1,num(0)))"), false).has_value());
  // course-of-values induction over phi(m) := ell1(m) = 0 > F(exp0(m)) analog
  FormulaPtr cvi = F(
      "imp(all(x1,imp(all(x2,imp(lt(x2,x1),eq(ell1(x2),num(0)))),eq(ell1(x1),num(0)))),"
      "all(x1,eq(ell1(x1),num(0))))");
  CHECK(try_schema(SchemaId::CVI, cvi, false).has_value());
  // Peano induction
  FormulaPtr ind = F(
      "imp(and(eq(num(0),num(0)),all(x1,imp(eq(x1,x1),eq(suc(x1),suc(x1))))),all(x1,eq(x1,x1)))");
  CHECK(try_schema(SchemaId::IndPeano, ind, false).has_value());
  // numeroidal axiom
  CHECK(try_schema(SchemaId::NumeroidAx, F("eq(suc(suc(num(0))),num(2))"), false).has_value());
  CHECK(try_schema(SchemaId::NumeroidAx, F("eq(num(3),suc(suc(suc(num(0)))))"), false).has_value());
  CHECK_FALSE(try_schema(SchemaId::NumeroidAx, F("eq(suc(num(0)),num(2))"), false).has_value());
  // elementary table
  CHECK(try_schema(SchemaId::ElemAx, F("or(eq(sg(x1),num(0)),eq(sg(x1),num(1)))"), false,
                   nullptr, "sg_dichotomy")
            .has_value());
  CHECK(try_schema(SchemaId::ElemAx, F("eq(mul(Mp(exp1(x1),exp2(x1)),num(0)),num(0))"), false,
                   nullptr, "mul_zero")
            .has_value());
  CHECK(try_schema(SchemaId::ElemAx, F("imp(eq(ssg(msd(x1,x2)),num(1)),eq(x1,x2))"), false,
                   nullptr, "ssg_msd_eq")
            .has_value());
  // closed variants strip their closure
  CHECK(try_schema(SchemaId::ElemAx, F("all(x1,imp(neg(eq(x1,num(0))),lt(exp1(x1),x1)))"), false,
                   nullptr, "exp1_lt")
            .has_value());
  // Gauss laws
  CHECK(try_schema(SchemaId::Ga, F("eq(exp0(pow(num(2),x1)),x1)"), false, nullptr, "Ga0")
            .has_value());
  CHECK(try_schema(SchemaId::Ga,
                   F("eq(exp1(mul(mul(pow(num(2),num(3)),pow(num(3),x1)),pow(num(5),x2))),x1)"),
                   false, nullptr, "Ga1")
            .has_value());
  CHECK_FALSE(try_schema(SchemaId::Ga, F("eq(exp2(pow(num(2),x1)),x1)"), false).has_value());
}

TEST_CASE("axiom-definitions") {
  CHECK(try_schema(SchemaId::DefAx,
                   F("eq(mp(exp1(x1),exp2(x1)),mul(mul(Mp(exp1(x1),exp2(x1)),e(exp1(x1),exp2(x1))),sg(exp1(x1))))"),
                   false, nullptr, "def_mp")
            .has_value());
  CHECK(try_schema(SchemaId::DefAx,
                   F("eq(Mp(exp1(x1),exp2(x1)),mul(mul(pow(num(2),exp02(exp2(x1))),pow(num(3),exp1(x1))),pow(num(5),exp2(x1))))"),
                   false, nullptr, "def_Mp")
            .has_value());
  CHECK(try_schema(SchemaId::DefAx, F("eq(exp0(exp0(exp2(x1))),exp00(exp2(x1)))"), false,
                   nullptr, "def_exp00")
            .has_value());
  // the df1 closure used by the corpus
  FormulaPtr df1 = F(
      "all(x2,imp(and(eq(x2,pow(num(2),exp0(x2))),eq(ax(exp0(x2)),num(0))),eq(ell1(x2),num(0))))");
  CHECK(try_schema(SchemaId::DefAx, df1, false, nullptr, "df1_ell1").has_value());
  // instances at arbitrary termoids are also accepted
  FormulaPtr def1_inst = F(
      "imp(eq(ell(omega,vf),num(0)),and(eq(ell1(omega),num(0)),eq(exp0(omega),vf)))");
  CHECK(try_schema(SchemaId::DefAx, def1_inst, false, nullptr, "def1_ell").has_value());
  CHECK_FALSE(try_schema(SchemaId::DefAx, def1_inst, false, nullptr, "def2_ell").has_value());
}

TEST_CASE("description axioms") {
  FormulaPtr m_omega = omega_matrix(omega_termoid());
  CHECK(try_schema(SchemaId::MOmega, m_omega, false).has_value());
  // M(omega) is also the Rosser instantiation of its own description
  CHECK(try_schema(SchemaId::Rosser11, m_omega, false).has_value());
  CHECK_FALSE(try_schema(SchemaId::Rosser11, falsum(), false).has_value());
}

TEST_CASE("closed-mode matching strips closures") {
  auto A = F("eq(x1,num(0))");
  FormulaPtr open_imp1 = mk_imp(A, mk_imp(A, A));
  // open instance is rejected in closed mode
  CHECK_FALSE(try_schema(SchemaId::Imp1, open_imp1, true).has_value());
  FormulaPtr closed = mk_forall(1, open_imp1);
  CHECK(try_schema(SchemaId::Imp1, closed, true).has_value());
}

TEST_CASE("inference rules") {
  auto A = F("eq(x1,num(0))");
  auto B = F("lt(x1,x2)");
  CHECK(formula_eq(apply_mp(A, mk_imp(A, B)), B));
  CHECK_THROWS_AS(apply_mp(A, B), NotImplication);
  CHECK_THROWS_AS(apply_mp(B, mk_imp(A, B)), AntecedentMismatch);

  CHECK(formula_eq(apply_gen(A, 1, true, {}), mk_forall(1, A)));
  CHECK_THROWS_AS(apply_gen(falsum(), 1, true, {}), VariableNotFree);
  CHECK_THROWS_AS(apply_gen(A, 1, false, {}), ClosedModeViolation);
  CHECK_THROWS_AS(apply_gen(A, 1, true, {A}), HypothesisCapture);
}

TEST_CASE("derived-rule expansions have the fixed lengths") {
  auto A = F("eq(x1,num(0))");
  auto B = F("lt(x1,x2)");
  auto C = F("le(num(1),x2)");
  CHECK(expand_derived(DerivedRule::Imp0, {}, mk_imp(A, A)).size() == 5);
  CHECK(expand_derived(DerivedRule::ChIn, {mk_imp(A, B), mk_imp(B, C)}, mk_imp(A, C)).size() == 5);
  CHECK(expand_derived(DerivedRule::ChIn2, {mk_imp(A, mk_imp(B, C)), B}, mk_imp(A, C)).size() == 5);
  FormulaPtr fla2 = mk_imp(mk_imp(B, C), mk_imp(mk_imp(A, B), mk_imp(A, C)));
  CHECK(expand_derived(DerivedRule::ChInFla2, {}, fla2).size() == 7);
  CHECK(expand_derived(DerivedRule::IntAnt, {mk_imp(A, mk_imp(B, C))}, nullptr).size() == 8);
  FormulaPtr ia2 = mk_imp(mk_imp(A, mk_imp(B, C)), mk_imp(B, mk_imp(A, C)));
  CHECK(expand_derived(DerivedRule::IntAnt2, {}, ia2).size() == 19);
  CHECK(expand_derived(DerivedRule::Contrap, {mk_imp(A, B)}, nullptr).size() == 12);
  FormulaPtr c2 = mk_imp(mk_imp(A, B), mk_imp(negate(B), negate(A)));
  CHECK(expand_derived(DerivedRule::Contrap2, {}, c2).size() == 15);
  CHECK(expand_derived(DerivedRule::Mtp2, {mk_or(A, B)}, nullptr).size() == 20);
  CHECK(expand_derived(DerivedRule::Mtp1, {mk_or(A, B), negate(A)}, nullptr).size() == 17);
  CHECK_THROWS_AS(expand_derived(DerivedRule::ChIn, {mk_imp(A, B), mk_imp(C, B)}, nullptr),
                  ShapeMismatch);
}

TEST_CASE("expansion conclusions") {
  auto A = F("eq(x1,num(0))");
  auto B = F("lt(x1,x2)");
  auto C = F("le(num(1),x2)");
  CHECK(formula_eq(expand_derived(DerivedRule::ChIn, {mk_imp(A, B), mk_imp(B, C)}, nullptr)
                       .back()
                       .formula,
                   mk_imp(A, C)));
  CHECK(formula_eq(expand_derived(DerivedRule::IntAnt, {mk_imp(A, mk_imp(B, C))}, nullptr)
                       .back()
                       .formula,
                   mk_imp(B, mk_imp(A, C))));
  CHECK(formula_eq(expand_derived(DerivedRule::Contrap, {mk_imp(A, B)}, nullptr).back().formula,
                   mk_imp(negate(B), negate(A))));
  CHECK(formula_eq(expand_derived(DerivedRule::Mtp2, {mk_or(A, B)}, nullptr).back().formula,
                   mk_imp(negate(A), B)));
  CHECK(formula_eq(expand_derived(DerivedRule::Mtp1, {mk_or(A, B), negate(A)}, nullptr)
                       .back()
                       .formula,
                   B));
  CHECK(formula_eq(expand_derived(DerivedRule::Imp0, {}, mk_imp(falsum(), falsum()))
                       .back()
                       .formula,
                   mk_imp(falsum(), falsum())));
}

// every expansion line must itself verify: axiom lines match a schema, MP
// lines follow from two earlier lines or the rule's premises
static void verify_expansion(const std::vector<ExpansionLine>& lines,
                             const std::vector<FormulaPtr>& premises) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& j = lines[i].justification;
    if (j.rfind("MP", 0) == 0) {
      // find minor and major among earlier lines and premises
      bool ok = false;
      auto candidates = premises;
      for (std::size_t k = 0; k < i; ++k) candidates.push_back(lines[k].formula);
      for (const auto& minor : candidates) {
        for (const auto& major : candidates) {
          try {
            if (formula_eq(apply_mp(minor, major), lines[i].formula)) ok = true;
          } catch (const RuleError&) {
          }
          if (ok) break;
        }
        if (ok) break;
      }
      CHECK(ok);
    } else if (j != "computed disequality" && j.rfind("chin", 0) != 0) {
      auto s = ari::script_detail::schema_by_name(j);
      REQUIRE(s.has_value());
      CHECK(try_schema(*s, lines[i].formula, false).has_value());
    }
  }
}

TEST_CASE("expansions verify line by line under randomized instantiation") {
  std::mt19937_64 rng(23);
  auto rnd = [&]() {
    switch (rng() % 4) {
      case 0: return F("eq(x1,num(0))");
      case 1: return F("lt(x2,x1)");
      case 2: return falsum();
      default: return F("F(exp0(x1))");
    }
  };
  for (int round = 0; round < 250; ++round) {
    FormulaPtr A = rnd(), B = rnd(), C = rnd();
    verify_expansion(expand_derived(DerivedRule::Imp0, {}, mk_imp(A, A)), {});
    verify_expansion(expand_derived(DerivedRule::ChIn, {mk_imp(A, B), mk_imp(B, C)}, nullptr),
                     {mk_imp(A, B), mk_imp(B, C)});
    verify_expansion(expand_derived(DerivedRule::ChIn2, {mk_imp(A, mk_imp(B, C)), B}, nullptr),
                     {mk_imp(A, mk_imp(B, C)), B});
    verify_expansion(
        expand_derived(DerivedRule::ChInFla2, {},
                       mk_imp(mk_imp(B, C), mk_imp(mk_imp(A, B), mk_imp(A, C)))),
        {});
    verify_expansion(expand_derived(DerivedRule::IntAnt, {mk_imp(A, mk_imp(B, C))}, nullptr),
                     {mk_imp(A, mk_imp(B, C))});
    verify_expansion(
        expand_derived(DerivedRule::IntAnt2, {},
                       mk_imp(mk_imp(A, mk_imp(B, C)), mk_imp(B, mk_imp(A, C)))),
        {});
    verify_expansion(expand_derived(DerivedRule::Contrap, {mk_imp(A, B)}, nullptr),
                     {mk_imp(A, B)});
    verify_expansion(
        expand_derived(DerivedRule::Contrap2, {}, mk_imp(mk_imp(A, B), mk_imp(negate(B), negate(A)))),
        {});
    verify_expansion(expand_derived(DerivedRule::Mtp2, {mk_or(A, B)}, nullptr), {mk_or(A, B)});
    verify_expansion(expand_derived(DerivedRule::Mtp1, {mk_or(A, B), negate(A)}, nullptr),
                     {mk_or(A, B), negate(A)});
  }
}

TEST_CASE("schema match round trip: bindings reproduce the candidate") {
  auto A = F("eq(x1,num(0))");
  auto B = F("lt(x1,x2)");
  FormulaPtr cand = mk_imp(A, mk_imp(B, A));
  auto m = try_schema(SchemaId::Imp1, cand, false);
  REQUIRE(m.has_value());
  CHECK(formula_eq(mk_imp(m->fbind.at("A"), mk_imp(m->fbind.at("B"), m->fbind.at("A"))), cand));
}
