#include <doctest.h>

#include <random>

#include "ari/ari.hpp"

using namespace ari;

TEST_CASE("free variables") {
  CHECK(free_vars(mk_numeroid(5)).empty());
  FormulaPtr f = mk_imp(mk_atom(Pred::Eq, mk_var(1), mk_numeroid(0)), falsum());
  CHECK(free_vars(f) == std::set<std::uint32_t>{1});
  FormulaPtr g = mk_forall(1, mk_atom(Pred::Lt, mk_var(1), mk_var(2)));
  CHECK(free_vars(g) == std::set<std::uint32_t>{2});
  // Kleene subscripts contribute their free variables
  FormulaPtr k = mk_kleene(mk_app(Fn::exp0, {mk_var(3)}));
  CHECK(free_vars(k) == std::set<std::uint32_t>{3});
  // iota binds
  CHECK(free_vars(omega_termoid()).empty());
}

TEST_CASE("substitution and capture") {
  FormulaPtr f = mk_atom(Pred::Eq, mk_var(1), mk_numeroid(0));
  SubstResult r = substitute(f, 1, mk_numeroid(3));
  CHECK(r.capture_ok);
  CHECK(formula_eq(r.formula, mk_atom(Pred::Eq, mk_numeroid(3), mk_numeroid(0))));

  // substituting x1 into the scope of a binder for x1's replacement captures
  FormulaPtr g = mk_forall(1, mk_atom(Pred::Lt, mk_var(2), mk_var(1)));
  SubstResult bad = substitute(g, 2, mk_var(1));
  CHECK_FALSE(bad.capture_ok);
  CHECK_THROWS_AS(substitute(g, 2, mk_var(1), true), CaptureViolation);

  // identity substitution
  SubstResult idr = substitute(g, 2, mk_var(2));
  CHECK(idr.capture_ok);
  CHECK(formula_eq(idr.formula, g));

  // no-free-occurrence substitution leaves the formula alone
  SubstResult none = substitute(g, 7, mk_numeroid(1));
  CHECK(formula_eq(none.formula, g));
}

TEST_CASE("negate is notation") {
  FormulaPtr e = mk_atom(Pred::Eq, mk_var(1), mk_numeroid(0));
  CHECK(formula_eq(negate(e), mk_imp(e, falsum())));
  CHECK(formula_eq(negate(falsum()), mk_imp(falsum(), falsum())));
  // no involution at the syntax level
  CHECK(formula_eq(negate(negate(e)), mk_imp(mk_imp(e, falsum()), falsum())));
}

TEST_CASE("closure") {
  CHECK(formula_eq(closure(falsum(), {}), falsum()));
  FormulaPtr e = mk_atom(Pred::Eq, mk_var(1), mk_var(1));
  CHECK(formula_eq(closure(e, {1}), mk_forall(1, e)));
  FormulaPtr two = mk_atom(Pred::Lt, mk_var(1), mk_var(2));
  CHECK(formula_eq(closure(two, {1, 2}), mk_forall(1, mk_forall(2, two))));
  CHECK_THROWS_AS(closure(two, {1}), IncompleteClosure);
}

TEST_CASE("parser basics") {
  CHECK(formula_eq(parse_formula("eq(num(0),num(1))"), falsum()));
  CHECK(formula_eq(parse_formula("bot"), falsum()));
  CHECK(formula_eq(parse_formula("neg(eq(x1,num(0)))"),
                   negate(mk_atom(Pred::Eq, mk_var(1), mk_numeroid(0)))));
  FormulaPtr con_matrix = parse_formula("imp(eq(ell(x1,vf),num(0)),bot)");
  auto* imp = std::get_if<Formula::Connective>(&con_matrix->node);
  REQUIRE(imp);
  // Kleene atom with an exponent subscript
  FormulaPtr t_ax_consequent = parse_formula("F(exp0(x1))");
  CHECK(formula_eq(t_ax_consequent, mk_kleene(mk_app(Fn::exp0, {mk_var(1)}))));
  CHECK_THROWS_AS(parse_formula("eq(num(0)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("zzz(x1)"), SyntaxError);
}

TEST_CASE("vf and omega sugar") {
  TermPtr vf = parse_termoid("vf");
  auto* n = std::get_if<Termoid::Numeroid>(&vf->node);
  REQUIRE(n);
  CHECK(code_eq(n->length, falsum_code_constant()));
  TermPtr om = parse_termoid("omega");
  CHECK(term_eq(om, omega_termoid()));
  CHECK(is_closed(om));
  // nu evaluates constant termoids
  TermPtr nu2 = parse_termoid("nu(num(2))");
  CHECK(term_eq(nu2, mk_numeroid(2)));
  TermPtr big = parse_termoid("nu(pow(num(2),num(10)))");
  auto* bn = std::get_if<Termoid::Numeroid>(&big->node);
  REQUIRE(bn);
  CHECK(code_eq(bn->length, code_lit(1024)));
  // nuF(t) abbreviates nuv(piF(t))
  CHECK(term_eq(parse_termoid("nuF(exp0(x1))"),
                mk_nu_image(mk_pi_gen(mk_app(Fn::exp0, {mk_var(1)})))));
}

TEST_CASE("instantiating the course-of-values hypothesis at an exponent") {
  // substituting exp1(x1) for the bound x2 in the body of the hypothesis
  // all(x2, x2 < x1 > (ell1(x2) = 0 > F(exp0(x2)))) yields the guard line
  // used right after it in the mp-induction entry
  FormulaPtr body = parse_formula(
      "imp(lt(x2,x1),imp(eq(ell1(x2),num(0)),F(exp0(x2))))");
  SubstResult r = substitute(body, 2, parse_termoid("exp1(x1)"));
  CHECK(r.capture_ok);
  CHECK(formula_eq(r.formula, parse_formula(
      "imp(lt(exp1(x1),x1),imp(eq(ell1(exp1(x1)),num(0)),F(exp0(exp1(x1)))))")));
}

TEST_CASE("print/parse round trip on random formulas") {
  std::mt19937_64 rng(7);
  auto rnd_term = [&](auto&& self, int depth) -> TermPtr {
    switch (rng() % (depth > 0 ? 5 : 2)) {
      case 0: return mk_var(static_cast<std::uint32_t>(rng() % 3 + 1));
      case 1: return mk_numeroid(rng() % 10);
      case 2: return mk_app(Fn::suc, {self(self, depth - 1)});
      case 3: return mk_app(Fn::add, {self(self, depth - 1), self(self, depth - 1)});
      default: return mk_app(Fn::exp0, {self(self, depth - 1)});
    }
  };
  auto rnd_formula = [&](auto&& self, int depth) -> FormulaPtr {
    switch (rng() % (depth > 0 ? 5 : 2)) {
      case 0: return mk_atom(Pred::Eq, rnd_term(rnd_term, depth), rnd_term(rnd_term, depth));
      case 1: return mk_atom(Pred::Lt, rnd_term(rnd_term, depth), rnd_term(rnd_term, depth));
      case 2: return mk_imp(self(self, depth - 1), self(self, depth - 1));
      case 3: return mk_forall(static_cast<std::uint32_t>(rng() % 3 + 1), self(self, depth - 1));
      default: return mk_kleene(rnd_term(rnd_term, depth - 1));
    }
  };
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = rnd_formula(rnd_formula, 3);
    CHECK(formula_eq(parse_formula(to_string(f)), f));
  }
}
