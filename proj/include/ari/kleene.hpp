// The open extension: Kleene atoms F_r, the three additional axiom schemata
// governing them, and the translation of Kleene formulae back into the base
// language. A Kleene atom with subscript r names the closed formula whose
// enumeration number is fl(r); translation computes that formula when the
// subscript's value materializes and reports a feasibility failure otherwise.
#pragma once

#include "ari/arithmetization.hpp"
#include "ari/calculus.hpp"

namespace ari {

// ---------------------------------------------------------------------------
// nu-schema recognition

inline std::optional<SchemaMatch> match_nu_schema(const FormulaPtr& e) {
  using schema_detail::ok;
  // LEA1nu: r1 = r2 > (F_r1 > F_r2)
  if (auto* top = pat::as_imp(e)) {
    if (auto* eq = pat::as_eq(top->lhs)) {
      if (auto* inner = pat::as_imp(top->rhs)) {
        auto* k1 = std::get_if<Formula::Kleene>(&inner->lhs->node);
        auto* k2 = std::get_if<Formula::Kleene>(&inner->rhs->node);
        if (k1 && k2 && term_eq(k1->sub, eq->lhs) && term_eq(k2->sub, eq->rhs))
          return ok(SchemaId::LEA1Nu, {}, {{"r1", eq->lhs}, {"r2", eq->rhs}});
      }
    }
  }
  // LEA2nu: fl(t) = t > nuF(fl(t)) = nuF(t)
  if (auto* top = pat::as_imp(e)) {
    auto* ante = pat::as_eq(top->lhs);
    auto* cons = pat::as_eq(top->rhs);
    if (ante && cons) {
      auto* fl_app = pat::as_app(ante->lhs, Fn::fl);
      if (fl_app && term_eq(fl_app->args[0], ante->rhs)) {
        auto* nu_l = std::get_if<Termoid::NuImage>(&cons->lhs->node);
        auto* nu_r = std::get_if<Termoid::NuImage>(&cons->rhs->node);
        if (nu_l && nu_r) {
          auto* pg_l = std::get_if<Termoid::PiGen>(&nu_l->sub->node);
          auto* pg_r = std::get_if<Termoid::PiGen>(&nu_r->sub->node);
          if (pg_l && pg_r && term_eq(pg_l->sub, ante->lhs) && term_eq(pg_r->sub, ante->rhs))
            return ok(SchemaId::LEA2Nu, {}, {{"t", ante->rhs}});
        }
      }
    }
  }
  // LEAMPnu: (r)_0 = 3 > (F_r > (F_(r)_1 > F_(r)_2)), same r throughout
  if (auto* top = pat::as_imp(e)) {
    auto* ante = pat::as_eq(top->lhs);
    if (ante && pat::is_num(ante->rhs, 3)) {
      if (auto* e0 = pat::as_app(ante->lhs, Fn::exp0)) {
        const TermPtr& r = e0->args[0];
        if (auto* i1 = pat::as_imp(top->rhs)) {
          auto* kr = std::get_if<Formula::Kleene>(&i1->lhs->node);
          if (kr && term_eq(kr->sub, r)) {
            if (auto* i2 = pat::as_imp(i1->rhs)) {
              auto* k1 = std::get_if<Formula::Kleene>(&i2->lhs->node);
              auto* k2 = std::get_if<Formula::Kleene>(&i2->rhs->node);
              if (k1 && k2) {
                auto* x1 = pat::as_app(k1->sub, Fn::exp1);
                auto* x2 = pat::as_app(k2->sub, Fn::exp2);
                if (x1 && x2 && term_eq(x1->args[0], r) && term_eq(x2->args[0], r))
                  return ok(SchemaId::LEAMPNu, {}, {{"r", r}});
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// translation

struct NonConstantSubscript : EvalError {
  using EvalError::EvalError;
};
struct ValueTooLarge : EvalError {
  using EvalError::EvalError;
};

using Valuation = std::map<std::uint32_t, CodePtr>;

// The closed formula named by a Kleene subscript value.
inline FormulaPtr formula_named_by(const CodePtr& value, std::uint64_t digit_budget) {
  Materialized probe = materialize(value, digit_budget);
  if (!materialized_ok(probe) && !value->is_lit() && value->factors().size() > 0) {
    // Values beyond the budget are reported, never silently normalized.
    throw ValueTooLarge("Kleene subscript value exceeds the digit budget");
  }
  CodePtr named = eval_fl(value);
  Decoded d = decode(named, DecodeKind::Fla);
  auto* f = std::get_if<FormulaPtr>(&d);
  if (!f) throw EvalError("fl produced a value that is not a closed formula code");
  return *f;
}

// Replaces every Kleene atom by the formula its subscript names under the
// valuation. Commutes with the propositional and quantifier structure.
inline FormulaPtr translate(const FormulaPtr& e, const Valuation& val, const AxiomTable& table,
                            std::uint64_t digit_budget = 10000) {
  if (auto* k = std::get_if<Formula::Kleene>(&e->node)) {
    for (std::uint32_t v : free_vars(k->sub))
      if (!val.count(v))
        throw NonConstantSubscript("subscript variable x" + std::to_string(v) +
                                   " has no assigned value");
    EvalContext ctx;
    ctx.table = &table;
    ctx.valuation = val;
    CodePtr value = eval_termoid(k->sub, ctx);
    return formula_named_by(value, digit_budget);
  }
  if (auto* at = std::get_if<Formula::Atom>(&e->node)) {
    (void)at;
    return e;  // base-language atoms pass through unchanged
  }
  if (auto* c = std::get_if<Formula::Connective>(&e->node)) {
    FormulaPtr l = translate(c->lhs, val, table, digit_budget);
    FormulaPtr r = translate(c->rhs, val, table, digit_budget);
    return l.get() == c->lhs.get() && r.get() == c->rhs.get() ? e : mk_conn(c->conn, l, r);
  }
  const auto& q = std::get<Formula::Quantified>(e->node);
  FormulaPtr body = translate(q.body, val, table, digit_budget);
  return body.get() == q.body.get() ? e : mk_quant(q.quant, q.var, body);
}

// ---------------------------------------------------------------------------
// substantiation replay: the two-case proof skeletons behind the nu-schemata

enum class NuCase { AntecedentTrue, AntecedentRefuted };

struct Substantiation {
  NuCase which;
  std::vector<ExpansionLine> lines;
};

// Replays the case analysis for a LEA1nu instance with constant subscripts.
// Returns nothing when a subscript value cannot be materialized; the caller
// records the instance as a schema-accepted axiom with an obligation.
inline std::optional<Substantiation> substantiate_lea1(const SchemaMatch& m, const Valuation& val,
                                                       const AxiomTable& table,
                                                       std::uint64_t digit_budget = 10000) {
  const TermPtr& r1 = m.tbind.at("r1");
  const TermPtr& r2 = m.tbind.at("r2");
  for (const TermPtr* t : {&r1, &r2}) {
    if (term_contains_iota(*t) || term_contains_opaque(*t)) return std::nullopt;
    for (std::uint32_t v : free_vars(*t))
      if (!val.count(v)) return std::nullopt;
  }
  EvalContext ctx;
  ctx.table = &table;
  ctx.valuation = val;
  CodePtr v1, v2;
  FormulaPtr e1, e2;
  try {
    v1 = eval_termoid(r1, ctx);
    v2 = eval_termoid(r2, ctx);
    e1 = formula_named_by(v1, digit_budget);
    e2 = formula_named_by(v2, digit_budget);
  } catch (const EvalError&) {
    return std::nullopt;
  }
  FormulaPtr ante = mk_atom(Pred::Eq, r1, r2);
  Substantiation out;
  if (code_eq(v1, v2)) {
    // consequent collapses to E > E; Imp0 then Imp1 and MP give the instance
    out.which = NuCase::AntecedentTrue;
    out.lines = expand_detail::imp0_lines(e1);
    FormulaPtr imp0 = out.lines.back().formula;
    FormulaPtr target = mk_imp(ante, imp0);
    out.lines.push_back({mk_imp(imp0, target), "Imp1"});
    out.lines.push_back({target, "MP"});
  } else {
    // the antecedent is refuted by evaluation; Imp3 carries the consequent
    out.which = NuCase::AntecedentRefuted;
    FormulaPtr consequent = mk_imp(e1, e2);
    out.lines.push_back({negate(ante), "computed disequality"});
    out.lines.push_back({mk_imp(falsum(), consequent), "Imp3"});
    out.lines.push_back({mk_imp(ante, consequent), "chin 1 2"});
  }
  return out;
}

// The analogous replay for the MP-shaped schema: when the subscript value is
// a closed implication code the consequent collapses to F_r > F_r, and when
// it is not even a closed formula code F_r names the anti-axiom and Imp3
// applies.
inline std::optional<Substantiation> substantiate_leamp(const SchemaMatch& m, const Valuation& val,
                                                        const AxiomTable& table,
                                                        std::uint64_t digit_budget = 10000) {
  const TermPtr& r = m.tbind.at("r");
  if (term_contains_iota(r) || term_contains_opaque(r)) return std::nullopt;
  for (std::uint32_t v : free_vars(r))
    if (!val.count(v)) return std::nullopt;
  EvalContext ctx;
  ctx.table = &table;
  ctx.valuation = val;
  CodePtr value;
  FormulaPtr named;
  try {
    value = eval_termoid(r, ctx);
    named = formula_named_by(value, digit_budget);
  } catch (const EvalError&) {
    return std::nullopt;
  }
  Substantiation out;
  FormulaPtr ante = mk_atom(Pred::Eq, mk_app(Fn::exp0, {r}), mk_numeroid(3));
  if (eval_cfor(value) == 0 && code_eq(code_exp(value, 0), code_lit(3))) {
    out.which = NuCase::AntecedentTrue;
    out.lines = expand_detail::imp0_lines(named);
    FormulaPtr imp0 = out.lines.back().formula;
    FormulaPtr target = mk_imp(ante, imp0);
    out.lines.push_back({mk_imp(imp0, target), "Imp1"});
    out.lines.push_back({target, "MP"});
  } else {
    out.which = NuCase::AntecedentRefuted;
    FormulaPtr f1 = formula_named_by(code_exp(value, 1), digit_budget);
    FormulaPtr f2 = formula_named_by(code_exp(value, 2), digit_budget);
    FormulaPtr consequent = mk_imp(f1, f2);
    out.lines.push_back({mk_imp(falsum(), consequent), "Imp3"});
    out.lines.push_back({mk_imp(out.lines[0].formula, mk_imp(ante, out.lines[0].formula)), "Imp1"});
    out.lines.push_back({mk_imp(ante, out.lines[0].formula), "MP 1 2"});
  }
  return out;
}

}  // namespace ari
