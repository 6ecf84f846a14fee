// Axiom-schema recognizers, the inference rules, and the derived-rule
// expander. A recognizer takes a candidate formula and reports the schema
// instantiation that produces it verbatim, together with any side-condition
// obligations (the turn-stile arrows of the substitution axioms).
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ari/enumeration.hpp"
#include "ari/parser.hpp"
#include "ari/syntax.hpp"

namespace ari {

// ---------------------------------------------------------------------------
// obligations

enum class ObligationKind {
  RangeNonEmpty,   // the variable's range must contain the termoid's value
  FreeFor,         // substituted termoid must stay free (capture check result)
  ValueInRange,    // the termoid must possess a value at all
  Feasibility,     // instance accepted at schema level; value never materialized
  ParamGen,        // generalization over a variable held constant
  HypCaptureGen,   // generalization over a variable free in an active hypothesis
};

inline const char* obligation_kind_name(ObligationKind k) {
  switch (k) {
    case ObligationKind::RangeNonEmpty: return "RangeNonEmpty";
    case ObligationKind::FreeFor: return "FreeFor";
    case ObligationKind::ValueInRange: return "ValueInRange";
    case ObligationKind::Feasibility: return "Feasibility";
    case ObligationKind::ParamGen: return "ParamGen";
    case ObligationKind::HypCaptureGen: return "HypCaptureGen";
  }
  return "?";
}

struct Obligation {
  ObligationKind kind;
  std::uint32_t variable = 0;  // 0 when not about a particular variable
  TermPtr termoid;             // may be null
  std::string origin;          // line label, filled by the checker
  std::string note;
  bool violated = false;       // FreeFor obligations record the check outcome
};

// ---------------------------------------------------------------------------
// schema identifiers

enum class SchemaId {
  Imp0, Imp1, Imp2, Imp3,
  Con1, Con2, Con3,
  Dis1, Dis2, Dis3,
  Fi1, Fi2, Fi3, Fi4, DisQ,
  WBAA, WBAE, BR,
  Ref, SymEq, LEA1Eq, LEA2Eq, LEArp,
  ES, SBA1, SBA2,
  TND, DNE, CVI, IndPeano, NumeroidAx,
  Ga,
  ElemAx, DefAx,
  Rosser11, MOmega,
  LEA1Nu, LEA2Nu, LEAMPNu,  // recognized by the open-extension matcher
};

inline const char* schema_name(SchemaId s) {
  switch (s) {
    case SchemaId::Imp0: return "Imp0";
    case SchemaId::Imp1: return "Imp1";
    case SchemaId::Imp2: return "Imp2";
    case SchemaId::Imp3: return "Imp3";
    case SchemaId::Con1: return "Con1";
    case SchemaId::Con2: return "Con2";
    case SchemaId::Con3: return "Con3";
    case SchemaId::Dis1: return "Dis1";
    case SchemaId::Dis2: return "Dis2";
    case SchemaId::Dis3: return "Dis3";
    case SchemaId::Fi1: return "Fi1";
    case SchemaId::Fi2: return "Fi2";
    case SchemaId::Fi3: return "Fi3";
    case SchemaId::Fi4: return "Fi4";
    case SchemaId::DisQ: return "DisQ";
    case SchemaId::WBAA: return "WBAA";
    case SchemaId::WBAE: return "WBAE";
    case SchemaId::BR: return "BR";
    case SchemaId::Ref: return "Ref";
    case SchemaId::SymEq: return "SymEq";
    case SchemaId::LEA1Eq: return "LEA1eq";
    case SchemaId::LEA2Eq: return "LEA2eq";
    case SchemaId::LEArp: return "LEArp";
    case SchemaId::ES: return "ES";
    case SchemaId::SBA1: return "SBA1";
    case SchemaId::SBA2: return "SBA2";
    case SchemaId::TND: return "TND";
    case SchemaId::DNE: return "DNE";
    case SchemaId::CVI: return "CVI";
    case SchemaId::IndPeano: return "IndPeano";
    case SchemaId::NumeroidAx: return "NumeroidAx";
    case SchemaId::Ga: return "Ga";
    case SchemaId::ElemAx: return "ElemAx";
    case SchemaId::DefAx: return "DefAx";
    case SchemaId::Rosser11: return "Rosser11";
    case SchemaId::MOmega: return "M-omega";
    case SchemaId::LEA1Nu: return "LEA1nu";
    case SchemaId::LEA2Nu: return "LEA2nu";
    case SchemaId::LEAMPNu: return "LEAMPnu";
  }
  return "?";
}

struct SchemaMatch {
  SchemaId schema;
  std::string detail;  // ElemAx/DefAx table id, Ga index
  std::map<std::string, FormulaPtr> fbind;
  std::map<std::string, TermPtr> tbind;
  std::vector<Obligation> obligations;
};

// ---------------------------------------------------------------------------
// axiom tables

struct AxiomTable {
  enum class Mode { FullAri, Micro };
  Mode mode = Mode::FullAri;
  bool open_logic = true;
  std::vector<CodePtr> micro_axiom_codes;  // micro systems list raw codes

  static AxiomTable full(bool open) {
    AxiomTable t;
    t.mode = Mode::FullAri;
    t.open_logic = open;
    return t;
  }
  static AxiomTable micro(std::vector<std::uint64_t> codes) {
    AxiomTable t;
    t.mode = Mode::Micro;
    for (auto v : codes) t.micro_axiom_codes.push_back(code_lit(v));
    return t;
  }
};

// ---------------------------------------------------------------------------
// destructuring helpers

namespace pat {
inline const Formula::Connective* as_conn(const FormulaPtr& f, Conn c) {
  auto* p = std::get_if<Formula::Connective>(&f->node);
  return p && p->conn == c ? p : nullptr;
}
inline const Formula::Connective* as_imp(const FormulaPtr& f) { return as_conn(f, Conn::Imp); }
inline const Formula::Connective* as_and(const FormulaPtr& f) { return as_conn(f, Conn::And); }
inline const Formula::Connective* as_or(const FormulaPtr& f) { return as_conn(f, Conn::Or); }
inline const Formula::Quantified* as_quant(const FormulaPtr& f, Quant q) {
  auto* p = std::get_if<Formula::Quantified>(&f->node);
  return p && p->quant == q ? p : nullptr;
}
inline const Formula::Atom* as_atom(const FormulaPtr& f, Pred pr) {
  auto* p = std::get_if<Formula::Atom>(&f->node);
  return p && p->pred == pr ? p : nullptr;
}
inline const Formula::Atom* as_eq(const FormulaPtr& f) { return as_atom(f, Pred::Eq); }
inline const Termoid::App* as_app(const TermPtr& t, Fn fn) {
  auto* p = std::get_if<Termoid::App>(&t->node);
  return p && p->fn == fn ? p : nullptr;
}
inline bool is_num(const TermPtr& t, std::uint64_t v) {
  auto* n = std::get_if<Termoid::Numeroid>(&t->node);
  return n && code_eq(n->length, code_lit(v));
}
inline bool is_neg_of(const FormulaPtr& f, const FormulaPtr& a) {
  auto* i = as_imp(f);
  return i && formula_eq(i->lhs, a) && is_falsum(i->rhs);
}
}  // namespace pat

// ---------------------------------------------------------------------------
// recognizers

namespace schema_detail {

using MatchOpt = std::optional<SchemaMatch>;

inline MatchOpt ok(SchemaId id, std::map<std::string, FormulaPtr> fb = {},
                   std::map<std::string, TermPtr> tb = {}, std::vector<Obligation> obs = {},
                   std::string detail = {}) {
  SchemaMatch m;
  m.schema = id;
  m.detail = std::move(detail);
  m.fbind = std::move(fb);
  m.tbind = std::move(tb);
  m.obligations = std::move(obs);
  return m;
}

inline MatchOpt match_imp0(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (i && formula_eq(i->lhs, i->rhs)) return ok(SchemaId::Imp0, {{"A", i->lhs}});
  return std::nullopt;
}

inline MatchOpt match_imp1(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* j = pat::as_imp(i->rhs);
  if (j && formula_eq(i->lhs, j->rhs))
    return ok(SchemaId::Imp1, {{"A", i->lhs}, {"B", j->lhs}});
  return std::nullopt;
}

inline MatchOpt match_imp2(const FormulaPtr& e) {
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* l = pat::as_imp(top->lhs);
  if (!l) return std::nullopt;
  auto* lr = pat::as_imp(l->rhs);
  if (!lr) return std::nullopt;
  auto* r = pat::as_imp(top->rhs);
  if (!r) return std::nullopt;
  auto* rl = pat::as_imp(r->lhs);
  auto* rr = pat::as_imp(r->rhs);
  if (!rl || !rr) return std::nullopt;
  const FormulaPtr &A = l->lhs, &B = lr->lhs, &C = lr->rhs;
  if (formula_eq(rl->lhs, A) && formula_eq(rl->rhs, B) && formula_eq(rr->lhs, A) &&
      formula_eq(rr->rhs, C))
    return ok(SchemaId::Imp2, {{"A", A}, {"B", B}, {"C", C}});
  return std::nullopt;
}

inline MatchOpt match_imp3(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (i && is_falsum(i->lhs)) return ok(SchemaId::Imp3, {{"B", i->rhs}});
  return std::nullopt;
}

inline MatchOpt match_con1(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* a = pat::as_and(i->lhs);
  if (a && formula_eq(a->lhs, i->rhs)) return ok(SchemaId::Con1, {{"A", a->lhs}, {"B", a->rhs}});
  return std::nullopt;
}

inline MatchOpt match_con2(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* a = pat::as_and(i->lhs);
  if (a && formula_eq(a->rhs, i->rhs)) return ok(SchemaId::Con2, {{"A", a->lhs}, {"B", a->rhs}});
  return std::nullopt;
}

inline MatchOpt match_con3(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* j = pat::as_imp(i->rhs);
  if (!j) return std::nullopt;
  auto* a = pat::as_and(j->rhs);
  if (a && formula_eq(a->lhs, i->lhs) && formula_eq(a->rhs, j->lhs))
    return ok(SchemaId::Con3, {{"A", i->lhs}, {"B", j->lhs}});
  return std::nullopt;
}

inline MatchOpt match_dis1(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* o = pat::as_or(i->rhs);
  if (o && formula_eq(o->lhs, i->lhs)) return ok(SchemaId::Dis1, {{"A", o->lhs}, {"B", o->rhs}});
  return std::nullopt;
}

inline MatchOpt match_dis2(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* o = pat::as_or(i->rhs);
  if (o && formula_eq(o->rhs, i->lhs)) return ok(SchemaId::Dis2, {{"A", o->lhs}, {"B", o->rhs}});
  return std::nullopt;
}

inline MatchOpt match_dis3(const FormulaPtr& e) {
  // (A > C) & (B > C) > (A v B > C)
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* a = pat::as_and(top->lhs);
  if (!a) return std::nullopt;
  auto* ac = pat::as_imp(a->lhs);
  auto* bc = pat::as_imp(a->rhs);
  if (!ac || !bc || !formula_eq(ac->rhs, bc->rhs)) return std::nullopt;
  auto* r = pat::as_imp(top->rhs);
  if (!r) return std::nullopt;
  auto* o = pat::as_or(r->lhs);
  if (!o) return std::nullopt;
  if (formula_eq(o->lhs, ac->lhs) && formula_eq(o->rhs, bc->lhs) && formula_eq(r->rhs, ac->rhs))
    return ok(SchemaId::Dis3, {{"A", o->lhs}, {"B", o->rhs}, {"C", ac->rhs}});
  return std::nullopt;
}

inline MatchOpt match_fi(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  // Fi1: all v A > A, v fictitious
  if (auto* q = pat::as_quant(i->lhs, Quant::All)) {
    if (formula_eq(q->body, i->rhs) && !free_vars(q->body).count(q->var))
      return ok(SchemaId::Fi1, {{"A", q->body}});
  }
  // Fi2: A > all v A
  if (auto* q = pat::as_quant(i->rhs, Quant::All)) {
    if (formula_eq(q->body, i->lhs) && !free_vars(q->body).count(q->var))
      return ok(SchemaId::Fi2, {{"A", q->body}});
  }
  // Fi3: A > exists v A
  if (auto* q = pat::as_quant(i->rhs, Quant::Ex)) {
    if (formula_eq(q->body, i->lhs) && !free_vars(q->body).count(q->var))
      return ok(SchemaId::Fi3, {{"A", q->body}});
  }
  // Fi4: exists v A > A
  if (auto* q = pat::as_quant(i->lhs, Quant::Ex)) {
    if (formula_eq(q->body, i->rhs) && !free_vars(q->body).count(q->var))
      return ok(SchemaId::Fi4, {{"A", q->body}});
  }
  return std::nullopt;
}

inline MatchOpt match_disq(const FormulaPtr& e) {
  // all v (B > C) > (all v B > all v C)
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* l = pat::as_quant(top->lhs, Quant::All);
  if (!l) return std::nullopt;
  auto* li = pat::as_imp(l->body);
  if (!li) return std::nullopt;
  auto* r = pat::as_imp(top->rhs);
  if (!r) return std::nullopt;
  auto* rb = pat::as_quant(r->lhs, Quant::All);
  auto* rc = pat::as_quant(r->rhs, Quant::All);
  if (!rb || !rc || rb->var != l->var || rc->var != l->var) return std::nullopt;
  if (formula_eq(rb->body, li->lhs) && formula_eq(rc->body, li->rhs))
    return ok(SchemaId::DisQ, {{"B", li->lhs}, {"C", li->rhs}});
  return std::nullopt;
}

inline MatchOpt match_wba_a(const FormulaPtr& e) {
  // all v C(v) > C(v), same variable
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* q = pat::as_quant(i->lhs, Quant::All);
  if (q && formula_eq(q->body, i->rhs) && free_vars(q->body).count(q->var))
    return ok(SchemaId::WBAA, {{"C", q->body}});
  return std::nullopt;
}

inline MatchOpt match_wba_e(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* q = pat::as_quant(i->rhs, Quant::Ex);
  if (q && formula_eq(q->body, i->lhs) && free_vars(q->body).count(q->var))
    return ok(SchemaId::WBAE, {{"C", q->body}});
  return std::nullopt;
}

inline MatchOpt match_br(const FormulaPtr& e) {
  // all v (C(v) > A) > (exists v C(v) > A), v not free in A
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* l = pat::as_quant(top->lhs, Quant::All);
  if (!l) return std::nullopt;
  auto* li = pat::as_imp(l->body);
  if (!li) return std::nullopt;
  auto* r = pat::as_imp(top->rhs);
  if (!r) return std::nullopt;
  auto* ex = pat::as_quant(r->lhs, Quant::Ex);
  if (!ex || ex->var != l->var) return std::nullopt;
  if (!formula_eq(ex->body, li->lhs) || !formula_eq(r->rhs, li->rhs)) return std::nullopt;
  if (free_vars(li->rhs).count(l->var)) return std::nullopt;
  if (!free_vars(li->lhs).count(l->var)) return std::nullopt;
  return ok(SchemaId::BR, {{"C", li->lhs}, {"A", li->rhs}});
}

inline MatchOpt match_ref(const FormulaPtr& e) {
  auto* a = pat::as_eq(e);
  if (a && term_eq(a->lhs, a->rhs)) return ok(SchemaId::Ref, {}, {{"r", a->lhs}});
  return std::nullopt;
}

inline MatchOpt match_sym(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (l && r && term_eq(l->lhs, r->rhs) && term_eq(l->rhs, r->lhs))
    return ok(SchemaId::SymEq, {}, {{"r", l->lhs}, {"s", l->rhs}});
  return std::nullopt;
}

inline MatchOpt match_lea1(const FormulaPtr& e) {
  // r = s > (P(r,t) > P(s,t))
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* eq = pat::as_eq(top->lhs);
  if (!eq) return std::nullopt;
  auto* inner = pat::as_imp(top->rhs);
  if (!inner) return std::nullopt;
  auto* p1 = std::get_if<Formula::Atom>(&inner->lhs->node);
  auto* p2 = std::get_if<Formula::Atom>(&inner->rhs->node);
  if (!p1 || !p2 || p1->pred != p2->pred) return std::nullopt;
  if (term_eq(p1->lhs, eq->lhs) && term_eq(p2->lhs, eq->rhs) && term_eq(p1->rhs, p2->rhs))
    return ok(SchemaId::LEA1Eq, {}, {{"r", eq->lhs}, {"s", eq->rhs}, {"t", p1->rhs}});
  return std::nullopt;
}

inline MatchOpt match_lea2(const FormulaPtr& e) {
  // r = s > (P(t,r) > P(t,s))
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* eq = pat::as_eq(top->lhs);
  if (!eq) return std::nullopt;
  auto* inner = pat::as_imp(top->rhs);
  if (!inner) return std::nullopt;
  auto* p1 = std::get_if<Formula::Atom>(&inner->lhs->node);
  auto* p2 = std::get_if<Formula::Atom>(&inner->rhs->node);
  if (!p1 || !p2 || p1->pred != p2->pred) return std::nullopt;
  if (term_eq(p1->rhs, eq->lhs) && term_eq(p2->rhs, eq->rhs) && term_eq(p1->lhs, p2->lhs))
    return ok(SchemaId::LEA2Eq, {}, {{"r", eq->lhs}, {"s", eq->rhs}, {"t", p1->lhs}});
  return std::nullopt;
}

// u' arises from u by replacing at least one occurrence of r with s
inline bool replaced_some(const TermPtr& u, const TermPtr& u2, const TermPtr& r, const TermPtr& s,
                          int& count) {
  if (term_eq(u, u2)) return true;
  if (term_eq(u, r) && term_eq(u2, s)) {
    ++count;
    return true;
  }
  auto* a = std::get_if<Termoid::App>(&u->node);
  auto* b = std::get_if<Termoid::App>(&u2->node);
  if (a && b && a->fn == b->fn) {
    for (std::size_t i = 0; i < a->args.size(); ++i)
      if (!replaced_some(a->args[i], b->args[i], r, s, count)) return false;
    return true;
  }
  auto* na = std::get_if<Termoid::NuImage>(&u->node);
  auto* nb = std::get_if<Termoid::NuImage>(&u2->node);
  if (na && nb) return replaced_some(na->sub, nb->sub, r, s, count);
  auto* pa = std::get_if<Termoid::PiGen>(&u->node);
  auto* pb = std::get_if<Termoid::PiGen>(&u2->node);
  if (pa && pb) return replaced_some(pa->sub, pb->sub, r, s, count);
  return false;
}

inline MatchOpt match_lea_rp(const FormulaPtr& e) {
  // r = s > u[r] = u[s]
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* eq = pat::as_eq(top->lhs);
  if (!eq) return std::nullopt;
  auto* c = pat::as_eq(top->rhs);
  if (!c) return std::nullopt;
  int count = 0;
  if (replaced_some(c->lhs, c->rhs, eq->lhs, eq->rhs, count) && count > 0)
    return ok(SchemaId::LEArp, {}, {{"r", eq->lhs}, {"s", eq->rhs}, {"u", c->lhs}});
  return std::nullopt;
}

inline MatchOpt match_es(const FormulaPtr& e) {
  // exists v (v = t), v not free in t
  auto* q = pat::as_quant(e, Quant::Ex);
  if (!q) return std::nullopt;
  auto* eq = pat::as_eq(q->body);
  if (!eq) return std::nullopt;
  auto* v = std::get_if<Termoid::Var>(&eq->lhs->node);
  if (!v || v->index != q->var) return std::nullopt;
  if (free_vars(eq->rhs).count(q->var)) return std::nullopt;
  std::vector<Obligation> obs;
  obs.push_back({ObligationKind::RangeNonEmpty, q->var, eq->rhs, "", "", false});
  obs.push_back({ObligationKind::ValueInRange, q->var, eq->rhs, "", "", false});
  return ok(SchemaId::ES, {}, {{"t", eq->rhs}}, std::move(obs));
}

// SBA1: all v C(v) > C(t); SBA2: C(t) > exists v C(v). The termoid is the
// arrow annotation supplied by the script line.
inline MatchOpt match_sba(const FormulaPtr& e, const TermPtr& t, bool first_form) {
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  const FormulaPtr& quant_side = first_form ? top->lhs : top->rhs;
  const FormulaPtr& inst_side = first_form ? top->rhs : top->lhs;
  auto* q = pat::as_quant(quant_side, first_form ? Quant::All : Quant::Ex);
  if (!q) return std::nullopt;
  if (!free_vars(q->body).count(q->var)) return std::nullopt;
  SubstResult sr = substitute(q->body, q->var, t, false);
  if (!formula_eq(sr.formula, inst_side)) return std::nullopt;
  std::vector<Obligation> obs;
  obs.push_back({ObligationKind::FreeFor, q->var, t, "", "", !sr.capture_ok});
  obs.push_back({ObligationKind::ValueInRange, q->var, t, "",
                 term_contains_iota(t) ? "termoid contains a description; value deferred" : "",
                 false});
  return ok(first_form ? SchemaId::SBA1 : SchemaId::SBA2, {{"C", q->body}}, {{"t", t}},
            std::move(obs));
}

inline MatchOpt match_tnd(const FormulaPtr& e) {
  auto* o = pat::as_or(e);
  if (o && pat::is_neg_of(o->rhs, o->lhs)) return ok(SchemaId::TND, {{"A", o->lhs}});
  return std::nullopt;
}

inline MatchOpt match_dne(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* nn = pat::as_imp(i->lhs);
  if (nn && is_falsum(nn->rhs) && pat::is_neg_of(nn->lhs, i->rhs))
    return ok(SchemaId::DNE, {{"A", i->rhs}});
  return std::nullopt;
}

inline MatchOpt match_cvi(const FormulaPtr& e) {
  // all v [ all k (k < v > phi(k)) > phi(v) ]  >  all v phi(v)
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* concl = pat::as_quant(top->rhs, Quant::All);
  if (!concl) return std::nullopt;
  auto* prem = pat::as_quant(top->lhs, Quant::All);
  if (!prem || prem->var != concl->var) return std::nullopt;
  auto* step = pat::as_imp(prem->body);
  if (!step || !formula_eq(step->rhs, concl->body)) return std::nullopt;
  auto* inner = pat::as_quant(step->lhs, Quant::All);
  if (!inner || inner->var == prem->var) return std::nullopt;
  auto* guard = pat::as_imp(inner->body);
  if (!guard) return std::nullopt;
  auto* lt = pat::as_atom(guard->lhs, Pred::Lt);
  if (!lt) return std::nullopt;
  auto* kv = std::get_if<Termoid::Var>(&lt->lhs->node);
  auto* vv = std::get_if<Termoid::Var>(&lt->rhs->node);
  if (!kv || !vv || kv->index != inner->var || vv->index != prem->var) return std::nullopt;
  if (free_vars(concl->body).count(inner->var)) return std::nullopt;
  SubstResult phi_k = substitute(concl->body, prem->var, mk_var(inner->var), false);
  if (!phi_k.capture_ok || !formula_eq(phi_k.formula, guard->rhs)) return std::nullopt;
  return ok(SchemaId::CVI, {{"phi", concl->body}});
}

inline MatchOpt match_ind_peano(const FormulaPtr& e) {
  // C(0) & all v (C(v) > C(suc v)) > all v C(v)
  auto* top = pat::as_imp(e);
  if (!top) return std::nullopt;
  auto* concl = pat::as_quant(top->rhs, Quant::All);
  if (!concl) return std::nullopt;
  auto* a = pat::as_and(top->lhs);
  if (!a) return std::nullopt;
  auto* step = pat::as_quant(a->rhs, Quant::All);
  if (!step || step->var != concl->var) return std::nullopt;
  auto* si = pat::as_imp(step->body);
  if (!si || !formula_eq(si->lhs, concl->body)) return std::nullopt;
  SubstResult base = substitute(concl->body, concl->var, mk_numeroid(0), false);
  if (!formula_eq(base.formula, a->lhs)) return std::nullopt;
  SubstResult succ =
      substitute(concl->body, concl->var, mk_app(Fn::suc, {mk_var(concl->var)}), false);
  if (!formula_eq(succ.formula, si->rhs)) return std::nullopt;
  return ok(SchemaId::IndPeano, {{"C", concl->body}});
}

inline MatchOpt match_numeroid_ax(const FormulaPtr& e) {
  // suc^n(0) = Su^n 0 or its converse, n >= 1
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto count_sucs = [](TermPtr t) -> std::optional<std::uint64_t> {
    std::uint64_t n = 0;
    while (auto* ap = pat::as_app(t, Fn::suc)) {
      ++n;
      t = ap->args[0];
    }
    if (pat::is_num(t, 0)) return n;
    return std::nullopt;
  };
  for (bool flip : {false, true}) {
    const TermPtr& fig = flip ? eq->rhs : eq->lhs;
    const TermPtr& num = flip ? eq->lhs : eq->rhs;
    auto n = count_sucs(fig);
    if (!n || *n < 1) continue;
    auto* nm = std::get_if<Termoid::Numeroid>(&num->node);
    if (nm && code_eq(nm->length, code_lit(*n))) return ok(SchemaId::NumeroidAx);
  }
  return std::nullopt;
}

inline MatchOpt match_ga(const FormulaPtr& e) {
  // exp_h( p_0^e0 * ... * p_k^ek ) = e_h, products associated to the left,
  // bases the literal numerals 2, 3, 5, ...
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* app = std::get_if<Termoid::App>(&eq->lhs->node);
  if (!app) return std::nullopt;
  int h;
  if (app->fn == Fn::exp0) h = 0;
  else if (app->fn == Fn::exp1) h = 1;
  else if (app->fn == Fn::exp2) h = 2;
  else return std::nullopt;
  std::vector<TermPtr> chain;
  TermPtr u = app->args[0];
  while (auto* m = pat::as_app(u, Fn::mul)) {
    chain.push_back(m->args[1]);
    u = m->args[0];
  }
  chain.push_back(u);
  std::reverse(chain.begin(), chain.end());
  if (static_cast<std::size_t>(h) >= chain.size()) return std::nullopt;
  for (std::size_t g = 0; g < chain.size(); ++g) {
    auto* pw = pat::as_app(chain[g], Fn::pow);
    if (!pw || !pat::is_num(pw->args[0], nth_prime(static_cast<std::uint32_t>(g))))
      return std::nullopt;
  }
  auto* ph = pat::as_app(chain[static_cast<std::size_t>(h)], Fn::pow);
  if (!term_eq(ph->args[1], eq->rhs)) return std::nullopt;
  return ok(SchemaId::Ga, {}, {}, {}, "Ga" + std::to_string(h));
}

inline MatchOpt match_rosser11(const FormulaPtr& e) {
  // A(iota v A(v)) for some description occurring in the candidate
  std::vector<TermPtr> iotas;
  std::function<void(const TermPtr&)> scan_t = [&](const TermPtr& t) {
    if (std::holds_alternative<Termoid::Iota>(t->node)) iotas.push_back(t);
    if (auto* ap = std::get_if<Termoid::App>(&t->node))
      for (const auto& a : ap->args) scan_t(a);
    if (auto* nu = std::get_if<Termoid::NuImage>(&t->node)) scan_t(nu->sub);
    if (auto* pg = std::get_if<Termoid::PiGen>(&t->node)) scan_t(pg->sub);
  };
  std::function<void(const FormulaPtr&)> scan_f = [&](const FormulaPtr& f) {
    if (auto* at = std::get_if<Formula::Atom>(&f->node)) {
      scan_t(at->lhs);
      scan_t(at->rhs);
    } else if (auto* c = std::get_if<Formula::Connective>(&f->node)) {
      scan_f(c->lhs);
      scan_f(c->rhs);
    } else if (auto* q = std::get_if<Formula::Quantified>(&f->node)) {
      scan_f(q->body);
    } else {
      scan_t(std::get<Formula::Kleene>(f->node).sub);
    }
  };
  scan_f(e);
  for (const auto& io : iotas) {
    const auto& node = std::get<Termoid::Iota>(io->node);
    SubstResult inst = substitute(node.body, node.var, io, false);
    if (inst.capture_ok && formula_eq(inst.formula, e))
      return ok(SchemaId::Rosser11, {}, {{"iota", io}});
  }
  return std::nullopt;
}

inline MatchOpt match_m_omega(const FormulaPtr& e) {
  if (formula_eq(e, omega_matrix(omega_termoid()))) return ok(SchemaId::MOmega);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// elementary non-logical axioms (the bracketed table)

struct ElemEntry {
  const char* id;
  MatchOpt (*fn)(const FormulaPtr&);
};

inline MatchOpt elem_sg_dichotomy(const FormulaPtr& e) {
  auto* o = pat::as_or(e);
  if (!o) return std::nullopt;
  auto* l = pat::as_eq(o->lhs);
  auto* r = pat::as_eq(o->rhs);
  if (!l || !r) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::sg);
  auto* ra = pat::as_app(r->lhs, Fn::sg);
  if (la && ra && term_eq(l->lhs, r->lhs) && pat::is_num(l->rhs, 0) && pat::is_num(r->rhs, 1))
    return ok(SchemaId::ElemAx, {}, {{"r", la->args[0]}}, {}, "sg_dichotomy");
  return std::nullopt;
}

inline MatchOpt elem_ssg_dichotomy(const FormulaPtr& e) {
  auto* o = pat::as_or(e);
  if (!o) return std::nullopt;
  auto* l = pat::as_eq(o->lhs);
  auto* r = pat::as_eq(o->rhs);
  if (!l || !r) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::ssg);
  auto* ra = pat::as_app(r->lhs, Fn::ssg);
  if (la && ra && term_eq(l->lhs, r->lhs) && pat::is_num(l->rhs, 0) && pat::is_num(r->rhs, 1))
    return ok(SchemaId::ElemAx, {}, {{"r", la->args[0]}}, {}, "ssg_dichotomy");
  return std::nullopt;
}

inline MatchOpt elem_mul_zero(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* m = pat::as_app(eq->lhs, Fn::mul);
  if (m && pat::is_num(m->args[1], 0) && pat::is_num(eq->rhs, 0))
    return ok(SchemaId::ElemAx, {}, {{"r", m->args[0]}}, {}, "mul_zero");
  return std::nullopt;
}

inline MatchOpt elem_mul_one(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* m = pat::as_app(eq->lhs, Fn::mul);
  if (m && pat::is_num(m->args[1], 1) && term_eq(m->args[0], eq->rhs))
    return ok(SchemaId::ElemAx, {}, {{"r", m->args[0]}}, {}, "mul_one");
  return std::nullopt;
}

inline MatchOpt elem_ssg_msd_eq(const FormulaPtr& e) {
  // ssg(msd(r,s)) = 1 > r = s
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 1)) return std::nullopt;
  auto* sa = pat::as_app(l->lhs, Fn::ssg);
  if (!sa) return std::nullopt;
  auto* md = pat::as_app(sa->args[0], Fn::msd);
  if (md && term_eq(md->args[0], r->lhs) && term_eq(md->args[1], r->rhs))
    return ok(SchemaId::ElemAx, {}, {{"r", r->lhs}, {"s", r->rhs}}, {}, "ssg_msd_eq");
  return std::nullopt;
}

inline MatchOpt elem_ax_cfor(const FormulaPtr& e) {
  // ax(r) = 0 > cfor(r) = 0
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 0) || !pat::is_num(r->rhs, 0)) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::ax);
  auto* ra = pat::as_app(r->lhs, Fn::cfor);
  if (la && ra && term_eq(la->args[0], ra->args[0]))
    return ok(SchemaId::ElemAx, {}, {{"r", la->args[0]}}, {}, "ax_cfor");
  return std::nullopt;
}

inline MatchOpt elem_ell1_cfor(const FormulaPtr& e) {
  // ell1(r) = 0 > cfor(exp0(r)) = 0
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 0) || !pat::is_num(r->rhs, 0)) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::ell1);
  auto* ra = pat::as_app(r->lhs, Fn::cfor);
  if (!la || !ra) return std::nullopt;
  auto* ex = pat::as_app(ra->args[0], Fn::exp0);
  if (ex && term_eq(ex->args[0], la->args[0]))
    return ok(SchemaId::ElemAx, {}, {{"r", la->args[0]}}, {}, "ell1_cfor");
  return std::nullopt;
}

inline MatchOpt elem_cfor_len(const FormulaPtr& e) {
  // cfor(r) = 0 > len(r) = 2
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 0) || !pat::is_num(r->rhs, 2)) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::cfor);
  auto* ra = pat::as_app(r->lhs, Fn::len);
  if (la && ra && term_eq(la->args[0], ra->args[0]))
    return ok(SchemaId::ElemAx, {}, {{"r", la->args[0]}}, {}, "cfor_len");
  return std::nullopt;
}

inline MatchOpt elem_len2_decomp(const FormulaPtr& e) {
  // len(r) = 2 > r = 2^(r)_0 * 3^(r)_1 * 5^(r)_2
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 2)) return std::nullopt;
  auto* la = pat::as_app(l->lhs, Fn::len);
  if (!la) return std::nullopt;
  const TermPtr& subject = la->args[0];
  if (!term_eq(r->lhs, subject)) return std::nullopt;
  TermPtr expected = mk_app(
      Fn::mul,
      {mk_app(Fn::mul, {mk_app(Fn::pow, {mk_numeroid(2), mk_app(Fn::exp0, {subject})}),
                        mk_app(Fn::pow, {mk_numeroid(3), mk_app(Fn::exp1, {subject})})}),
       mk_app(Fn::pow, {mk_numeroid(5), mk_app(Fn::exp2, {subject})})});
  if (term_eq(r->rhs, expected)) return ok(SchemaId::ElemAx, {}, {{"r", subject}}, {}, "len2_decomp");
  return std::nullopt;
}

inline MatchOpt elem_exp_lt(const FormulaPtr& e, Fn which, const char* id) {
  // neg(r = 0) > exp_i(r) < r
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* nl = pat::as_imp(i->lhs);
  if (!nl || !is_falsum(nl->rhs)) return std::nullopt;
  auto* z = pat::as_eq(nl->lhs);
  if (!z || !pat::is_num(z->rhs, 0)) return std::nullopt;
  auto* lt = pat::as_atom(i->rhs, Pred::Lt);
  if (!lt) return std::nullopt;
  auto* ex = pat::as_app(lt->lhs, which);
  if (ex && term_eq(ex->args[0], z->lhs) && term_eq(lt->rhs, z->lhs))
    return ok(SchemaId::ElemAx, {}, {{"r", z->lhs}}, {}, id);
  return std::nullopt;
}

inline MatchOpt elem_exp1_lt(const FormulaPtr& e) { return elem_exp_lt(e, Fn::exp1, "exp1_lt"); }
inline MatchOpt elem_exp2_lt(const FormulaPtr& e) { return elem_exp_lt(e, Fn::exp2, "exp2_lt"); }

inline const std::vector<ElemEntry>& elem_table() {
  static const std::vector<ElemEntry> table = {
      {"sg_dichotomy", elem_sg_dichotomy}, {"ssg_dichotomy", elem_ssg_dichotomy},
      {"mul_zero", elem_mul_zero},         {"mul_one", elem_mul_one},
      {"ssg_msd_eq", elem_ssg_msd_eq},     {"ax_cfor", elem_ax_cfor},
      {"ell1_cfor", elem_ell1_cfor},       {"cfor_len", elem_cfor_len},
      {"len2_decomp", elem_len2_decomp},   {"exp1_lt", elem_exp1_lt},
      {"exp2_lt", elem_exp2_lt},
  };
  return table;
}

// ---------------------------------------------------------------------------
// axiom-definitions (each is matched against the defining matrix with the
// definition's parameters instantiated by arbitrary termoids)

inline FormulaPtr ant1_ell1(const TermPtr& n) {
  return mk_and(
      mk_atom(Pred::Eq, n, mk_app(Fn::pow, {mk_numeroid(2), mk_app(Fn::exp0, {n})})),
      mk_atom(Pred::Eq, mk_app(Fn::ax, {mk_app(Fn::exp0, {n})}), mk_numeroid(0)));
}

inline FormulaPtr ant2_ell1(const TermPtr& n) {
  TermPtr n1 = mk_app(Fn::exp1, {n});
  TermPtr n2 = mk_app(Fn::exp2, {n});
  FormulaPtr c1 = mk_atom(Pred::Eq, n, mk_app(Fn::mp, {n1, n2}));
  FormulaPtr c2 = negate(mk_atom(Pred::Eq, n, mk_numeroid(0)));
  FormulaPtr c3 = mk_atom(Pred::Eq, mk_app(Fn::ell1, {n1}), mk_numeroid(0));
  FormulaPtr c4 = mk_atom(Pred::Eq, mk_app(Fn::ell1, {n2}), mk_numeroid(0));
  return mk_and(mk_and(mk_and(c1, c2), c3), c4);
}

inline FormulaPtr ant3_ell1(const TermPtr& n) {
  return negate(mk_or(ant1_ell1(n), ant2_ell1(n)));
}

struct DefEntry {
  const char* id;
  MatchOpt (*fn)(const FormulaPtr&);
};

namespace defs {

inline MatchOpt def_mp(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* lhs = pat::as_app(eq->lhs, Fn::mp);
  if (!lhs) return std::nullopt;
  const TermPtr &n = lhs->args[0], &q = lhs->args[1];
  TermPtr expected = mk_app(
      Fn::mul, {mk_app(Fn::mul, {mk_app(Fn::Mp, {n, q}), mk_app(Fn::e, {n, q})}),
                mk_app(Fn::sg, {n})});
  if (term_eq(eq->rhs, expected))
    return ok(SchemaId::DefAx, {}, {{"n", n}, {"q", q}}, {}, "def_mp");
  return std::nullopt;
}

inline MatchOpt def_e(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* lhs = pat::as_app(eq->lhs, Fn::e);
  if (!lhs) return std::nullopt;
  const TermPtr &n = lhs->args[0], &q = lhs->args[1];
  TermPtr expected = mk_app(
      Fn::mul,
      {mk_app(Fn::ssg, {mk_app(Fn::msd, {mk_app(Fn::exp00, {q}), mk_numeroid(3)})}),
       mk_app(Fn::ssg, {mk_app(Fn::msd, {mk_app(Fn::exp01, {q}), mk_app(Fn::exp0, {n})})})});
  if (term_eq(eq->rhs, expected))
    return ok(SchemaId::DefAx, {}, {{"n", n}, {"q", q}}, {}, "def_e");
  return std::nullopt;
}

inline MatchOpt def_Mp(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* lhs = pat::as_app(eq->lhs, Fn::Mp);
  if (!lhs) return std::nullopt;
  const TermPtr &n = lhs->args[0], &q = lhs->args[1];
  TermPtr expected = mk_app(
      Fn::mul,
      {mk_app(Fn::mul, {mk_app(Fn::pow, {mk_numeroid(2), mk_app(Fn::exp02, {q})}),
                        mk_app(Fn::pow, {mk_numeroid(3), n})}),
       mk_app(Fn::pow, {mk_numeroid(5), q})});
  if (term_eq(eq->rhs, expected))
    return ok(SchemaId::DefAx, {}, {{"n", n}, {"q", q}}, {}, "def_Mp");
  return std::nullopt;
}

inline MatchOpt def_exp_iter(const FormulaPtr& e, Fn outer, Fn iterated, const char* id) {
  // exp_i(exp0(t)) = exp_{0,i}(t)
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* l = pat::as_app(eq->lhs, outer);
  if (!l) return std::nullopt;
  auto* l0 = pat::as_app(l->args[0], Fn::exp0);
  if (!l0) return std::nullopt;
  auto* r = pat::as_app(eq->rhs, iterated);
  if (r && term_eq(l0->args[0], r->args[0]))
    return ok(SchemaId::DefAx, {}, {{"t", r->args[0]}}, {}, id);
  return std::nullopt;
}

inline MatchOpt def_exp00(const FormulaPtr& e) { return def_exp_iter(e, Fn::exp0, Fn::exp00, "def_exp00"); }
inline MatchOpt def_exp01(const FormulaPtr& e) { return def_exp_iter(e, Fn::exp1, Fn::exp01, "def_exp01"); }
inline MatchOpt def_exp02(const FormulaPtr& e) { return def_exp_iter(e, Fn::exp2, Fn::exp02, "def_exp02"); }

inline MatchOpt df_ell1(const FormulaPtr& e, int which, const char* id) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* r = pat::as_eq(i->rhs);
  if (!r) return std::nullopt;
  auto* h = pat::as_app(r->lhs, Fn::ell1);
  if (!h || !pat::is_num(r->rhs, which == 3 ? 1 : 0)) return std::nullopt;
  const TermPtr& n = h->args[0];
  FormulaPtr ant = which == 1 ? ant1_ell1(n) : which == 2 ? ant2_ell1(n) : ant3_ell1(n);
  if (formula_eq(i->lhs, ant)) return ok(SchemaId::DefAx, {}, {{"n", n}}, {}, id);
  return std::nullopt;
}

inline MatchOpt df1_ell1(const FormulaPtr& e) { return df_ell1(e, 1, "df1_ell1"); }
inline MatchOpt df2_ell1(const FormulaPtr& e) { return df_ell1(e, 2, "df2_ell1"); }
inline MatchOpt df3_ell1(const FormulaPtr& e) { return df_ell1(e, 3, "df3_ell1"); }

inline FormulaPtr ell_requirement(const TermPtr& n, const TermPtr& q) {
  return mk_and(mk_atom(Pred::Eq, mk_app(Fn::ell1, {n}), mk_numeroid(0)),
                mk_atom(Pred::Eq, mk_app(Fn::exp0, {n}), q));
}

inline MatchOpt def1_ell(const FormulaPtr& e) {
  // ell(n,q) = 0 > ell1(n) = 0 & (n)_0 = q
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  if (!l || !pat::is_num(l->rhs, 0)) return std::nullopt;
  auto* h = pat::as_app(l->lhs, Fn::ell);
  if (!h) return std::nullopt;
  if (formula_eq(i->rhs, ell_requirement(h->args[0], h->args[1])))
    return ok(SchemaId::DefAx, {}, {{"n", h->args[0]}, {"q", h->args[1]}}, {}, "def1_ell");
  return std::nullopt;
}

inline MatchOpt def2_ell(const FormulaPtr& e) {
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* r = pat::as_eq(i->rhs);
  if (!r || !pat::is_num(r->rhs, 0)) return std::nullopt;
  auto* h = pat::as_app(r->lhs, Fn::ell);
  if (!h) return std::nullopt;
  if (formula_eq(i->lhs, ell_requirement(h->args[0], h->args[1])))
    return ok(SchemaId::DefAx, {}, {{"n", h->args[0]}, {"q", h->args[1]}}, {}, "def2_ell");
  return std::nullopt;
}

inline MatchOpt def3_ell(const FormulaPtr& e) {
  // neg(ell(n,q) = 0) > ell(n,q) = 1
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* r = pat::as_eq(i->rhs);
  if (!r || !pat::is_num(r->rhs, 1)) return std::nullopt;
  auto* h = pat::as_app(r->lhs, Fn::ell);
  if (!h) return std::nullopt;
  FormulaPtr expected = negate(mk_atom(Pred::Eq, r->lhs, mk_numeroid(0)));
  if (formula_eq(i->lhs, expected))
    return ok(SchemaId::DefAx, {}, {{"n", h->args[0]}, {"q", h->args[1]}}, {}, "def3_ell");
  return std::nullopt;
}

inline MatchOpt def1_fl(const FormulaPtr& e) {
  // cfor(n) = 0 > fl(n) = n
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* l = pat::as_eq(i->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 0)) return std::nullopt;
  auto* lc = pat::as_app(l->lhs, Fn::cfor);
  auto* rf = pat::as_app(r->lhs, Fn::fl);
  if (lc && rf && term_eq(lc->args[0], rf->args[0]) && term_eq(r->rhs, rf->args[0]))
    return ok(SchemaId::DefAx, {}, {{"n", rf->args[0]}}, {}, "def1_fl");
  return std::nullopt;
}

inline MatchOpt def2_fl(const FormulaPtr& e) {
  // neg(cfor(n) = 0) > fl(n) = vf
  auto* i = pat::as_imp(e);
  if (!i) return std::nullopt;
  auto* nl = pat::as_imp(i->lhs);
  if (!nl || !is_falsum(nl->rhs)) return std::nullopt;
  auto* l = pat::as_eq(nl->lhs);
  auto* r = pat::as_eq(i->rhs);
  if (!l || !r || !pat::is_num(l->rhs, 0)) return std::nullopt;
  auto* lc = pat::as_app(l->lhs, Fn::cfor);
  auto* rf = pat::as_app(r->lhs, Fn::fl);
  if (lc && rf && term_eq(lc->args[0], rf->args[0]) && term_eq(r->rhs, vf_numeroid()))
    return ok(SchemaId::DefAx, {}, {{"n", rf->args[0]}}, {}, "def2_fl");
  return std::nullopt;
}

inline MatchOpt def_nuF(const FormulaPtr& e) {
  // nuF(r) = fl(r), also accepted at the normalized subscript: nuF(fl(t)) = fl(t)
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* nu = std::get_if<Termoid::NuImage>(&eq->lhs->node);
  if (!nu) return std::nullopt;
  auto* pg = std::get_if<Termoid::PiGen>(&nu->sub->node);
  if (!pg) return std::nullopt;
  auto* rhs_fl = pat::as_app(eq->rhs, Fn::fl);
  if (!rhs_fl) return std::nullopt;
  if (term_eq(pg->sub, rhs_fl->args[0]))
    return ok(SchemaId::DefAx, {}, {{"r", pg->sub}}, {}, "def_nuF");
  if (term_eq(pg->sub, eq->rhs))  // subscript already in fl-normal form
    return ok(SchemaId::DefAx, {}, {{"r", pg->sub}}, {}, "def_nuF");
  return std::nullopt;
}

inline MatchOpt def_sg(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* h = pat::as_app(eq->lhs, Fn::sg);
  if (!h) return std::nullopt;
  if (pat::is_num(h->args[0], 0) && pat::is_num(eq->rhs, 0))
    return ok(SchemaId::DefAx, {}, {}, {}, "def_sg");
  if (pat::as_app(h->args[0], Fn::suc) && pat::is_num(eq->rhs, 1))
    return ok(SchemaId::DefAx, {}, {}, {}, "def_sg");
  return std::nullopt;
}

inline MatchOpt def_sigma(const FormulaPtr& e) {
  auto* eq = pat::as_eq(e);
  if (!eq) return std::nullopt;
  auto* h = pat::as_app(eq->lhs, Fn::sigma);
  if (!h) return std::nullopt;
  if (pat::is_num(h->args[0], 0) && pat::is_num(eq->rhs, 0))
    return ok(SchemaId::DefAx, {}, {}, {}, "def_sigma");
  auto* s = pat::as_app(h->args[0], Fn::suc);
  if (!s) return std::nullopt;
  auto* r = pat::as_app(eq->rhs, Fn::suc);
  if (!r) return std::nullopt;
  auto* ri = pat::as_app(r->args[0], Fn::sigma);
  if (ri && term_eq(ri->args[0], s->args[0]))
    return ok(SchemaId::DefAx, {}, {}, {}, "def_sigma");
  return std::nullopt;
}

}  // namespace defs

inline const std::vector<DefEntry>& def_table() {
  static const std::vector<DefEntry> table = {
      {"def_mp", defs::def_mp},       {"def_e", defs::def_e},       {"def_Mp", defs::def_Mp},
      {"def_exp00", defs::def_exp00}, {"def_exp01", defs::def_exp01},
      {"def_exp02", defs::def_exp02}, {"df1_ell1", defs::df1_ell1}, {"df2_ell1", defs::df2_ell1},
      {"df3_ell1", defs::df3_ell1},   {"def1_ell", defs::def1_ell}, {"def2_ell", defs::def2_ell},
      {"def3_ell", defs::def3_ell},   {"def1_fl", defs::def1_fl},   {"def2_fl", defs::def2_fl},
      {"def_nuF", defs::def_nuF},     {"def_sg", defs::def_sg},     {"def_sigma", defs::def_sigma},
  };
  return table;
}

}  // namespace schema_detail

// ---------------------------------------------------------------------------
// the public matcher

// Strips a universal-closure prefix, returning the matrix.
inline FormulaPtr strip_closure(const FormulaPtr& f) {
  FormulaPtr cur = f;
  while (auto* q = pat::as_quant(cur, Quant::All)) cur = q->body;
  return cur;
}

// Tries one named schema against a candidate. SBA forms require the arrow
// termoid annotation. In closed mode the candidate must be closed and is
// matched as a closure of the schema's matrix.
inline std::optional<SchemaMatch> try_schema(SchemaId id, const FormulaPtr& candidate, bool closed_mode,
                                             const TermPtr& sba_termoid = nullptr,
                                             const std::string& detail = {}) {
  using namespace schema_detail;
  if (closed_mode && !is_closed(candidate)) return std::nullopt;
  FormulaPtr e = closed_mode ? strip_closure(candidate) : candidate;
  switch (id) {
    case SchemaId::Imp0: return match_imp0(e);
    case SchemaId::Imp1: return match_imp1(e);
    case SchemaId::Imp2: return match_imp2(e);
    case SchemaId::Imp3: return match_imp3(e);
    case SchemaId::Con1: return match_con1(e);
    case SchemaId::Con2: return match_con2(e);
    case SchemaId::Con3: return match_con3(e);
    case SchemaId::Dis1: return match_dis1(e);
    case SchemaId::Dis2: return match_dis2(e);
    case SchemaId::Dis3: return match_dis3(e);
    case SchemaId::Fi1:
    case SchemaId::Fi2:
    case SchemaId::Fi3:
    case SchemaId::Fi4: {
      auto m = match_fi(e);
      if (m && m->schema == id) return m;
      return std::nullopt;
    }
    case SchemaId::DisQ: return match_disq(e);
    case SchemaId::WBAA: return match_wba_a(e);
    case SchemaId::WBAE: return match_wba_e(e);
    case SchemaId::BR: return match_br(e);
    case SchemaId::Ref: return match_ref(e);
    case SchemaId::SymEq: return match_sym(e);
    case SchemaId::LEA1Eq: return match_lea1(e);
    case SchemaId::LEA2Eq: return match_lea2(e);
    case SchemaId::LEArp: return match_lea_rp(e);
    case SchemaId::ES: return match_es(e);
    case SchemaId::SBA1:
      return sba_termoid ? match_sba(e, sba_termoid, true) : std::nullopt;
    case SchemaId::SBA2:
      return sba_termoid ? match_sba(e, sba_termoid, false) : std::nullopt;
    case SchemaId::TND: return match_tnd(e);
    case SchemaId::DNE: return match_dne(e);
    case SchemaId::CVI: return match_cvi(e);
    case SchemaId::IndPeano: return match_ind_peano(e);
    case SchemaId::NumeroidAx: return match_numeroid_ax(e);
    case SchemaId::Ga: {
      auto m = match_ga(e);
      if (m && !detail.empty() && m->detail != detail) return std::nullopt;
      return m;
    }
    case SchemaId::ElemAx: {
      // the table's axioms appear both as matrices and as closed forms
      FormulaPtr matrix = strip_closure(e);
      for (const auto& entry : elem_table()) {
        if (!detail.empty() && detail != entry.id) continue;
        if (auto m = entry.fn(matrix)) return m;
      }
      return std::nullopt;
    }
    case SchemaId::DefAx: {
      FormulaPtr matrix = strip_closure(e);
      for (const auto& entry : def_table()) {
        if (!detail.empty() && detail != entry.id) continue;
        if (auto m = entry.fn(matrix)) return m;
      }
      return std::nullopt;
    }
    case SchemaId::Rosser11: return match_rosser11(e);
    case SchemaId::MOmega: return match_m_omega(e);
    case SchemaId::LEA1Nu:
    case SchemaId::LEA2Nu:
    case SchemaId::LEAMPNu:
      return std::nullopt;  // handled by the open-extension matcher
  }
  return std::nullopt;
}

// First match over all schemata in declaration order. Used by the axiom-hood
// evaluator; script lines name their schema and go through try_schema.
inline std::optional<SchemaMatch> match_axiom(const FormulaPtr& candidate, bool closed_mode) {
  static const SchemaId order[] = {
      SchemaId::Imp0,  SchemaId::Imp1,   SchemaId::Imp2,   SchemaId::Imp3,   SchemaId::Con1,
      SchemaId::Con2,  SchemaId::Con3,   SchemaId::Dis1,   SchemaId::Dis2,   SchemaId::Dis3,
      SchemaId::Fi1,   SchemaId::DisQ,   SchemaId::WBAA,   SchemaId::WBAE,   SchemaId::BR,
      SchemaId::Ref,   SchemaId::SymEq,  SchemaId::LEA1Eq, SchemaId::LEA2Eq, SchemaId::LEArp,
      SchemaId::ES,    SchemaId::TND,    SchemaId::DNE,    SchemaId::CVI,    SchemaId::IndPeano,
      SchemaId::NumeroidAx, SchemaId::Ga, SchemaId::ElemAx, SchemaId::DefAx,  SchemaId::MOmega,
  };
  for (SchemaId id : order) {
    if (id == SchemaId::Fi1) {
      // one probe covers the four fictitious-variable forms
      if (auto m = schema_detail::match_fi(closed_mode ? strip_closure(candidate) : candidate)) {
        if (!closed_mode || is_closed(candidate)) return m;
      }
      continue;
    }
    if (auto m = try_schema(id, candidate, closed_mode)) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// inference rules

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotImplication : RuleError {
  NotImplication() : RuleError("major premise is not an implication") {}
};
struct AntecedentMismatch : RuleError {
  AntecedentMismatch() : RuleError("minor premise does not match the major's antecedent") {}
};
struct VariableNotFree : RuleError {
  VariableNotFree() : RuleError("generalization variable has no free occurrence in the premise") {}
};
struct ClosedModeViolation : RuleError {
  ClosedModeViolation() : RuleError("the generalization rule is unavailable in the closed logic") {}
};
struct HypothesisCapture : RuleError {
  HypothesisCapture() : RuleError("generalization variable occurs freely in an active hypothesis") {}
};

inline FormulaPtr apply_mp(const FormulaPtr& minor, const FormulaPtr& major) {
  auto* imp = pat::as_imp(major);
  if (!imp) throw NotImplication{};
  if (!formula_eq(imp->lhs, minor)) throw AntecedentMismatch{};
  return imp->rhs;
}

inline FormulaPtr apply_gen(const FormulaPtr& premise, std::uint32_t var, bool open_mode,
                            const std::vector<FormulaPtr>& active_hypotheses) {
  if (!open_mode) throw ClosedModeViolation{};
  if (!free_vars(premise).count(var)) throw VariableNotFree{};
  for (const auto& h : active_hypotheses)
    if (free_vars(h).count(var)) throw HypothesisCapture{};
  return mk_forall(var, premise);
}

// ---------------------------------------------------------------------------
// derived rules (fixed expansions)

enum class DerivedRule { Imp0, ChIn, ChIn2, ChInFla2, IntAnt, IntAnt2, Contrap, Contrap2, Mtp1, Mtp2 };

inline const char* derived_rule_name(DerivedRule r) {
  switch (r) {
    case DerivedRule::Imp0: return "Imp0";
    case DerivedRule::ChIn: return "chin";
    case DerivedRule::ChIn2: return "chin2";
    case DerivedRule::ChInFla2: return "chinfla2";
    case DerivedRule::IntAnt: return "IntAnt";
    case DerivedRule::IntAnt2: return "intant";
    case DerivedRule::Contrap: return "Contrap";
    case DerivedRule::Contrap2: return "contrap";
    case DerivedRule::Mtp1: return "Mtp1";
    case DerivedRule::Mtp2: return "Mtp2";
  }
  return "?";
}

inline std::optional<DerivedRule> derived_rule_by_name(std::string_view name) {
  for (DerivedRule r : {DerivedRule::Imp0, DerivedRule::ChIn, DerivedRule::ChIn2,
                        DerivedRule::ChInFla2, DerivedRule::IntAnt, DerivedRule::IntAnt2,
                        DerivedRule::Contrap, DerivedRule::Contrap2, DerivedRule::Mtp1,
                        DerivedRule::Mtp2})
    if (derived_rule_name(r) == name) return r;
  return std::nullopt;
}

struct ExpansionLine {
  FormulaPtr formula;
  std::string justification;  // for reports only
};

struct ShapeMismatch : RuleError {
  explicit ShapeMismatch(const std::string& what) : RuleError("shape mismatch: " + what) {}
};

namespace expand_detail {

inline std::vector<ExpansionLine> imp0_lines(const FormulaPtr& A) {
  FormulaPtr aa = mk_imp(A, A);
  FormulaPtr l1 = mk_imp(A, aa);
  FormulaPtr l2 = mk_imp(A, mk_imp(aa, A));
  FormulaPtr l3 = mk_imp(l2, mk_imp(l1, aa));
  FormulaPtr l4 = mk_imp(l1, aa);
  return {{l1, "Imp1"}, {l2, "Imp1"}, {l3, "Imp2"}, {l4, "MP 2 3"}, {aa, "MP 1 4"}};
}

inline std::vector<ExpansionLine> chin_lines(const FormulaPtr& A, const FormulaPtr& B,
                                             const FormulaPtr& C) {
  FormulaPtr bc = mk_imp(B, C);
  FormulaPtr l1 = mk_imp(bc, mk_imp(A, bc));
  FormulaPtr l2 = mk_imp(A, bc);
  FormulaPtr l3 = mk_imp(l2, mk_imp(mk_imp(A, B), mk_imp(A, C)));
  FormulaPtr l4 = mk_imp(mk_imp(A, B), mk_imp(A, C));
  FormulaPtr l5 = mk_imp(A, C);
  return {{l1, "Imp1"}, {l2, "MP b 1"}, {l3, "Imp2"}, {l4, "MP 2 3"}, {l5, "MP a 4"}};
}

inline std::vector<ExpansionLine> chin2_lines(const FormulaPtr& A, const FormulaPtr& B,
                                              const FormulaPtr& C) {
  FormulaPtr l1 = mk_imp(B, mk_imp(A, B));
  FormulaPtr l2 = mk_imp(A, B);
  FormulaPtr a = mk_imp(A, mk_imp(B, C));
  FormulaPtr l3 = mk_imp(a, mk_imp(l2, mk_imp(A, C)));
  FormulaPtr l4 = mk_imp(l2, mk_imp(A, C));
  FormulaPtr l5 = mk_imp(A, C);
  return {{l1, "Imp1"}, {l2, "MP b 1"}, {l3, "Imp2"}, {l4, "MP a 3"}, {l5, "MP 2 4"}};
}

inline std::vector<ExpansionLine> chinfla2_lines(const FormulaPtr& A, const FormulaPtr& B,
                                                 const FormulaPtr& C) {
  // (B > C) > ((A > B) > (A > C)) in seven lines
  FormulaPtr bc = mk_imp(B, C);
  FormulaPtr abc = mk_imp(A, bc);
  FormulaPtr goalTail = mk_imp(mk_imp(A, B), mk_imp(A, C));
  FormulaPtr l1 = mk_imp(bc, abc);
  FormulaPtr l2 = mk_imp(abc, goalTail);
  std::vector<ExpansionLine> out = {{l1, "Imp1"}, {l2, "Imp2"}};
  auto tail = chin_lines(bc, abc, goalTail);
  for (auto& ln : tail) out.push_back(std::move(ln));
  return out;
}

inline std::vector<ExpansionLine> intant_lines(const FormulaPtr& A, const FormulaPtr& B,
                                               const FormulaPtr& C) {
  // premise a: A > (B > C); conclusion B > (A > C) in eight lines
  FormulaPtr a = mk_imp(A, mk_imp(B, C));
  FormulaPtr l1 = mk_imp(a, mk_imp(mk_imp(A, B), mk_imp(A, C)));
  FormulaPtr l2 = mk_imp(mk_imp(A, B), mk_imp(A, C));
  FormulaPtr l3 = mk_imp(B, mk_imp(A, B));
  std::vector<ExpansionLine> out = {{l1, "Imp2"}, {l2, "MP a 1"}, {l3, "Imp1"}};
  auto tail = chin_lines(B, mk_imp(A, B), mk_imp(A, C));
  for (auto& ln : tail) out.push_back(std::move(ln));
  return out;
}

inline std::vector<ExpansionLine> intant2_lines(const FormulaPtr& A, const FormulaPtr& B,
                                                const FormulaPtr& C) {
  // the premise-free form (A > (B > C)) > (B > (A > C)) in nineteen lines
  FormulaPtr X = mk_imp(A, mk_imp(B, C));
  FormulaPtr P = mk_imp(mk_imp(A, B), mk_imp(A, C));
  FormulaPtr Q = mk_imp(B, P);
  FormulaPtr R = mk_imp(B, mk_imp(A, C));
  FormulaPtr f1 = mk_imp(B, mk_imp(A, B));           // Imp1
  FormulaPtr f2 = mk_imp(X, P);                      // Imp2
  FormulaPtr f3 = mk_imp(P, Q);                      // Imp1
  FormulaPtr f4 = mk_imp(f3, mk_imp(X, f3));         // Imp1
  FormulaPtr f5 = mk_imp(X, f3);                     // MP 3 4
  FormulaPtr f6 = mk_imp(f5, mk_imp(f2, mk_imp(X, Q)));  // Imp2
  FormulaPtr f7 = mk_imp(f2, mk_imp(X, Q));          // MP 5 6
  FormulaPtr f8 = mk_imp(X, Q);                      // MP 2 7
  FormulaPtr f9 = mk_imp(Q, mk_imp(f1, R));          // Imp2
  FormulaPtr f10 = mk_imp(f9, mk_imp(X, f9));        // Imp1
  FormulaPtr f11 = mk_imp(X, f9);                    // MP 9 10
  FormulaPtr f12 = mk_imp(f11, mk_imp(f8, mk_imp(X, mk_imp(f1, R))));  // Imp2
  FormulaPtr f13 = mk_imp(f8, mk_imp(X, mk_imp(f1, R)));               // MP 11 12
  FormulaPtr f14 = mk_imp(X, mk_imp(f1, R));         // MP 8 13
  FormulaPtr f15 = mk_imp(f1, mk_imp(X, f1));        // Imp1
  FormulaPtr f16 = mk_imp(X, f1);                    // MP 1 15
  FormulaPtr f17 = mk_imp(f14, mk_imp(f16, mk_imp(X, R)));  // Imp2
  FormulaPtr f18 = mk_imp(f16, mk_imp(X, R));        // MP 14 17
  FormulaPtr f19 = mk_imp(X, R);                     // MP 16 18
  return {{f1, "Imp1"},   {f2, "Imp2"},   {f3, "Imp1"},    {f4, "Imp1"},  {f5, "MP 3 4"},
          {f6, "Imp2"},   {f7, "MP 5 6"}, {f8, "MP 2 7"},  {f9, "Imp2"},  {f10, "Imp1"},
          {f11, "MP 9 10"}, {f12, "Imp2"}, {f13, "MP 11 12"}, {f14, "MP 8 13"}, {f15, "Imp1"},
          {f16, "MP 1 15"}, {f17, "Imp2"}, {f18, "MP 14 17"}, {f19, "MP 16 18"}};
}

inline std::vector<ExpansionLine> contrap_rule_lines(const FormulaPtr& A, const FormulaPtr& B) {
  // premise a: A > B; twelve lines ending (B > f) > (A > f)
  std::vector<ExpansionLine> out = chinfla2_lines(A, B, falsum());
  FormulaPtr seven = out.back().formula;  // (B>f) > ((A>B) > (A>f))
  auto tail = chin2_lines(mk_imp(B, falsum()), mk_imp(A, B), mk_imp(A, falsum()));
  // the minor premise of the inner chain is the rule's own premise a
  for (auto& ln : tail) out.push_back(std::move(ln));
  (void)seven;
  return out;
}

inline std::vector<ExpansionLine> contrap2_lines(const FormulaPtr& A, const FormulaPtr& B) {
  // premise-free: (A > B) > ((B > f) > (A > f)) in fifteen lines
  std::vector<ExpansionLine> out = chinfla2_lines(A, B, falsum());
  auto tail = intant_lines(mk_imp(B, falsum()), mk_imp(A, B), mk_imp(A, falsum()));
  for (auto& ln : tail) out.push_back(std::move(ln));
  return out;
}

inline std::vector<ExpansionLine> mtp2_head_lines(const FormulaPtr& A, const FormulaPtr& B) {
  // lines 1..5: (A > f) > (A > B)
  FormulaPtr l1 = mk_imp(falsum(), B);
  FormulaPtr l2 = mk_imp(l1, mk_imp(A, l1));
  FormulaPtr l3 = mk_imp(A, l1);
  FormulaPtr l4 = mk_imp(l3, mk_imp(mk_imp(A, falsum()), mk_imp(A, B)));
  FormulaPtr l5 = mk_imp(mk_imp(A, falsum()), mk_imp(A, B));
  return {{l1, "Imp3"}, {l2, "Imp1"}, {l3, "MP 1 2"}, {l4, "Imp2"}, {l5, "MP 3 4"}};
}

inline std::vector<ExpansionLine> mtp2_lines(const FormulaPtr& A, const FormulaPtr& B) {
  // premise a: A v B; twenty lines ending (A > f) > B
  FormulaPtr negA = mk_imp(A, falsum());
  std::vector<ExpansionLine> out = mtp2_head_lines(A, B);
  auto mid = intant_lines(negA, A, B);  // 6..13: A > (negA > B)
  for (auto& ln : mid) out.push_back(std::move(ln));
  FormulaPtr l13 = out.back().formula;
  FormulaPtr l14 = mk_imp(B, mk_imp(negA, B));
  FormulaPtr l15 = mk_imp(l13, mk_imp(l14, mk_and(l13, l14)));
  FormulaPtr l16 = mk_imp(l14, mk_and(l13, l14));
  FormulaPtr l17 = mk_and(l13, l14);
  FormulaPtr l18 = mk_imp(l17, mk_imp(mk_or(A, B), mk_imp(negA, B)));
  FormulaPtr l19 = mk_imp(mk_or(A, B), mk_imp(negA, B));
  FormulaPtr l20 = mk_imp(negA, B);
  out.push_back({l14, "Imp1"});
  out.push_back({l15, "Con3"});
  out.push_back({l16, "MP 13 15"});
  out.push_back({l17, "MP 14 16"});
  out.push_back({l18, "Dis3"});
  out.push_back({l19, "MP 17 18"});
  out.push_back({l20, "MP a 19"});
  return out;
}

inline std::vector<ExpansionLine> mtp1_lines(const FormulaPtr& A, const FormulaPtr& B) {
  // premises a: A v B, b: A > f; seventeen lines ending B
  FormulaPtr negA = mk_imp(A, falsum());
  std::vector<ExpansionLine> out = mtp2_head_lines(A, B);  // 1..5
  FormulaPtr l6 = mk_imp(A, B);
  out.push_back({l6, "MP b 5"});
  auto imp0 = imp0_lines(B);  // 7..11: B > B
  for (auto& ln : imp0) out.push_back(std::move(ln));
  FormulaPtr l11 = mk_imp(B, B);
  FormulaPtr l12 = mk_imp(l6, mk_imp(l11, mk_and(l6, l11)));
  FormulaPtr l13 = mk_imp(l11, mk_and(l6, l11));
  FormulaPtr l14 = mk_and(l6, l11);
  FormulaPtr l15 = mk_imp(l14, mk_imp(mk_or(A, B), B));
  FormulaPtr l16 = mk_imp(mk_or(A, B), B);
  out.push_back({l12, "Con3"});
  out.push_back({l13, "MP 6 12"});
  out.push_back({l14, "MP 11 13"});
  out.push_back({l15, "Dis3"});
  out.push_back({l16, "MP 14 15"});
  out.push_back({B, "MP a 16"});
  return out;
}

}  // namespace expand_detail

// Expands a derived rule. Rules with premises read their instantiation from
// the premise formulas; premise-free rules read it from the stated
// conclusion. The final entry is always the rule's conclusion.
inline std::vector<ExpansionLine> expand_derived(DerivedRule rule,
                                                 const std::vector<FormulaPtr>& premises,
                                                 const FormulaPtr& stated_conclusion) {
  using namespace expand_detail;
  auto need = [&](std::size_t n) {
    if (premises.size() != n)
      throw ShapeMismatch(std::string(derived_rule_name(rule)) + " expects " + std::to_string(n) +
                          " premise(s)");
  };
  switch (rule) {
    case DerivedRule::Imp0: {
      need(0);
      auto* i = pat::as_imp(stated_conclusion);
      if (!i || !formula_eq(i->lhs, i->rhs)) throw ShapeMismatch("conclusion is not A > A");
      return imp0_lines(i->lhs);
    }
    case DerivedRule::ChIn: {
      need(2);
      auto* p1 = pat::as_imp(premises[0]);
      auto* p2 = pat::as_imp(premises[1]);
      if (!p1 || !p2 || !formula_eq(p1->rhs, p2->lhs))
        throw ShapeMismatch("chain inference needs A > B and B > C");
      return chin_lines(p1->lhs, p1->rhs, p2->rhs);
    }
    case DerivedRule::ChIn2: {
      need(2);
      auto* p1 = pat::as_imp(premises[0]);
      if (!p1) throw ShapeMismatch("first premise must be A > (B > C)");
      auto* inner = pat::as_imp(p1->rhs);
      if (!inner || !formula_eq(inner->lhs, premises[1]))
        throw ShapeMismatch("second premise must be the middle formula B");
      return chin2_lines(p1->lhs, inner->lhs, inner->rhs);
    }
    case DerivedRule::ChInFla2: {
      need(0);
      auto* top = pat::as_imp(stated_conclusion);
      if (!top) throw ShapeMismatch("conclusion is not an implication");
      auto* bc = pat::as_imp(top->lhs);
      auto* r = pat::as_imp(top->rhs);
      if (!bc || !r) throw ShapeMismatch("conclusion is not (B>C) > ((A>B) > (A>C))");
      auto* ab = pat::as_imp(r->lhs);
      auto* ac = pat::as_imp(r->rhs);
      if (!ab || !ac || !formula_eq(ab->rhs, bc->lhs) || !formula_eq(ac->rhs, bc->rhs) ||
          !formula_eq(ab->lhs, ac->lhs))
        throw ShapeMismatch("conclusion is not (B>C) > ((A>B) > (A>C))");
      return chinfla2_lines(ab->lhs, bc->lhs, bc->rhs);
    }
    case DerivedRule::IntAnt: {
      need(1);
      auto* p = pat::as_imp(premises[0]);
      if (!p) throw ShapeMismatch("premise must be A > (B > C)");
      auto* inner = pat::as_imp(p->rhs);
      if (!inner) throw ShapeMismatch("premise must be A > (B > C)");
      return intant_lines(p->lhs, inner->lhs, inner->rhs);
    }
    case DerivedRule::IntAnt2: {
      need(0);
      auto* top = pat::as_imp(stated_conclusion);
      if (!top) throw ShapeMismatch("conclusion is not an implication");
      auto* l = pat::as_imp(top->lhs);
      if (!l) throw ShapeMismatch("conclusion is not (A>(B>C)) > (B>(A>C))");
      auto* li = pat::as_imp(l->rhs);
      auto* r = pat::as_imp(top->rhs);
      if (!li || !r) throw ShapeMismatch("conclusion is not (A>(B>C)) > (B>(A>C))");
      auto* ri = pat::as_imp(r->rhs);
      if (!ri || !formula_eq(r->lhs, li->lhs) || !formula_eq(ri->lhs, l->lhs) ||
          !formula_eq(ri->rhs, li->rhs))
        throw ShapeMismatch("conclusion is not (A>(B>C)) > (B>(A>C))");
      return intant2_lines(l->lhs, li->lhs, li->rhs);
    }
    case DerivedRule::Contrap: {
      need(1);
      auto* p = pat::as_imp(premises[0]);
      if (!p) throw ShapeMismatch("premise must be A > B");
      return contrap_rule_lines(p->lhs, p->rhs);
    }
    case DerivedRule::Contrap2: {
      need(0);
      auto* top = pat::as_imp(stated_conclusion);
      if (!top) throw ShapeMismatch("conclusion is not an implication");
      auto* ab = pat::as_imp(top->lhs);
      if (!ab) throw ShapeMismatch("conclusion is not (A>B) > (negB > negA)");
      return contrap2_lines(ab->lhs, ab->rhs);
    }
    case DerivedRule::Mtp2: {
      need(1);
      auto* o = pat::as_or(premises[0]);
      if (!o) throw ShapeMismatch("premise must be A v B");
      return mtp2_lines(o->lhs, o->rhs);
    }
    case DerivedRule::Mtp1: {
      need(2);
      auto* o = pat::as_or(premises[0]);
      if (!o) throw ShapeMismatch("first premise must be A v B");
      if (!pat::is_neg_of(premises[1], o->lhs))
        throw ShapeMismatch("second premise must be the negation of the first disjunct");
      return mtp1_lines(o->lhs, o->rhs);
    }
  }
  throw ShapeMismatch("unknown rule");
}

}  // namespace ari
