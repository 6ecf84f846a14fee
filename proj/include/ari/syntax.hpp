// Abstract syntax of LAri and its open extension: termoids, formulae,
// numeroids, the function-symbol table, substitution and closure.
//
// Negation is notation, never a constructor: neg(E) is imp(E, 0=1), and all
// formulas live in that expanded form, so definitional-rewrite steps reduce
// to structural identity. Numeroids are atomic; their length is itself a
// symbolic code because corpus constants outgrow any explicit integer.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ari/code.hpp"

namespace ari {

// ---------------------------------------------------------------------------
// function-symbol table

enum class Fn : std::uint8_t {
  // unary, En-numbers 71^1 .. 71^15
  suc, sg, ssg, exp0, exp1, exp2, exp00, exp01, exp02, ell1, cfor, fl, sigma, len, ax,
  // binary, En-numbers 73^1 .. 73^8
  add, mul, pow, msd, Mp, mp, ell, e,
};

struct FnInfo {
  const char* name;
  int arity;
  std::uint32_t table_index;       // k in base^k
  std::uint32_t base_prime_index;  // 19 -> 71, 20 -> 73, 21 -> 79
};

inline const FnInfo& fn_info(Fn f) {
  static const FnInfo table[] = {
      {"suc", 1, 1, 19},  {"sg", 1, 2, 19},    {"ssg", 1, 3, 19},  {"exp0", 1, 4, 19},
      {"exp1", 1, 5, 19}, {"exp2", 1, 6, 19},  {"exp00", 1, 7, 19}, {"exp01", 1, 8, 19},
      {"exp02", 1, 9, 19}, {"ell1", 1, 10, 19}, {"cfor", 1, 11, 19}, {"fl", 1, 12, 19},
      {"sigma", 1, 13, 19}, {"len", 1, 14, 19}, {"ax", 1, 15, 19},
      {"add", 2, 1, 20},  {"mul", 2, 2, 20},   {"pow", 2, 3, 20},  {"msd", 2, 4, 20},
      {"Mp", 2, 5, 20},   {"mp", 2, 6, 20},    {"ell", 2, 7, 20},  {"e", 2, 8, 20},
  };
  return table[static_cast<std::size_t>(f)];
}

inline std::optional<Fn> fn_by_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Fn::e); ++i) {
    Fn f = static_cast<Fn>(i);
    if (fn_info(f).name == name) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// trees

struct Termoid;
struct Formula;
using TermPtr = std::shared_ptr<const Termoid>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Pred : std::uint8_t { Eq, Lt, Le };
enum class Conn : std::uint8_t { Imp, And, Or };
enum class Quant : std::uint8_t { All, Ex };

struct Termoid {
  struct Var {
    std::uint32_t index;  // >= 1
  };
  struct Numeroid {
    CodePtr length;  // the Su-particle count, possibly only symbolic
  };
  struct App {
    Fn fn;
    std::vector<TermPtr> args;
  };
  struct Iota {
    std::uint32_t var;
    FormulaPtr body;
  };
  // The two opaque formers of the open extension: the numeroid-image of a
  // termoid's value, and the explicit generator for the formula named by a
  // Kleene subscript. Neither belongs to the base language.
  struct NuImage {
    TermPtr sub;
  };
  struct PiGen {
    TermPtr sub;
  };

  std::variant<Var, Numeroid, App, Iota, NuImage, PiGen> node;
};

struct Formula {
  struct Atom {
    Pred pred;
    TermPtr lhs, rhs;
  };
  struct Connective {
    Conn conn;
    FormulaPtr lhs, rhs;
  };
  struct Quantified {
    Quant quant;
    std::uint32_t var;
    FormulaPtr body;
  };
  struct Kleene {
    TermPtr sub;
  };

  std::variant<Atom, Connective, Quantified, Kleene> node;
};

// constructors
inline TermPtr mk_var(std::uint32_t i) {
  if (i < 1) throw std::invalid_argument("variable index must be positive");
  return std::make_shared<Termoid>(Termoid{Termoid::Var{i}});
}
inline TermPtr mk_numeroid(CodePtr length) {
  return std::make_shared<Termoid>(Termoid{Termoid::Numeroid{std::move(length)}});
}
inline TermPtr mk_numeroid(std::uint64_t n) { return mk_numeroid(code_lit(n)); }
inline TermPtr mk_app(Fn f, std::vector<TermPtr> args) {
  if (static_cast<int>(args.size()) != fn_info(f).arity)
    throw std::invalid_argument(std::string("arity mismatch for ") + fn_info(f).name);
  return std::make_shared<Termoid>(Termoid{Termoid::App{f, std::move(args)}});
}
inline TermPtr mk_iota(std::uint32_t var, FormulaPtr body) {
  return std::make_shared<Termoid>(Termoid{Termoid::Iota{var, std::move(body)}});
}
inline TermPtr mk_nu_image(TermPtr sub) {
  return std::make_shared<Termoid>(Termoid{Termoid::NuImage{std::move(sub)}});
}
inline TermPtr mk_pi_gen(TermPtr sub) {
  return std::make_shared<Termoid>(Termoid{Termoid::PiGen{std::move(sub)}});
}

inline FormulaPtr mk_atom(Pred p, TermPtr l, TermPtr r) {
  return std::make_shared<Formula>(Formula{Formula::Atom{p, std::move(l), std::move(r)}});
}
inline FormulaPtr mk_conn(Conn c, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Formula::Connective{c, std::move(l), std::move(r)}});
}
inline FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r) { return mk_conn(Conn::Imp, std::move(l), std::move(r)); }
inline FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) { return mk_conn(Conn::And, std::move(l), std::move(r)); }
inline FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) { return mk_conn(Conn::Or, std::move(l), std::move(r)); }
inline FormulaPtr mk_quant(Quant q, std::uint32_t var, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Formula::Quantified{q, var, std::move(body)}});
}
inline FormulaPtr mk_forall(std::uint32_t var, FormulaPtr body) { return mk_quant(Quant::All, var, std::move(body)); }
inline FormulaPtr mk_exists(std::uint32_t var, FormulaPtr body) { return mk_quant(Quant::Ex, var, std::move(body)); }
inline FormulaPtr mk_kleene(TermPtr sub) {
  return std::make_shared<Formula>(Formula{Formula::Kleene{std::move(sub)}});
}

// The anti-axiom 0 = 1.
inline FormulaPtr falsum() {
  static const FormulaPtr f = mk_atom(Pred::Eq, mk_numeroid(0), mk_numeroid(1));
  return f;
}

inline FormulaPtr negate(FormulaPtr e) { return mk_imp(std::move(e), falsum()); }

// ---------------------------------------------------------------------------
// structural equality

bool term_eq(const TermPtr& a, const TermPtr& b);
bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

inline bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  if (auto* v = std::get_if<Termoid::Var>(&a->node))
    return v->index == std::get<Termoid::Var>(b->node).index;
  if (auto* n = std::get_if<Termoid::Numeroid>(&a->node))
    return code_eq(n->length, std::get<Termoid::Numeroid>(b->node).length);
  if (auto* ap = std::get_if<Termoid::App>(&a->node)) {
    const auto& bp = std::get<Termoid::App>(b->node);
    if (ap->fn != bp.fn) return false;
    for (std::size_t i = 0; i < ap->args.size(); ++i)
      if (!term_eq(ap->args[i], bp.args[i])) return false;
    return true;
  }
  if (auto* io = std::get_if<Termoid::Iota>(&a->node)) {
    const auto& bo = std::get<Termoid::Iota>(b->node);
    return io->var == bo.var && formula_eq(io->body, bo.body);
  }
  if (auto* nu = std::get_if<Termoid::NuImage>(&a->node))
    return term_eq(nu->sub, std::get<Termoid::NuImage>(b->node).sub);
  return term_eq(std::get<Termoid::PiGen>(a->node).sub, std::get<Termoid::PiGen>(b->node).sub);
}

inline bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  if (auto* at = std::get_if<Formula::Atom>(&a->node)) {
    const auto& bt = std::get<Formula::Atom>(b->node);
    return at->pred == bt.pred && term_eq(at->lhs, bt.lhs) && term_eq(at->rhs, bt.rhs);
  }
  if (auto* c = std::get_if<Formula::Connective>(&a->node)) {
    const auto& bc = std::get<Formula::Connective>(b->node);
    return c->conn == bc.conn && formula_eq(c->lhs, bc.lhs) && formula_eq(c->rhs, bc.rhs);
  }
  if (auto* q = std::get_if<Formula::Quantified>(&a->node)) {
    const auto& bq = std::get<Formula::Quantified>(b->node);
    return q->quant == bq.quant && q->var == bq.var && formula_eq(q->body, bq.body);
  }
  return term_eq(std::get<Formula::Kleene>(a->node).sub, std::get<Formula::Kleene>(b->node).sub);
}

inline bool is_falsum(const FormulaPtr& f) { return formula_eq(f, falsum()); }

// ---------------------------------------------------------------------------
// free variables

void collect_free_vars(const TermPtr& t, std::set<std::uint32_t>& bound, std::set<std::uint32_t>& out);
void collect_free_vars(const FormulaPtr& f, std::set<std::uint32_t>& bound, std::set<std::uint32_t>& out);

inline void collect_free_vars(const TermPtr& t, std::set<std::uint32_t>& bound, std::set<std::uint32_t>& out) {
  if (auto* v = std::get_if<Termoid::Var>(&t->node)) {
    if (!bound.count(v->index)) out.insert(v->index);
  } else if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    for (const auto& a : ap->args) collect_free_vars(a, bound, out);
  } else if (auto* io = std::get_if<Termoid::Iota>(&t->node)) {
    bool fresh = bound.insert(io->var).second;
    collect_free_vars(io->body, bound, out);
    if (fresh) bound.erase(io->var);
  } else if (auto* nu = std::get_if<Termoid::NuImage>(&t->node)) {
    collect_free_vars(nu->sub, bound, out);
  } else if (auto* pg = std::get_if<Termoid::PiGen>(&t->node)) {
    collect_free_vars(pg->sub, bound, out);
  }
  // numeroids are closed
}

inline void collect_free_vars(const FormulaPtr& f, std::set<std::uint32_t>& bound, std::set<std::uint32_t>& out) {
  if (auto* at = std::get_if<Formula::Atom>(&f->node)) {
    collect_free_vars(at->lhs, bound, out);
    collect_free_vars(at->rhs, bound, out);
  } else if (auto* c = std::get_if<Formula::Connective>(&f->node)) {
    collect_free_vars(c->lhs, bound, out);
    collect_free_vars(c->rhs, bound, out);
  } else if (auto* q = std::get_if<Formula::Quantified>(&f->node)) {
    bool fresh = bound.insert(q->var).second;
    collect_free_vars(q->body, bound, out);
    if (fresh) bound.erase(q->var);
  } else {
    // variables free in the subscript occur freely in the Kleene atom
    collect_free_vars(std::get<Formula::Kleene>(f->node).sub, bound, out);
  }
}

template <class Tree>
std::set<std::uint32_t> free_vars(const Tree& t) {
  std::set<std::uint32_t> bound, out;
  collect_free_vars(t, bound, out);
  return out;
}

template <class Tree>
bool is_closed(const Tree& t) {
  return free_vars(t).empty();
}

// ---------------------------------------------------------------------------
// substitution

struct SubstResult {
  FormulaPtr formula;
  bool capture_ok;  // t was free for the variable at every replaced occurrence
};

struct CaptureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline TermPtr subst_term(const TermPtr& s, std::uint32_t var, const TermPtr& t,
                          const std::set<std::uint32_t>& t_free,
                          std::set<std::uint32_t>& binders, bool& ok);
inline FormulaPtr subst_formula(const FormulaPtr& f, std::uint32_t var, const TermPtr& t,
                                const std::set<std::uint32_t>& t_free,
                                std::set<std::uint32_t>& binders, bool& ok);

inline TermPtr subst_term(const TermPtr& s, std::uint32_t var, const TermPtr& t,
                          const std::set<std::uint32_t>& t_free,
                          std::set<std::uint32_t>& binders, bool& ok) {
  if (auto* v = std::get_if<Termoid::Var>(&s->node)) {
    if (v->index != var || binders.count(var)) return s;
    for (std::uint32_t b : binders)
      if (t_free.count(b)) ok = false;
    return t;
  }
  if (std::holds_alternative<Termoid::Numeroid>(s->node)) return s;
  if (auto* ap = std::get_if<Termoid::App>(&s->node)) {
    std::vector<TermPtr> args;
    args.reserve(ap->args.size());
    bool changed = false;
    for (const auto& a : ap->args) {
      TermPtr na = subst_term(a, var, t, t_free, binders, ok);
      changed |= na.get() != a.get();
      args.push_back(std::move(na));
    }
    return changed ? mk_app(ap->fn, std::move(args)) : s;
  }
  if (auto* io = std::get_if<Termoid::Iota>(&s->node)) {
    bool fresh = binders.insert(io->var).second;
    FormulaPtr body = subst_formula(io->body, var, t, t_free, binders, ok);
    if (fresh) binders.erase(io->var);
    return body.get() == io->body.get() ? s : mk_iota(io->var, std::move(body));
  }
  if (auto* nu = std::get_if<Termoid::NuImage>(&s->node)) {
    TermPtr sub = subst_term(nu->sub, var, t, t_free, binders, ok);
    return sub.get() == nu->sub.get() ? s : mk_nu_image(std::move(sub));
  }
  const auto& pg = std::get<Termoid::PiGen>(s->node);
  TermPtr sub = subst_term(pg.sub, var, t, t_free, binders, ok);
  return sub.get() == pg.sub.get() ? s : mk_pi_gen(std::move(sub));
}

inline FormulaPtr subst_formula(const FormulaPtr& f, std::uint32_t var, const TermPtr& t,
                                const std::set<std::uint32_t>& t_free,
                                std::set<std::uint32_t>& binders, bool& ok) {
  if (auto* at = std::get_if<Formula::Atom>(&f->node)) {
    TermPtr l = subst_term(at->lhs, var, t, t_free, binders, ok);
    TermPtr r = subst_term(at->rhs, var, t, t_free, binders, ok);
    if (l.get() == at->lhs.get() && r.get() == at->rhs.get()) return f;
    return mk_atom(at->pred, std::move(l), std::move(r));
  }
  if (auto* c = std::get_if<Formula::Connective>(&f->node)) {
    FormulaPtr l = subst_formula(c->lhs, var, t, t_free, binders, ok);
    FormulaPtr r = subst_formula(c->rhs, var, t, t_free, binders, ok);
    if (l.get() == c->lhs.get() && r.get() == c->rhs.get()) return f;
    return mk_conn(c->conn, std::move(l), std::move(r));
  }
  if (auto* q = std::get_if<Formula::Quantified>(&f->node)) {
    if (q->var == var) return f;  // variable bound here, nothing below is free
    bool fresh = binders.insert(q->var).second;
    FormulaPtr body = subst_formula(q->body, var, t, t_free, binders, ok);
    if (fresh) binders.erase(q->var);
    return body.get() == q->body.get() ? f : mk_quant(q->quant, q->var, std::move(body));
  }
  const auto& k = std::get<Formula::Kleene>(f->node);
  TermPtr sub = subst_term(k.sub, var, t, t_free, binders, ok);
  return sub.get() == k.sub.get() ? f : mk_kleene(std::move(sub));
}

}  // namespace detail

// Replaces every free occurrence of the variable, reporting whether the
// termoid stayed free at each replaced spot. Strict callers reject capture.
inline SubstResult substitute(const FormulaPtr& f, std::uint32_t var, const TermPtr& t,
                              bool strict = false) {
  std::set<std::uint32_t> t_free = free_vars(t);
  std::set<std::uint32_t> binders;
  bool ok = true;
  FormulaPtr out = detail::subst_formula(f, var, t, t_free, binders, ok);
  if (strict && !ok) throw CaptureViolation("termoid is not free for the variable");
  return {std::move(out), ok};
}

inline TermPtr substitute_term(const TermPtr& s, std::uint32_t var, const TermPtr& t) {
  std::set<std::uint32_t> t_free = free_vars(t);
  std::set<std::uint32_t> binders;
  bool ok = true;
  return detail::subst_term(s, var, t, t_free, binders, ok);
}

// ---------------------------------------------------------------------------
// closures

struct IncompleteClosure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Universal closure in the given order (first variable outermost).
inline FormulaPtr closure(const FormulaPtr& e, const std::vector<std::uint32_t>& order) {
  std::set<std::uint32_t> fv = free_vars(e);
  std::set<std::uint32_t> given(order.begin(), order.end());
  if (given.size() != order.size())
    throw IncompleteClosure("closure order repeats a variable");
  for (std::uint32_t v : fv)
    if (!given.count(v)) throw IncompleteClosure("closure order omits a free variable");
  for (std::uint32_t v : given)
    if (!fv.count(v)) throw IncompleteClosure("closure order names a variable not free in the formula");
  FormulaPtr out = e;
  for (auto it = order.rbegin(); it != order.rend(); ++it) out = mk_forall(*it, out);
  return out;
}

// ---------------------------------------------------------------------------
// language probes

inline bool contains_kleene(const FormulaPtr& f) {
  if (std::holds_alternative<Formula::Kleene>(f->node)) return true;
  if (auto* c = std::get_if<Formula::Connective>(&f->node))
    return contains_kleene(c->lhs) || contains_kleene(c->rhs);
  if (auto* q = std::get_if<Formula::Quantified>(&f->node)) return contains_kleene(q->body);
  return false;
}

inline bool term_contains_iota(const TermPtr& t) {
  if (std::holds_alternative<Termoid::Iota>(t->node)) return true;
  if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    for (const auto& a : ap->args)
      if (term_contains_iota(a)) return true;
  }
  if (auto* nu = std::get_if<Termoid::NuImage>(&t->node)) return term_contains_iota(nu->sub);
  if (auto* pg = std::get_if<Termoid::PiGen>(&t->node)) return term_contains_iota(pg->sub);
  return false;
}

bool formula_contains_opaque(const FormulaPtr& f);

inline bool term_contains_opaque(const TermPtr& t) {
  if (std::holds_alternative<Termoid::NuImage>(t->node) ||
      std::holds_alternative<Termoid::PiGen>(t->node))
    return true;
  if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    for (const auto& a : ap->args)
      if (term_contains_opaque(a)) return true;
  }
  if (auto* io = std::get_if<Termoid::Iota>(&t->node)) return formula_contains_opaque(io->body);
  return false;
}

inline bool formula_contains_opaque(const FormulaPtr& f) {
  if (auto* at = std::get_if<Formula::Atom>(&f->node))
    return term_contains_opaque(at->lhs) || term_contains_opaque(at->rhs);
  if (auto* c = std::get_if<Formula::Connective>(&f->node))
    return formula_contains_opaque(c->lhs) || formula_contains_opaque(c->rhs);
  if (auto* q = std::get_if<Formula::Quantified>(&f->node)) return formula_contains_opaque(q->body);
  return term_contains_opaque(std::get<Formula::Kleene>(f->node).sub);
}

// ---------------------------------------------------------------------------
// printing (canonical concrete syntax)

void print_term(std::ostream& os, const TermPtr& t);
void print_formula(std::ostream& os, const FormulaPtr& f);

inline void print_term(std::ostream& os, const TermPtr& t) {
  if (auto* v = std::get_if<Termoid::Var>(&t->node)) {
    os << "x" << v->index;
  } else if (auto* n = std::get_if<Termoid::Numeroid>(&t->node)) {
    if (n->length->is_lit()) {
      os << "num(" << n->length->lit().to_decimal() << ")";
    } else {
      os << "numc(";
      print_code(os, n->length);
      os << ")";
    }
  } else if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    os << fn_info(ap->fn).name << "(";
    for (std::size_t i = 0; i < ap->args.size(); ++i) {
      if (i) os << ",";
      print_term(os, ap->args[i]);
    }
    os << ")";
  } else if (auto* io = std::get_if<Termoid::Iota>(&t->node)) {
    os << "iota(x" << io->var << ",";
    print_formula(os, io->body);
    os << ")";
  } else if (auto* nu = std::get_if<Termoid::NuImage>(&t->node)) {
    os << "nuv(";
    print_term(os, nu->sub);
    os << ")";
  } else {
    os << "piF(";
    print_term(os, std::get<Termoid::PiGen>(t->node).sub);
    os << ")";
  }
}

inline void print_formula(std::ostream& os, const FormulaPtr& f) {
  if (auto* at = std::get_if<Formula::Atom>(&f->node)) {
    os << (at->pred == Pred::Eq ? "eq" : at->pred == Pred::Lt ? "lt" : "le") << "(";
    print_term(os, at->lhs);
    os << ",";
    print_term(os, at->rhs);
    os << ")";
  } else if (auto* c = std::get_if<Formula::Connective>(&f->node)) {
    os << (c->conn == Conn::Imp ? "imp" : c->conn == Conn::And ? "and" : "or") << "(";
    print_formula(os, c->lhs);
    os << ",";
    print_formula(os, c->rhs);
    os << ")";
  } else if (auto* q = std::get_if<Formula::Quantified>(&f->node)) {
    os << (q->quant == Quant::All ? "all" : "exists") << "(x" << q->var << ",";
    print_formula(os, q->body);
    os << ")";
  } else {
    os << "F(";
    print_term(os, std::get<Formula::Kleene>(f->node).sub);
    os << ")";
  }
}

inline std::string to_string(const TermPtr& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}
inline std::string to_string(const FormulaPtr& f) {
  std::ostringstream os;
  print_formula(os, f);
  return os.str();
}

}  // namespace ari
