// Evaluators for the primitive recursive function symbols over symbolic
// codes. Everything works structurally: exponent extraction and canonical
// equality stand in for arithmetic on integers that can never be written out.
#pragma once

#include <map>
#include <unordered_map>

#include "ari/calculus.hpp"
#include "ari/enumeration.hpp"

namespace ari {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : EvalError {
  using EvalError::EvalError;
};
struct NonMaterializable : EvalError {
  using EvalError::EvalError;
};

// ---------------------------------------------------------------------------
// elementary functions

inline int eval_sg(const CodePtr& c) { return c->is_zero() ? 0 : 1; }
inline int eval_ssg(const CodePtr& c) { return 1 - eval_sg(c); }

inline CodePtr eval_msd(const CodePtr& a, const CodePtr& b) {
  try {
    return code_absdiff(a, b);
  } catch (const std::domain_error& ex) {
    throw NonMaterializable(ex.what());
  }
}

inline CodePtr eval_len(const CodePtr& c) {
  return code_lit(code_largest_prime_index(c));
}

// Mp(n, q) = 2^(q)_{0,2} * 3^n * 5^q
inline CodePtr eval_Mp(const CodePtr& n, const CodePtr& q) {
  CodePtr head = code_exp(code_exp(q, 0), 2);
  return code_product({CodeFactor{0, head}, CodeFactor{1, n}, CodeFactor{2, q}});
}

// e(n, q) = 1 iff the major's root is an implication whose antecedent code
// equals the minor's root code.
inline int eval_e(const CodePtr& n, const CodePtr& q) {
  if (!code_eq(code_exp(code_exp(q, 0), 0), code_lit(3))) return 0;
  if (!code_eq(code_exp(code_exp(q, 0), 1), code_exp(n, 0))) return 0;
  return 1;
}

// mp(n, q) = Mp(n, q) * e(n, q) * sg(n)
inline CodePtr eval_mp(const CodePtr& n, const CodePtr& q) {
  if (eval_sg(n) == 0 || eval_e(n, q) == 0) return code_lit(0);
  return eval_Mp(n, q);
}

// ---------------------------------------------------------------------------
// axiom-hood, closed-formula-hood

inline int eval_ax(const CodePtr& n, const AxiomTable& table) {
  if (table.mode == AxiomTable::Mode::Micro) {
    for (const auto& m : table.micro_axiom_codes)
      if (code_eq(n, m)) return 0;
    return 1;
  }
  Decoded d = decode(n, DecodeKind::Fla);
  auto* f = std::get_if<FormulaPtr>(&d);
  if (!f) return 1;
  if (!table.open_logic && !is_closed(*f)) return 1;
  return match_axiom(*f, !table.open_logic).has_value() ? 0 : 1;
}

inline int eval_cfor(const CodePtr& n) {
  Decoded d = decode(n, DecodeKind::Fla);
  auto* f = std::get_if<FormulaPtr>(&d);
  return f && is_closed(*f) ? 0 : 1;
}

inline CodePtr eval_fl(const CodePtr& n) {
  return eval_cfor(n) == 0 ? n : falsum_code_constant();
}

// ---------------------------------------------------------------------------
// the proof property and proof relation

struct Ell1Cache {
  std::unordered_map<std::uint64_t, int> small;  // values that fit u64
};

namespace detail {
inline std::optional<std::uint64_t> cache_key(const CodePtr& n) {
  if (n->is_lit() && n->lit().fits_u64()) return n->lit().to_u64();
  return std::nullopt;
}
}  // namespace detail

// ell1(n) = 0 iff n codes a trivial proof of an axiom or an MP-composition of
// two proofs. The recursion descends to (n)_1 and (n)_2, which are
// structurally smaller in canonical form.
inline int eval_ell1(const CodePtr& n, const AxiomTable& table, Ell1Cache* cache = nullptr) {
  std::optional<std::uint64_t> key = detail::cache_key(n);
  if (cache && key) {
    auto it = cache->small.find(*key);
    if (it != cache->small.end()) return it->second;
  }
  int result = 1;
  CodePtr root = code_exp(n, 0);
  // Ant1: n = 2^(n)_0 and (n)_0 codes an axiom
  if (!n->is_zero() && code_eq(n, code_prime_power(0, root)) && eval_ax(root, table) == 0) {
    result = 0;
  } else if (!n->is_zero()) {
    // Ant2: n = mp((n)_1, (n)_2) with both branches proofs
    CodePtr n1 = code_exp(n, 1);
    CodePtr n2 = code_exp(n, 2);
    if (code_eq(n, eval_mp(n1, n2)) && eval_ell1(n1, table, cache) == 0 &&
        eval_ell1(n2, table, cache) == 0)
      result = 0;
  }
  if (cache && key) cache->small[*key] = result;
  return result;
}

inline int eval_ell(const CodePtr& n, const CodePtr& q, const AxiomTable& table,
                    Ell1Cache* cache = nullptr) {
  if (eval_ell1(n, table, cache) != 0) return 1;
  return code_eq(code_exp(n, 0), q) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sigma: identity established by literal unary recursion, never by shortcut

inline CodePtr eval_sigma(const CodePtr& t, std::uint64_t step_budget) {
  Materialized m = materialize(t, 20);
  if (!materialized_ok(m)) throw BudgetExceeded("sigma argument exceeds the step budget");
  const Nat& v = std::get<Nat>(m);
  if (!v.fits_u64() || v.to_u64() > step_budget)
    throw BudgetExceeded("sigma argument exceeds the step budget");
  std::uint64_t n = v.to_u64();
  volatile std::uint64_t acc = 0;  // perform the recursion step by step
  for (std::uint64_t i = 0; i < n; ++i) acc = acc + 1;
  return code_lit(static_cast<std::uint64_t>(acc));
}

// ---------------------------------------------------------------------------
// termoid evaluation

struct EvalContext {
  const AxiomTable* table = nullptr;
  std::map<std::uint32_t, CodePtr> valuation;  // materialized parameter values
  std::uint64_t sigma_budget = 1000000;
  Ell1Cache* cache = nullptr;

  const AxiomTable& axioms() const {
    static const AxiomTable default_table = AxiomTable::full(true);
    return table ? *table : default_table;
  }
};

inline CodePtr eval_termoid(const TermPtr& t, const EvalContext& ctx) {
  if (auto* v = std::get_if<Termoid::Var>(&t->node)) {
    auto it = ctx.valuation.find(v->index);
    if (it == ctx.valuation.end())
      throw EvalError("variable x" + std::to_string(v->index) + " has no assigned value");
    return it->second;
  }
  if (auto* n = std::get_if<Termoid::Numeroid>(&t->node)) return n->length;
  if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    auto arg = [&](std::size_t i) { return eval_termoid(ap->args[i], ctx); };
    switch (ap->fn) {
      case Fn::suc: return code_add(arg(0), code_lit(1));
      case Fn::add: return code_add(arg(0), arg(1));
      case Fn::mul: return code_mul(arg(0), arg(1));
      case Fn::pow: return code_pow(arg(0), arg(1));
      case Fn::sg: return code_lit(eval_sg(arg(0)));
      case Fn::ssg: return code_lit(eval_ssg(arg(0)));
      case Fn::msd: return eval_msd(arg(0), arg(1));
      case Fn::exp0: return code_exp(arg(0), 0);
      case Fn::exp1: return code_exp(arg(0), 1);
      case Fn::exp2: return code_exp(arg(0), 2);
      case Fn::exp00: return code_exp(code_exp(arg(0), 0), 0);
      case Fn::exp01: return code_exp(code_exp(arg(0), 0), 1);
      case Fn::exp02: return code_exp(code_exp(arg(0), 0), 2);
      case Fn::len: return eval_len(arg(0));
      case Fn::Mp: return eval_Mp(arg(0), arg(1));
      case Fn::e: return code_lit(eval_e(arg(0), arg(1)));
      case Fn::mp: return eval_mp(arg(0), arg(1));
      case Fn::ell1: return code_lit(eval_ell1(arg(0), ctx.axioms(), ctx.cache));
      case Fn::ell: return code_lit(eval_ell(arg(0), arg(1), ctx.axioms(), ctx.cache));
      case Fn::ax: return code_lit(eval_ax(arg(0), ctx.axioms()));
      case Fn::cfor: return code_lit(eval_cfor(arg(0)));
      case Fn::fl: return eval_fl(arg(0));
      case Fn::sigma: return eval_sigma(arg(0), ctx.sigma_budget);
    }
  }
  if (std::holds_alternative<Termoid::Iota>(t->node))
    throw EvalError("description termoids have no computed value");
  throw EvalError("open-extension termoid formers have no computed value");
}

// Used by the parser's nu(...) sugar: value of a closed arithmetic termoid.
inline CodePtr eval_constant_termoid(const TermPtr& t) {
  EvalContext ctx;
  return eval_termoid(t, ctx);
}

// CLI-facing dispatch by function-symbol name.
inline CodePtr eval_by_name(const std::string& name, const std::vector<CodePtr>& args,
                            const AxiomTable& table, std::uint64_t sigma_budget = 1000000) {
  auto f = fn_by_name(name);
  if (!f) throw EvalError("unknown function symbol: " + name);
  if (static_cast<int>(args.size()) != fn_info(*f).arity)
    throw EvalError(std::string("arity mismatch for ") + name);
  std::vector<TermPtr> wrapped;
  for (const auto& a : args) wrapped.push_back(mk_numeroid(a));
  EvalContext ctx;
  ctx.table = &table;
  return eval_termoid(mk_app(*f, std::move(wrapped)), ctx);
}

}  // namespace ari
