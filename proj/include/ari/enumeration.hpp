// The 1-1 enumeration: every termoid, formula and deduction is assigned a
// symbolic code, with the head symbol at prime 2 and children at 3, 5, 7.
//
//   variable x<i>        29^i
//   numeroid of length n 23^(n+1)
//   function symbols     71^k / 73^k / 79^k by arity and table position
//   predicate heads      eq 15, lt 25, le 35
//   connective heads     imp 3, and 5, or 7, all 11, exists 13, iota 113
//   trivial deduction    2^(root code)
//   MP step              2^(root) * 3^(minor branch) * 5^(major branch)
//   Gen step             2^(root) * 5 -> 3^(premise branch)
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ari/syntax.hpp"

namespace ari {

inline constexpr std::uint32_t kVarPrimeIndex = 9;       // 29
inline constexpr std::uint32_t kNumeroidPrimeIndex = 8;  // 23
inline constexpr std::uint64_t kImpHead = 3, kAndHead = 5, kOrHead = 7;
inline constexpr std::uint64_t kAllHead = 11, kExHead = 13;
inline constexpr std::uint64_t kEqHead = 15, kLtHead = 25, kLeHead = 35;
inline constexpr std::uint64_t kIotaHead = 113;

struct EncodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// encoding

CodePtr encode_termoid(const TermPtr& t);
CodePtr encode_formula(const FormulaPtr& f);

inline CodePtr fn_symbol_code(Fn f) {
  const FnInfo& info = fn_info(f);
  return code_prime_power(info.base_prime_index, code_lit(info.table_index));
}

namespace detail {
inline CodePtr headed(std::uint64_t head, std::initializer_list<CodePtr> children) {
  Code::Product fs;
  fs.push_back({0, code_lit(head)});
  std::uint32_t g = 1;
  for (const auto& c : children) fs.push_back({g++, c});
  return code_product(std::move(fs));
}
inline CodePtr headed(CodePtr head, std::initializer_list<CodePtr> children) {
  Code::Product fs;
  fs.push_back({0, std::move(head)});
  std::uint32_t g = 1;
  for (const auto& c : children) fs.push_back({g++, c});
  return code_product(std::move(fs));
}
}  // namespace detail

inline CodePtr encode_termoid(const TermPtr& t) {
  if (auto* v = std::get_if<Termoid::Var>(&t->node))
    return code_prime_power(kVarPrimeIndex, code_lit(v->index));
  if (auto* n = std::get_if<Termoid::Numeroid>(&t->node)) {
    CodePtr succ;
    try {
      succ = code_add(n->length, code_lit(1));
    } catch (const std::domain_error&) {
      throw EncodeError("numeroid length has no explicit successor");
    }
    return code_prime_power(kNumeroidPrimeIndex, std::move(succ));
  }
  if (auto* ap = std::get_if<Termoid::App>(&t->node)) {
    Code::Product fs;
    fs.push_back({0, fn_symbol_code(ap->fn)});
    std::uint32_t g = 1;
    for (const auto& a : ap->args) fs.push_back({g++, encode_termoid(a)});
    return code_product(std::move(fs));
  }
  if (auto* io = std::get_if<Termoid::Iota>(&t->node)) {
    return detail::headed(kIotaHead, {code_prime_power(kVarPrimeIndex, code_lit(io->var)),
                                      encode_formula(io->body)});
  }
  throw EncodeError("open-extension termoid formers carry no enumeration number");
}

struct KleenePresent : EncodeError {
  KleenePresent() : EncodeError("Kleene atoms have no enumeration number; translate first") {}
};

inline CodePtr encode_formula(const FormulaPtr& f) {
  if (auto* at = std::get_if<Formula::Atom>(&f->node)) {
    std::uint64_t head = at->pred == Pred::Eq ? kEqHead : at->pred == Pred::Lt ? kLtHead : kLeHead;
    return detail::headed(head, {encode_termoid(at->lhs), encode_termoid(at->rhs)});
  }
  if (auto* c = std::get_if<Formula::Connective>(&f->node)) {
    std::uint64_t head = c->conn == Conn::Imp ? kImpHead : c->conn == Conn::And ? kAndHead : kOrHead;
    return detail::headed(head, {encode_formula(c->lhs), encode_formula(c->rhs)});
  }
  if (auto* q = std::get_if<Formula::Quantified>(&f->node)) {
    std::uint64_t head = q->quant == Quant::All ? kAllHead : kExHead;
    return detail::headed(head, {code_prime_power(kVarPrimeIndex, code_lit(q->var)),
                                 encode_formula(q->body)});
  }
  throw KleenePresent{};
}

// ---------------------------------------------------------------------------
// deductions

struct Deduction;
using DedPtr = std::shared_ptr<const Deduction>;

struct Deduction {
  struct Trivial {
    FormulaPtr root;
  };
  struct MpNode {
    FormulaPtr root;
    DedPtr minor, major;
  };
  struct GenNode {
    FormulaPtr root;
    DedPtr premise;
    std::uint32_t var;
  };
  std::variant<Trivial, MpNode, GenNode> node;

  const FormulaPtr& root() const {
    if (auto* t = std::get_if<Trivial>(&node)) return t->root;
    if (auto* m = std::get_if<MpNode>(&node)) return m->root;
    return std::get<GenNode>(node).root;
  }
};

inline DedPtr mk_trivial(FormulaPtr root) {
  return std::make_shared<Deduction>(Deduction{Deduction::Trivial{std::move(root)}});
}

// The major's root must be an implication whose antecedent is the minor's root.
inline DedPtr mk_mp(DedPtr minor, DedPtr major) {
  auto* imp = std::get_if<Formula::Connective>(&major->root()->node);
  if (!imp || imp->conn != Conn::Imp)
    throw std::invalid_argument("mk_mp: major branch does not end in an implication");
  if (!formula_eq(imp->lhs, minor->root()))
    throw std::invalid_argument("mk_mp: minor root does not match the major's antecedent");
  FormulaPtr root = imp->rhs;
  return std::make_shared<Deduction>(Deduction{Deduction::MpNode{std::move(root), std::move(minor), std::move(major)}});
}

inline DedPtr mk_gen(DedPtr premise, std::uint32_t var) {
  FormulaPtr root = mk_forall(var, premise->root());
  return std::make_shared<Deduction>(Deduction{Deduction::GenNode{std::move(root), std::move(premise), var}});
}

inline CodePtr encode_deduction(const DedPtr& d) {
  if (auto* t = std::get_if<Deduction::Trivial>(&d->node))
    return code_prime_power(0, encode_formula(t->root));
  if (auto* m = std::get_if<Deduction::MpNode>(&d->node))
    return detail::headed(encode_formula(m->root),
                          {encode_deduction(m->minor), encode_deduction(m->major)});
  const auto& g = std::get<Deduction::GenNode>(d->node);
  return detail::headed(encode_formula(g.root), {encode_deduction(g.premise)});
}

// ---------------------------------------------------------------------------
// decoding

struct NotACode {
  std::string reason;
};

using Decoded = std::variant<TermPtr, FormulaPtr, DedPtr, NotACode>;

enum class DecodeKind { Auto, Termoid, Fla, Ded };

Decoded decode(const CodePtr& c, DecodeKind kind = DecodeKind::Auto);

namespace detail {

inline std::optional<std::uint64_t> small_value(const CodePtr& c) {
  if (!c->is_lit() || !c->lit().fits_u64()) return std::nullopt;
  return c->lit().to_u64();
}

// classification of a head exponent
struct HeadClass {
  enum Kind { FormulaHead, FnHead, IotaHead, None } kind = None;
  std::uint64_t small = 0;  // formula heads
  Fn fn = Fn::suc;          // function heads
};

inline HeadClass classify_head(const CodePtr& head) {
  HeadClass h;
  if (auto v = small_value(head)) {
    switch (*v) {
      case kImpHead:
      case kAndHead:
      case kOrHead:
      case kAllHead:
      case kExHead:
      case kEqHead:
      case kLtHead:
      case kLeHead:
        h.kind = HeadClass::FormulaHead;
        h.small = *v;
        return h;
      case kIotaHead:
        h.kind = HeadClass::IotaHead;
        return h;
      default:
        break;
    }
  }
  auto fs = code_factor_list(head);
  if (fs && fs->size() == 1) {
    std::uint32_t base = (*fs)[0].prime_index;
    auto k = small_value((*fs)[0].exponent);
    if (k && (base == 19 || base == 20 || base == 21)) {
      for (int i = 0; i <= static_cast<int>(Fn::e); ++i) {
        Fn f = static_cast<Fn>(i);
        if (fn_info(f).base_prime_index == base && fn_info(f).table_index == *k) {
          h.kind = HeadClass::FnHead;
          h.fn = f;
          return h;
        }
      }
    }
  }
  return h;
}

inline std::optional<std::uint32_t> decode_variable_code(const CodePtr& c) {
  auto fs = code_factor_list(c);
  if (!fs || fs->size() != 1 || (*fs)[0].prime_index != kVarPrimeIndex) return std::nullopt;
  auto i = small_value((*fs)[0].exponent);
  if (!i || *i < 1 || *i > 0xffffffffull) return std::nullopt;
  return static_cast<std::uint32_t>(*i);
}

Decoded decode_impl(const CodePtr& c, DecodeKind kind);

inline std::optional<TermPtr> decode_term(const CodePtr& c, std::string& err) {
  Decoded d = decode_impl(c, DecodeKind::Termoid);
  if (auto* t = std::get_if<TermPtr>(&d)) return *t;
  err = std::get<NotACode>(d).reason;
  return std::nullopt;
}
inline std::optional<FormulaPtr> decode_fla(const CodePtr& c, std::string& err) {
  Decoded d = decode_impl(c, DecodeKind::Fla);
  if (auto* f = std::get_if<FormulaPtr>(&d)) return *f;
  err = std::get<NotACode>(d).reason;
  return std::nullopt;
}

inline Decoded decode_impl(const CodePtr& c, DecodeKind kind) {
  if (c->is_zero()) return NotACode{"zero is not the code of any object"};
  if (c->is_one()) return NotACode{"one is not the code of any object"};
  auto fs = code_factor_list(c);
  if (!fs) return NotACode{"value has no available factorization"};
  std::string err;

  // bare prime powers: variables and numeroids
  if (fs->size() == 1) {
    const auto& f0 = (*fs)[0];
    if (f0.prime_index == kVarPrimeIndex && kind != DecodeKind::Fla && kind != DecodeKind::Ded) {
      auto i = small_value(f0.exponent);
      if (i && *i >= 1 && *i <= 0xffffffffull) return mk_var(static_cast<std::uint32_t>(*i));
      return NotACode{"variable index out of range"};
    }
    if (f0.prime_index == kNumeroidPrimeIndex && kind != DecodeKind::Fla && kind != DecodeKind::Ded) {
      if (f0.exponent->is_zero()) return NotACode{"numeroid exponent must be positive"};
      if (f0.exponent->is_lit())
        return mk_numeroid(code_lit(f0.exponent->lit() - Nat{1}));
      return NotACode{"numeroid exponent is not explicit"};
    }
    if (f0.prime_index == 0 && (kind == DecodeKind::Ded || kind == DecodeKind::Auto)) {
      auto root = decode_fla(f0.exponent, err);
      if (root) return mk_trivial(*root);
      return NotACode{"trivial deduction root: " + err};
    }
    return NotACode{"bare prime power matches no object class"};
  }

  // multi-factor codes must occupy consecutive primes from 2 upward
  for (std::size_t i = 0; i < fs->size(); ++i)
    if ((*fs)[i].prime_index != i)
      return NotACode{"factors do not occupy consecutive primes from 2"};

  const CodePtr& head = (*fs)[0].exponent;
  HeadClass h = classify_head(head);

  if (h.kind == HeadClass::FormulaHead && kind != DecodeKind::Termoid && kind != DecodeKind::Ded) {
    if (fs->size() != 3) return NotACode{"formula code must have exactly three factors"};
    const CodePtr& c1 = (*fs)[1].exponent;
    const CodePtr& c2 = (*fs)[2].exponent;
    switch (h.small) {
      case kEqHead:
      case kLtHead:
      case kLeHead: {
        auto l = decode_term(c1, err);
        if (!l) return NotACode{"atom lhs: " + err};
        auto r = decode_term(c2, err);
        if (!r) return NotACode{"atom rhs: " + err};
        Pred p = h.small == kEqHead ? Pred::Eq : h.small == kLtHead ? Pred::Lt : Pred::Le;
        return mk_atom(p, *l, *r);
      }
      case kImpHead:
      case kAndHead:
      case kOrHead: {
        auto l = decode_fla(c1, err);
        if (!l) return NotACode{"connective lhs: " + err};
        auto r = decode_fla(c2, err);
        if (!r) return NotACode{"connective rhs: " + err};
        Conn cc = h.small == kImpHead ? Conn::Imp : h.small == kAndHead ? Conn::And : Conn::Or;
        return mk_conn(cc, *l, *r);
      }
      default: {
        auto v = decode_variable_code(c1);
        if (!v) return NotACode{"quantifier does not bind a variable code"};
        auto body = decode_fla(c2, err);
        if (!body) return NotACode{"quantifier body: " + err};
        return mk_quant(h.small == kAllHead ? Quant::All : Quant::Ex, *v, *body);
      }
    }
  }

  if (h.kind == HeadClass::IotaHead && kind != DecodeKind::Fla && kind != DecodeKind::Ded) {
    if (fs->size() != 3) return NotACode{"description code must have exactly three factors"};
    auto v = decode_variable_code((*fs)[1].exponent);
    if (!v) return NotACode{"description does not bind a variable code"};
    auto body = decode_fla((*fs)[2].exponent, err);
    if (!body) return NotACode{"description body: " + err};
    return mk_iota(*v, *body);
  }

  if (h.kind == HeadClass::FnHead && kind != DecodeKind::Fla && kind != DecodeKind::Ded) {
    int arity = fn_info(h.fn).arity;
    if (static_cast<int>(fs->size()) - 1 != arity)
      return NotACode{std::string("arity mismatch for ") + fn_info(h.fn).name};
    std::vector<TermPtr> args;
    for (int i = 0; i < arity; ++i) {
      auto a = decode_term((*fs)[static_cast<std::size_t>(i) + 1].exponent, err);
      if (!a) return NotACode{"argument: " + err};
      args.push_back(*a);
    }
    return mk_app(h.fn, std::move(args));
  }

  // deduction codes: the head exponent is itself a formula code
  if (h.kind == HeadClass::None && kind != DecodeKind::Termoid && kind != DecodeKind::Fla) {
    auto root = decode_fla(head, err);
    if (!root) return NotACode{"head exponent is neither a symbol nor a formula: " + err};
    if (fs->size() == 2) {
      auto* q = std::get_if<Formula::Quantified>(&(*root)->node);
      if (!q || q->quant != Quant::All)
        return NotACode{"generalization root is not universal"};
      Decoded prem = decode_impl((*fs)[1].exponent, DecodeKind::Ded);
      if (auto* p = std::get_if<DedPtr>(&prem)) {
        if (!formula_eq((*p)->root(), q->body))
          return NotACode{"generalization premise root mismatch"};
        return mk_gen(*p, q->var);
      }
      return NotACode{"generalization premise: " + std::get<NotACode>(prem).reason};
    }
    if (fs->size() == 3) {
      Decoded minor = decode_impl((*fs)[1].exponent, DecodeKind::Ded);
      if (!std::holds_alternative<DedPtr>(minor))
        return NotACode{"MP minor branch: " + std::get<NotACode>(minor).reason};
      Decoded major = decode_impl((*fs)[2].exponent, DecodeKind::Ded);
      if (!std::holds_alternative<DedPtr>(major))
        return NotACode{"MP major branch: " + std::get<NotACode>(major).reason};
      try {
        DedPtr d = mk_mp(std::get<DedPtr>(minor), std::get<DedPtr>(major));
        if (!formula_eq(d->root(), *root)) return NotACode{"MP root mismatch"};
        return d;
      } catch (const std::invalid_argument& ex) {
        return NotACode{ex.what()};
      }
    }
    return NotACode{"deduction code has too many branches"};
  }

  return NotACode{"head exponent matches no symbol in the table"};
}

}  // namespace detail

inline Decoded decode(const CodePtr& c, DecodeKind kind) {
  return detail::decode_impl(c, kind);
}

}  // namespace ari
