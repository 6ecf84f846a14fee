// Concrete syntax for termoids and formulae.
//
//   termoid  := x<i> | num(<n>) | numc(<code>) | vf | omega
//             | nu(<termoid>) | nuv(<termoid>) | piF(<termoid>) | <fn>(args)
//   formula  := eq|lt|le(t,t) | imp|and|or(F,F) | all|exists(x<i>,F)
//             | iota is a termoid former | F(<termoid>) | neg(F) | bot
//
// neg(A) is sugar for imp(A,bot); bot for eq(num(0),num(1)); vf for the
// numeroid whose length is the enumeration number of bot; nu(t) evaluates a
// constant termoid and denotes the numeroid of its value; nuF(t) abbreviates
// nuv(piF(t)).
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ari/syntax.hpp"

namespace ari {

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

// Value of a closed termoid over p.r. symbols, defined in arithmetization.hpp.
CodePtr eval_constant_termoid(const TermPtr& t);

// The length of vf: the enumeration number of the anti-axiom 0 = 1,
// i.e. 2^15 * 3^23 * 5^529.
inline CodePtr falsum_code_constant() {
  static const CodePtr c = code_product({CodeFactor{0, code_lit(15)},
                                         CodeFactor{1, code_lit(23)},
                                         CodeFactor{2, code_lit(529)}});
  return c;
}

inline TermPtr vf_numeroid() {
  static const TermPtr t = mk_numeroid(falsum_code_constant());
  return t;
}

// The description denoting the least proof number of the anti-axiom, if any,
// and zero otherwise. Bound variable x1; the inner witness variable is x2.
inline FormulaPtr omega_matrix(const TermPtr& subject) {
  TermPtr vf = vf_numeroid();
  auto ell_of = [&](TermPtr s) { return mk_app(Fn::ell, {std::move(s), vf}); };
  FormulaPtr proves = mk_atom(Pred::Eq, ell_of(subject), mk_numeroid(0));
  FormulaPtr smaller = mk_exists(
      2, mk_and(mk_atom(Pred::Lt, mk_var(2), subject),
                mk_atom(Pred::Eq, ell_of(mk_var(2)), mk_numeroid(0))));
  FormulaPtr first = mk_and(proves, negate(smaller));
  FormulaPtr second = mk_and(mk_atom(Pred::Eq, subject, mk_numeroid(0)), negate(proves));
  return mk_or(first, second);
}

inline TermPtr omega_termoid() {
  static const TermPtr t = mk_iota(1, omega_matrix(mk_var(1)));
  return t;
}

namespace detail {

class TermFormulaParser {
public:
  explicit TermFormulaParser(std::string_view text) : text_(text) {}

  TermPtr parse_termoid() {
    TermPtr t = termoid();
    finish();
    return t;
  }
  FormulaPtr parse_formula() {
    FormulaPtr f = formula();
    finish();
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw SyntaxError("expected identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string number_text() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t variable_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') throw SyntaxError("expected variable x<i>", pos_);
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw SyntaxError("expected variable x<i>", pos_);
    unsigned long v = std::stoul(name.substr(1));
    if (v < 1) throw SyntaxError("variable index must be positive", pos_);
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t bound_variable() {
    std::string name = ident();
    return variable_index(name);
  }

  // raw code expression up to the matching ')'
  CodePtr code_argument() {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    return parse_code(text_.substr(start, pos_ - start));
  }

  TermPtr termoid() {
    std::string name = ident();
    if (name[0] == 'x' && name.size() > 1 && std::isdigit(static_cast<unsigned char>(name[1])))
      return mk_var(variable_index(name));
    if (name == "num") {
      expect('(');
      std::string n = number_text();
      expect(')');
      return mk_numeroid(code_lit(Nat::from_decimal(n)));
    }
    if (name == "numc") {
      expect('(');
      CodePtr c = code_argument();
      expect(')');
      return mk_numeroid(std::move(c));
    }
    if (name == "vf") return vf_numeroid();
    if (name == "omega") return omega_termoid();
    if (name == "nu") {
      expect('(');
      TermPtr sub = termoid();
      expect(')');
      return mk_numeroid(eval_constant_termoid(sub));
    }
    if (name == "nuv") {
      expect('(');
      TermPtr sub = termoid();
      expect(')');
      return mk_nu_image(std::move(sub));
    }
    if (name == "piF") {
      expect('(');
      TermPtr sub = termoid();
      expect(')');
      return mk_pi_gen(std::move(sub));
    }
    if (name == "nuF") {
      expect('(');
      TermPtr sub = termoid();
      expect(')');
      return mk_nu_image(mk_pi_gen(std::move(sub)));
    }
    if (name == "iota") {
      expect('(');
      std::uint32_t v = bound_variable();
      expect(',');
      FormulaPtr body = formula();
      expect(')');
      return mk_iota(v, std::move(body));
    }
    if (auto f = fn_by_name(name)) {
      expect('(');
      std::vector<TermPtr> args;
      args.push_back(termoid());
      while (eat(',')) args.push_back(termoid());
      expect(')');
      return mk_app(*f, std::move(args));
    }
    throw SyntaxError("unknown termoid head '" + name + "'", pos_);
  }

  FormulaPtr formula() {
    skip_ws();
    std::size_t mark = pos_;
    std::string name = ident();
    if (name == "bot") return falsum();
    if (name == "eq" || name == "lt" || name == "le") {
      Pred p = name == "eq" ? Pred::Eq : name == "lt" ? Pred::Lt : Pred::Le;
      expect('(');
      TermPtr l = termoid();
      expect(',');
      TermPtr r = termoid();
      expect(')');
      return mk_atom(p, std::move(l), std::move(r));
    }
    if (name == "imp" || name == "and" || name == "or") {
      Conn c = name == "imp" ? Conn::Imp : name == "and" ? Conn::And : Conn::Or;
      expect('(');
      FormulaPtr l = formula();
      expect(',');
      FormulaPtr r = formula();
      expect(')');
      return mk_conn(c, std::move(l), std::move(r));
    }
    if (name == "neg") {
      expect('(');
      FormulaPtr a = formula();
      expect(')');
      return negate(std::move(a));
    }
    if (name == "all" || name == "exists") {
      Quant q = name == "all" ? Quant::All : Quant::Ex;
      expect('(');
      std::uint32_t v = bound_variable();
      expect(',');
      FormulaPtr body = formula();
      expect(')');
      return mk_quant(q, v, std::move(body));
    }
    if (name == "F") {
      expect('(');
      TermPtr sub = termoid();
      expect(')');
      return mk_kleene(std::move(sub));
    }
    throw SyntaxError("unknown formula head '" + name + "'", mark);
  }
};

}  // namespace detail

inline TermPtr parse_termoid(std::string_view text) {
  return detail::TermFormulaParser(text).parse_termoid();
}

inline FormulaPtr parse_formula(std::string_view text) {
  return detail::TermFormulaParser(text).parse_formula();
}

}  // namespace ari
