// Proof presentations: numbered lines with justifications, hypothesis and
// axiom declarations, parameters held constant, discharge directives.
//
// File format (UTF-8 text, # starts a comment):
//   script <name>
//   logic open|closed
//   system Ari|Ari+|AriNu
//   param x<i>
//   let <NAME> := <text>                   textual macro, referenced as $NAME
//   hyp <name> : <formula>
//   axiomdecl <name> : <formula>
//   <label>. <formula> :: <justification>
//   <l1>.-<l2>. <formula> :: DR <rule> <ref> [<ref>]
//   discharge <name> [from <ref>] as <label>
//   qed <label>
//
// Labels are integers with an optional letter suffix (686a); range labels
// carry a derived-rule justification whose expansion fills the range.
// A trailing "# reconstructed[: note]" marks lines restored where the source
// presentation is damaged.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ari/calculus.hpp"
#include "ari/kleene.hpp"
#include "ari/parser.hpp"

namespace ari {

struct Label {
  std::uint64_t num = 0;
  std::string suffix;

  friend bool operator==(const Label& a, const Label& b) {
    return a.num == b.num && a.suffix == b.suffix;
  }
  friend bool operator<(const Label& a, const Label& b) {
    if (a.num != b.num) return a.num < b.num;
    return a.suffix < b.suffix;
  }
  std::string str() const { return std::to_string(num) + suffix; }
};

inline std::optional<Label> parse_label(std::string_view text) {
  if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0]))) return std::nullopt;
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  Label l;
  l.num = std::stoull(std::string(text.substr(0, i)));
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::islower(static_cast<unsigned char>(text[j]))) return std::nullopt;
  l.suffix = std::string(text.substr(i));
  return l;
}

enum class JustKind {
  Schema,      // named axiom schema (incl. ElemAx/DefAx/Ga with detail)
  NuSchema,    // LEA1nu / LEA2nu / LEAMPnu
  Sba,         // SBA1/SBA2 with the arrow termoid
  Mp,
  Gen,
  Derived,
  Hyp,
  AxiomDecl,
  DefRewrite,
};

struct Justification {
  JustKind kind;
  SchemaId schema = SchemaId::Imp0;  // Schema/NuSchema/Sba
  std::string detail;                // ElemAx/DefAx id, Ga index
  DerivedRule rule = DerivedRule::ChIn;
  std::vector<std::string> refs;     // line labels or hypothesis names
  std::uint32_t gen_var = 0;
  TermPtr sba_termoid;
  std::string name;                  // Hyp/AxiomDecl/DefRewrite name
  bool permissive_capture = false;
  std::string text;                  // verbatim, for reports
};

struct ScriptLine {
  Label first, last;  // equal unless a range
  bool is_range = false;
  FormulaPtr formula;
  Justification just;
  bool reconstructed = false;
  std::string annotation;

  std::string label_str() const {
    return is_range ? first.str() + "-" + last.str() : first.str();
  }
  std::uint64_t width() const { return last.num - first.num + 1; }
};

struct DischargeDirective {
  std::string hyp;
  std::string from;   // empty: the preceding line
  Label as_label;
};

enum class System { Ari, AriPlus, AriNu };

struct Script {
  std::string name;
  bool open_logic = true;
  System system = System::Ari;
  std::set<std::uint32_t> params;
  std::vector<std::pair<std::string, FormulaPtr>> hypotheses;
  std::vector<std::pair<std::string, FormulaPtr>> axiom_decls;
  using Entry = std::variant<ScriptLine, DischargeDirective>;
  std::vector<Entry> entries;
  std::string qed;

  const FormulaPtr* hypothesis(const std::string& n) const {
    for (const auto& [name, f] : hypotheses)
      if (name == n) return &f;
    return nullptr;
  }
  const FormulaPtr* axiom_decl(const std::string& n) const {
    for (const auto& [name, f] : axiom_decls)
      if (name == n) return &f;
    return nullptr;
  }
};

struct ScriptError : std::runtime_error {
  int line;
  ScriptError(const std::string& msg, int ln)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};
struct MonotonicityError : ScriptError {
  using ScriptError::ScriptError;
};

// ---------------------------------------------------------------------------
// parsing

namespace script_detail {

inline std::string expand_macros(const std::string& text,
                                 const std::map<std::string, std::string>& macros, int ln) {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '$') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string name = text.substr(i + 1, j - i - 1);
      auto it = macros.find(name);
      if (it == macros.end()) throw ScriptError("undefined macro $" + name, ln);
      out += it->second;
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::optional<SchemaId> schema_by_name(const std::string& name) {
  static const std::map<std::string, SchemaId> table = {
      {"Imp0", SchemaId::Imp0},   {"Imp1", SchemaId::Imp1},  {"Imp2", SchemaId::Imp2},
      {"Imp3", SchemaId::Imp3},   {"Con1", SchemaId::Con1},  {"Con2", SchemaId::Con2},
      {"Con3", SchemaId::Con3},   {"Dis1", SchemaId::Dis1},  {"Dis2", SchemaId::Dis2},
      {"Dis3", SchemaId::Dis3},   {"Fi1", SchemaId::Fi1},    {"Fi2", SchemaId::Fi2},
      {"Fi3", SchemaId::Fi3},     {"Fi4", SchemaId::Fi4},    {"DisQ", SchemaId::DisQ},
      {"WBAA", SchemaId::WBAA},   {"WBAE", SchemaId::WBAE},  {"BR", SchemaId::BR},
      {"Ref", SchemaId::Ref},     {"SymEq", SchemaId::SymEq},
      {"LEA1eq", SchemaId::LEA1Eq}, {"LEA2eq", SchemaId::LEA2Eq}, {"LEArp", SchemaId::LEArp},
      {"ES", SchemaId::ES},       {"TND", SchemaId::TND},    {"DNE", SchemaId::DNE},
      {"CVI", SchemaId::CVI},     {"IndPeano", SchemaId::IndPeano},
      {"NumeroidAx", SchemaId::NumeroidAx}, {"Rosser11", SchemaId::Rosser11},
      {"M-omega", SchemaId::MOmega},
  };
  auto it = table.find(name);
  if (it != table.end()) return it->second;
  return std::nullopt;
}

inline Justification parse_justification(const std::string& text, int ln) {
  Justification j;
  j.text = text;
  std::vector<std::string> tok = tokens(text);
  if (tok.empty()) throw ScriptError("empty justification", ln);
  const std::string& head = tok[0];

  auto need = [&](std::size_t n) {
    if (tok.size() != n) throw ScriptError("justification '" + head + "' is malformed", ln);
  };

  if (head == "MP") {
    need(3);
    j.kind = JustKind::Mp;
    j.refs = {tok[1], tok[2]};
    return j;
  }
  if (head == "Gen") {
    need(3);
    j.kind = JustKind::Gen;
    j.refs = {tok[1]};
    if (tok[2].size() > 1 && tok[2][0] == 'x') {
      j.gen_var = static_cast<std::uint32_t>(std::stoul(tok[2].substr(1)));
    } else {
      throw ScriptError("Gen needs a variable x<i>", ln);
    }
    return j;
  }
  if (head == "DR") {
    if (tok.size() < 2 || tok.size() > 4) throw ScriptError("DR takes a rule and up to two refs", ln);
    auto r = derived_rule_by_name(tok[1]);
    if (!r) throw ScriptError("unknown derived rule '" + tok[1] + "'", ln);
    j.kind = JustKind::Derived;
    j.rule = *r;
    for (std::size_t i = 2; i < tok.size(); ++i) j.refs.push_back(tok[i]);
    return j;
  }
  if (head == "Hyp") {
    need(2);
    j.kind = JustKind::Hyp;
    j.name = tok[1];
    return j;
  }
  if (head == "AxiomDecl") {
    need(2);
    j.kind = JustKind::AxiomDecl;
    j.name = tok[1];
    return j;
  }
  if (head == "DefRewrite") {
    need(3);
    j.kind = JustKind::DefRewrite;
    j.name = tok[1];
    j.refs = {tok[2]};
    return j;
  }
  if (head == "SBA1" || head == "SBA2") {
    if (tok.size() < 3 || tok[1] != "@")
      throw ScriptError(head + " needs '@ <termoid>'", ln);
    j.kind = JustKind::Sba;
    j.schema = head == "SBA1" ? SchemaId::SBA1 : SchemaId::SBA2;
    std::string rest;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] == "permissive") {
        j.permissive_capture = true;
        continue;
      }
      rest += tok[i];
    }
    j.sba_termoid = parse_termoid(rest);
    return j;
  }
  if (head == "LEA1nu" || head == "LEA2nu" || head == "LEAMPnu") {
    need(1);
    j.kind = JustKind::NuSchema;
    j.schema = head == "LEA1nu" ? SchemaId::LEA1Nu
               : head == "LEA2nu" ? SchemaId::LEA2Nu
                                  : SchemaId::LEAMPNu;
    return j;
  }
  if (head == "ElemAx") {
    need(2);
    j.kind = JustKind::Schema;
    j.schema = SchemaId::ElemAx;
    j.detail = tok[1];
    return j;
  }
  if (head == "DefAx") {
    need(2);
    j.kind = JustKind::Schema;
    j.schema = SchemaId::DefAx;
    j.detail = tok[1];
    return j;
  }
  if (head.size() == 3 && head.rfind("Ga", 0) == 0 && std::isdigit(static_cast<unsigned char>(head[2]))) {
    need(1);
    j.kind = JustKind::Schema;
    j.schema = SchemaId::Ga;
    j.detail = head;
    return j;
  }
  if (auto s = schema_by_name(head)) {
    need(1);
    j.kind = JustKind::Schema;
    j.schema = *s;
    return j;
  }
  throw ScriptError("unknown justification '" + head + "'", ln);
}

}  // namespace script_detail

inline Script parse_script(const std::string& text) {
  Script script;
  std::map<std::string, std::string> macros;
  std::optional<Label> last_label;
  bool saw_qed = false;
  std::set<std::string> seen_labels;

  int ln = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string raw = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++ln;

    // trailing annotation / comment
    bool reconstructed = false;
    std::string annotation;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      std::string comment = raw.substr(hash + 1);
      raw = raw.substr(0, hash);
      std::size_t b = comment.find_first_not_of(" \t");
      if (b != std::string::npos) {
        comment = comment.substr(b);
        if (comment.rfind("reconstructed", 0) == 0) {
          reconstructed = true;
          std::size_t colon = comment.find(':');
          if (colon != std::string::npos) {
            annotation = comment.substr(colon + 1);
            std::size_t a = annotation.find_first_not_of(" \t");
            annotation = a == std::string::npos ? "" : annotation.substr(a);
          }
        }
      }
    }
    // trim
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(b, e - b + 1);
    if (line.empty()) continue;

    auto starts = [&](const char* kw) {
      std::size_t n = std::string(kw).size();
      return line.rfind(kw, 0) == 0 && (line.size() == n || line[n] == ' ' || line[n] == '\t');
    };
    auto rest_after = [&](const char* kw) {
      std::string r = line.substr(std::string(kw).size());
      std::size_t rb = r.find_first_not_of(" \t");
      return rb == std::string::npos ? std::string() : r.substr(rb);
    };

    if (saw_qed) throw ScriptError("content after qed", ln);

    if (starts("script")) {
      script.name = rest_after("script");
      continue;
    }
    if (starts("logic")) {
      std::string v = rest_after("logic");
      if (v == "open") script.open_logic = true;
      else if (v == "closed") script.open_logic = false;
      else throw ScriptError("logic must be open or closed", ln);
      continue;
    }
    if (starts("system")) {
      std::string v = rest_after("system");
      if (v == "Ari") script.system = System::Ari;
      else if (v == "Ari+") script.system = System::AriPlus;
      else if (v == "AriNu") script.system = System::AriNu;
      else throw ScriptError("system must be Ari, Ari+ or AriNu", ln);
      continue;
    }
    if (starts("param")) {
      std::string v = rest_after("param");
      if (v.size() < 2 || v[0] != 'x') throw ScriptError("param needs x<i>", ln);
      script.params.insert(static_cast<std::uint32_t>(std::stoul(v.substr(1))));
      continue;
    }
    if (starts("let")) {
      std::string v = rest_after("let");
      std::size_t asg = v.find(":=");
      if (asg == std::string::npos) throw ScriptError("let needs ':='", ln);
      std::string name = v.substr(0, asg);
      name.erase(name.find_last_not_of(" \t") + 1);
      std::string body = v.substr(asg + 2);
      std::size_t bb = body.find_first_not_of(" \t");
      body = bb == std::string::npos ? "" : body.substr(bb);
      macros[name] = script_detail::expand_macros(body, macros, ln);
      continue;
    }
    if (starts("hyp") || starts("axiomdecl")) {
      bool is_hyp = starts("hyp");
      std::string v = rest_after(is_hyp ? "hyp" : "axiomdecl");
      std::size_t colon = v.find(':');
      if (colon == std::string::npos) throw ScriptError("declaration needs ':'", ln);
      std::string name = v.substr(0, colon);
      name.erase(name.find_last_not_of(" \t") + 1);
      std::string body = script_detail::expand_macros(v.substr(colon + 1), macros, ln);
      FormulaPtr f;
      try {
        f = parse_formula(body);
      } catch (const std::exception& ex) {
        throw ScriptError(std::string("declaration formula: ") + ex.what(), ln);
      }
      if (is_hyp) script.hypotheses.emplace_back(name, std::move(f));
      else script.axiom_decls.emplace_back(name, std::move(f));
      continue;
    }
    if (starts("discharge")) {
      std::vector<std::string> tok = script_detail::tokens(rest_after("discharge"));
      DischargeDirective d;
      bool explicit_label = true;
      if (tok.size() == 1) {
        d.hyp = tok[0];
        explicit_label = false;
      } else if (tok.size() == 3 && tok[1] == "as") {
        d.hyp = tok[0];
      } else if (tok.size() == 3 && tok[1] == "from") {
        d.hyp = tok[0];
        d.from = tok[2];
        explicit_label = false;
      } else if (tok.size() == 5 && tok[1] == "from" && tok[3] == "as") {
        d.hyp = tok[0];
        d.from = tok[2];
      } else {
        throw ScriptError("discharge <hyp> [from <ref>] [as <label>]", ln);
      }
      if (explicit_label) {
        auto lab = parse_label(tok.back());
        if (!lab) throw ScriptError("discharge label is malformed", ln);
        d.as_label = *lab;
      } else {
        // next free suffix on the last label's integer part
        if (!last_label) throw MonotonicityError("discharge with no preceding line", ln);
        Label lab{last_label->num, last_label->suffix};
        do {
          lab.suffix = lab.suffix.empty() ? "a" : std::string(1, lab.suffix[0] + 1);
        } while (seen_labels.count(lab.str()));
        d.as_label = lab;
      }
      if (last_label && !(*last_label < d.as_label))
        throw MonotonicityError("label " + d.as_label.str() + " does not increase", ln);
      if (!seen_labels.insert(d.as_label.str()).second)
        throw ScriptError("duplicate label " + d.as_label.str(), ln);
      last_label = d.as_label;
      script.entries.emplace_back(std::move(d));
      continue;
    }
    if (starts("qed")) {
      script.qed = rest_after("qed");
      if (!last_label) throw MonotonicityError("qed with no lines", ln);
      saw_qed = true;
      continue;
    }

    // a proof line: <label>[.-<label>]. <formula> :: <justification>
    std::size_t dot = line.find('.');
    if (dot == std::string::npos) throw ScriptError("expected a labeled line", ln);
    std::string label_text = line.substr(0, dot);
    std::string rest = line.substr(dot + 1);
    ScriptLine sl;
    sl.reconstructed = reconstructed;
    sl.annotation = annotation;

    auto l1 = parse_label(label_text);
    if (!l1) throw ScriptError("bad label '" + label_text + "'", ln);
    sl.first = sl.last = *l1;
    // range: "594.-600." parses as label "594", rest "-600. ..."
    if (!rest.empty() && rest[0] == '-') {
      std::size_t dot2 = rest.find('.');
      if (dot2 == std::string::npos) throw ScriptError("range label is malformed", ln);
      auto l2 = parse_label(rest.substr(1, dot2 - 1));
      if (!l2) throw ScriptError("range label is malformed", ln);
      sl.last = *l2;
      sl.is_range = true;
      rest = rest.substr(dot2 + 1);
    }
    std::size_t sep = rest.find("::");
    if (sep == std::string::npos) throw ScriptError("line needs ':: <justification>'", ln);
    std::string formula_text = script_detail::expand_macros(rest.substr(0, sep), macros, ln);
    std::string just_text = script_detail::expand_macros(rest.substr(sep + 2), macros, ln);
    try {
      sl.formula = parse_formula(formula_text);
    } catch (const std::exception& ex) {
      throw ScriptError(std::string("formula: ") + ex.what(), ln);
    }
    std::size_t jb = just_text.find_first_not_of(" \t");
    just_text = jb == std::string::npos ? "" : just_text.substr(jb);
    sl.just = script_detail::parse_justification(just_text, ln);

    if (sl.is_range && !(sl.first < sl.last))
      throw MonotonicityError("range end does not follow its start", ln);
    if (sl.is_range && sl.just.kind != JustKind::Derived)
      throw ScriptError("range labels require a derived-rule justification", ln);
    if (last_label && !(*last_label < sl.first))
      throw MonotonicityError("label " + sl.first.str() + " does not increase", ln);
    if (!seen_labels.insert(sl.first.str()).second ||
        (sl.is_range && !seen_labels.insert(sl.last.str()).second))
      throw ScriptError("duplicate label " + sl.first.str(), ln);
    last_label = sl.last;
    script.entries.emplace_back(std::move(sl));
  }

  if (!saw_qed) throw MonotonicityError("missing qed", 0);
  if (script.qed.empty()) throw MonotonicityError("qed names no label", 0);
  return script;
}

}  // namespace ari
