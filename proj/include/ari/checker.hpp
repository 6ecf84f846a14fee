// Line-by-line verification of proof presentations, the hypothesis and
// obligation ledgers, linkage between corpus entries, and report emission.
//
// A line never throws: any defect becomes a Failed verdict with a reason.
// Dependency sets are tracked per line so that discharges, generalization
// side conditions and linkage reductions are all decided from what a line
// actually rests on, not from textual order.
#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ari/script.hpp"

namespace ari {

enum class VerdictKind {
  Verified,
  VerifiedViaExpansion,
  HypothesisUse,
  AxiomByDeclaration,
  Failed,
};

inline const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::Verified: return "Verified";
    case VerdictKind::VerifiedViaExpansion: return "VerifiedViaExpansion";
    case VerdictKind::HypothesisUse: return "HypothesisUse";
    case VerdictKind::AxiomByDeclaration: return "AxiomByDeclaration";
    case VerdictKind::Failed: return "Failed";
  }
  return "?";
}

struct LineVerdict {
  std::string label;
  VerdictKind kind = VerdictKind::Verified;
  std::string reason;       // failure reason or verification note
  std::string schema_used;  // reported schema / rule name
  bool reconstructed = false;
};

struct HypothesisStatus {
  std::string name;
  std::vector<std::string> used_at;
  std::string discharged_at;   // label of the discharge line, if any
  bool linked = false;         // discharged by linkage
  bool load_bearing = false;   // still in the final formula's dependency set
  std::string status() const {
    if (!discharged_at.empty()) return "discharged";
    if (linked) return "discharged-by-linkage";
    return "undischarged";
  }
};

struct CheckOptions {
  bool strict_capture = true;
  std::uint64_t digit_budget = 10000;
  // linkage overrides: hypothesis name or "line<label>" -> replacement residue
  struct LinkTarget {
    std::string script_name;
    FormulaPtr final_formula;
    std::vector<std::string> residue_decls;  // axiom declarations the link imports
  };
  std::map<std::string, LinkTarget> links;
};

struct AuditReport {
  std::string script_name;
  std::vector<LineVerdict> verdicts;
  std::vector<HypothesisStatus> hypotheses;
  std::vector<std::string> axiom_decls_used;   // in first-use order
  std::vector<std::string> imported_residue;   // declarations imported via linkage
  std::vector<Obligation> obligations;
  std::map<std::string, int> schema_counts;
  std::map<std::string, std::vector<std::string>> rule_conclusions;  // DR name -> anchor labels
  int reconstructed_lines = 0;
  int nu_instances_replayed = 0;
  int nu_instances_deferred = 0;
  std::string qed_label;
  std::string final_formula;
  FormulaPtr final_ast;  // not serialized
  int failed_lines = 0;
  bool qed_matches_final = false;

  bool is_proof() const {
    if (failed_lines > 0 || !qed_matches_final) return false;
    for (const auto& h : hypotheses)
      if (h.discharged_at.empty() && !h.linked) return false;
    return true;
  }
  bool residue_empty() const {
    return axiom_decls_used.empty() && imported_residue.empty() && obligations.empty();
  }
  std::string classification() const { return is_proof() ? "PROOF" : "DEDUCTION"; }
};

// ---------------------------------------------------------------------------
// the checker

namespace checker_detail {

struct LineState {
  FormulaPtr formula;
  std::set<std::string> hyp_deps;    // hypothesis names this line rests on
  std::set<std::string> decl_deps;   // axiom declarations this line rests on
  std::set<std::size_t> line_deps;   // verdict indexes of contributing lines
  bool failed = false;
};

struct Checker {
  const Script& script;
  const CheckOptions& opts;
  AuditReport report;
  std::map<std::string, LineState> by_label;
  std::map<std::string, HypothesisStatus> hyp_status;
  std::string last_label;
  AxiomTable table;

  Checker(const Script& s, const CheckOptions& o)
      : script(s), opts(o), table(AxiomTable::full(s.open_logic)) {}

  const CheckOptions::LinkTarget* link_for(const std::string& key) const {
    auto it = opts.links.find(key);
    return it == opts.links.end() ? nullptr : &it->second;
  }

  void count_schema(const std::string& name) { ++report.schema_counts[name]; }

  LineState* resolve(const std::string& ref, std::string& err) {
    auto it = by_label.find(ref);
    if (it != by_label.end()) return &it->second;
    err = "reference '" + ref + "' names no earlier line";
    return nullptr;
  }

  // A reference may name an earlier line or a declared hypothesis.
  std::optional<std::pair<FormulaPtr, LineState>> ref_formula(const std::string& ref,
                                                              std::string& err) {
    auto it = by_label.find(ref);
    if (it != by_label.end())
      return std::make_pair(it->second.formula, it->second);
    if (const FormulaPtr* h = script.hypothesis(ref)) {
      LineState st;
      st.formula = *h;
      if (const auto* link = link_for(ref)) {
        st.decl_deps.insert(link->residue_decls.begin(), link->residue_decls.end());
        hyp_status[ref].name = ref;
        hyp_status[ref].linked = true;
      } else {
        st.hyp_deps.insert(ref);
      }
      mark_hyp_use(ref, "(cited)");
      return std::make_pair(*h, st);
    }
    err = "reference '" + ref + "' names no line or hypothesis";
    return std::nullopt;
  }

  void mark_hyp_use(const std::string& name, const std::string& at) {
    auto& hs = hyp_status[name];
    hs.name = name;
    hs.used_at.push_back(at);
  }

  void record_obligations(std::vector<Obligation> obs, const std::string& origin) {
    for (auto& o : obs) {
      o.origin = origin;
      report.obligations.push_back(std::move(o));
    }
  }

  // ----- per-line verification ------------------------------------------

  void fail(LineVerdict& v, const std::string& reason) {
    v.kind = VerdictKind::Failed;
    v.reason = reason;
  }

  void check_line(const ScriptLine& sl) {
    LineVerdict v;
    v.label = sl.label_str();
    v.reconstructed = sl.reconstructed;
    if (sl.reconstructed) ++report.reconstructed_lines;
    LineState state;
    state.formula = sl.formula;

    const std::string label = sl.label_str();
    const std::string conclusion_label = sl.last.str();

    // linkage override for a whole line: "line<label>"
    if (const auto* link = link_for("line" + conclusion_label)) {
      if (!formula_eq(link->final_formula, sl.formula)) {
        fail(v, "linkage mismatch: linked script proves a different formula");
      } else {
        v.kind = VerdictKind::Verified;
        v.reason = "established by linked script " + link->script_name;
        v.schema_used = "Linked";
        state.decl_deps.insert(link->residue_decls.begin(), link->residue_decls.end());
      }
      finish_line(sl, v, state);
      return;
    }

    switch (sl.just.kind) {
      case JustKind::Hyp: {
        const FormulaPtr* h = script.hypothesis(sl.just.name);
        if (!h) {
          fail(v, "hypothesis '" + sl.just.name + "' is not declared");
          break;
        }
        if (!formula_eq(*h, sl.formula)) {
          fail(v, "line formula differs from hypothesis " + sl.just.name);
          break;
        }
        if (const auto* link = link_for(sl.just.name)) {
          if (!formula_eq(link->final_formula, *h)) {
            fail(v, "linkage mismatch for hypothesis " + sl.just.name);
            break;
          }
          v.kind = VerdictKind::Verified;
          v.reason = "hypothesis discharged by linked script " + link->script_name;
          v.schema_used = "Linked";
          state.decl_deps.insert(link->residue_decls.begin(), link->residue_decls.end());
          hyp_status[sl.just.name].name = sl.just.name;
          hyp_status[sl.just.name].linked = true;
        } else {
          v.kind = VerdictKind::HypothesisUse;
          v.reason = sl.just.name;
          state.hyp_deps.insert(sl.just.name);
          mark_hyp_use(sl.just.name, label);
        }
        break;
      }
      case JustKind::AxiomDecl: {
        const FormulaPtr* d = script.axiom_decl(sl.just.name);
        if (!d) {
          fail(v, "axiom declaration '" + sl.just.name + "' is missing");
          break;
        }
        if (!formula_eq(*d, sl.formula)) {
          fail(v, "line formula differs from declared axiom " + sl.just.name);
          break;
        }
        v.kind = VerdictKind::AxiomByDeclaration;
        v.reason = sl.just.name;
        state.decl_deps.insert(sl.just.name);
        break;
      }
      case JustKind::Schema: {
        auto m = try_schema(sl.just.schema, sl.formula, !script.open_logic, nullptr, sl.just.detail);
        if (!m && script.system == System::AriNu && contains_kleene(sl.formula)) {
          // Kleene atoms with materializable constant subscripts may collapse
          // the formula into a schema instance of the base language.
          try {
            FormulaPtr base = translate(sl.formula, {}, table, opts.digit_budget);
            m = try_schema(sl.just.schema, base, !script.open_logic, nullptr, sl.just.detail);
            if (m) v.reason = "verified after translating Kleene atoms";
          } catch (const EvalError&) {
            m = std::nullopt;
          }
        }
        if (!m) {
          fail(v, std::string("not an instance of ") + schema_name(sl.just.schema) +
                      (sl.just.detail.empty() ? "" : " " + sl.just.detail));
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = m->detail.empty() ? schema_name(m->schema) : m->detail;
        count_schema(v.schema_used);
        record_obligations(std::move(m->obligations), label);
        break;
      }
      case JustKind::NuSchema: {
        auto m = match_nu_schema(sl.formula);
        if (!m || m->schema != sl.just.schema) {
          fail(v, std::string("not an instance of ") + schema_name(sl.just.schema));
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = schema_name(m->schema);
        count_schema(v.schema_used);
        // replay the substantiation when the subscripts materialize
        std::optional<Substantiation> replay;
        if (m->schema == SchemaId::LEA1Nu)
          replay = substantiate_lea1(*m, {}, table, opts.digit_budget);
        else if (m->schema == SchemaId::LEAMPNu)
          replay = substantiate_leamp(*m, {}, table, opts.digit_budget);
        if (replay) {
          ++report.nu_instances_replayed;
          v.reason = replay->which == NuCase::AntecedentTrue
                         ? "substantiated: consequent collapses to an identity implication"
                         : "substantiated: antecedent refuted by evaluation";
        } else {
          ++report.nu_instances_deferred;
          Obligation o;
          o.kind = ObligationKind::Feasibility;
          o.note = std::string(schema_name(m->schema)) +
                   " instance accepted at schema level; subscript value never materialized";
          record_obligations({o}, label);
        }
        break;
      }
      case JustKind::Sba: {
        auto m = try_schema(sl.just.schema, sl.formula, !script.open_logic, sl.just.sba_termoid);
        if (!m) {
          fail(v, std::string("not an instance of ") + schema_name(sl.just.schema) +
                      " at the given termoid");
          break;
        }
        bool violated = false;
        for (const auto& o : m->obligations)
          if (o.kind == ObligationKind::FreeFor && o.violated) violated = true;
        if (violated && opts.strict_capture && !sl.just.permissive_capture) {
          fail(v, "termoid is not free for the bound variable (capture)");
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = schema_name(m->schema);
        count_schema(v.schema_used);
        record_obligations(std::move(m->obligations), label);
        break;
      }
      case JustKind::Mp: {
        std::string err;
        auto minor = ref_formula(sl.just.refs[0], err);
        if (!minor) {
          fail(v, err);
          break;
        }
        auto major = ref_formula(sl.just.refs[1], err);
        if (!major) {
          fail(v, err);
          break;
        }
        try {
          FormulaPtr out = apply_mp(minor->first, major->first);
          if (!formula_eq(out, sl.formula)) {
            fail(v, "modus ponens yields a different formula");
            break;
          }
        } catch (const RuleError& ex) {
          fail(v, ex.what());
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = "MP";
        merge_deps(state, minor->second);
        merge_deps(state, major->second);
        break;
      }
      case JustKind::Gen: {
        std::string err;
        auto prem = ref_formula(sl.just.refs[0], err);
        if (!prem) {
          fail(v, err);
          break;
        }
        std::uint32_t var = sl.just.gen_var;
        try {
          // hypothesis side condition is checked against what the premise
          // actually rests on; violations are surfaced as ledger obligations
          FormulaPtr out = apply_gen(prem->first, var, script.open_logic, {});
          if (!formula_eq(out, sl.formula)) {
            fail(v, "generalization yields a different formula");
            break;
          }
        } catch (const RuleError& ex) {
          fail(v, ex.what());
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = "Gen";
        // the discharge-first check: the variable must not be free in any
        // hypothesis the premise still rests on; violations are ledgered
        bool capture = false;
        for (const auto& hname : prem->second.hyp_deps) {
          const FormulaPtr* h = script.hypothesis(hname);
          if (h && free_vars(*h).count(var)) {
            capture = true;
            Obligation o;
            o.kind = ObligationKind::HypCaptureGen;
            o.variable = var;
            o.note = "generalization over x" + std::to_string(var) +
                     ", free in hypothesis " + hname + "; sound only if the hypothesis is an axiom";
            record_obligations({o}, label);
          }
        }
        if (capture && script.params.count(var)) {
          Obligation o;
          o.kind = ObligationKind::ParamGen;
          o.variable = var;
          o.note = "generalization over the parameter x" + std::to_string(var) +
                   " before every hypothesis holding it constant is discharged";
          record_obligations({o}, label);
        }
        merge_deps(state, prem->second);
        break;
      }
      case JustKind::Derived: {
        std::vector<FormulaPtr> premises;
        bool bad = false;
        for (const auto& r : sl.just.refs) {
          std::string err;
          auto p = ref_formula(r, err);
          if (!p) {
            fail(v, err);
            bad = true;
            break;
          }
          premises.push_back(p->first);
          merge_deps(state, p->second);
        }
        if (bad) break;
        std::vector<ExpansionLine> lines;
        try {
          lines = expand_derived(sl.just.rule, premises, sl.formula);
        } catch (const RuleError& ex) {
          fail(v, ex.what());
          break;
        }
        if (sl.is_range && sl.width() != lines.size()) {
          fail(v, "range width " + std::to_string(sl.width()) + " differs from the expansion's " +
                      std::to_string(lines.size()) + " lines");
          break;
        }
        if (!formula_eq(lines.back().formula, sl.formula)) {
          fail(v, "expansion concludes a different formula");
          break;
        }
        v.kind = VerdictKind::VerifiedViaExpansion;
        v.schema_used = derived_rule_name(sl.just.rule);
        count_schema(v.schema_used);
        report.rule_conclusions[derived_rule_name(sl.just.rule)].push_back(
            std::to_string(sl.last.num));
        break;
      }
      case JustKind::DefRewrite: {
        std::string err;
        auto src = ref_formula(sl.just.refs[0], err);
        if (!src) {
          fail(v, err);
          break;
        }
        if (!formula_eq(src->first, sl.formula)) {
          fail(v, "definitional rewrite changes the expanded formula");
          break;
        }
        v.kind = VerdictKind::Verified;
        v.schema_used = "DefRewrite";
        v.reason = sl.just.name;
        merge_deps(state, src->second);
        break;
      }
    }

    finish_line(sl, v, state);
  }

  static void merge_deps(LineState& into, const LineState& from) {
    into.hyp_deps.insert(from.hyp_deps.begin(), from.hyp_deps.end());
    into.decl_deps.insert(from.decl_deps.begin(), from.decl_deps.end());
    into.line_deps.insert(from.line_deps.begin(), from.line_deps.end());
  }

  void finish_line(const ScriptLine& sl, LineVerdict& v, LineState& state) {
    if (v.kind == VerdictKind::Failed) {
      ++report.failed_lines;
      state.failed = true;
    }
    state.line_deps.insert(report.verdicts.size());
    report.verdicts.push_back(v);
    by_label[sl.first.str()] = state;
    if (sl.is_range) by_label[sl.last.str()] = state;
    last_label = sl.last.str();
  }

  void apply_discharge(const DischargeDirective& d) {
    LineVerdict v;
    v.label = d.as_label.str();
    const FormulaPtr* h = script.hypothesis(d.hyp);
    LineState state;
    if (!h) {
      fail(v, "discharge names an undeclared hypothesis " + d.hyp);
    } else {
      std::string source = d.from.empty() ? last_label : d.from;
      auto it = by_label.find(source);
      if (it == by_label.end()) {
        fail(v, "discharge source '" + source + "' names no line");
      } else {
        state = it->second;
        state.formula = mk_imp(*h, it->second.formula);
        state.hyp_deps.erase(d.hyp);
        auto& hs = hyp_status[d.hyp];
        hs.name = d.hyp;
        if (!hs.discharged_at.empty()) {
          fail(v, "hypothesis " + d.hyp + " was already discharged");
        } else {
          hs.discharged_at = d.as_label.str();
          v.kind = VerdictKind::Verified;
          v.schema_used = "Discharge";
          v.reason = d.hyp + " discharged from " + source;
        }
      }
    }
    if (v.kind == VerdictKind::Failed) ++report.failed_lines;
    state.line_deps.insert(report.verdicts.size());
    report.verdicts.push_back(v);
    by_label[d.as_label.str()] = state;
    last_label = d.as_label.str();
  }

  AuditReport run() {
    report.script_name = script.name;
    for (const auto& [name, f] : script.hypotheses) {
      (void)f;
      hyp_status[name].name = name;
    }
    for (const auto& entry : script.entries) {
      if (auto* sl = std::get_if<ScriptLine>(&entry)) check_line(*sl);
      else apply_discharge(std::get<DischargeDirective>(entry));
    }

    report.qed_label = script.qed;
    auto qit = by_label.find(script.qed);
    std::set<std::string> qed_hyps, qed_decls;
    if (qit != by_label.end()) {
      report.final_formula = to_string(qit->second.formula);
      report.final_ast = qit->second.formula;
      report.qed_matches_final = script.qed == last_label;
      qed_hyps = qit->second.hyp_deps;
      qed_decls = qit->second.decl_deps;
    }

    // hypothesis ledger in declaration order
    for (const auto& [name, f] : script.hypotheses) {
      (void)f;
      HypothesisStatus hs = hyp_status[name];
      hs.name = name;
      hs.load_bearing = qed_hyps.count(name) > 0;
      report.hypotheses.push_back(hs);
    }
    // declarations actually used, in declaration order
    for (const auto& [name, f] : script.axiom_decls) {
      (void)f;
      bool used = false;
      for (const auto& [lbl, st] : by_label)
        if (st.decl_deps.count(name)) used = true;
      if (used) report.axiom_decls_used.push_back(name);
    }
    // imported residue present in the qed line's dependencies
    for (const auto& d : qed_decls)
      if (!script.axiom_decl(d))
        report.imported_residue.push_back(d);
    std::sort(report.imported_residue.begin(), report.imported_residue.end());
    report.imported_residue.erase(
        std::unique(report.imported_residue.begin(), report.imported_residue.end()),
        report.imported_residue.end());
    return report;
  }
};

}  // namespace checker_detail

inline AuditReport check_script(const Script& script, const CheckOptions& opts = {}) {
  checker_detail::Checker c(script, opts);
  return c.run();
}

// ---------------------------------------------------------------------------
// report emission

inline nlohmann::ordered_json report_to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["script"] = r.script_name;
  j["classification"] = r.classification();
  j["qed"] = r.qed_label;
  j["final_formula"] = r.final_formula;
  j["failed_lines"] = r.failed_lines;
  j["reconstructed_lines"] = r.reconstructed_lines;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::ordered_json e;
    e["label"] = v.label;
    e["verdict"] = verdict_name(v.kind);
    if (!v.schema_used.empty()) e["by"] = v.schema_used;
    if (!v.reason.empty()) e["note"] = v.reason;
    if (v.reconstructed) e["reconstructed"] = true;
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;
  nlohmann::ordered_json hyps = nlohmann::ordered_json::array();
  for (const auto& h : r.hypotheses) {
    nlohmann::ordered_json e;
    e["name"] = h.name;
    e["status"] = h.status();
    e["load_bearing"] = h.load_bearing;
    e["used_at"] = h.used_at;
    if (!h.discharged_at.empty()) e["discharged_at"] = h.discharged_at;
    hyps.push_back(e);
  }
  j["hypotheses"] = hyps;
  j["axiom_declarations_used"] = r.axiom_decls_used;
  j["imported_residue"] = r.imported_residue;
  nlohmann::ordered_json obs = nlohmann::ordered_json::array();
  for (const auto& o : r.obligations) {
    nlohmann::ordered_json e;
    e["kind"] = obligation_kind_name(o.kind);
    e["at"] = o.origin;
    if (o.variable) e["variable"] = "x" + std::to_string(o.variable);
    if (o.termoid) e["termoid"] = to_string(o.termoid);
    if (!o.note.empty()) e["note"] = o.note;
    if (o.violated) e["violated"] = true;
    obs.push_back(e);
  }
  j["obligations"] = obs;
  nlohmann::ordered_json stats;
  stats["schema_uses"] = r.schema_counts;
  nlohmann::ordered_json rc;
  for (const auto& [rule, labels] : r.rule_conclusions) rc[rule] = labels;
  stats["rule_conclusions"] = rc;
  stats["nu_instances_replayed"] = r.nu_instances_replayed;
  stats["nu_instances_deferred"] = r.nu_instances_deferred;
  nlohmann::ordered_json counts;
  std::map<std::string, int> vc;
  for (const auto& v : r.verdicts) ++vc[verdict_name(v.kind)];
  for (const auto& [k, n] : vc) counts[k] = n;
  stats["verdicts"] = counts;
  j["stats"] = stats;
  return j;
}

// ---------------------------------------------------------------------------
// auditing a corpus entry against linked discharges

struct AuditResult {
  AuditReport target;
  std::map<std::string, AuditReport> linked;   // link key -> standalone report
  std::vector<std::string> linkage_errors;
};

// Checks every linked script standalone, then re-checks the target with the
// link overrides in place. A link key is a hypothesis name or "line<label>";
// the linked script's final formula must coincide with the linked spot.
inline AuditResult audit(const Script& target, const std::map<std::string, Script>& links,
                         CheckOptions opts = {}) {
  AuditResult out;
  for (const auto& [key, script] : links) {
    AuditReport lr = check_script(script, CheckOptions{opts.strict_capture, opts.digit_budget, {}});
    if (lr.failed_lines > 0)
      out.linkage_errors.push_back("linked script " + script.name + " has failed lines");
    CheckOptions::LinkTarget lt;
    lt.script_name = script.name;
    lt.final_formula = lr.final_ast;
    lt.residue_decls = lr.axiom_decls_used;
    for (const auto& d : lr.imported_residue) lt.residue_decls.push_back(d);
    // expected formula at the linked spot
    FormulaPtr expected;
    if (const FormulaPtr* h = target.hypothesis(key)) {
      expected = *h;
    } else if (key.rfind("line", 0) == 0) {
      for (const auto& entry : target.entries) {
        if (auto* sl = std::get_if<ScriptLine>(&entry)) {
          if (sl->last.str() == key.substr(4)) expected = sl->formula;
        }
      }
    }
    if (!expected) {
      out.linkage_errors.push_back("link key '" + key + "' matches no hypothesis or line");
    } else if (!lr.final_ast || !formula_eq(lr.final_ast, expected)) {
      out.linkage_errors.push_back("LinkageMismatch: " + script.name +
                                   " proves a different formula than '" + key + "'");
    } else {
      opts.links[key] = lt;
    }
    out.linked.emplace(key, std::move(lr));
  }
  out.target = check_script(target, opts);
  // carry the linked scripts' own obligations into the global ledger
  for (const auto& [key, lr] : out.linked) {
    for (Obligation o : lr.obligations) {
      o.origin = lr.script_name + ":" + o.origin;
      out.target.obligations.push_back(std::move(o));
    }
  }
  return out;
}

inline std::string report_to_text(const AuditReport& r) {
  std::ostringstream os;
  int verified = 0;
  for (const auto& v : r.verdicts)
    if (v.kind != VerdictKind::Failed) ++verified;
  os << r.classification() << ", " << verified << "/" << r.verdicts.size() << " verified";
  os << " (" << r.script_name << ")\n";
  for (const auto& v : r.verdicts) {
    if (v.kind == VerdictKind::Failed)
      os << "  FAILED " << v.label << ": " << v.reason << "\n";
  }
  for (const auto& h : r.hypotheses) {
    os << "  hyp " << h.name << ": " << h.status();
    if (h.status() == "undischarged" && !h.load_bearing && !h.used_at.empty())
      os << " (reduced: the final formula no longer rests on it)";
    os << "\n";
  }
  for (const auto& d : r.axiom_decls_used) os << "  declared axiom used: " << d << "\n";
  for (const auto& d : r.imported_residue) os << "  imported via linkage: " << d << "\n";
  std::map<std::string, int> ob_counts;
  for (const auto& o : r.obligations) ++ob_counts[obligation_kind_name(o.kind)];
  for (const auto& [k, n] : ob_counts) os << "  obligations " << k << ": " << n << "\n";
  os << "  final: " << r.final_formula << "\n";
  return os.str();
}

}  // namespace ari
