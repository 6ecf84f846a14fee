// ari: command-line front end for the kernel.
//
//   ari encode --kind formula "imp(eq(x1,num(0)),bot)"
//   ari decode "p(0)^15 * p(1)^23 * p(2)^529"
//   ari eval mp "p(0)^3" "p(0)^8" --table micro1
//   ari check corpus:imp0
//   ari audit corpus:main --link mp-ind=corpus:appendixC --link line7=corpus:appendixD2
//   ari corpus list
//
// Exit status: 0 proof/success, 1 deduction with open hypotheses, 2 failure,
// 64 usage error.
#include <CLI11.hpp>

#include <iostream>

#include "ari/ari.hpp"

namespace {

using namespace ari;

Script load_ref(const std::string& ref) {
  if (ref.rfind("corpus:", 0) == 0) return load_corpus(ref.substr(7));
  return parse_script(read_file(ref));
}

int report_exit(const AuditReport& r) {
  if (r.failed_lines > 0) return 2;
  return r.is_proof() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ari — enumeration, arithmetization and proof-script kernel"};
  app.require_subcommand(1);

  std::string kind = "auto";
  std::string text;
  std::string fn_name;
  std::vector<std::string> code_args;
  std::string table_name = "full";
  std::string logic = "open";
  std::string target;
  std::vector<std::string> links;
  std::string format = "text";
  std::uint64_t digit_budget = 10000;
  std::uint64_t sigma_budget = 1000000;
  bool strict_capture = true;

  auto* enc = app.add_subcommand("encode", "enumeration number of a termoid or formula");
  enc->add_option("--kind", kind, "termoid|formula")->default_val("formula");
  enc->add_option("text", text)->required();

  auto* dec = app.add_subcommand("decode", "object denoted by a code expression");
  dec->add_option("--kind", kind, "auto|termoid|formula|deduction")->default_val("auto");
  dec->add_option("code", text)->required();

  auto* ev = app.add_subcommand("eval", "evaluate a function symbol on code expressions");
  ev->add_option("fn", fn_name)->required();
  ev->add_option("codes", code_args);
  ev->add_option("--table", table_name, "full|micro1|micro2");
  ev->add_option("--mode", logic, "open|closed (axiom table logic)");
  ev->add_option("--sigma-budget", sigma_budget);

  auto* chk = app.add_subcommand("check", "verify a proof script");
  chk->add_option("script", target, "path or corpus:<name>")->required();
  chk->add_option("--link", links, "NAME=PATH linkage")->take_all();
  chk->add_option("--format", format, "text|json");
  chk->add_option("--digit-budget", digit_budget);
  chk->add_option("--strict-capture", strict_capture);

  auto* aud = app.add_subcommand("audit", "check with linkage and emit the global ledger");
  aud->add_option("script", target, "path or corpus:<name>")->required();
  aud->add_option("--link", links, "NAME=PATH linkage")->take_all();
  aud->add_option("--format", format, "text|json");
  aud->add_option("--digit-budget", digit_budget);
  aud->add_option("--strict-capture", strict_capture);

  auto* cor = app.add_subcommand("corpus", "corpus operations");
  cor->add_subcommand("list", "list shipped corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (enc->parsed()) {
      CodePtr c = kind == "termoid" ? encode_termoid(parse_termoid(text))
                                    : encode_formula(parse_formula(text));
      std::cout << code_to_string(c) << "\n";
      return 0;
    }
    if (dec->parsed()) {
      DecodeKind k = kind == "termoid" ? DecodeKind::Termoid
                     : kind == "formula" ? DecodeKind::Fla
                     : kind == "deduction" ? DecodeKind::Ded
                                           : DecodeKind::Auto;
      Decoded d = decode(parse_code(text), k);
      if (auto* t = std::get_if<TermPtr>(&d)) {
        std::cout << "termoid " << to_string(*t) << "\n";
        return 0;
      }
      if (auto* f = std::get_if<FormulaPtr>(&d)) {
        std::cout << "formula " << to_string(*f) << "\n";
        return 0;
      }
      if (auto* dd = std::get_if<DedPtr>(&d)) {
        std::cout << "deduction with root " << to_string((*dd)->root()) << "\n";
        return 0;
      }
      std::cerr << "NotACode: " << std::get<NotACode>(d).reason << "\n";
      return 2;
    }
    if (ev->parsed()) {
      AxiomTable table = table_name == "full" ? AxiomTable::full(logic == "open")
                                              : micro_table(table_name);
      std::vector<CodePtr> args;
      for (const auto& a : code_args) args.push_back(parse_code(a));
      CodePtr out = eval_by_name(fn_name, args, table, sigma_budget);
      std::cout << code_to_string(out) << "\n";
      return 0;
    }
    if (chk->parsed() || aud->parsed()) {
      Script s = load_ref(target);
      std::map<std::string, Script> link_scripts;
      for (const auto& l : links) {
        std::size_t eq = l.find('=');
        if (eq == std::string::npos) {
          std::cerr << "--link needs NAME=PATH\n";
          return 64;
        }
        link_scripts.emplace(l.substr(0, eq), load_ref(l.substr(eq + 1)));
      }
      CheckOptions opts;
      opts.strict_capture = strict_capture;
      opts.digit_budget = digit_budget;
      AuditResult ar = audit(s, link_scripts, opts);
      for (const auto& e : ar.linkage_errors) std::cerr << e << "\n";
      if (format == "json") {
        nlohmann::ordered_json j = report_to_json(ar.target);
        if (aud->parsed() && !ar.linked.empty()) {
          nlohmann::ordered_json linked;
          for (const auto& [key, lr] : ar.linked) linked[key] = report_to_json(lr);
          j["linked"] = linked;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << report_to_text(ar.target);
        for (const auto& [key, lr] : ar.linked)
          std::cout << "linked '" << key << "': " << lr.classification() << " ("
                    << lr.script_name << ")\n";
      }
      if (!ar.linkage_errors.empty()) return 2;
      return report_exit(ar.target);
    }
    if (cor->parsed()) {
      for (const auto& n : corpus_names()) std::cout << n << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 64;
}
