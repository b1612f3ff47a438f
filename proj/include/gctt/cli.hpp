#pragma once

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gctt/elaborate.hpp"
#include "gctt/forcing.hpp"
#include "gctt/json.hpp"
#include "gctt/opsem.hpp"
#include "gctt/parser.hpp"
#include "gctt/script.hpp"
#include "gctt/semantics.hpp"

#ifndef GCTT_THEORIES_DIR
#define GCTT_THEORIES_DIR "theories"
#endif

namespace gctt::cli {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

// "k1=2,k2=0": clocks get names #1, #2, ... in the order given.
struct WorldSpec {
  std::vector<std::string> names;
  ClockEnv rho;
  World world;
};

inline WorldSpec parse_world(const std::string& spec) {
  WorldSpec w;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("world spec: expected name=time in '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string time = item.substr(eq + 1);
    if (name.empty() || time.empty() || !std::all_of(time.begin(), time.end(), ::isdigit))
      throw ParseError("world spec: bad entry '" + item + "'");
    if (std::find(w.names.begin(), w.names.end(), name) != w.names.end())
      throw ParseError("world spec: duplicate clock " + name);
    ClockName c{static_cast<std::uint32_t>(w.names.size() + 1)};
    w.names.push_back(name);
    w.rho.emplace_back(name, c);
    w.world[c] = static_cast<unsigned>(std::stoul(time));
  }
  if (w.world.empty()) throw ParseError("world spec: a world needs at least one clock");
  return w;
}

struct Options {
  std::string format = "text";
  std::size_t fuel = default_fuel();
  std::string defs_file;
};

namespace detail {

inline DefTable load_defs(const std::string& file) {
  if (file.empty()) return {};
  return parse_script(read_file(file)).defs;
}

inline void print_json(std::ostream& out, const json::Json& j) { out << j.dump(2) << "\n"; }

inline int cmd_parse(const Options& o, const std::string& file, const std::string& term, std::ostream& out) {
  if (!term.empty()) {
    DefTable defs = load_defs(o.defs_file);
    FormalTerm t = parse_term(term, ParseEnv{&defs, {}, {}});
    Program p = elab_term({}, {}, t, {});
    if (o.format == "json") {
      json::Json j = json::envelope("parse");
      j["term"] = print(t);
      j["program"] = json::program(p);
      print_json(out, j);
    } else {
      out << print(t) << "\n" << sexpr(p) << "\n";
    }
    return kOk;
  }
  Script s = parse_script(read_file(file));
  if (o.format == "json") {
    json::Json j = json::envelope("parse");
    j["file"] = file;
    j["defs"] = json::Json::array();
    for (const auto& n : s.def_order) j["defs"].push_back({{"name", n}, {"term", print(s.defs.at(n))}});
    j["lemmas"] = json::Json::array();
    for (const auto& l : s.lemmas) j["lemmas"].push_back({{"name", l.name}, {"judgment", print(*l.proof.conclusion)}});
    print_json(out, j);
    return kOk;
  }
  for (const auto& n : s.def_order) out << "def " << n << " := " << print(s.defs.at(n)) << "\n";
  for (const auto& l : s.lemmas) out << "lemma " << l.name << " : " << print(*l.proof.conclusion) << "\n";
  return kOk;
}

inline int cmd_eval(const Options& o, const std::string& term, bool trace, std::ostream& out) {
  DefTable defs = load_defs(o.defs_file);
  Program p = elab_term({}, {}, parse_term(term, ParseEnv{&defs, {}, {}}), {});
  std::size_t n = 0;
  TraceFn tf;
  if (trace && o.format != "json") tf = [&](const Program& m) { out << "step " << n++ << ": " << print(m) << "\n"; };
  EvalOutcome e = eval(p, o.fuel, tf);
  if (o.format == "json") {
    print_json(out, json::eval_outcome(e));
  } else if (e.kind == EvalOutcome::Kind::Val) {
    out << print(e.term) << "\n";
  } else if (e.kind == EvalOutcome::Kind::OutOfFuel) {
    out << "out of fuel after " << e.steps << " steps: " << print(e.term) << "\n";
  } else {
    out << "stuck after " << e.steps << " steps: " << e.reason << ": " << print(e.term) << "\n";
  }
  return e.kind == EvalOutcome::Kind::Val ? kOk : kFailed;
}

inline void print_report(std::ostream& out, const std::string& file, const ScriptReport& r) {
  std::size_t ok = 0;
  for (const auto& l : r.lemmas) {
    if (l.result.ok) {
      ++ok;
      out << "ok   " << l.name << " : " << l.judgment << "\n";
    } else {
      out << "FAIL " << l.name << " : " << l.judgment << "\n";
      out << "     at " << l.result.path << ": " << l.result.explanation << "\n";
    }
  }
  out << file << ": " << r.lemmas.size() << " lemmas, " << ok << " ok\n";
}

inline int cmd_check(const Options& o, const std::vector<std::string>& files, unsigned jobs, std::ostream& out) {
  bool all_ok = true;
  json::Json arr = json::Json::array();
  for (const auto& f : files) {
    Script s = parse_script(read_file(f));
    ScriptReport r = check_script(s, o.fuel, jobs);
    all_ok = all_ok && r.ok();
    if (o.format == "json")
      arr.push_back(json::script_report(f, r));
    else
      print_report(out, f, r);
  }
  if (o.format == "json") {
    if (arr.size() == 1)
      print_json(out, arr[0]);
    else
      print_json(out, json::Json{{"schema", json::kSchema}, {"kind", "check-all"}, {"ok", all_ok}, {"files", arr}});
  }
  return all_ok ? kOk : kFailed;
}

struct OracleArgs {
  std::string type, m0, m1, world = "k=3";
  unsigned level = 2;
  OracleBudget budget;
};

inline int cmd_oracle(const Options& o, OracleArgs a, std::ostream& out) {
  WorldSpec ws = parse_world(a.world);
  DefTable defs = load_defs(o.defs_file);
  ParseEnv env{&defs, {}, ws.names};
  auto elab = [&](const std::string& text) {
    return elab_term(ws.names, {}, parse_term(text, env), ws.rho);
  };
  Program ty = elab(a.type);
  Program m0 = elab(a.m0);
  Program m1 = a.m1.empty() ? m0 : elab(a.m1);
  a.budget.fuel = o.fuel;
  std::string reason;
  Tri t = member(ws.world, m0, m1, ty, a.level, a.budget, &reason);
  if (o.format == "json") {
    json::Json j = json::envelope("oracle");
    j["world"] = json::world(ws.world);
    j["level"] = a.level;
    j["type"] = print(ty);
    j["m0"] = print(m0);
    j["m1"] = print(m1);
    j["answer"] = to_string(t);
    j["detail"] = reason;
    print_json(out, j);
  } else {
    out << to_string(t) << " (" << reason << ") at " << to_string(ws.world) << "\n";
  }
  return t == Tri::Yes ? kOk : kFailed;
}

inline bool closed_bool_lemma(const LemmaDecl& l) {
  const Judgment& j = *l.proof.conclusion;
  return j.kind == Judgment::Kind::EqMem && j.gamma.empty() && j.type && j.type->tag == Tag::Bool;
}

inline int cmd_canonicity(const Options& o, const std::vector<std::string>& files, const std::string& term,
                          std::ostream& out) {
  json::Json arr = json::Json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, const std::string& judgment, const std::string& deriv,
                    const std::vector<CanonResult>& rs) {
    bool ok = deriv != "failed";
    std::string outcome;
    for (const auto& r : rs) {
      ok = ok && r.kind != CanonResult::Kind::Fail;
      outcome += (outcome.empty() ? "" : "/") + std::string(to_string(r.kind));
      if (r.kind == CanonResult::Kind::Fail) outcome += " (" + r.reason + ")";
    }
    all_ok = all_ok && ok;
    if (o.format == "json") {
      arr.push_back({{"name", name}, {"judgment", judgment}, {"derivation", deriv}, {"outcome", outcome}, {"ok", ok}});
    } else {
      out << (ok ? "ok   " : "FAIL ") << name << " -> " << outcome << "  [derivation " << deriv << "]\n";
    }
  };
  if (!term.empty()) {
    DefTable defs = load_defs(o.defs_file);
    Program p = elab_term({}, {}, parse_term(term, ParseEnv{&defs, {}, {}}), {});
    record(term, term, "none", {canonicity_check(p, o.fuel)});
  }
  for (const auto& f : files) {
    Script s = parse_script(read_file(f));
    ScriptReport rep = check_script(s, o.fuel);
    for (std::size_t i = 0; i < s.lemmas.size(); ++i) {
      const LemmaDecl& l = s.lemmas[i];
      if (!closed_bool_lemma(l)) continue;
      const Judgment& j = *l.proof.conclusion;
      ClockEnv rho = generic_env(j.delta);
      std::vector<CanonResult> rs{canonicity_check(elab_term(j.delta, {}, j.lhs, rho), o.fuel)};
      if (!alpha_equal(j.lhs, j.rhs)) rs.push_back(canonicity_check(elab_term(j.delta, {}, j.rhs, rho), o.fuel));
      record(l.name, rep.lemmas[i].judgment, rep.lemmas[i].result.ok ? "ok" : "failed", rs);
    }
  }
  if (o.format == "json") {
    json::Json j = json::envelope("canonicity");
    j["ok"] = all_ok;
    j["programs"] = arr;
    print_json(out, j);
  } else {
    out << (all_ok ? "all programs canonical" : "canonicity failed") << "\n";
  }
  return all_ok ? kOk : kFailed;
}

struct ForcingArgs {
  unsigned pool = 2, time_bound = 2;
  std::string theorem = "all";
  std::string formula;
};

inline int cmd_forcing(const Options& o, const ForcingArgs& a, std::ostream& out) {
  TruncParams p{a.pool, a.time_bound};
  p.validate();
  std::vector<Theorem> ths;
  if (!a.formula.empty()) {
    ths.push_back(make_theorem("custom", parse_formula(a.formula)));
  } else if (a.theorem == "all") {
    for (const auto& n : theorem_names()) ths.push_back(theorem(n));
  } else {
    ths.push_back(theorem(a.theorem));
  }
  bool all = true;
  json::Json arr = json::Json::array();
  for (const auto& th : ths) {
    TheoremResult r = check_theorem(th, p);
    all = all && r.passed;
    if (o.format == "json") {
      arr.push_back(json::theorem_result(r));
      continue;
    }
    out << (r.passed ? "pass " : "FAIL ") << r.name << ": " << r.formula << "  [" << r.worlds << " worlds, "
        << r.assignments << " family assignments" << (r.exhaustive ? "" : ", sampled") << "]\n";
    if (r.counterexample) {
      out << "     counterexample at " << to_string(r.counterexample->world) << "\n";
      for (const auto& [n, d] : r.counterexample->families) out << "     " << n << " true at: " << d << "\n";
    }
  }
  if (o.format == "json") {
    json::Json j = json::envelope("forcing");
    j["pool"] = p.pool;
    j["timeBound"] = p.timeBound;
    j["ok"] = all;
    j["results"] = arr;
    print_json(out, j);
  }
  return all ? kOk : kFailed;
}

inline std::vector<std::string> theory_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".gctt") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof checker, interpreter and semantic oracle for guarded computational type theory", "gctt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fuel", o.fuel, "Evaluation fuel (default from GCTT_FUEL or 100000)");
  app.add_option("--defs", o.defs_file, "Script whose definitions are in scope for term arguments");

  std::string file, term;
  auto* parse = app.add_subcommand("parse", "Parse a script or a term and print it back");
  parse->add_option("file", file, "Script file");
  parse->add_option("--term", term, "A closed term");

  bool trace = false;
  std::string eval_term;
  auto* evalc = app.add_subcommand("eval", "Evaluate a closed term");
  evalc->add_option("term", eval_term, "Term")->required();
  evalc->add_flag("--trace", trace, "Print every step");

  std::vector<std::string> files;
  unsigned jobs = 1;
  auto* check = app.add_subcommand("check", "Check the lemmas of derivation scripts");
  check->add_option("files", files, "Script files")->required();
  check->add_option("--jobs", jobs, "Lemmas checked in parallel")->check(CLI::Range(1u, 256u));

  detail::OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Ask the semantic oracle whether M0 = M1 in TYPE");
  oracle->add_option("type", oa.type, "Type")->required();
  oracle->add_option("m0", oa.m0, "Left program")->required();
  oracle->add_option("m1", oa.m1, "Right program (defaults to m0)");
  oracle->add_option("--world", oa.world, "World, e.g. k1=2,k2=0");
  oracle->add_option("--level", oa.level, "Universe level");
  oracle->add_option("--unfold", oa.budget.unfoldDepth, "Unfolding depth");
  oracle->add_option("--enum", oa.budget.enumDepth, "Enumeration depth");
  oracle->add_option("--fresh-times", oa.budget.freshClockTimes, "Times tried for fresh clocks");

  std::vector<std::string> cfiles;
  std::string cterm;
  auto* canon = app.add_subcommand("canonicity", "Evaluate closed boolean lemmas and check they reach tt or ff");
  canon->add_option("files", cfiles, "Script files");
  canon->add_option("--term", cterm, "A closed boolean term");

  detail::ForcingArgs fa;
  auto* forcing = app.add_subcommand("forcing", "Check forcing theorems over a finite truncation");
  forcing->add_option("--pool", fa.pool, "Number of clocks P");
  forcing->add_option("--time-bound", fa.time_bound, "Maximum time T");
  forcing->add_option("--theorem", fa.theorem, "Theorem name or all");
  forcing->add_option("--formula", fa.formula, "Custom closed formula");

  std::string dir = GCTT_THEORIES_DIR;
  auto* examples = app.add_subcommand("examples", "Check every shipped theory");
  examples->add_option("--dir", dir, "Theory directory");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*parse) {
      if (file.empty() == term.empty()) throw ParseError("parse: give a file or --term, not both");
      return detail::cmd_parse(o, file, term, out);
    }
    if (*evalc) return detail::cmd_eval(o, eval_term, trace, out);
    if (*check) return detail::cmd_check(o, files, jobs, out);
    if (*oracle) return detail::cmd_oracle(o, oa, out);
    if (*canon) {
      if (cfiles.empty() && cterm.empty()) throw ParseError("canonicity: give script files or --term");
      return detail::cmd_canonicity(o, cfiles, cterm, out);
    }
    if (*forcing) return detail::cmd_forcing(o, fa, out);
    if (*examples) return detail::cmd_check(o, detail::theory_files(dir), jobs, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gctt::cli
