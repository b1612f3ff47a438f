#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gctt/judgment.hpp"
#include "gctt/parser.hpp"
#include "gctt/rules.hpp"

namespace gctt {

struct LemmaDecl {
  std::string name;
  Derivation proof;  // proof.conclusion holds the stated judgment
  Pos pos;
};

struct Script {
  DefTable defs;
  std::vector<std::string> def_order;
  std::vector<LemmaDecl> lemmas;
};

namespace detail {

class ScriptParser {
 public:
  explicit ScriptParser(const std::string& src) : src_(src), p_(src, lex(src), ParseEnv{}) {}

  Script run() {
    p_.env().defs = &script_.defs;
    std::set<std::string> lemma_names;
    while (!p_.at_end()) {
      if (p_.at_kw("def")) {
        p_.next();
        Pos np = p_.peek().pos;
        std::string name = p_.expect_name();
        if (script_.defs.count(name)) throw ParseError("duplicate definition " + name, np);
        p_.expect_sym(":=");
        FormalTerm body = p_.term();
        p_.expect_sym(";");
        script_.defs[name] = body;
        script_.def_order.push_back(name);
      } else if (p_.at_kw("lemma")) {
        Pos lp = p_.peek().pos;
        p_.next();
        Pos np = p_.peek().pos;
        std::string name = p_.expect_name();
        if (!lemma_names.insert(name).second) throw ParseError("duplicate lemma " + name, np);
        p_.expect_sym(":");
        Judgment j = p_.judgment();
        p_.expect_kw("by");
        p_.expect_sym("{");
        Derivation d = deriv();
        p_.expect_sym("}");
        if (p_.at_sym(";")) p_.next();
        d.conclusion = std::move(j);
        script_.lemmas.push_back({name, std::move(d), lp});
      } else {
        p_.fail("expected 'def' or 'lemma' but found " + TermParser::describe(p_.peek()));
      }
    }
    return std::move(script_);
  }

 private:
  const std::string& src_;
  TermParser p_;
  Script script_;

  // Source text up to a depth-0 separator; brackets nest.
  std::pair<std::string, Pos> capture(std::initializer_list<const char*> stops) {
    Pos pos = p_.peek().pos;
    std::size_t begin = p_.peek().begin, end = begin;
    int depth = 0;
    while (!p_.at_end()) {
      const Token& t = p_.peek();
      if (t.kind == Token::Kind::Sym) {
        if (depth == 0) {
          bool stop = false;
          for (const char* s : stops) stop = stop || t.text == s;
          if (stop) break;
        }
        if (t.text == "(" || t.text == "<" || t.text == "{" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == ">" || t.text == "}" || t.text == "]") {
          if (depth == 0) p_.fail("unbalanced " + TermParser::describe(t));
          --depth;
        }
      }
      end = t.end;
      p_.next();
    }
    if (end == begin) p_.fail("expected a term but found " + TermParser::describe(p_.peek()));
    return {src_.substr(begin, end - begin), pos};
  }

  Derivation deriv() {
    Derivation d;
    d.pos = p_.peek().pos;
    if (p_.at_kw("lemma")) {
      p_.next();
      d.kind = Derivation::Kind::LemmaRef;
      d.lemma = p_.expect_name();
      return d;
    }
    if (p_.at_kw("conv")) {
      p_.next();
      d.kind = Derivation::Kind::Conv;
      return d;
    }
    if (p_.at_kw("trace")) {
      p_.next();
      d.kind = Derivation::Kind::Trace;
      p_.expect_sym("(");
      while (!p_.at_sym(")")) {
        auto [text, pos] = capture({";", ")"});
        d.trace.push_back({text, pos});
        if (p_.at_sym(";")) p_.next();
      }
      p_.next();
      return d;
    }
    std::string family = p_.expect_name();
    p_.expect_sym(".");
    std::string member = p_.expect_name();
    auto r = rule_from_string(family + "." + member);
    if (!r) throw ParseError("unknown rule " + family + "." + member, d.pos);
    d.rule = *r;
    if (p_.at_sym("(")) {
      p_.next();
      while (!p_.at_sym(")")) {
        Pos kp = p_.peek().pos;
        std::string key = p_.expect_name();
        if (d.binding(key)) throw ParseError("duplicate binding " + key, kp);
        p_.expect_sym("=");
        auto [text, pos] = capture({",", ")"});
        d.bindings.push_back({key, text, pos});
        if (p_.at_sym(",")) p_.next();
      }
      p_.next();
    }
    if (p_.at_sym("{")) {
      p_.next();
      while (!p_.at_sym("}")) {
        if (p_.at_end()) p_.fail("unterminated premise block");
        d.premises.push_back(deriv());
        if (p_.at_sym(",") || p_.at_sym(";")) p_.next();
      }
      p_.next();
    }
    return d;
  }
};

// Path of the first reference to a lemma in `bad`, in checker path syntax.
inline std::string find_bad_ref(const Derivation& d, const std::set<std::string>& bad, const std::string& path,
                                std::string& which) {
  if (d.kind == Derivation::Kind::LemmaRef && bad.count(d.lemma)) {
    which = d.lemma;
    return path;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    std::string r =
        find_bad_ref(d.premises[i], bad, path + "/" + std::to_string(i + 1) + ":" + d.premises[i].label(), which);
    if (!r.empty()) return r;
  }
  return {};
}

}  // namespace detail

inline Script parse_script(const std::string& src) { return detail::ScriptParser(src).run(); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LemmaReport {
  std::string name;
  std::string judgment;  // verbatim source text
  Pos pos;
  CheckResult result;
};

struct ScriptReport {
  std::vector<LemmaReport> lemmas;
  bool ok() const {
    for (const auto& l : lemmas)
      if (!l.result.ok) return false;
    return true;
  }
};

// Each lemma sees the judgments of the lemmas declared before it. A lemma
// that cites a failed lemma fails too.
inline ScriptReport check_script(const Script& s, std::size_t fuel = default_fuel(), unsigned jobs = 1) {
  std::size_t n = s.lemmas.size();
  std::vector<std::map<std::string, Judgment>> tables(n);
  std::map<std::string, Judgment> acc;
  for (std::size_t i = 0; i < n; ++i) {
    tables[i] = acc;
    acc.emplace(s.lemmas[i].name, *s.lemmas[i].proof.conclusion);
  }
  ScriptReport rep;
  rep.lemmas.resize(n);
  auto work = [&](std::size_t i) {
    const LemmaDecl& l = s.lemmas[i];
    CheckEnv env{&s.defs, &tables[i], fuel};
    rep.lemmas[i] = {l.name, l.proof.conclusion->source, l.pos, check(l.proof, env)};
  };
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < n;) work(i);
      });
    for (auto& th : pool) th.join();
  }
  std::set<std::string> failed;
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = rep.lemmas[i].result;
    if (r.ok) {
      std::string which;
      std::string path = detail::find_bad_ref(s.lemmas[i].proof, failed, s.lemmas[i].proof.label(), which);
      if (!path.empty()) {
        r.ok = false;
        r.path = path;
        r.explanation = "cites lemma " + which + ", which failed";
      }
    }
    if (!r.ok) failed.insert(rep.lemmas[i].name);
  }
  return rep;
}

}  // namespace gctt
