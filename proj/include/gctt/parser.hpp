#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gctt/judgment.hpp"
#include "gctt/syntax.hpp"
#include "gctt/util.hpp"

namespace gctt {

struct Token {
  enum class Kind { Ident, Num, Sym, End };
  Kind kind;
  std::string text;
  Pos pos;
  std::size_t begin = 0, end = 0;  // byte offsets into the source
};

inline std::vector<Token> lex(const std::string& src, Pos start = {1, 1}) {
  std::vector<Token> out;
  int line = start.line, col = start.col;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  static const char* syms[] = {":=", "->", "|-", "(", ")", "<", ">", ",", ";", ":", ".",
                               "=",  "*",  "@",  "~", "{", "}", "[", "]"};
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') adv(1);
      continue;
    }
    Pos p{line, col};
    std::size_t b = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      if (src.compare(i, j - i, "clk") == 0 && src.compare(j, 4, "-lam") == 0 && !(j + 4 < src.size() && ident_char(src[j + 4])))
        j += 4;
      adv(j - i);
      out.push_back({Token::Kind::Ident, src.substr(b, i - b), p, b, i});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      adv(j - i);
      out.push_back({Token::Kind::Num, src.substr(b, i - b), p, b, i});
      continue;
    }
    bool matched = false;
    for (const char* s : syms) {
      std::size_t n = std::char_traits<char>::length(s);
      if (src.compare(i, n, s) == 0) {
        adv(n);
        out.push_back({Token::Kind::Sym, s, p, b, i});
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", p);
  }
  out.push_back({Token::Kind::End, "", {line, col}, src.size(), src.size()});
  return out;
}

inline const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"lam",  "clk-lam", "fix",  "fst",  "snd",  "if",   "then", "else",
                                       "zero", "succ",    "ifze", "sup",  "wrec", "pi",   "sg",   "wty",
                                       "Eq",   "all",     "isect", "later", "void", "unit", "bool", "nat",
                                       "tt",   "ff",      "star", "U",    "by",   "def",  "lemma"};
  return k;
}

using DefTable = std::map<std::string, FormalTerm>;

// Names visible to a term beyond its own binders.
struct ParseEnv {
  const DefTable* defs = nullptr;
  std::vector<std::string> vars;
  std::vector<std::string> clocks;
};

class TermParser {
 public:
  TermParser(const std::string& src, std::vector<Token> toks, ParseEnv env)
      : src_(src), toks_(std::move(toks)), env_(std::move(env)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_sym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool at_kw(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  std::size_t index() const { return pos_; }
  void seek(std::size_t i) { pos_ = i; }
  const std::string& source() const { return src_; }
  ParseEnv& env() { return env_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()));
    next();
  }
  void expect_kw(const char* s) {
    if (!at_kw(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()));
    next();
  }
  std::string expect_name() {
    if (peek().kind != Token::Kind::Ident) fail("expected identifier but found " + describe(peek()));
    if (keywords().count(peek().text)) fail("unexpected keyword '" + peek().text + "'");
    return next().text;
  }
  unsigned expect_num() {
    if (peek().kind != Token::Kind::Num) fail("expected number but found " + describe(peek()));
    return static_cast<unsigned>(std::stoul(next().text));
  }
  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    return "'" + t.text + "'";
  }

  FormalTerm term() {
    Pos p = peek().pos;
    if (at_kw("lam") || at_kw("fix")) {
      bool is_lam = at_kw("lam");
      next();
      std::string x = expect_name();
      expect_sym(".");
      FormalTerm b = with_var(x, [&] { return term(); });
      return at(p, is_lam ? ft::lam(x, b) : ft::fix(x, b));
    }
    if (at_kw("clk-lam") || at_kw("all") || at_kw("isect")) {
      std::string kw = next().text;
      std::string k = expect_name();
      expect_sym(".");
      FormalTerm b = with_clock(k, [&] { return term(); });
      if (kw == "clk-lam") return at(p, ft::klam(k, b));
      return at(p, kw == "all" ? ft::all(k, b) : ft::isect(k, b));
    }
    if (at_kw("pi") || at_kw("sg") || at_kw("wty")) {
      std::string kw = next().text;
      expect_sym("(");
      std::string x = expect_name();
      expect_sym(":");
      FormalTerm a = term();
      expect_sym(")");
      expect_sym(".");
      FormalTerm b = with_var(x, [&] { return term(); });
      if (kw == "pi") return at(p, ft::pi(x, a, b));
      return at(p, kw == "sg" ? ft::sg(x, a, b) : ft::wty(x, a, b));
    }
    if (at_kw("if")) {
      next();
      FormalTerm c = term();
      expect_kw("then");
      FormalTerm t = term();
      expect_kw("else");
      FormalTerm f = term();
      return at(p, ft::ite(c, t, f));
    }
    FormalTerm a = product();
    if (at_sym("->")) {
      next();
      FormalTerm b = with_var("_", [&] { return term(); });
      return at(p, ft::arrow(a, b));
    }
    return a;
  }

 private:
  template <class F>
  FormalTerm with_var(const std::string& x, F f) {
    locals_.push_back(x);
    FormalTerm r = f();
    locals_.pop_back();
    return r;
  }
  template <class F>
  FormalTerm with_clock(const std::string& k, F f) {
    local_clocks_.push_back(k);
    FormalTerm r = f();
    local_clocks_.pop_back();
    return r;
  }

  static FormalTerm at(Pos p, FormalTerm t) { return with_pos(t, p); }

  FormalTerm product() {
    Pos p = peek().pos;
    FormalTerm a = application();
    if (at_sym("*")) {
      next();
      FormalTerm b = with_var("_", [&] { return product(); });
      return at(p, ft::prod(a, b));
    }
    return a;
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Sym) return t.text == "(" || t.text == "<";
    if (t.kind != Token::Kind::Ident) return false;
    static const std::set<std::string> atom_kw{"fst",  "snd",  "succ", "later", "Eq",   "tt",   "ff",   "star",
                                               "zero", "void", "unit", "bool",  "nat",  "U",    "ifze", "sup",
                                               "wrec"};
    if (keywords().count(t.text)) return atom_kw.count(t.text) > 0;
    return true;
  }

  FormalTerm application() {
    Pos p = peek().pos;
    FormalTerm a = atom();
    while (true) {
      if (at_sym("@")) {
        next();
        Pos kp = peek().pos;
        std::string k = clock_ref(kp);
        a = at(p, ft::capp(a, k));
      } else if (starts_atom()) {
        a = at(p, ft::app(a, atom()));
      } else {
        break;
      }
    }
    return a;
  }

  std::string clock_ref(Pos p) {
    std::string k = expect_name();
    for (auto it = local_clocks_.rbegin(); it != local_clocks_.rend(); ++it)
      if (*it == k) return k;
    for (const auto& c : env_.clocks)
      if (c == k) return k;
    throw ParseError("unbound clock " + k, p);
  }

  FormalTerm resolve(const std::string& x, Pos p) {
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
      if (*it == x) return at(p, ft::var(x));
    for (const auto& v : env_.vars)
      if (v == x) return at(p, ft::var(x));
    if (env_.defs) {
      auto it = env_.defs->find(x);
      if (it != env_.defs->end()) return it->second;
    }
    throw ParseError("unbound identifier " + x, p);
  }

  FormalTerm atom() {
    Pos p = peek().pos;
    const Token& t = peek();
    if (t.kind == Token::Kind::Sym && t.text == "(") {
      next();
      FormalTerm m = term();
      expect_sym(")");
      return m;
    }
    if (t.kind == Token::Kind::Sym && t.text == "<") {
      next();
      FormalTerm a = term();
      expect_sym(",");
      FormalTerm b = term();
      expect_sym(">");
      return at(p, ft::pair(a, b));
    }
    if (t.kind != Token::Kind::Ident) fail("expected a term but found " + describe(t));
    std::string w = t.text;
    if (!keywords().count(w)) {
      next();
      return resolve(w, p);
    }
    next();
    if (w == "fst") return at(p, ft::fst(atom()));
    if (w == "snd") return at(p, ft::snd(atom()));
    if (w == "succ") return at(p, ft::succ(atom()));
    if (w == "later") {
      std::string k = clock_ref(peek().pos);
      return at(p, ft::later(k, atom()));
    }
    if (w == "Eq") {
      FormalTerm a = atom();
      FormalTerm m = atom();
      FormalTerm n = atom();
      return at(p, ft::eq(a, m, n));
    }
    if (w == "tt") return at(p, ft::tt());
    if (w == "ff") return at(p, ft::ff());
    if (w == "star") return at(p, ft::star());
    if (w == "zero") return at(p, ft::zero());
    if (w == "void") return at(p, ft::void_());
    if (w == "unit") return at(p, ft::unit());
    if (w == "bool") return at(p, ft::bool_());
    if (w == "nat") return at(p, ft::nat());
    if (w == "U") {
      expect_sym("<");
      unsigned i = expect_num();
      expect_sym(">");
      return at(p, ft::univ(i));
    }
    if (w == "ifze") {
      expect_sym("(");
      FormalTerm m = term();
      expect_sym(";");
      FormalTerm z = term();
      expect_sym(";");
      std::string x = expect_name();
      expect_sym(".");
      FormalTerm o = with_var(x, [&] { return term(); });
      expect_sym(")");
      return at(p, ft::ifze(m, z, x, o));
    }
    if (w == "sup") {
      expect_sym("(");
      FormalTerm m = term();
      expect_sym(";");
      std::string x = expect_name();
      expect_sym(".");
      FormalTerm n = with_var(x, [&] { return term(); });
      expect_sym(")");
      return at(p, ft::sup(m, x, n));
    }
    if (w == "wrec") {
      expect_sym("(");
      FormalTerm m = term();
      expect_sym(";");
      std::string x = expect_name();
      std::string y = expect_name();
      std::string z = expect_name();
      expect_sym(".");
      locals_.push_back(x);
      locals_.push_back(y);
      locals_.push_back(z);
      FormalTerm n = term();
      locals_.resize(locals_.size() - 3);
      expect_sym(")");
      return at(p, ft::wrec(m, x, y, z, n));
    }
    throw ParseError("unknown keyword '" + w + "' in term position", p);
  }

 public:
  // Δ ; Γ |- M = N : A   |   Δ ; Γ |- M : A   |   Δ ; Ψ |- M ~ N
  Judgment judgment() {
    std::size_t start = peek().begin;
    Judgment j;
    if (at_sym(".")) {
      next();
    } else {
      j.delta.push_back(expect_name());
      while (at_sym(",")) {
        next();
        j.delta.push_back(expect_name());
      }
    }
    expect_sym(";");
    ParseEnv saved = env_;
    env_.clocks.insert(env_.clocks.end(), j.delta.begin(), j.delta.end());
    bool any_typed = false, any_bare = false;
    if (at_sym(".")) {
      next();
    } else {
      while (true) {
        Pos hp = peek().pos;
        Hyp h;
        h.name = expect_name();
        if (at_sym(":")) {
          next();
          h.type = term();
          any_typed = true;
        } else {
          any_bare = true;
        }
        for (const auto& g : j.gamma)
          if (g.name == h.name) throw ParseError("duplicate variable " + h.name + " in context", hp);
        env_.vars.push_back(h.name);
        j.gamma.push_back(std::move(h));
        if (!at_sym(",")) break;
        next();
      }
    }
    expect_sym("|-");
    j.lhs = term();
    if (at_sym("~")) {
      next();
      j.kind = Judgment::Kind::OpenConv;
      j.rhs = term();
      if (any_typed) fail("open conversion contexts list variable names only");
    } else if (at_sym("=")) {
      next();
      j.rhs = term();
      expect_sym(":");
      j.type = term();
      if (any_bare) fail("typing contexts need a type for every variable");
    } else {
      expect_sym(":");
      j.rhs = j.lhs;
      j.type = term();
      if (any_bare) fail("typing contexts need a type for every variable");
    }
    env_ = saved;
    std::size_t end = toks_[pos_ > 0 ? pos_ - 1 : 0].end;
    j.source = src_.substr(start, end - start);
    for (std::size_t i = 0; i < j.delta.size(); ++i)
      for (std::size_t k = i + 1; k < j.delta.size(); ++k)
        if (j.delta[i] == j.delta[k]) throw ParseError("duplicate clock " + j.delta[i]);
    return j;
  }

 private:
  const std::string& src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseEnv env_;
  std::vector<std::string> locals_;
  std::vector<std::string> local_clocks_;
};

inline FormalTerm parse_term(const std::string& text, ParseEnv env = {}, Pos start = {1, 1}) {
  TermParser p(text, lex(text, start), std::move(env));
  FormalTerm t = p.term();
  if (!p.at_end()) p.fail("unexpected " + TermParser::describe(p.peek()) + " after term");
  return t;
}

inline Judgment parse_judgment(const std::string& text, ParseEnv env = {}) {
  TermParser p(text, lex(text), std::move(env));
  Judgment j = p.judgment();
  if (!p.at_end()) p.fail("unexpected " + TermParser::describe(p.peek()) + " after judgment");
  return j;
}

}  // namespace gctt
