#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gctt/syntax.hpp"
#include "gctt/util.hpp"

namespace gctt {

struct ClockName {
  std::uint32_t id = 0;
  auto operator<=>(const ClockName&) const = default;
};

inline std::string to_string(ClockName k) { return "#" + std::to_string(k.id); }

inline ClockName fresh_clock(const std::set<ClockName>& avoid) {
  return ClockName{avoid.empty() ? 1u : avoid.rbegin()->id + 1};
}

enum class PTag {
  Var, Lam, KLam, App, CApp, Fix, Pair, Fst, Snd, Star, Tt, Ff, Ze, Su, If, IfZe, Sup, WRec,
  Pi, Sg, W, Eq, Later, Isect, KProd, Void, Unit, Bool, Nat, Univ
};

struct PNode;
using Program = std::shared_ptr<const PNode>;

// Term variables are de Bruijn levels: var(i) is the i-th entry of the scope.
struct PNode {
  PTag tag;
  std::size_t index = 0;  // Var: level; Univ: universe index
  ClockName clock;        // CApp, Later: the clock; KLam, Isect, KProd: the bound clock
  std::vector<Program> kids;
};

// Number of term variables bound at child position i.
inline std::size_t binders(PTag t, std::size_t i) {
  switch (t) {
    case PTag::Lam:
    case PTag::Fix: return 1;
    case PTag::IfZe: return i == 2 ? 1 : 0;
    case PTag::Sup: return i == 1 ? 1 : 0;
    case PTag::WRec: return i == 1 ? 3 : 0;
    case PTag::Pi:
    case PTag::Sg:
    case PTag::W: return i == 1 ? 1 : 0;
    default: return 0;
  }
}

inline bool binds_clock(PTag t) { return t == PTag::KLam || t == PTag::Isect || t == PTag::KProd; }

namespace pg {

inline Program mk(PTag t, std::vector<Program> kids = {}, std::size_t index = 0, ClockName k = {}) {
  return std::make_shared<const PNode>(PNode{t, index, k, std::move(kids)});
}
inline Program var(std::size_t i) { return mk(PTag::Var, {}, i); }
inline Program lam(Program b) { return mk(PTag::Lam, {std::move(b)}); }
inline Program klam(ClockName k, Program b) { return mk(PTag::KLam, {std::move(b)}, 0, k); }
inline Program app(Program m, Program n) { return mk(PTag::App, {std::move(m), std::move(n)}); }
inline Program capp(Program m, ClockName k) { return mk(PTag::CApp, {std::move(m)}, 0, k); }
inline Program fix(Program b) { return mk(PTag::Fix, {std::move(b)}); }
inline Program pair(Program m, Program n) { return mk(PTag::Pair, {std::move(m), std::move(n)}); }
inline Program fst(Program m) { return mk(PTag::Fst, {std::move(m)}); }
inline Program snd(Program m) { return mk(PTag::Snd, {std::move(m)}); }
inline Program star() { return mk(PTag::Star); }
inline Program tt() { return mk(PTag::Tt); }
inline Program ff() { return mk(PTag::Ff); }
inline Program ze() { return mk(PTag::Ze); }
inline Program su(Program m) { return mk(PTag::Su, {std::move(m)}); }
inline Program ite(Program b, Program t, Program f) { return mk(PTag::If, {std::move(b), std::move(t), std::move(f)}); }
inline Program ifze(Program m, Program z, Program s) { return mk(PTag::IfZe, {std::move(m), std::move(z), std::move(s)}); }
inline Program sup(Program m, Program n) { return mk(PTag::Sup, {std::move(m), std::move(n)}); }
inline Program wrec(Program m, Program n) { return mk(PTag::WRec, {std::move(m), std::move(n)}); }
inline Program pi(Program a, Program b) { return mk(PTag::Pi, {std::move(a), std::move(b)}); }
inline Program sg(Program a, Program b) { return mk(PTag::Sg, {std::move(a), std::move(b)}); }
inline Program wty(Program a, Program b) { return mk(PTag::W, {std::move(a), std::move(b)}); }
inline Program eq(Program a, Program m, Program n) { return mk(PTag::Eq, {std::move(a), std::move(m), std::move(n)}); }
inline Program later(ClockName k, Program a) { return mk(PTag::Later, {std::move(a)}, 0, k); }
inline Program isect(ClockName k, Program a) { return mk(PTag::Isect, {std::move(a)}, 0, k); }
inline Program kprod(ClockName k, Program a) { return mk(PTag::KProd, {std::move(a)}, 0, k); }
inline Program void_() { return mk(PTag::Void); }
inline Program unit() { return mk(PTag::Unit); }
inline Program bool_() { return mk(PTag::Bool); }
inline Program nat() { return mk(PTag::Nat); }
inline Program univ(std::size_t i) { return mk(PTag::Univ, {}, i); }
inline Program num(unsigned n) {
  Program p = ze();
  while (n--) p = su(p);
  return p;
}

}  // namespace pg

inline Program with_kids(const Program& m, std::vector<Program> kids) {
  return std::make_shared<const PNode>(PNode{m->tag, m->index, m->clock, std::move(kids)});
}

// ---- clocks ----

inline void collect_clocks(const Program& m, std::set<ClockName>& bound, std::set<ClockName>& free_out,
                           std::set<ClockName>* all_out) {
  if (m->tag == PTag::CApp || m->tag == PTag::Later) {
    if (!bound.count(m->clock)) free_out.insert(m->clock);
    if (all_out) all_out->insert(m->clock);
  }
  if (binds_clock(m->tag)) {
    if (all_out) all_out->insert(m->clock);
    bool added = bound.insert(m->clock).second;
    for (const auto& k : m->kids) collect_clocks(k, bound, free_out, all_out);
    if (added) bound.erase(m->clock);
    return;
  }
  for (const auto& k : m->kids) collect_clocks(k, bound, free_out, all_out);
}

inline std::set<ClockName> free_clocks(const Program& m) {
  std::set<ClockName> bound, out;
  collect_clocks(m, bound, out, nullptr);
  return out;
}

// Every clock name mentioned anywhere, bound or free.
inline std::set<ClockName> all_clocks(const Program& m) {
  std::set<ClockName> bound, fr, all;
  collect_clocks(m, bound, fr, &all);
  return all;
}

namespace detail {

inline Program inst_rec(const Program& body, ClockName bound, ClockName k) {
  if (body->kids.empty() && body->tag != PTag::CApp && body->tag != PTag::Later) return body;
  if (binds_clock(body->tag)) {
    if (body->clock == bound) return body;
    if (body->clock == k) {
      if (!free_clocks(body).count(bound)) return body;
      auto avoid = all_clocks(body);
      avoid.insert(k);
      avoid.insert(bound);
      ClockName c = fresh_clock(avoid);
      Program inner = inst_rec(body->kids[0], body->clock, c);
      return pg::mk(body->tag, {inst_rec(inner, bound, k)}, 0, c);
    }
  }
  std::vector<Program> kids;
  kids.reserve(body->kids.size());
  bool changed = false;
  for (const auto& c : body->kids) {
    kids.push_back(inst_rec(c, bound, k));
    changed = changed || kids.back() != c;
  }
  ClockName own = body->clock;
  if ((body->tag == PTag::CApp || body->tag == PTag::Later) && own == bound) {
    own = k;
    changed = true;
  }
  if (!changed) return body;
  return pg::mk(body->tag, std::move(kids), body->index, own);
}

}  // namespace detail

// Renames free occurrences of `bound` to k, alpha-renaming inner binders of k.
inline Program instantiate_clock(const Program& body, ClockName bound, ClockName k) {
  if (bound == k) return body;
  return detail::inst_rec(body, bound, k);
}

// ---- substitution ----

struct Substitution {
  std::vector<Program> terms;  // one per source variable
  std::size_t target = 0;      // scope of the terms

  static Substitution identity(std::size_t n) {
    Substitution s;
    for (std::size_t i = 0; i < n; ++i) s.terms.push_back(pg::var(i));
    s.target = n;
    return s;
  }
  // [v0..v(n-1), extra...] in scope n
  static Substitution extend(std::size_t n, std::vector<Program> extra) {
    Substitution s = identity(n);
    for (auto& e : extra) s.terms.push_back(std::move(e));
    return s;
  }
};

// Moves a term from scope s to a deeper scope s+d: its own binders sit at
// levels >= s and are renumbered; free variables stay put.
inline Program shift_bound(const Program& m, std::size_t s, std::size_t d) {
  if (d == 0) return m;
  if (m->tag == PTag::Var) return m->index >= s ? pg::var(m->index + d) : m;
  if (m->kids.empty()) return m;
  std::vector<Program> kids;
  kids.reserve(m->kids.size());
  bool changed = false;
  for (const auto& c : m->kids) {
    kids.push_back(shift_bound(c, s, d));
    changed = changed || kids.back() != c;
  }
  return changed ? with_kids(m, std::move(kids)) : m;
}

// Simultaneous substitution; m must be in scope gamma.terms.size().
inline Program subst(const Substitution& gamma, const Program& m) {
  std::set<ClockName> gclocks;
  for (const auto& t : gamma.terms) {
    auto fc = free_clocks(t);
    gclocks.insert(fc.begin(), fc.end());
  }
  std::vector<Program> g = gamma.terms;
  struct Walker {
    static Program go(const Program& m, std::vector<Program>& g, std::vector<std::size_t>& scope, std::size_t src,
                      std::size_t tgt, const std::set<ClockName>& gclocks) {
      if (m->tag == PTag::Var) {
        if (m->index >= src)
          throw Error("scope mismatch: var " + std::to_string(m->index) + " in scope " + std::to_string(src));
        return shift_bound(g[m->index], scope[m->index], tgt - scope[m->index]);
      }
      if (m->kids.empty()) return m;
      ClockName own = m->clock;
      std::vector<Program> kids;
      kids.reserve(m->kids.size());
      for (std::size_t i = 0; i < m->kids.size(); ++i) {
        Program child = m->kids[i];
        if (binds_clock(m->tag) && gclocks.count(own)) {
          auto avoid = gclocks;
          auto inner = all_clocks(child);
          avoid.insert(inner.begin(), inner.end());
          ClockName c = fresh_clock(avoid);
          child = instantiate_clock(child, own, c);
          own = c;
        }
        std::size_t b = binders(m->tag, i);
        for (std::size_t j = 0; j < b; ++j) {
          g.push_back(pg::var(tgt + j));
          scope.push_back(tgt + b);
        }
        kids.push_back(go(child, g, scope, src + b, tgt + b, gclocks));
        g.resize(g.size() - b);
        scope.resize(scope.size() - b);
      }
      return pg::mk(m->tag, std::move(kids), m->index, own);
    }
  };
  std::vector<std::size_t> scope(g.size(), gamma.target);
  return Walker::go(m, g, scope, g.size(), gamma.target, gclocks);
}

// Substitutes for the last variable of scope n (the common single-binder case).
inline Program subst_top(std::size_t n, const Program& body, Program arg) {
  return subst(Substitution::extend(n, {std::move(arg)}), body);
}

// ---- alpha equality ----

namespace detail {

inline bool palpha(const Program& a, const Program& b, std::vector<std::pair<ClockName, ClockName>>& env) {
  if (a.get() == b.get() && env.empty()) return true;
  if (a->tag != b->tag || a->index != b->index || a->kids.size() != b->kids.size()) return false;
  if (a->tag == PTag::CApp || a->tag == PTag::Later) {
    int ia = -1, ib = -1;
    for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
      if (ia < 0 && env[i].first == a->clock) ia = i;
      if (ib < 0 && env[i].second == b->clock) ib = i;
    }
    if (ia != ib) return false;
    if (ia < 0 && a->clock != b->clock) return false;
  }
  if (binds_clock(a->tag)) env.emplace_back(a->clock, b->clock);
  bool ok = true;
  for (std::size_t i = 0; ok && i < a->kids.size(); ++i) ok = palpha(a->kids[i], b->kids[i], env);
  if (binds_clock(a->tag)) env.pop_back();
  return ok;
}

}  // namespace detail

inline bool alpha_equal(const Program& a, const Program& b) {
  std::vector<std::pair<ClockName, ClockName>> env;
  return detail::palpha(a, b, env);
}

// ---- scope validation ----

inline bool well_scoped(const Program& m, std::size_t n) {
  if (m->tag == PTag::Var) return m->index < n;
  for (std::size_t i = 0; i < m->kids.size(); ++i)
    if (!well_scoped(m->kids[i], n + binders(m->tag, i))) return false;
  return true;
}

inline bool closed(const Program& m) { return well_scoped(m, 0); }

// Levels are absolute, so a variable refers to level l at any depth.
inline bool uses_level(const Program& m, std::size_t l) {
  if (m->tag == PTag::Var) return m->index == l;
  for (const auto& k : m->kids)
    if (uses_level(k, l)) return true;
  return false;
}

inline std::size_t size(const Program& m) {
  std::size_t s = 1;
  for (const auto& k : m->kids) s += size(k);
  return s;
}

// ---- debug printing ----

// Reads a program back into surface syntax with variables named v<level>
// and clocks named #<id>.
inline FormalTerm debug_formal(const Program& m, std::size_t n) {
  auto v = [](std::size_t i) { return "v" + std::to_string(i); };
  const auto& k = m->kids;
  switch (m->tag) {
    case PTag::Var: return ft::var(v(m->index));
    case PTag::Lam: return ft::lam(v(n), debug_formal(k[0], n + 1));
    case PTag::KLam: return ft::klam(to_string(m->clock), debug_formal(k[0], n));
    case PTag::App: return ft::app(debug_formal(k[0], n), debug_formal(k[1], n));
    case PTag::CApp: return ft::capp(debug_formal(k[0], n), to_string(m->clock));
    case PTag::Fix: return ft::fix(v(n), debug_formal(k[0], n + 1));
    case PTag::Pair: return ft::pair(debug_formal(k[0], n), debug_formal(k[1], n));
    case PTag::Fst: return ft::fst(debug_formal(k[0], n));
    case PTag::Snd: return ft::snd(debug_formal(k[0], n));
    case PTag::Star: return ft::star();
    case PTag::Tt: return ft::tt();
    case PTag::Ff: return ft::ff();
    case PTag::Ze: return ft::zero();
    case PTag::Su: return ft::succ(debug_formal(k[0], n));
    case PTag::If: return ft::ite(debug_formal(k[0], n), debug_formal(k[1], n), debug_formal(k[2], n));
    case PTag::IfZe: return ft::ifze(debug_formal(k[0], n), debug_formal(k[1], n), v(n), debug_formal(k[2], n + 1));
    case PTag::Sup: return ft::sup(debug_formal(k[0], n), v(n), debug_formal(k[1], n + 1));
    case PTag::WRec: return ft::wrec(debug_formal(k[0], n), v(n), v(n + 1), v(n + 2), debug_formal(k[1], n + 3));
    case PTag::Pi: return ft::pi(v(n), debug_formal(k[0], n), debug_formal(k[1], n + 1));
    case PTag::Sg: return ft::sg(v(n), debug_formal(k[0], n), debug_formal(k[1], n + 1));
    case PTag::W: return ft::wty(v(n), debug_formal(k[0], n), debug_formal(k[1], n + 1));
    case PTag::Eq: return ft::eq(debug_formal(k[0], n), debug_formal(k[1], n), debug_formal(k[2], n));
    case PTag::Later: return ft::later(to_string(m->clock), debug_formal(k[0], n));
    case PTag::Isect: return ft::isect(to_string(m->clock), debug_formal(k[0], n));
    case PTag::KProd: return ft::all(to_string(m->clock), debug_formal(k[0], n));
    case PTag::Void: return ft::void_();
    case PTag::Unit: return ft::unit();
    case PTag::Bool: return ft::bool_();
    case PTag::Nat: return ft::nat();
    case PTag::Univ: return ft::univ(static_cast<unsigned>(m->index));
  }
  return ft::star();
}

inline std::string print(const Program& m, std::size_t scope = 0) { return print(debug_formal(m, scope)); }

inline const char* tag_name(PTag t) {
  switch (t) {
    case PTag::Var: return "var";
    case PTag::Lam: return "lam";
    case PTag::KLam: return "klam";
    case PTag::App: return "app";
    case PTag::CApp: return "capp";
    case PTag::Fix: return "fix";
    case PTag::Pair: return "pair";
    case PTag::Fst: return "fst";
    case PTag::Snd: return "snd";
    case PTag::Star: return "star";
    case PTag::Tt: return "tt";
    case PTag::Ff: return "ff";
    case PTag::Ze: return "ze";
    case PTag::Su: return "su";
    case PTag::If: return "if";
    case PTag::IfZe: return "ifze";
    case PTag::Sup: return "sup";
    case PTag::WRec: return "wrec";
    case PTag::Pi: return "pi";
    case PTag::Sg: return "sg";
    case PTag::W: return "wty";
    case PTag::Eq: return "eq";
    case PTag::Later: return "later";
    case PTag::Isect: return "isect";
    case PTag::KProd: return "kprod";
    case PTag::Void: return "void";
    case PTag::Unit: return "unit";
    case PTag::Bool: return "bool";
    case PTag::Nat: return "nat";
    case PTag::Univ: return "univ";
  }
  return "?";
}

// S-expression form: (app (lam v0) tt).
inline std::string sexpr(const Program& m) {
  std::string s = "(";
  s += tag_name(m->tag);
  if (m->tag == PTag::Var || m->tag == PTag::Univ) s += " " + std::to_string(m->index);
  if (m->tag == PTag::CApp || m->tag == PTag::Later || binds_clock(m->tag)) s += " " + to_string(m->clock);
  for (const auto& k : m->kids) s += " " + sexpr(k);
  return s + ")";
}

}  // namespace gctt
