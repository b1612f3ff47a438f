#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gctt/util.hpp"

namespace gctt {

// Formal terms: named variables and named clocks.
enum class Tag {
  Var, Lam, KLam, App, CApp, Pair, Fst, Snd, Fix, Star, Tt, Ff, If, Zero, Succ, IfZe, Sup, WRec,
  Pi, Sg, W, Eq, All, Isect, Later, Void, Unit, Bool, Nat, Univ
};

struct Node;
using FormalTerm = std::shared_ptr<const Node>;

// An argument position together with the names it binds.
struct Scope {
  std::vector<std::string> vars;
  std::string clock;  // empty unless this position binds a clock
  FormalTerm body;
};

struct Node {
  Tag tag;
  std::string name;  // Var: the variable; CApp, Later: the clock
  unsigned level = 0;
  std::vector<Scope> args;
  Pos pos;
};

namespace ft {

inline FormalTerm mk(Tag t, std::vector<Scope> args = {}, std::string name = {}, unsigned level = 0) {
  return std::make_shared<const Node>(Node{t, std::move(name), level, std::move(args), {}});
}
inline Scope s(FormalTerm b) { return Scope{{}, {}, std::move(b)}; }
inline Scope sv(std::string x, FormalTerm b) { return Scope{{std::move(x)}, {}, std::move(b)}; }
inline Scope sk(std::string k, FormalTerm b) { return Scope{{}, std::move(k), std::move(b)}; }

inline FormalTerm var(std::string x) { return mk(Tag::Var, {}, std::move(x)); }
inline FormalTerm lam(std::string x, FormalTerm m) { return mk(Tag::Lam, {sv(std::move(x), std::move(m))}); }
inline FormalTerm klam(std::string k, FormalTerm m) { return mk(Tag::KLam, {sk(std::move(k), std::move(m))}); }
inline FormalTerm app(FormalTerm m, FormalTerm n) { return mk(Tag::App, {s(std::move(m)), s(std::move(n))}); }
inline FormalTerm capp(FormalTerm m, std::string k) { return mk(Tag::CApp, {s(std::move(m))}, std::move(k)); }
inline FormalTerm pair(FormalTerm m, FormalTerm n) { return mk(Tag::Pair, {s(std::move(m)), s(std::move(n))}); }
inline FormalTerm fst(FormalTerm m) { return mk(Tag::Fst, {s(std::move(m))}); }
inline FormalTerm snd(FormalTerm m) { return mk(Tag::Snd, {s(std::move(m))}); }
inline FormalTerm fix(std::string x, FormalTerm m) { return mk(Tag::Fix, {sv(std::move(x), std::move(m))}); }
inline FormalTerm star() { return mk(Tag::Star); }
inline FormalTerm tt() { return mk(Tag::Tt); }
inline FormalTerm ff() { return mk(Tag::Ff); }
inline FormalTerm ite(FormalTerm b, FormalTerm t, FormalTerm f) {
  return mk(Tag::If, {s(std::move(b)), s(std::move(t)), s(std::move(f))});
}
inline FormalTerm zero() { return mk(Tag::Zero); }
inline FormalTerm succ(FormalTerm m) { return mk(Tag::Succ, {s(std::move(m))}); }
inline FormalTerm ifze(FormalTerm m, FormalTerm z, std::string x, FormalTerm o) {
  return mk(Tag::IfZe, {s(std::move(m)), s(std::move(z)), sv(std::move(x), std::move(o))});
}
inline FormalTerm sup(FormalTerm m, std::string x, FormalTerm n) {
  return mk(Tag::Sup, {s(std::move(m)), sv(std::move(x), std::move(n))});
}
inline FormalTerm wrec(FormalTerm m, std::string x, std::string y, std::string z, FormalTerm n) {
  return mk(Tag::WRec, {s(std::move(m)), Scope{{std::move(x), std::move(y), std::move(z)}, {}, std::move(n)}});
}
inline FormalTerm pi(std::string x, FormalTerm a, FormalTerm b) {
  return mk(Tag::Pi, {s(std::move(a)), sv(std::move(x), std::move(b))});
}
inline FormalTerm sg(std::string x, FormalTerm a, FormalTerm b) {
  return mk(Tag::Sg, {s(std::move(a)), sv(std::move(x), std::move(b))});
}
inline FormalTerm wty(std::string x, FormalTerm a, FormalTerm b) {
  return mk(Tag::W, {s(std::move(a)), sv(std::move(x), std::move(b))});
}
inline FormalTerm eq(FormalTerm a, FormalTerm m, FormalTerm n) {
  return mk(Tag::Eq, {s(std::move(a)), s(std::move(m)), s(std::move(n))});
}
inline FormalTerm all(std::string k, FormalTerm a) { return mk(Tag::All, {sk(std::move(k), std::move(a))}); }
inline FormalTerm isect(std::string k, FormalTerm a) { return mk(Tag::Isect, {sk(std::move(k), std::move(a))}); }
inline FormalTerm later(std::string k, FormalTerm a) { return mk(Tag::Later, {s(std::move(a))}, std::move(k)); }
inline FormalTerm void_() { return mk(Tag::Void); }
inline FormalTerm unit() { return mk(Tag::Unit); }
inline FormalTerm bool_() { return mk(Tag::Bool); }
inline FormalTerm nat() { return mk(Tag::Nat); }
inline FormalTerm univ(unsigned i) { return mk(Tag::Univ, {}, {}, i); }
// Non-dependent sugar; "_" is never free in b.
inline FormalTerm arrow(FormalTerm a, FormalTerm b) { return pi("_", std::move(a), std::move(b)); }
inline FormalTerm prod(FormalTerm a, FormalTerm b) { return sg("_", std::move(a), std::move(b)); }

}  // namespace ft

inline FormalTerm with_pos(const FormalTerm& t, Pos p) {
  auto n = std::make_shared<Node>(*t);
  n->pos = p;
  return n;
}

inline FormalTerm rebuild(const FormalTerm& t, std::vector<Scope> args) {
  auto n = std::make_shared<Node>(*t);
  n->args = std::move(args);
  return n;
}

// ---- free names ----

inline void collect_free(const FormalTerm& t, std::set<std::string>& bound_v, std::set<std::string>& bound_k,
                         std::set<std::string>* out_v, std::set<std::string>* out_k) {
  if (t->tag == Tag::Var) {
    if (out_v && !bound_v.count(t->name)) out_v->insert(t->name);
    return;
  }
  if ((t->tag == Tag::CApp || t->tag == Tag::Later) && out_k && !bound_k.count(t->name)) out_k->insert(t->name);
  for (const auto& sc : t->args) {
    auto bv = bound_v;
    auto bk = bound_k;
    for (const auto& v : sc.vars) bv.insert(v);
    if (!sc.clock.empty()) bk.insert(sc.clock);
    collect_free(sc.body, bv, bk, out_v, out_k);
  }
}

inline std::set<std::string> free_vars(const FormalTerm& t) {
  std::set<std::string> bv, bk, out;
  collect_free(t, bv, bk, &out, nullptr);
  return out;
}

inline std::set<std::string> free_clocks(const FormalTerm& t) {
  std::set<std::string> bv, bk, out;
  collect_free(t, bv, bk, nullptr, &out);
  return out;
}

// ---- alpha equality ----

namespace detail {

struct AlphaEnv {
  std::vector<std::string> va, vb, ka, kb;
};

inline int lookup(const std::vector<std::string>& env, const std::string& x) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[i] == x) return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

inline bool same_name(const std::vector<std::string>& ea, const std::vector<std::string>& eb, const std::string& a,
                      const std::string& b) {
  int ia = lookup(ea, a), ib = lookup(eb, b);
  if (ia < 0 && ib < 0) return a == b;
  return ia == ib;
}

inline bool alpha(const FormalTerm& a, const FormalTerm& b, AlphaEnv& env) {
  if (a->tag != b->tag || a->level != b->level || a->args.size() != b->args.size()) return false;
  if (a->tag == Tag::Var) return same_name(env.va, env.vb, a->name, b->name);
  if ((a->tag == Tag::CApp || a->tag == Tag::Later) && !same_name(env.ka, env.kb, a->name, b->name)) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    const auto& sa = a->args[i];
    const auto& sb = b->args[i];
    if (sa.vars.size() != sb.vars.size() || sa.clock.empty() != sb.clock.empty()) return false;
    for (std::size_t j = 0; j < sa.vars.size(); ++j) {
      env.va.push_back(sa.vars[j]);
      env.vb.push_back(sb.vars[j]);
    }
    if (!sa.clock.empty()) {
      env.ka.push_back(sa.clock);
      env.kb.push_back(sb.clock);
    }
    bool ok = alpha(sa.body, sb.body, env);
    env.va.resize(env.va.size() - sa.vars.size());
    env.vb.resize(env.vb.size() - sb.vars.size());
    if (!sa.clock.empty()) {
      env.ka.pop_back();
      env.kb.pop_back();
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

inline bool alpha_equal(const FormalTerm& a, const FormalTerm& b) {
  detail::AlphaEnv env;
  return detail::alpha(a, b, env);
}

// ---- substitution ----

inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base == "_" ? "x" : base;
  while (avoid.count(n)) n += "'";
  return n;
}

inline FormalTerm subst_clock_formal(const FormalTerm& m, const std::string& k, const std::string& k2);

// Capture-avoiding [n/x]m.
inline FormalTerm subst_formal(const FormalTerm& m, const std::string& x, const FormalTerm& n) {
  if (m->tag == Tag::Var) return m->name == x ? n : m;
  if (!free_vars(m).count(x)) return m;
  auto fv_n = free_vars(n);
  auto fk_n = free_clocks(n);
  std::vector<Scope> args;
  for (const auto& sc : m->args) {
    if (std::find(sc.vars.begin(), sc.vars.end(), x) != sc.vars.end()) {
      args.push_back(sc);
      continue;
    }
    Scope out = sc;
    auto body_fv = free_vars(sc.body);
    if (!body_fv.count(x)) {
      args.push_back(sc);
      continue;
    }
    for (auto& v : out.vars) {
      if (!fv_n.count(v)) continue;
      std::set<std::string> avoid = fv_n;
      avoid.insert(body_fv.begin(), body_fv.end());
      avoid.insert(out.vars.begin(), out.vars.end());
      avoid.insert(x);
      std::string v2 = fresh_name(v, avoid);
      out.body = subst_formal(out.body, v, ft::var(v2));
      body_fv = free_vars(out.body);
      v = v2;
    }
    if (!out.clock.empty() && fk_n.count(out.clock)) {
      std::set<std::string> avoid = fk_n;
      auto fk_b = free_clocks(out.body);
      avoid.insert(fk_b.begin(), fk_b.end());
      std::string k2 = fresh_name(out.clock, avoid);
      out.body = subst_clock_formal(out.body, out.clock, k2);
      out.clock = k2;
    }
    out.body = subst_formal(out.body, x, n);
    args.push_back(std::move(out));
  }
  return rebuild(m, std::move(args));
}

// Capture-avoiding [k2/k]m on clock positions.
inline FormalTerm subst_clock_formal(const FormalTerm& m, const std::string& k, const std::string& k2) {
  if (k == k2 || !free_clocks(m).count(k)) return m;
  auto n = std::make_shared<Node>(*m);
  if ((m->tag == Tag::CApp || m->tag == Tag::Later) && m->name == k) n->name = k2;
  for (auto& sc : n->args) {
    if (sc.clock == k) continue;
    if (!free_clocks(sc.body).count(k)) continue;
    if (sc.clock == k2) {
      auto avoid = free_clocks(sc.body);
      avoid.insert(k2);
      avoid.insert(k);
      std::string fresh = fresh_name(sc.clock, avoid);
      sc.body = subst_clock_formal(sc.body, sc.clock, fresh);
      sc.clock = fresh;
    }
    sc.body = subst_clock_formal(sc.body, k, k2);
  }
  return n;
}

// Renames the single term binder of a scope to x (alpha-equivalent result).
inline Scope rename_var_binder(const Scope& sc, std::size_t i, const std::string& x) {
  Scope out = sc;
  if (out.vars[i] == x) return out;
  out.body = subst_formal(out.body, out.vars[i], ft::var(x));
  out.vars[i] = x;
  return out;
}

inline Scope rename_clock_binder(const Scope& sc, const std::string& k) {
  Scope out = sc;
  if (out.clock == k) return out;
  out.body = subst_clock_formal(out.body, out.clock, k);
  out.clock = k;
  return out;
}

// ---- scope checking ----

struct ScopeResult {
  bool ok = true;
  std::string name;
  bool is_clock = false;
  Pos pos;
  std::string message() const {
    if (ok) return "ok";
    return std::string(is_clock ? "clock " : "variable ") + name + " unbound";
  }
};

namespace detail {

inline bool scope_walk(const FormalTerm& t, std::vector<std::string>& vs, std::vector<std::string>& ks,
                       ScopeResult& r) {
  auto in = [](const std::vector<std::string>& e, const std::string& x) {
    return std::find(e.begin(), e.end(), x) != e.end();
  };
  if (t->tag == Tag::Var && !in(vs, t->name)) {
    r = {false, t->name, false, t->pos};
    return false;
  }
  if ((t->tag == Tag::CApp || t->tag == Tag::Later) && !in(ks, t->name)) {
    r = {false, t->name, true, t->pos};
    return false;
  }
  for (const auto& sc : t->args) {
    for (const auto& v : sc.vars) vs.push_back(v);
    if (!sc.clock.empty()) ks.push_back(sc.clock);
    bool ok = scope_walk(sc.body, vs, ks, r);
    vs.resize(vs.size() - sc.vars.size());
    if (!sc.clock.empty()) ks.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

inline ScopeResult scope_check(const FormalTerm& m, const std::vector<std::string>& delta,
                               const std::vector<std::string>& psi) {
  ScopeResult r;
  auto vs = psi;
  auto ks = delta;
  detail::scope_walk(m, vs, ks, r);
  return r;
}

// ---- printing ----

namespace detail {

inline std::string print(const FormalTerm& t, int prec);

inline std::string paren(bool p, const std::string& s) { return p ? "(" + s + ")" : s; }

// Precedence: 0 binders/if/arrow, 1 product, 2 application, 3 atom.
inline std::string print(const FormalTerm& t, int prec) {
  const auto& a = t->args;
  switch (t->tag) {
    case Tag::Var: return t->name;
    case Tag::Lam: return paren(prec > 0, "lam " + a[0].vars[0] + ". " + print(a[0].body, 0));
    case Tag::KLam: return paren(prec > 0, "clk-lam " + a[0].clock + ". " + print(a[0].body, 0));
    case Tag::Fix: return paren(prec > 0, "fix " + a[0].vars[0] + ". " + print(a[0].body, 0));
    case Tag::All: return paren(prec > 0, "all " + a[0].clock + ". " + print(a[0].body, 0));
    case Tag::Isect: return paren(prec > 0, "isect " + a[0].clock + ". " + print(a[0].body, 0));
    case Tag::App: return paren(prec > 2, print(a[0].body, 2) + " " + print(a[1].body, 3));
    case Tag::CApp: return paren(prec > 2, print(a[0].body, 2) + " @" + t->name);
    case Tag::Pair: return "<" + print(a[0].body, 0) + ", " + print(a[1].body, 0) + ">";
    case Tag::Fst: return paren(prec > 2, "fst " + print(a[0].body, 3));
    case Tag::Snd: return paren(prec > 2, "snd " + print(a[0].body, 3));
    case Tag::Succ: return paren(prec > 2, "succ " + print(a[0].body, 3));
    case Tag::Later: return paren(prec > 2, "later " + t->name + " " + print(a[0].body, 3));
    case Tag::Eq:
      return paren(prec > 2, "Eq " + print(a[0].body, 3) + " " + print(a[1].body, 3) + " " + print(a[2].body, 3));
    case Tag::Star: return "star";
    case Tag::Tt: return "tt";
    case Tag::Ff: return "ff";
    case Tag::Zero: return "zero";
    case Tag::Void: return "void";
    case Tag::Unit: return "unit";
    case Tag::Bool: return "bool";
    case Tag::Nat: return "nat";
    case Tag::Univ: return "U<" + std::to_string(t->level) + ">";
    case Tag::If:
      return paren(prec > 0, "if " + print(a[0].body, 0) + " then " + print(a[1].body, 0) + " else " +
                                 print(a[2].body, 0));
    case Tag::IfZe:
      return "ifze(" + print(a[0].body, 0) + "; " + print(a[1].body, 0) + "; " + a[2].vars[0] + ". " +
             print(a[2].body, 0) + ")";
    case Tag::Sup: return "sup(" + print(a[0].body, 0) + "; " + a[1].vars[0] + ". " + print(a[1].body, 0) + ")";
    case Tag::WRec:
      return "wrec(" + print(a[0].body, 0) + "; " + a[1].vars[0] + " " + a[1].vars[1] + " " + a[1].vars[2] +
             ". " + print(a[1].body, 0) + ")";
    case Tag::Pi:
      if (!free_vars(a[1].body).count(a[1].vars[0]))
        return paren(prec > 0, print(a[0].body, 1) + " -> " + print(a[1].body, 0));
      return paren(prec > 0, "pi (" + a[1].vars[0] + " : " + print(a[0].body, 0) + "). " + print(a[1].body, 0));
    case Tag::Sg:
      if (!free_vars(a[1].body).count(a[1].vars[0]))
        return paren(prec > 1, print(a[0].body, 2) + " * " + print(a[1].body, 1));
      return paren(prec > 0, "sg (" + a[1].vars[0] + " : " + print(a[0].body, 0) + "). " + print(a[1].body, 0));
    case Tag::W:
      return paren(prec > 0, "wty (" + a[1].vars[0] + " : " + print(a[0].body, 0) + "). " + print(a[1].body, 0));
  }
  return "?";
}

}  // namespace detail

inline std::string print(const FormalTerm& t) { return detail::print(t, 0); }

}  // namespace gctt
