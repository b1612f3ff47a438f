#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gctt/judgment.hpp"
#include "gctt/program.hpp"
#include "gctt/syntax.hpp"

namespace gctt {

// rho : Delta -> clock names, in the order of Delta.
using ClockEnv = std::vector<std::pair<std::string, ClockName>>;
using Telescope = std::vector<Program>;

struct NameSupply {
  std::uint32_t next = 1;
  ClockName fresh() { return ClockName{next++}; }

  static NameSupply after(const ClockEnv& rho) {
    NameSupply s;
    for (const auto& [k, c] : rho) s.next = std::max(s.next, c.id + 1);
    return s;
  }
};

namespace detail {

struct Elab {
  std::vector<std::string> psi;
  ClockEnv clocks;
  NameSupply& supply;

  std::size_t var_index(const std::string& x, Pos p) const {
    for (std::size_t i = psi.size(); i-- > 0;)
      if (psi[i] == x) return i;
    throw Error("elaboration: variable " + x + " unbound", p);
  }
  ClockName clock(const std::string& k, Pos p) const {
    for (std::size_t i = clocks.size(); i-- > 0;)
      if (clocks[i].first == k) return clocks[i].second;
    throw Error("elaboration: clock " + k + " unbound", p);
  }

  Program under(const Scope& sc) {
    for (const auto& v : sc.vars) psi.push_back(v);
    Program r = go(sc.body);
    psi.resize(psi.size() - sc.vars.size());
    return r;
  }

  Program bind_clock(const Scope& sc, ClockName& out) {
    out = supply.fresh();
    clocks.emplace_back(sc.clock, out);
    Program r = go(sc.body);
    clocks.pop_back();
    return r;
  }

  Program go(const FormalTerm& t) {
    const auto& a = t->args;
    ClockName k;
    switch (t->tag) {
      case Tag::Var: return pg::var(var_index(t->name, t->pos));
      case Tag::Lam: return pg::lam(under(a[0]));
      case Tag::KLam: {
        Program b = bind_clock(a[0], k);
        return pg::klam(k, b);
      }
      case Tag::App: return pg::app(go(a[0].body), go(a[1].body));
      case Tag::CApp: return pg::capp(go(a[0].body), clock(t->name, t->pos));
      case Tag::Pair: return pg::pair(go(a[0].body), go(a[1].body));
      case Tag::Fst: return pg::fst(go(a[0].body));
      case Tag::Snd: return pg::snd(go(a[0].body));
      case Tag::Fix: return pg::fix(under(a[0]));
      case Tag::Star: return pg::star();
      case Tag::Tt: return pg::tt();
      case Tag::Ff: return pg::ff();
      case Tag::If: return pg::ite(go(a[0].body), go(a[1].body), go(a[2].body));
      case Tag::Zero: return pg::ze();
      case Tag::Succ: return pg::su(go(a[0].body));
      case Tag::IfZe: return pg::ifze(go(a[0].body), go(a[1].body), under(a[2]));
      case Tag::Sup: return pg::sup(go(a[0].body), under(a[1]));
      case Tag::WRec: return pg::wrec(go(a[0].body), under(a[1]));
      case Tag::Pi: return pg::pi(go(a[0].body), under(a[1]));
      case Tag::Sg: return pg::sg(go(a[0].body), under(a[1]));
      case Tag::W: return pg::wty(go(a[0].body), under(a[1]));
      case Tag::Eq: return pg::eq(go(a[0].body), go(a[1].body), go(a[2].body));
      case Tag::All: {
        Program b = bind_clock(a[0], k);
        return pg::kprod(k, b);
      }
      case Tag::Isect: {
        Program b = bind_clock(a[0], k);
        return pg::isect(k, b);
      }
      case Tag::Later: return pg::later(clock(t->name, t->pos), go(a[0].body));
      case Tag::Void: return pg::void_();
      case Tag::Unit: return pg::unit();
      case Tag::Bool: return pg::bool_();
      case Tag::Nat: return pg::nat();
      case Tag::Univ: return pg::univ(t->level);
    }
    throw Error("elaboration: unknown term former");
  }
};

inline void check_env(const std::vector<std::string>& delta, const ClockEnv& rho) {
  for (const auto& k : delta) {
    bool found = false;
    for (const auto& [n, c] : rho) found = found || n == k;
    if (!found) throw Error("elaboration: clock environment does not cover " + k);
  }
}

}  // namespace detail

inline Program elab_term(const std::vector<std::string>& delta, const std::vector<std::string>& psi,
                         const FormalTerm& m, const ClockEnv& rho, NameSupply& supply) {
  auto r = scope_check(m, delta, psi);
  if (!r.ok) throw Error("elaboration: " + r.message(), r.pos);
  detail::check_env(delta, rho);
  ClockEnv env;
  for (const auto& k : delta)
    for (const auto& [n, c] : rho)
      if (n == k) env.emplace_back(n, c);
  detail::Elab e{psi, env, supply};
  return e.go(m);
}

inline Program elab_term(const std::vector<std::string>& delta, const std::vector<std::string>& psi,
                         const FormalTerm& m, const ClockEnv& rho) {
  NameSupply s = NameSupply::after(rho);
  return elab_term(delta, psi, m, rho, s);
}

inline Telescope elab_ctx(const std::vector<std::string>& delta, const std::vector<Hyp>& gamma, const ClockEnv& rho) {
  NameSupply s = NameSupply::after(rho);
  Telescope out;
  std::vector<std::string> psi;
  for (const auto& h : gamma) {
    out.push_back(elab_term(delta, psi, h.type, rho, s));
    psi.push_back(h.name);
  }
  return out;
}

// Elaborates with each clock of delta sent to a distinct name 1..|delta|.
inline ClockEnv generic_env(const std::vector<std::string>& delta) {
  ClockEnv rho;
  std::uint32_t i = 1;
  for (const auto& k : delta) rho.emplace_back(k, ClockName{i++});
  return rho;
}

}  // namespace gctt
