#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gctt/program.hpp"
#include "gctt/semantics.hpp"
#include "gctt/util.hpp"

namespace gctt {

struct TruncParams {
  unsigned pool = 2;       // P
  unsigned timeBound = 2;  // T

  void validate() const {
    if (pool < 2) throw Error("forcing: pool must have at least 2 clocks");
    if (timeBound < 1) throw Error("forcing: time bound must be at least 1");
  }
};

inline ClockName pool_clock(unsigned i) { return ClockName{i + 1}; }

// Every non-empty world over the pool with times <= T.
inline std::vector<World> enumerate_worlds(const TruncParams& p) {
  std::vector<World> out;
  for (unsigned mask = 1; mask < (1u << p.pool); ++mask) {
    std::vector<ClockName> dom;
    for (unsigned i = 0; i < p.pool; ++i)
      if (mask & (1u << i)) dom.push_back(pool_clock(i));
    std::vector<unsigned> t(dom.size(), 0);
    while (true) {
      World w;
      for (std::size_t i = 0; i < dom.size(); ++i) w[dom[i]] = t[i];
      out.push_back(std::move(w));
      std::size_t i = 0;
      while (i < t.size() && t[i] == p.timeBound) t[i++] = 0;
      if (i == t.size()) break;
      ++t[i];
    }
  }
  return out;
}

inline bool in_truncation(const World& w, const TruncParams& p) {
  if (w.empty()) return false;
  for (const auto& [k, t] : w)
    if (k.id < 1 || k.id > p.pool || t > p.timeBound) return false;
  return true;
}

// rho : V -> U, given contravariantly as map : dom(U) -> dom(V).
struct WorldMorphism {
  World source, target;
  std::map<ClockName, ClockName> map;
};

inline bool is_morphism(const WorldMorphism& m) {
  if (m.map.size() != m.target.size()) return false;
  for (const auto& [u, t] : m.target) {
    auto it = m.map.find(u);
    if (it == m.map.end()) return false;
    auto s = m.source.find(it->second);
    if (s == m.source.end() || s->second > t) return false;
  }
  return true;
}

// All morphisms V -> U with V in the truncation.
inline std::vector<WorldMorphism> morphisms_into(const World& u, const TruncParams& p) {
  std::vector<WorldMorphism> out;
  std::vector<std::pair<ClockName, unsigned>> tgt(u.begin(), u.end());
  for (const World& v : enumerate_worlds(p)) {
    std::vector<std::pair<ClockName, unsigned>> src(v.begin(), v.end());
    std::vector<std::size_t> pick(tgt.size(), 0);
    while (true) {
      WorldMorphism m{v, u, {}};
      bool ok = true;
      for (std::size_t i = 0; i < tgt.size() && ok; ++i) {
        ok = src[pick[i]].second <= tgt[i].second;
        m.map[tgt[i].first] = src[pick[i]].first;
      }
      if (ok) out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < pick.size() && pick[i] + 1 == src.size()) pick[i++] = 0;
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
  return out;
}

// f : W -> V followed by g : V -> U.
inline WorldMorphism compose(const WorldMorphism& g, const WorldMorphism& f) {
  if (f.target != g.source) throw Error("compose: morphisms do not meet");
  WorldMorphism out{f.source, g.target, {}};
  for (const auto& [u, v] : g.map) out.map[u] = f.map.at(v);
  return out;
}

// ---- formulas ----

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
  enum class Kind { Top, Bot, Atom, And, Or, Imp, Forall, Exists, Later };
  Kind kind;
  std::string name;   // Atom: family name; Forall/Exists: bound clock; Later: clock reference
  std::string clock;  // Atom: optional clock argument
  std::vector<Formula> kids;
};

namespace fm {

inline Formula mk(FNode::Kind k, std::string name = {}, std::vector<Formula> kids = {}, std::string clock = {}) {
  return std::make_shared<const FNode>(FNode{k, std::move(name), std::move(clock), std::move(kids)});
}
inline Formula top() { return mk(FNode::Kind::Top); }
inline Formula bot() { return mk(FNode::Kind::Bot); }
inline Formula atom(std::string p, std::string k = {}) { return mk(FNode::Kind::Atom, std::move(p), {}, std::move(k)); }
inline Formula conj(Formula a, Formula b) { return mk(FNode::Kind::And, {}, {std::move(a), std::move(b)}); }
inline Formula disj(Formula a, Formula b) { return mk(FNode::Kind::Or, {}, {std::move(a), std::move(b)}); }
inline Formula imp(Formula a, Formula b) { return mk(FNode::Kind::Imp, {}, {std::move(a), std::move(b)}); }
inline Formula iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }
inline Formula all(std::string k, Formula b) { return mk(FNode::Kind::Forall, std::move(k), {std::move(b)}); }
inline Formula ex(std::string k, Formula b) { return mk(FNode::Kind::Exists, std::move(k), {std::move(b)}); }
inline Formula later(std::string k, Formula b) { return mk(FNode::Kind::Later, std::move(k), {std::move(b)}); }

}  // namespace fm

inline std::string print(const Formula& f, int prec = 0) {
  auto paren = [&](int p, std::string s) { return p < prec ? "(" + s + ")" : s; };
  switch (f->kind) {
    case FNode::Kind::Top: return "true";
    case FNode::Kind::Bot: return "false";
    case FNode::Kind::Atom: return f->clock.empty() ? f->name : f->name + "(" + f->clock + ")";
    case FNode::Kind::And: return paren(3, print(f->kids[0], 3) + " /\\ " + print(f->kids[1], 4));
    case FNode::Kind::Or: return paren(2, print(f->kids[0], 2) + " \\/ " + print(f->kids[1], 3));
    case FNode::Kind::Imp: return paren(1, print(f->kids[0], 2) + " => " + print(f->kids[1], 1));
    case FNode::Kind::Forall: return paren(0, "all " + f->name + ". " + print(f->kids[0], 0));
    case FNode::Kind::Exists: return paren(0, "ex " + f->name + ". " + print(f->kids[0], 0));
    case FNode::Kind::Later: return paren(4, "later " + f->name + " " + print(f->kids[0], 4));
  }
  return "?";
}

inline unsigned forall_depth(const Formula& f) {
  unsigned d = 0;
  for (const auto& k : f->kids) d = std::max(d, forall_depth(k));
  return d + (f->kind == FNode::Kind::Forall ? 1 : 0);
}

inline unsigned later_depth(const Formula& f) {
  unsigned d = 0;
  for (const auto& k : f->kids) d = std::max(d, later_depth(k));
  return d + (f->kind == FNode::Kind::Later ? 1 : 0);
}

// Atom names with their arity (true when applied to a clock).
inline void atom_arities(const Formula& f, std::map<std::string, bool>& out) {
  if (f->kind == FNode::Kind::Atom) {
    bool has = !f->clock.empty();
    auto [it, fresh] = out.emplace(f->name, has);
    if (!fresh && it->second != has) throw Error("forcing: atom " + f->name + " used with and without a clock");
  }
  for (const auto& k : f->kids) atom_arities(k, out);
}

inline void free_clock_refs(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto ref = [&](const std::string& k) {
    if (!k.empty() && std::find(bound.begin(), bound.end(), k) == bound.end()) out.insert(k);
  };
  if (f->kind == FNode::Kind::Later) ref(f->name);
  if (f->kind == FNode::Kind::Atom) ref(f->clock);
  bool binds = f->kind == FNode::Kind::Forall || f->kind == FNode::Kind::Exists;
  if (binds) bound.push_back(f->name);
  for (const auto& k : f->kids) free_clock_refs(k, bound, out);
  if (binds) bound.pop_back();
}

// all k. A | ex k. A | A => B | A <=> B | A \/ B | A /\ B | later k A | true | false | p | p(k)
namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& s) : s_(s) {}

  Formula run() {
    Formula f = form();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + s_.substr(i_, 1) + "'");
    return f;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError("formula: " + m + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(const char* tok) {
    skip();
    std::size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(i_, n, tok) != 0) return false;
    if (std::isalpha(static_cast<unsigned char>(tok[0])) && i_ + n < s_.size() &&
        (std::isalnum(static_cast<unsigned char>(s_[i_ + n])) || s_[i_ + n] == '_'))
      return false;
    i_ += n;
    return true;
  }
  std::string name() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '#'))
      ++i_;
    if (b == i_) fail("expected a name");
    std::string n = s_.substr(b, i_ - b);
    static const std::set<std::string> reserved{"all", "ex", "later", "true", "false"};
    if (reserved.count(n)) fail("unexpected keyword '" + n + "'");
    return n;
  }
  Formula form() {
    if (eat("all")) {
      std::string k = name();
      if (!eat(".")) fail("expected '.'");
      return fm::all(k, form());
    }
    if (eat("ex")) {
      std::string k = name();
      if (!eat(".")) fail("expected '.'");
      return fm::ex(k, form());
    }
    Formula a = disjunction();
    if (eat("<=>")) return fm::iff(a, form());
    if (eat("=>")) return fm::imp(a, form());
    return a;
  }
  Formula disjunction() {
    Formula a = conjunction();
    while (eat("\\/")) a = fm::disj(a, conjunction());
    return a;
  }
  Formula conjunction() {
    Formula a = unary();
    while (eat("/\\")) a = fm::conj(a, unary());
    return a;
  }
  Formula unary() {
    if (eat("later")) {
      std::string k = name();
      return fm::later(k, unary());
    }
    if (eat("true")) return fm::top();
    if (eat("false")) return fm::bot();
    if (eat("(")) {
      Formula f = form();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    std::size_t save = i_;
    if (eat("all") || eat("ex")) {
      i_ = save;
      return form();
    }
    std::string p = name();
    if (eat("(")) {
      std::string k = name();
      if (!eat(")")) fail("expected ')'");
      return fm::atom(p, k);
    }
    return fm::atom(p);
  }
};

}  // namespace detail

inline Formula parse_formula(const std::string& s) { return detail::FormulaParser(s).run(); }

// ---- propositional families ----

struct PropFamily {
  std::string name;
  bool has_clock = false;
  std::function<bool(const World&, ClockName)> pred;  // the clock is ignored without has_clock
  std::string description;
};

// Truncation points: worlds, or worlds with a chosen clock.
struct FamilyPoint {
  World world;
  std::optional<ClockName> clock;
};

inline std::vector<FamilyPoint> family_points(const TruncParams& p, bool has_clock) {
  std::vector<FamilyPoint> out;
  for (const World& w : enumerate_worlds(p)) {
    if (!has_clock) {
      out.push_back({w, std::nullopt});
      continue;
    }
    for (const auto& [k, t] : w) out.push_back({w, k});
  }
  return out;
}

namespace detail {

// Is there rho : W -> U sending u to c for every pinned (u, c)?
// Times are indexed by position; pins are (position in U, position in W).
inline bool morphism_exists(const std::vector<unsigned>& w, const std::vector<unsigned>& u,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pins) {
  unsigned wmin = *std::min_element(w.begin(), w.end());
  std::vector<int> fixed(u.size(), -1);
  for (const auto& [ui, wi] : pins) {
    if (fixed[ui] >= 0 && fixed[ui] != static_cast<int>(wi)) return false;
    fixed[ui] = static_cast<int>(wi);
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    unsigned need = fixed[i] >= 0 ? w[fixed[i]] : wmin;
    if (need > u[i]) return false;
  }
  return true;
}

struct PointRep {
  std::vector<unsigned> times;
  int arg = -1;
};

inline PointRep rep_of(const FamilyPoint& q) {
  PointRep r;
  for (const auto& [k, t] : q.world) {
    if (q.clock && k == *q.clock) r.arg = static_cast<int>(r.times.size());
    r.times.push_back(t);
  }
  return r;
}

// p <= q when some morphism goes from p's world to q's, matching arguments.
inline bool point_leq(const PointRep& p, const PointRep& q) {
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  if (q.arg >= 0) pins.emplace_back(q.arg, p.arg);
  return morphism_exists(p.times, q.times, pins);
}

}  // namespace detail

// Checks monotonicity over every truncation morphism; throws if violated.
inline PropFamily make_family(std::string name, bool has_clock, std::function<bool(const World&, ClockName)> pred,
                              const TruncParams& p, std::string description = {}) {
  auto pts = family_points(p, has_clock);
  std::vector<detail::PointRep> reps;
  std::vector<bool> val;
  for (const auto& q : pts) {
    reps.push_back(detail::rep_of(q));
    val.push_back(pred(q.world, q.clock.value_or(ClockName{})));
  }
  for (std::size_t a = 0; a < pts.size(); ++a) {
    if (!val[a]) continue;
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (!val[b] && detail::point_leq(reps[b], reps[a]))
        throw Error("family " + name + " is not monotone: true at " + to_string(pts[a].world) + " but false at " +
                    to_string(pts[b].world));
  }
  return PropFamily{std::move(name), has_clock, std::move(pred), std::move(description)};
}

struct FamilySet {
  std::vector<std::vector<bool>> truth;  // one vector per family, indexed like family_points
  bool exhaustive = true;
};

inline constexpr std::size_t kFamilyLimit = 4096;
inline constexpr std::size_t kRandomFamilies = 256;

// Monotone families as down-sets of the truncation preorder, after
// collapsing equivalent points. Falls back to seeded random down-closures
// when there are more than kFamilyLimit.
inline FamilySet monotone_families(const TruncParams& p, bool has_clock, unsigned seed = 7) {
  auto pts = family_points(p, has_clock);
  std::vector<detail::PointRep> reps;
  for (const auto& q : pts) reps.push_back(detail::rep_of(q));
  std::size_t n = pts.size();
  std::vector<int> cls(n, -1);
  std::vector<std::size_t> heads;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < heads.size() && cls[a] < 0; ++c) {
      std::size_t h = heads[c];
      if (detail::point_leq(reps[a], reps[h]) && detail::point_leq(reps[h], reps[a])) cls[a] = static_cast<int>(c);
    }
    if (cls[a] < 0) {
      cls[a] = static_cast<int>(heads.size());
      heads.push_back(a);
    }
  }
  std::size_t m = heads.size();
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m));
  std::vector<std::size_t> up_count(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      below[a][b] = a != b && detail::point_leq(reps[heads[a]], reps[heads[b]]);
      if (below[a][b]) ++up_count[a];
    }
  // Tops first, so forced inclusions are known before deciding an element.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return up_count[a] < up_count[b]; });

  FamilySet out;
  std::vector<std::vector<bool>> sets;
  std::vector<bool> cur(m, false);
  bool overflow = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (overflow) return;
    if (i == m) {
      if (sets.size() >= kFamilyLimit) {
        overflow = true;
        return;
      }
      sets.push_back(cur);
      return;
    }
    std::size_t x = order[i];
    bool forced = false;
    for (std::size_t y = 0; y < m && !forced; ++y) forced = below[x][y] && cur[y];
    cur[x] = true;
    rec(i + 1);
    cur[x] = false;
    if (!forced) rec(i + 1);
  };
  rec(0);
  if (overflow) {
    out.exhaustive = false;
    sets.clear();
    std::mt19937 rng(seed);
    std::set<std::vector<bool>> seen;
    for (std::size_t tries = 0; seen.size() < kRandomFamilies && tries < 50 * kRandomFamilies; ++tries) {
      std::vector<bool> s(m, false);
      for (std::size_t a = 0; a < m; ++a)
        if (rng() % 4 == 0) {
          s[a] = true;
          for (std::size_t b = 0; b < m; ++b)
            if (below[b][a]) s[b] = true;
        }
      seen.insert(s);
    }
    sets.assign(seen.begin(), seen.end());
  }
  for (const auto& s : sets) {
    std::vector<bool> t(n);
    for (std::size_t a = 0; a < n; ++a) t[a] = s[cls[a]];
    out.truth.push_back(std::move(t));
  }
  return out;
}

inline PropFamily family_from_truth(const std::string& name, bool has_clock, const std::vector<bool>& truth,
                                    const TruncParams& p) {
  auto pts = family_points(p, has_clock);
  std::string desc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!truth[i]) continue;
    desc += (desc.empty() ? "" : " ") + to_string(pts[i].world);
    if (pts[i].clock) desc += "@" + to_string(*pts[i].clock);
  }
  if (desc.empty()) desc = "never";
  auto pred = [pts, truth](const World& w, ClockName k) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i].world == w && (!pts[i].clock || *pts[i].clock == k)) return static_cast<bool>(truth[i]);
    return false;
  };
  return PropFamily{name, has_clock, pred, desc};
}

// ---- forcing ----

using FamilyEnv = std::map<std::string, const PropFamily*>;

namespace detail {

// Evaluation happens in a window that extends the truncation: pool
// P + max(1, forall depth), horizon T + later depth + 1. Atoms take their
// least monotone extension there. Truth is invariant under renaming clocks,
// so states are memoized in a canonical form.
class Forcer {
 public:
  Forcer(const TruncParams& p, const Formula& f, const FamilyEnv& fams) : p_(p) {
    wpool_ = p.pool + std::max(1u, forall_depth(f));
    horizon_ = p.timeBound + later_depth(f) + 1;
    std::set<std::string> free;
    std::vector<std::string> bound;
    free_clock_refs(f, bound, free);
    free_names_.assign(free.begin(), free.end());
    std::vector<std::string> scope = free_names_;
    root_ = compile(f, scope, fams);
    for (std::size_t n = 1; n <= wpool_; ++n) {
      std::vector<unsigned> t(n, 0);
      gen_sorted(t, 0, 0);
    }
  }

  bool at(const World& u) {
    if (!in_truncation(u, p_)) throw Error("forcing: world " + to_string(u) + " is outside the truncation");
    std::vector<unsigned> times;
    std::vector<ClockName> names;
    for (const auto& [k, t] : u) {
      names.push_back(k);
      times.push_back(t);
    }
    std::vector<unsigned> env;
    for (const auto& n : free_names_) {
      auto it = std::find_if(names.begin(), names.end(), [&](ClockName c) { return to_string(c) == n; });
      if (it == names.end()) throw Error("forcing: clock " + n + " is not in world " + to_string(u));
      env.push_back(static_cast<unsigned>(it - names.begin()));
    }
    return eval(root_, times, env);
  }

 private:
  struct INode {
    FNode::Kind kind;
    std::size_t ref = 0;  // env position for Later and clock atoms
    std::vector<PointRep> atom_true;
    bool atom_clock = false;
    std::vector<std::size_t> kids;
    std::unordered_map<std::string, bool> memo;
  };

  TruncParams p_;
  unsigned wpool_ = 0, horizon_ = 0;
  std::vector<std::string> free_names_;
  std::vector<INode> nodes_;
  std::size_t root_ = 0;
  std::vector<std::vector<unsigned>> worlds_;  // window worlds, times sorted

  void gen_sorted(std::vector<unsigned>& t, std::size_t i, unsigned lo) {
    if (i == t.size()) {
      worlds_.push_back(t);
      return;
    }
    for (unsigned v = lo; v <= horizon_; ++v) {
      t[i] = v;
      gen_sorted(t, i + 1, v);
    }
  }

  static std::size_t lookup(const std::vector<std::string>& scope, const std::string& k) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == k) return i;
    throw Error("forcing: unbound clock " + k);
  }

  std::size_t compile(const Formula& f, std::vector<std::string>& scope, const FamilyEnv& fams) {
    INode n;
    n.kind = f->kind;
    switch (f->kind) {
      case FNode::Kind::Atom: {
        auto it = fams.find(f->name);
        if (it == fams.end() || !it->second) throw Error("forcing: no family for atom " + f->name);
        const PropFamily& fam = *it->second;
        n.atom_clock = !f->clock.empty();
        if (n.atom_clock != fam.has_clock)
          throw Error("forcing: atom " + f->name + (fam.has_clock ? " needs" : " takes no") + " clock argument");
        if (n.atom_clock) n.ref = lookup(scope, f->clock);
        for (const auto& q : family_points(p_, fam.has_clock))
          if (fam.pred(q.world, q.clock.value_or(ClockName{}))) n.atom_true.push_back(rep_of(q));
        break;
      }
      case FNode::Kind::Later: n.ref = lookup(scope, f->name); break;
      default: break;
    }
    bool binds = f->kind == FNode::Kind::Forall || f->kind == FNode::Kind::Exists;
    if (binds) scope.push_back(f->name);
    for (const auto& k : f->kids) n.kids.push_back(compile(k, scope, fams));
    if (binds) scope.pop_back();
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  // Env clocks first in order of first use, then the rest by time.
  static std::string canon(const std::vector<unsigned>& times, const std::vector<unsigned>& env) {
    std::vector<int> relabel(times.size(), -1);
    std::string key;
    int next = 0;
    std::string envpart;
    for (unsigned e : env) {
      if (relabel[e] < 0) {
        relabel[e] = next++;
        key.push_back(static_cast<char>(times[e]));
      }
      envpart.push_back(static_cast<char>(relabel[e]));
    }
    std::vector<unsigned> rest;
    for (std::size_t i = 0; i < times.size(); ++i)
      if (relabel[i] < 0) rest.push_back(times[i]);
    std::sort(rest.begin(), rest.end());
    for (unsigned t : rest) key.push_back(static_cast<char>(t));
    key.push_back('|');
    return key + envpart;
  }

  // Calls f(V, e') for every window world V and env e' reached by some
  // morphism V -> U.
  template <class F>
  bool for_each_restriction(const std::vector<unsigned>& u, const std::vector<unsigned>& env, F f) {
    std::vector<unsigned> e2(env.size(), 0);
    for (const auto& v : worlds_) {
      std::fill(e2.begin(), e2.end(), 0u);
      while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> pins;
        for (std::size_t i = 0; i < env.size(); ++i) pins.emplace_back(env[i], e2[i]);
        if (morphism_exists(v, u, pins) && !f(v, e2)) return false;
        std::size_t i = 0;
        while (i < e2.size() && e2[i] + 1 == v.size()) e2[i++] = 0;
        if (i == e2.size()) break;
        ++e2[i];
      }
    }
    return true;
  }

  bool eval(std::size_t id, const std::vector<unsigned>& times, const std::vector<unsigned>& env) {
    std::string key = canon(times, env);
    {
      auto it = nodes_[id].memo.find(key);
      if (it != nodes_[id].memo.end()) return it->second;
    }
    bool r = compute(id, times, env);
    nodes_[id].memo.emplace(std::move(key), r);
    return r;
  }

  bool compute(std::size_t id, const std::vector<unsigned>& times, const std::vector<unsigned>& env) {
    const INode& n = nodes_[id];
    switch (n.kind) {
      case FNode::Kind::Top: return true;
      case FNode::Kind::Bot: return false;
      case FNode::Kind::Atom:
        for (const auto& q : n.atom_true) {
          std::vector<std::pair<std::size_t, std::size_t>> pins;
          if (n.atom_clock) pins.emplace_back(q.arg, env[n.ref]);
          if (morphism_exists(times, q.times, pins)) return true;
        }
        return false;
      case FNode::Kind::And: return eval(n.kids[0], times, env) && eval(n.kids[1], times, env);
      case FNode::Kind::Or: return eval(n.kids[0], times, env) || eval(n.kids[1], times, env);
      case FNode::Kind::Later: {
        unsigned c = env[n.ref];
        if (times[c] == 0) return true;
        std::vector<unsigned> t2 = times;
        --t2[c];
        return eval(n.kids[0], t2, env);
      }
      case FNode::Kind::Exists:
        for (unsigned c = 0; c < times.size(); ++c) {
          std::vector<unsigned> e2 = env;
          e2.push_back(c);
          if (eval(n.kids[0], times, e2)) return true;
        }
        return false;
      case FNode::Kind::Imp: {
        std::size_t a = n.kids[0], b = n.kids[1];
        return for_each_restriction(times, env, [&](const std::vector<unsigned>& v, const std::vector<unsigned>& e) {
          return !eval(a, v, e) || eval(b, v, e);
        });
      }
      case FNode::Kind::Forall: {
        std::size_t a = n.kids[0];
        return for_each_restriction(times, env, [&](const std::vector<unsigned>& v, const std::vector<unsigned>& e) {
          for (unsigned c = 0; c < v.size(); ++c) {
            std::vector<unsigned> e2 = e;
            e2.push_back(c);
            if (!eval(a, v, e2)) return false;
          }
          return true;
        });
      }
    }
    return false;
  }
};

}  // namespace detail

inline bool forces(const World& u, const Formula& f, const TruncParams& p, const FamilyEnv& fams = {}) {
  detail::Forcer fr(p, f, fams);
  return fr.at(u);
}

// ---- theorems ----

struct Theorem {
  std::string name;
  Formula formula;
  std::map<std::string, bool> atoms;  // name -> takes a clock argument
};

inline const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> n{"local_clock", "clock_irrelevance", "delete_later", "later_unit",
                                          "later_and",   "later_implies",     "loeb",         "total_yank"};
  return n;
}

inline Theorem make_theorem(const std::string& name, const Formula& f) {
  Theorem t{name, f, {}};
  atom_arities(f, t.atoms);
  std::set<std::string> free;
  std::vector<std::string> bound;
  free_clock_refs(f, bound, free);
  if (!free.empty()) throw Error("forcing: formula has free clock " + *free.begin());
  return t;
}

inline Theorem theorem(const std::string& name) {
  using namespace fm;
  Formula phi = atom("phi"), psi = atom("psi");
  if (name == "local_clock") return make_theorem(name, ex("k", top()));
  if (name == "clock_irrelevance") return make_theorem(name, iff(phi, all("k", phi)));
  if (name == "delete_later")
    return make_theorem(name, imp(all("k", later("k", atom("phi", "k"))), all("k", atom("phi", "k"))));
  if (name == "later_unit") return make_theorem(name, all("k", imp(phi, later("k", phi))));
  if (name == "later_and")
    return make_theorem(name, all("k", iff(later("k", conj(phi, psi)), conj(later("k", phi), later("k", psi)))));
  if (name == "later_implies")
    return make_theorem(name, all("k", iff(later("k", imp(phi, psi)), imp(later("k", phi), later("k", psi)))));
  if (name == "loeb") return make_theorem(name, all("k", imp(imp(later("k", phi), phi), phi)));
  if (name == "total_yank") {
    // Y = {y0, y1} is constant, so a predicate on Y is a pair of propositions.
    Formula y0 = atom("phi_y0"), y1 = atom("phi_y1");
    return make_theorem(name, all("k", imp(later("k", disj(y0, y1)), disj(later("k", y0), later("k", y1)))));
  }
  throw Error("forcing: unknown theorem " + name);
}

struct Counterexample {
  World world;
  std::vector<std::pair<std::string, std::string>> families;  // atom name -> true points
};

struct TheoremResult {
  std::string name;
  std::string formula;
  bool passed = true;
  bool exhaustive = true;
  std::size_t worlds = 0;
  std::size_t assignments = 0;
  std::optional<Counterexample> counterexample;
};

// Evaluates at every truncation world for every assignment of monotone
// families to the atoms.
inline TheoremResult check_theorem(const Theorem& th, const TruncParams& p) {
  p.validate();
  TheoremResult res{th.name, print(th.formula), true, true, 0, 0, std::nullopt};
  std::vector<std::string> names;
  std::vector<FamilySet> choices;
  std::map<bool, FamilySet> cache;
  for (const auto& [a, has] : th.atoms) {
    names.push_back(a);
    if (!cache.count(has)) cache[has] = monotone_families(p, has);
    choices.push_back(cache[has]);
    res.exhaustive = res.exhaustive && cache[has].exhaustive;
  }
  auto worlds = enumerate_worlds(p);
  res.worlds = worlds.size();
  std::vector<std::size_t> pick(names.size(), 0);
  while (true) {
    std::vector<PropFamily> fams;
    for (std::size_t i = 0; i < names.size(); ++i)
      fams.push_back(family_from_truth(names[i], th.atoms.at(names[i]), choices[i].truth[pick[i]], p));
    FamilyEnv env;
    for (const auto& f : fams) env[f.name] = &f;
    detail::Forcer fr(p, th.formula, env);
    ++res.assignments;
    for (const auto& w : worlds) {
      if (fr.at(w)) continue;
      res.passed = false;
      Counterexample c{w, {}};
      for (const auto& f : fams) c.families.emplace_back(f.name, f.description);
      res.counterexample = std::move(c);
      return res;
    }
    std::size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == choices[i].truth.size()) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  return res;
}

inline TheoremResult check_theorem(const std::string& name, const TruncParams& p) {
  return check_theorem(theorem(name), p);
}

}  // namespace gctt
