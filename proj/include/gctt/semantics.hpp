#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gctt/opsem.hpp"
#include "gctt/program.hpp"
#include "gctt/util.hpp"

namespace gctt {

// Clock name -> time left.
using World = std::map<ClockName, unsigned>;

inline std::string to_string(const World& w) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, t] : w) {
    s += (first ? "" : ", ") + to_string(k) + "=" + std::to_string(t);
    first = false;
  }
  return s + "}";
}

inline World tick(const World& w, ClockName k) {
  auto it = w.find(k);
  if (it == w.end()) throw Error("tick: clock " + to_string(k) + " not in world");
  if (it->second == 0) throw Error("tick: clock " + to_string(k) + " already at time 0");
  World out = w;
  --out[k];
  return out;
}

struct OracleBudget {
  unsigned unfoldDepth = 40;
  unsigned enumDepth = 4;
  std::size_t fuel = kDefaultFuel;
  unsigned freshClockTimes = 3;
};

struct Enumeration {
  std::vector<Program> candidates;
  bool complete = true;
};

namespace detail {

inline constexpr std::size_t kMaxCandidates = 64;

struct TypeCheck {
  enum class Status { Type, NotAType, Exhausted };
  Status status;
  Program value;
  std::string reason;
  bool ok() const { return status == Status::Type; }
};

inline const char* clause_name(PTag t) {
  switch (t) {
    case PTag::Void: return "CloVoid";
    case PTag::Unit: return "CloUnit";
    case PTag::Bool: return "CloBool";
    case PTag::Nat: return "CloNat";
    case PTag::Sg: return "CloProd";
    case PTag::Pi: return "CloFun";
    case PTag::W: return "CloW";
    case PTag::Eq: return "CloEq";
    case PTag::Later: return "CloLtr";
    case PTag::Isect: return "CloIsect";
    case PTag::KProd: return "CloKFun";
    case PTag::Univ: return "Spine";
    default: return "?";
  }
}

class Oracle {
 public:
  explicit Oracle(OracleBudget b) : b_(b) {}

  // Evaluates A and checks that it denotes a type at this world and level.
  TypeCheck check_type(const World& w, const Program& a, unsigned level, unsigned u) const {
    using S = TypeCheck::Status;
    if (u == 0) return {S::Exhausted, nullptr, "unfold budget exhausted"};
    EvalOutcome e = eval(a, b_.fuel);
    if (e.kind == EvalOutcome::Kind::OutOfFuel) return {S::Exhausted, nullptr, "fuel exhausted evaluating type"};
    if (e.kind == EvalOutcome::Kind::Stuck) return {S::NotAType, nullptr, "type is stuck: " + e.reason};
    const Program& v = e.term;
    if (!is_type_value(v)) return {S::NotAType, nullptr, std::string("value ") + tag_name(v->tag) + " is not a type"};
    const auto& k = v->kids;
    auto sub = [&](const TypeCheck& c) -> std::optional<TypeCheck> {
      if (c.ok()) return std::nullopt;
      return TypeCheck{c.status, nullptr, c.reason};
    };
    switch (v->tag) {
      case PTag::Void: case PTag::Unit: case PTag::Bool: case PTag::Nat:
        return {S::Type, v, {}};
      case PTag::Univ:
        if (v->index < level) return {S::Type, v, {}};
        return {S::NotAType, nullptr,
                "U<" + std::to_string(v->index) + "> is not a type at level " + std::to_string(level)};
      case PTag::Pi: case PTag::Sg: case PTag::W: {
        TypeCheck dom = check_type(w, k[0], level, u - 1);
        if (auto r = sub(dom)) return *r;
        if (uses_level(k[1], 0)) {
          Enumeration en = enumerate(w, dom.value, level, u - 1);
          for (const auto& c : en.candidates) {
            if (test(w, dom.value, level, u - 1, c, c) != Tri::Yes) continue;
            TypeCheck fam = check_type(w, subst_top(0, k[1], c), level, u - 1);
            if (auto r = sub(fam)) return *r;
          }
        } else {
          TypeCheck fam = check_type(w, subst_top(0, k[1], pg::star()), level, u - 1);
          if (auto r = sub(fam)) return *r;
        }
        return {S::Type, v, {}};
      }
      case PTag::Eq: {
        TypeCheck car = check_type(w, k[0], level, u - 1);
        if (auto r = sub(car)) return *r;
        Tri e0 = test(w, car.value, level, u - 1, k[1], k[1]);
        Tri e1 = test(w, car.value, level, u - 1, k[2], k[2]);
        Tri both = tri_and(e0, e1);
        if (both == Tri::No) return {S::NotAType, nullptr, "equality endpoint is not a member of the carrier"};
        if (both == Tri::Unknown) return {S::Exhausted, nullptr, "could not decide equality endpoints"};
        return {S::Type, v, {}};
      }
      case PTag::Later: {
        auto it = w.find(v->clock);
        if (it == w.end()) return {S::NotAType, nullptr, "clock " + to_string(v->clock) + " not in world"};
        if (it->second == 0) return {S::Type, v, {}};
        TypeCheck inner = check_type(tick(w, v->clock), k[0], level, u - 1);
        if (auto r = sub(inner)) return *r;
        return {S::Type, v, {}};
      }
      case PTag::Isect: case PTag::KProd: {
        for (const auto& [w2, c] : instances(w, v)) {
          TypeCheck inst = check_type(w2, instantiate_clock(k[0], v->clock, c), level, u - 1);
          if (auto r = sub(inst)) return *r;
        }
        return {S::Type, v, {}};
      }
      default:
        return {S::NotAType, nullptr, "not a type"};
    }
  }

  // Clocks quantified by isect/kprod: every world clock, plus a fresh clock at
  // each time 0..T.
  std::vector<std::pair<World, ClockName>> instances(const World& w, const Program& v) const {
    std::vector<std::pair<World, ClockName>> out;
    for (const auto& [c, t] : w) out.emplace_back(w, c);
    ClockName f = fresh_for(w, v);
    for (unsigned t = 0; t <= b_.freshClockTimes; ++t) {
      World w2 = w;
      w2[f] = t;
      out.emplace_back(std::move(w2), f);
    }
    return out;
  }

  ClockName fresh_for(const World& w, const Program& v) const {
    std::set<ClockName> avoid = all_clocks(v);
    for (const auto& [c, t] : w) avoid.insert(c);
    return fresh_clock(avoid);
  }

  // Membership in the relation of an already-checked type value.
  Tri test(const World& w, const Program& a, unsigned level, unsigned u, const Program& m0,
           const Program& m1) const {
    if (u == 0) return Tri::Unknown;
    const auto& k = a->kids;
    switch (a->tag) {
      case PTag::Void: return Tri::No;
      case PTag::Unit: return val_closed(m0, m1, [](const Program& x, const Program& y) {
          return tri_of(x->tag == PTag::Star && y->tag == PTag::Star);
        });
      case PTag::Bool: return val_closed(m0, m1, [](const Program& x, const Program& y) {
          return tri_of((x->tag == PTag::Tt && y->tag == PTag::Tt) || (x->tag == PTag::Ff && y->tag == PTag::Ff));
        });
      case PTag::Nat: return val_closed(m0, m1, [&](const Program& x, const Program& y) {
          if (x->tag == PTag::Ze && y->tag == PTag::Ze) return Tri::Yes;
          if (x->tag == PTag::Su && y->tag == PTag::Su) return test(w, a, level, u - 1, x->kids[0], y->kids[0]);
          return Tri::No;
        });
      case PTag::Sg: {
        Tri t1 = test_any(w, k[0], level, u - 1, pg::fst(m0), pg::fst(m1));
        if (t1 == Tri::No) return Tri::No;
        TypeCheck fam = check_type(w, subst_top(0, k[1], pg::fst(m0)), level, u - 1);
        if (fam.status == TypeCheck::Status::NotAType) return t1 == Tri::Yes ? Tri::No : Tri::Unknown;
        if (fam.status == TypeCheck::Status::Exhausted) return Tri::Unknown;
        return tri_and(t1, test(w, fam.value, level, u - 1, pg::snd(m0), pg::snd(m1)));
      }
      case PTag::Pi: {
        Enumeration en = enum_any(w, k[0], level, u - 1);
        Tri acc = en.complete ? Tri::Yes : Tri::Unknown;
        for (const auto& n0 : en.candidates) {
          for (const auto& n1 : en.candidates) {
            if (test_any(w, k[0], level, u - 1, n0, n1) != Tri::Yes) continue;
            TypeCheck fam = check_type(w, subst_top(0, k[1], n0), level, u - 1);
            if (!fam.ok()) {
              acc = tri_and(acc, fam.status == TypeCheck::Status::NotAType ? Tri::No : Tri::Unknown);
            } else {
              acc = tri_and(acc, test(w, fam.value, level, u - 1, pg::app(m0, n0), pg::app(m1, n1)));
            }
            if (acc == Tri::No) return Tri::No;
          }
        }
        return acc;
      }
      case PTag::W: return val_closed(m0, m1, [&](const Program& x, const Program& y) {
          if (x->tag != PTag::Sup || y->tag != PTag::Sup) return Tri::No;
          Tri t = test_any(w, k[0], level, u - 1, x->kids[0], y->kids[0]);
          if (t == Tri::No) return Tri::No;
          TypeCheck fam = check_type(w, subst_top(0, k[1], x->kids[0]), level, u - 1);
          if (!fam.ok()) return fam.status == TypeCheck::Status::NotAType && t == Tri::Yes ? Tri::No : Tri::Unknown;
          Enumeration en = enumerate(w, fam.value, level, u - 1);
          Tri acc = tri_and(t, en.complete ? Tri::Yes : Tri::Unknown);
          for (const auto& o0 : en.candidates)
            for (const auto& o1 : en.candidates) {
              if (test(w, fam.value, level, u - 1, o0, o1) != Tri::Yes) continue;
              acc = tri_and(acc, test(w, a, level, u - 1, subst_top(0, x->kids[1], o0), subst_top(0, y->kids[1], o1)));
              if (acc == Tri::No) return Tri::No;
            }
          return acc;
        });
      case PTag::Eq: return val_closed(m0, m1, [&](const Program& x, const Program& y) {
          if (x->tag != PTag::Star || y->tag != PTag::Star) return Tri::No;
          return test_any(w, k[0], level, u - 1, k[1], k[2]);
        });
      case PTag::Later: {
        auto it = w.find(a->clock);
        if (it == w.end()) return Tri::No;
        if (it->second == 0) return Tri::Yes;
        World w2 = tick(w, a->clock);
        TypeCheck inner = check_type(w2, k[0], level, u - 1);
        if (!inner.ok()) return inner.status == TypeCheck::Status::NotAType ? Tri::No : Tri::Unknown;
        return test(w2, inner.value, level, u - 1, m0, m1);
      }
      case PTag::Isect: case PTag::KProd: {
        Tri acc = Tri::Yes;
        for (const auto& [w2, c] : instances(w, a)) {
          TypeCheck inst = check_type(w2, instantiate_clock(k[0], a->clock, c), level, u - 1);
          if (!inst.ok()) {
            acc = tri_and(acc, inst.status == TypeCheck::Status::NotAType ? Tri::No : Tri::Unknown);
          } else if (a->tag == PTag::Isect) {
            acc = tri_and(acc, test(w2, inst.value, level, u - 1, m0, m1));
          } else {
            acc = tri_and(acc, test(w2, inst.value, level, u - 1, pg::capp(m0, c), pg::capp(m1, c)));
          }
          if (acc == Tri::No) return Tri::No;
        }
        return acc;
      }
      case PTag::Univ:
        return sim_type(w, m0, m1, static_cast<unsigned>(a->index), u - 1);
      default:
        return Tri::No;
    }
  }

  // As test/enumerate, for a component that has not been evaluated yet.
  Tri test_any(const World& w, const Program& a, unsigned level, unsigned u, const Program& m0,
               const Program& m1) const {
    TypeCheck c = check_type(w, a, level, u);
    if (!c.ok()) return c.status == TypeCheck::Status::NotAType ? Tri::No : Tri::Unknown;
    return test(w, c.value, level, u, m0, m1);
  }
  Enumeration enum_any(const World& w, const Program& a, unsigned level, unsigned u) const {
    TypeCheck c = check_type(w, a, level, u);
    if (!c.ok()) return {{}, false};
    return enumerate(w, c.value, level, u);
  }

  // Canonical representatives of the classes of a type's relation.
  Enumeration enumerate(const World& w, const Program& a, unsigned level, unsigned u) const {
    Enumeration out;
    if (u == 0) return {{}, false};
    const auto& k = a->kids;
    auto add = [&](Program p) {
      if (out.candidates.size() >= kMaxCandidates) {
        out.complete = false;
        return;
      }
      for (const auto& q : out.candidates)
        if (alpha_equal(p, q)) return;
      out.candidates.push_back(std::move(p));
    };
    switch (a->tag) {
      case PTag::Void: return out;
      case PTag::Unit: add(pg::star()); return out;
      case PTag::Bool: add(pg::tt()); add(pg::ff()); return out;
      case PTag::Nat:
        for (unsigned i = 0; i <= b_.enumDepth; ++i) add(pg::num(i));
        out.complete = false;
        return out;
      case PTag::Sg: {
        Enumeration dom = enum_any(w, k[0], level, u - 1);
        out.complete = dom.complete;
        for (const auto& x : dom.candidates) {
          TypeCheck fam = check_type(w, subst_top(0, k[1], x), level, u - 1);
          if (!fam.ok()) {
            out.complete = false;
            continue;
          }
          Enumeration cod = enumerate(w, fam.value, level, u - 1);
          out.complete = out.complete && cod.complete;
          for (const auto& y : cod.candidates) add(pg::pair(x, y));
        }
        return out;
      }
      case PTag::Eq: {
        Tri t = test_any(w, k[0], level, u - 1, k[1], k[2]);
        if (t == Tri::Yes) add(pg::star());
        out.complete = t != Tri::Unknown;
        return out;
      }
      case PTag::Later: {
        auto it = w.find(a->clock);
        if (it == w.end()) return out;
        if (it->second == 0) {
          add(pg::star());
          out.complete = false;
          return out;
        }
        World w2 = tick(w, a->clock);
        TypeCheck inner = check_type(w2, k[0], level, u - 1);
        if (!inner.ok()) return {{}, false};
        return enumerate(w2, inner.value, level, u - 1);
      }
      case PTag::Isect: case PTag::KProd: {
        ClockName c = fresh_for(w, a);
        unsigned horizon = b_.freshClockTimes;
        for (const auto& [n, t] : w) horizon = std::max(horizon, t);
        World w2 = w;
        w2[c] = horizon + 1;
        TypeCheck inst = check_type(w2, instantiate_clock(k[0], a->clock, c), level, u - 1);
        if (!inst.ok()) return {{}, false};
        Enumeration en = enumerate(w2, inst.value, level, u - 1);
        bool uniform = !free_clocks(k[0]).count(a->clock);
        out.complete = en.complete && uniform;
        for (const auto& x : en.candidates) {
          Program cand = a->tag == PTag::Isect ? x : pg::klam(c, x);
          if (free_clocks(cand).count(c)) {
            out.complete = false;
            continue;
          }
          Tri t = test(w, a, level, u - 1, cand, cand);
          if (t == Tri::Yes) add(cand);
          else if (t == Tri::Unknown) out.complete = false;
        }
        return out;
      }
      case PTag::Univ:
        add(pg::void_());
        add(pg::unit());
        add(pg::bool_());
        add(pg::nat());
        for (std::size_t j = 0; j < a->index; ++j) add(pg::univ(j));
        out.complete = false;
        return out;
      default:
        return {{}, false};
    }
  }

  // Equality of type relations (membership in a universe).
  Tri sim_type(const World& w, const Program& a0, const Program& a1, unsigned level, unsigned u) const {
    TypeCheck t0 = check_type(w, a0, level, u);
    TypeCheck t1 = check_type(w, a1, level, u);
    if (t0.status == TypeCheck::Status::NotAType || t1.status == TypeCheck::Status::NotAType) return Tri::No;
    if (!t0.ok() || !t1.ok()) return Tri::Unknown;
    return rel_equal(w, t0.value, t1.value, level, u);
  }

  Tri rel_equal(const World& w, const Program& v0, const Program& v1, unsigned level, unsigned u) const {
    if (u == 0) return Tri::Unknown;
    if (alpha_equal(v0, v1)) return Tri::Yes;
    Tri s = structural(w, v0, v1, level, u);
    if (s != Tri::Unknown) return s;
    return extensional(w, v0, v1, level, u);
  }

 private:
  template <class F>
  Tri val_closed(const Program& m0, const Program& m1, F on_values) const {
    EvalOutcome a = eval(m0, b_.fuel);
    if (a.kind == EvalOutcome::Kind::Stuck) return Tri::No;
    EvalOutcome b = eval(m1, b_.fuel);
    if (b.kind == EvalOutcome::Kind::Stuck) return Tri::No;
    if (a.kind == EvalOutcome::Kind::OutOfFuel || b.kind == EvalOutcome::Kind::OutOfFuel) return Tri::Unknown;
    return on_values(a.term, b.term);
  }

  // Yes when both relations are built the same way from equal parts; No only
  // for universes of different index. Unknown defers to sampling.
  Tri structural(const World& w, const Program& v0, const Program& v1, unsigned level, unsigned u) const {
    if (v0->tag != v1->tag) return Tri::Unknown;
    const auto& k0 = v0->kids;
    const auto& k1 = v1->kids;
    auto typed_equal = [&](const World& wx, const Program& a, const Program& b) {
      return sim_type(wx, a, b, level, u - 1);
    };
    switch (v0->tag) {
      case PTag::Univ: return tri_of(v0->index == v1->index);
      case PTag::Pi: case PTag::Sg: case PTag::W: {
        if (typed_equal(w, k0[0], k1[0]) != Tri::Yes) return Tri::Unknown;
        if (!uses_level(k0[1], 0) && !uses_level(k1[1], 0))
          return typed_equal(w, subst_top(0, k0[1], pg::star()), subst_top(0, k1[1], pg::star())) == Tri::Yes
                     ? Tri::Yes
                     : Tri::Unknown;
        Enumeration en = enum_any(w, k0[0], level, u - 1);
        if (!en.complete) return Tri::Unknown;
        for (const auto& c : en.candidates)
          if (typed_equal(w, subst_top(0, k0[1], c), subst_top(0, k1[1], c)) != Tri::Yes) return Tri::Unknown;
        return Tri::Yes;
      }
      case PTag::Eq: {
        if (typed_equal(w, k0[0], k1[0]) != Tri::Yes) return Tri::Unknown;
        TypeCheck car = check_type(w, k0[0], level, u - 1);
        if (!car.ok()) return Tri::Unknown;
        Tri e0 = test(w, car.value, level, u - 1, k0[1], k0[2]);
        Tri e1 = test(w, car.value, level, u - 1, k1[1], k1[2]);
        if (e0 == Tri::Unknown || e1 == Tri::Unknown) return Tri::Unknown;
        return tri_of(e0 == e1);
      }
      case PTag::Later: {
        auto i0 = w.find(v0->clock);
        auto i1 = w.find(v1->clock);
        if (i0 == w.end() || i1 == w.end()) return Tri::Unknown;
        if (i0->second == 0 && i1->second == 0) return Tri::Yes;
        if (v0->clock != v1->clock) return Tri::Unknown;
        return typed_equal(tick(w, v0->clock), k0[0], k1[0]) == Tri::Yes ? Tri::Yes : Tri::Unknown;
      }
      case PTag::Isect: case PTag::KProd: {
        std::set<ClockName> avoid = all_clocks(v0);
        auto a1 = all_clocks(v1);
        avoid.insert(a1.begin(), a1.end());
        for (const auto& [c, t] : w) avoid.insert(c);
        ClockName f = fresh_clock(avoid);
        std::vector<std::pair<World, ClockName>> inst;
        for (const auto& [c, t] : w) inst.emplace_back(w, c);
        for (unsigned t = 0; t <= b_.freshClockTimes; ++t) {
          World w2 = w;
          w2[f] = t;
          inst.emplace_back(std::move(w2), f);
        }
        for (const auto& [w2, c] : inst)
          if (typed_equal(w2, instantiate_clock(k0[0], v0->clock, c), instantiate_clock(k1[0], v1->clock, c)) !=
              Tri::Yes)
            return Tri::Unknown;
        return Tri::Yes;
      }
      default:
        return Tri::Unknown;
    }
  }

  Tri extensional(const World& w, const Program& v0, const Program& v1, unsigned level, unsigned u) const {
    Enumeration e0 = enumerate(w, v0, level, u - 1);
    Enumeration e1 = enumerate(w, v1, level, u - 1);
    std::vector<Program> cands = e0.candidates;
    for (const auto& c : e1.candidates) {
      bool dup = false;
      for (const auto& d : cands) dup = dup || alpha_equal(c, d);
      if (!dup) cands.push_back(c);
    }
    bool unknown = false;
    bool off_diagonal = cands.size() <= 16;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = 0; j < cands.size(); ++j) {
        if (i != j && !off_diagonal) continue;
        Tri r0 = test(w, v0, level, u - 1, cands[i], cands[j]);
        Tri r1 = test(w, v1, level, u - 1, cands[i], cands[j]);
        if (r0 == Tri::Unknown || r1 == Tri::Unknown) {
          unknown = true;
          continue;
        }
        if (r0 != r1) return Tri::No;
      }
    }
    if (e0.complete && e1.complete && !unknown && off_diagonal) return Tri::Yes;
    return Tri::Unknown;
  }

  OracleBudget b_;
};

}  // namespace detail

// A membership test for one type at a fixed world and level.
class TypeRelApprox {
 public:
  TypeRelApprox(World w, Program value, unsigned level, OracleBudget b)
      : w_(std::move(w)), value_(std::move(value)), level_(level), b_(b) {}

  Tri test(const Program& m0, const Program& m1) const {
    detail::Oracle o(b_);
    return o.test(w_, value_, level_, b_.unfoldDepth, m0, m1);
  }
  Enumeration inhabitants() const {
    detail::Oracle o(b_);
    return o.enumerate(w_, value_, level_, b_.unfoldDepth);
  }
  std::string clause() const { return detail::clause_name(value_->tag); }
  const Program& value() const { return value_; }
  const World& world() const { return w_; }
  unsigned level() const { return level_; }

 private:
  World w_;
  Program value_;
  unsigned level_;
  OracleBudget b_;
};

struct InterpResult {
  enum class Kind { Rel, NotAType, Exhausted };
  Kind kind;
  std::optional<TypeRelApprox> rel;
  std::string reason;
};

inline InterpResult interp_type(const World& w, const Program& a, unsigned level, const OracleBudget& b = {}) {
  if (w.empty()) throw Error("interp_type: world must be non-empty");
  if (!closed(a)) throw Error("interp_type: type is not closed");
  detail::Oracle o(b);
  detail::TypeCheck c = o.check_type(w, a, level, b.unfoldDepth);
  switch (c.status) {
    case detail::TypeCheck::Status::Type:
      return {InterpResult::Kind::Rel, TypeRelApprox(w, c.value, level, b), {}};
    case detail::TypeCheck::Status::NotAType: return {InterpResult::Kind::NotAType, std::nullopt, c.reason};
    case detail::TypeCheck::Status::Exhausted: return {InterpResult::Kind::Exhausted, std::nullopt, c.reason};
  }
  return {InterpResult::Kind::Exhausted, std::nullopt, "?"};
}

inline Tri member(const World& w, const Program& m0, const Program& m1, const Program& a, unsigned level,
                  const OracleBudget& b = {}, std::string* reason = nullptr) {
  InterpResult r = interp_type(w, a, level, b);
  if (r.kind == InterpResult::Kind::NotAType) {
    if (reason) *reason = "not a type: " + r.reason;
    return Tri::No;
  }
  if (r.kind == InterpResult::Kind::Exhausted) {
    if (reason) *reason = r.reason;
    return Tri::Unknown;
  }
  Tri t = r.rel->test(m0, m1);
  if (reason) *reason = r.rel->clause();
  return t;
}

inline Tri sim_type(const World& w, const Program& a0, const Program& a1, unsigned level,
                    const OracleBudget& b = {}) {
  detail::Oracle o(b);
  return o.sim_type(w, a0, a1, level, b.unfoldDepth);
}

struct CanonResult {
  enum class Kind { Tt, Ff, Fail };
  Kind kind;
  std::string reason;
};

inline const char* to_string(CanonResult::Kind k) {
  switch (k) {
    case CanonResult::Kind::Tt: return "tt";
    case CanonResult::Kind::Ff: return "ff";
    case CanonResult::Kind::Fail: return "Fail";
  }
  return "?";
}

inline CanonResult canonicity_check(const Program& m, std::size_t fuel) {
  EvalOutcome e = eval(m, fuel);
  if (e.kind == EvalOutcome::Kind::OutOfFuel) return {CanonResult::Kind::Fail, "OutOfFuel"};
  if (e.kind == EvalOutcome::Kind::Stuck) return {CanonResult::Kind::Fail, "Stuck: " + e.reason};
  if (e.term->tag == PTag::Tt) return {CanonResult::Kind::Tt, {}};
  if (e.term->tag == PTag::Ff) return {CanonResult::Kind::Ff, {}};
  return {CanonResult::Kind::Fail, std::string("value ") + tag_name(e.term->tag) + " is not a boolean"};
}

struct AuditReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the PER laws and approximation-respect on the Yes answers of any
// relation with a test(M0, M1) -> Tri member.
template <class Rel>
AuditReport per_audit(const Rel& rel, const std::vector<std::pair<Program, Program>>& sample,
                      std::size_t fuel = 1000) {
  AuditReport rep;
  std::vector<Program> elems;
  auto intern = [&](const Program& p) {
    for (const auto& q : elems)
      if (alpha_equal(p, q)) return;
    elems.push_back(p);
  };
  for (const auto& [a, b] : sample) {
    intern(a);
    intern(b);
  }
  std::size_t n = elems.size();
  std::vector<std::vector<Tri>> t(n, std::vector<Tri>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rel.test(elems[i], elems[j]);
  auto name = [&](std::size_t i) { return print(elems[i]); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] != Tri::Yes) continue;
      ++rep.checks;
      if (t[j][i] == Tri::No) rep.violations.push_back("symmetry: (" + name(i) + ", " + name(j) + ")");
      for (std::size_t k = 0; k < n; ++k) {
        if (t[j][k] != Tri::Yes) continue;
        ++rep.checks;
        if (t[i][k] == Tri::No)
          rep.violations.push_back("transitivity: (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || closed_sq_bounded(elems[i], elems[k], fuel) != Tri::Yes) continue;
        ++rep.checks;
        if (t[k][j] == Tri::No)
          rep.violations.push_back("approximation: " + name(k) + " ~ " + name(i) + " but not related to " + name(j));
      }
    }
  return rep;
}

}  // namespace gctt
