#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "gctt/program.hpp"
#include "gctt/util.hpp"

namespace gctt {

inline constexpr std::size_t kDefaultFuel = 100000;
// Evaluation stops as a resource failure once the context gets this deep.
inline constexpr std::size_t kMaxContextDepth = 4096;

// Default fuel, overridable through GCTT_FUEL.
inline std::size_t default_fuel() {
  if (const char* e = std::getenv("GCTT_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && end != e) return static_cast<std::size_t>(v);
  }
  return kDefaultFuel;
}

inline bool is_value(const Program& m) {
  switch (m->tag) {
    case PTag::Lam: case PTag::KLam: case PTag::Pair: case PTag::Star: case PTag::Tt: case PTag::Ff:
    case PTag::Ze: case PTag::Su: case PTag::Sup: case PTag::Pi: case PTag::Sg: case PTag::W: case PTag::Eq:
    case PTag::Later: case PTag::Isect: case PTag::KProd: case PTag::Void: case PTag::Unit: case PTag::Bool:
    case PTag::Nat: case PTag::Univ:
      return true;
    default:
      return false;
  }
}

inline bool is_type_value(const Program& m) {
  switch (m->tag) {
    case PTag::Pi: case PTag::Sg: case PTag::W: case PTag::Eq: case PTag::Later: case PTag::Isect:
    case PTag::KProd: case PTag::Void: case PTag::Unit: case PTag::Bool: case PTag::Nat: case PTag::Univ:
      return true;
    default:
      return false;
  }
}

struct StepResult {
  enum class Kind { Stepped, Value, Stuck };
  Kind kind;
  Program next;        // Stepped
  std::string reason;  // Stuck
  std::size_t depth = 0;  // eliminators between the root and the redex
};

namespace detail {

inline StepResult stepped(Program p) { return {StepResult::Kind::Stepped, std::move(p), {}}; }
inline StepResult stuck(std::string why) { return {StepResult::Kind::Stuck, nullptr, std::move(why)}; }

// Eliminator whose principal argument is kids[0], or null for other tags.
inline const char* eliminator(PTag t) {
  switch (t) {
    case PTag::App: return "application";
    case PTag::CApp: return "clock application";
    case PTag::Fst: return "fst";
    case PTag::Snd: return "snd";
    case PTag::If: return "if";
    case PTag::IfZe: return "ifze";
    case PTag::WRec: return "wrec";
    default: return nullptr;
  }
}

// Contraction at the root, if a rule's left-hand side matches m exactly.
inline Program contract(const Program& m, std::size_t n) {
  const auto& k = m->kids;
  switch (m->tag) {
    case PTag::App:
      if (k[0]->tag == PTag::Lam) return subst_top(n, k[0]->kids[0], k[1]);
      return nullptr;
    case PTag::CApp:
      if (k[0]->tag == PTag::KLam) return instantiate_clock(k[0]->kids[0], k[0]->clock, m->clock);
      return nullptr;
    case PTag::Fix: return subst_top(n, k[0], m);
    case PTag::Fst: return k[0]->tag == PTag::Pair ? k[0]->kids[0] : nullptr;
    case PTag::Snd: return k[0]->tag == PTag::Pair ? k[0]->kids[1] : nullptr;
    case PTag::If:
      if (k[0]->tag == PTag::Tt) return k[1];
      if (k[0]->tag == PTag::Ff) return k[2];
      return nullptr;
    case PTag::IfZe:
      if (k[0]->tag == PTag::Ze) return k[1];
      if (k[0]->tag == PTag::Su) return subst_top(n, k[2], k[0]->kids[0]);
      return nullptr;
    case PTag::WRec:
      if (k[0]->tag == PTag::Sup) {
        const Program& a = k[0]->kids[0];
        const Program& f = k[0]->kids[1];  // scope n+1
        const Program& o = k[1];           // scope n+3
        Substitution shift = Substitution::identity(n);
        for (std::size_t j = 1; j <= 3; ++j) shift.terms.push_back(pg::var(n + j));
        shift.target = n + 4;
        Program rec = pg::lam(pg::wrec(f, subst(shift, o)));
        return subst(Substitution::extend(n, {a, pg::lam(f), rec}), o);
      }
      return nullptr;
    default:
      return nullptr;
  }
}

// Head step of a program in scope n. Variables are neutral and do not step.
// The evaluation context is walked iteratively, so deep spines are fine.
inline StepResult step_at(const Program& m, std::size_t n) {
  if (is_value(m)) return {StepResult::Kind::Value, nullptr, {}};
  std::vector<const Program*> spine;
  const Program* cur = &m;
  Program next;
  while (true) {
    const Program& c = *cur;
    if (is_value(c)) {
      StepResult r = stuck(std::string(eliminator((*spine.back())->tag)) + " of " + tag_name(c->tag));
      r.depth = spine.size();
      return r;
    }
    if (c->tag == PTag::Var) {
      StepResult r = stuck("neutral variable v" + std::to_string(c->index));
      r.depth = spine.size();
      return r;
    }
    if ((next = contract(c, n))) break;
    if (!eliminator(c->tag)) return stuck("no rule applies");
    spine.push_back(cur);
    cur = &c->kids[0];
  }
  std::size_t depth = spine.size();
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    auto kids = (**it)->kids;
    kids[0] = std::move(next);
    next = with_kids(**it, std::move(kids));
  }
  StepResult r = stepped(std::move(next));
  r.depth = depth;
  return r;
}

}  // namespace detail

inline StepResult step(const Program& m) {
  if (!closed(m)) throw Error("step: program is not closed");
  return detail::step_at(m, 0);
}

struct EvalOutcome {
  enum class Kind { Val, OutOfFuel, Stuck };
  Kind kind;
  Program term;  // the value, the residual, or the stuck term
  std::size_t steps = 0;
  std::string reason;
};

inline const char* to_string(EvalOutcome::Kind k) {
  switch (k) {
    case EvalOutcome::Kind::Val: return "value";
    case EvalOutcome::Kind::OutOfFuel: return "out-of-fuel";
    case EvalOutcome::Kind::Stuck: return "stuck";
  }
  return "?";
}

using TraceFn = std::function<void(const Program&)>;

// Head-reduces a program in scope n; open programs stop at neutral terms.
inline EvalOutcome eval_open(const Program& m, std::size_t n, std::size_t fuel, const TraceFn& trace = {}) {
  Program cur = m;
  std::size_t steps = 0;
  while (true) {
    if (trace) trace(cur);
    StepResult r = detail::step_at(cur, n);
    if (r.kind == StepResult::Kind::Value) return {EvalOutcome::Kind::Val, cur, steps, {}};
    if (r.kind == StepResult::Kind::Stuck) return {EvalOutcome::Kind::Stuck, cur, steps, r.reason};
    if (steps == fuel) return {EvalOutcome::Kind::OutOfFuel, cur, steps, {}};
    if (r.depth >= kMaxContextDepth)
      return {EvalOutcome::Kind::OutOfFuel, cur, steps,
              "evaluation context deeper than " + std::to_string(kMaxContextDepth)};
    cur = r.next;
    ++steps;
  }
}

inline EvalOutcome eval(const Program& m, std::size_t fuel, const TraceFn& trace = {}) {
  if (!closed(m)) throw Error("eval: program is not closed");
  return eval_open(m, 0, fuel, trace);
}

// Stuck programs have no value, so two stuck programs are Kleene equivalent.
inline Tri closed_sq_bounded(const Program& m0, const Program& m1, std::size_t fuel) {
  EvalOutcome a = eval(m0, fuel);
  EvalOutcome b = eval(m1, fuel);
  using K = EvalOutcome::Kind;
  if (a.kind == K::OutOfFuel || b.kind == K::OutOfFuel) return Tri::Unknown;
  if (a.kind == K::Stuck && b.kind == K::Stuck) return Tri::Yes;
  if (a.kind == K::Stuck || b.kind == K::Stuck) return Tri::No;
  return tri_of(alpha_equal(a.term, b.term));
}

// Structural hash that ignores clock names, so alpha-equal programs collide.
inline std::size_t alpha_hash(const Program& m) {
  std::size_t h = static_cast<std::size_t>(m->tag) * 1000003u + m->index * 7919u;
  for (const auto& k : m->kids) h = h * 31u + alpha_hash(k);
  return h;
}

// Symbolic head reduction of both sides until they meet up to alpha.
// Head steps commute with closing substitutions, so Yes is sound.
inline Tri open_conv(std::size_t n, const Program& m0, const Program& m1, std::size_t fuel) {
  if (!well_scoped(m0, n) || !well_scoped(m1, n)) throw Error("open_conv: program not in scope");
  std::vector<std::pair<std::size_t, Program>> seq[2];
  Program cur[2] = {m0, m1};
  bool live[2] = {true, true};
  auto meets = [&](int side, const Program& p, std::size_t h) {
    for (const auto& [h2, q] : seq[1 - side])
      if (h2 == h && alpha_equal(p, q)) return true;
    return false;
  };
  for (int s = 0; s < 2; ++s) {
    std::size_t h = alpha_hash(cur[s]);
    if (meets(s, cur[s], h)) return Tri::Yes;
    seq[s].emplace_back(h, cur[s]);
  }
  std::size_t used = 0;
  while ((live[0] || live[1]) && used < fuel) {
    for (int s = 0; s < 2; ++s) {
      if (!live[s] || used >= fuel) continue;
      StepResult r = detail::step_at(cur[s], n);
      if (r.kind != StepResult::Kind::Stepped || r.depth >= kMaxContextDepth) {
        live[s] = false;
        continue;
      }
      ++used;
      cur[s] = r.next;
      std::size_t h = alpha_hash(cur[s]);
      if (meets(s, cur[s], h)) return Tri::Yes;
      seq[s].emplace_back(h, cur[s]);
    }
  }
  return Tri::Unknown;
}

// One head step relates a and b, in either direction.
inline bool single_step_related(std::size_t n, const Program& a, const Program& b) {
  if (alpha_equal(a, b)) return true;
  StepResult ra = detail::step_at(a, n);
  if (ra.kind == StepResult::Kind::Stepped && alpha_equal(ra.next, b)) return true;
  StepResult rb = detail::step_at(b, n);
  return rb.kind == StepResult::Kind::Stepped && alpha_equal(rb.next, a);
}

}  // namespace gctt
