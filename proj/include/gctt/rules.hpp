#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gctt/elaborate.hpp"
#include "gctt/judgment.hpp"
#include "gctt/opsem.hpp"
#include "gctt/parser.hpp"
#include "gctt/syntax.hpp"

namespace gctt {

struct CheckEnv {
  const DefTable* defs = nullptr;
  const std::map<std::string, Judgment>* lemmas = nullptr;
  std::size_t fuel = kDefaultFuel;
};

struct CheckNode {
  std::string label;
  Judgment conclusion;
  enum class Status { Ok, Failed, Skipped } status = Status::Skipped;
  std::string error;
  std::vector<CheckNode> children;
};

struct CheckResult {
  bool ok = true;
  std::string path;
  std::string explanation;
  CheckNode tree;
};

namespace detail {

struct RuleFailure {
  std::string msg;
};

[[noreturn]] inline void rule_fail(const std::string& msg) { throw RuleFailure{msg}; }

inline const Node& as(const FormalTerm& t, Tag tag, const char* what) {
  if (t->tag != tag) rule_fail(std::string("expected ") + what + " but found " + print(t));
  return *t;
}

inline std::vector<std::string> names_plus(std::vector<std::string> v, const std::string& x) {
  v.push_back(x);
  return v;
}

class Checker {
 public:
  explicit Checker(const CheckEnv& env) : env_(env) {}

  CheckResult run(const Derivation& d) {
    if (!d.conclusion) throw Error("check: derivation has no conclusion");
    CheckResult res;
    std::string bad = validate_judgment(*d.conclusion);
    if (!bad.empty()) {
      res.ok = false;
      res.path = d.label();
      res.explanation = "ill-formed conclusion: " + bad;
      res.tree = CheckNode{d.label(), *d.conclusion, CheckNode::Status::Failed, res.explanation, {}};
      return res;
    }
    res.tree = node(d, *d.conclusion, d.label());
    res.ok = failed_path_.empty();
    res.path = failed_path_;
    res.explanation = failed_msg_;
    return res;
  }

 private:
  const CheckEnv& env_;
  std::string failed_path_, failed_msg_;

  CheckNode node(const Derivation& d, const Judgment& j, const std::string& path) {
    CheckNode n{d.label(), j, CheckNode::Status::Ok, {}, {}};
    std::vector<Judgment> premises;
    try {
      premises = apply(d, j);
      if (premises.size() != d.premises.size())
        rule_fail("expected " + std::to_string(premises.size()) + " premise derivation(s), got " +
                  std::to_string(d.premises.size()));
    } catch (const RuleFailure& f) {
      return fail(n, path, f.msg);
    } catch (const Error& e) {
      return fail(n, path, e.what());
    }
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (!failed_path_.empty()) {
        n.children.push_back(CheckNode{d.premises[i].label(), premises[i], CheckNode::Status::Skipped, {}, {}});
        continue;
      }
      std::string sub = path + "/" + std::to_string(i + 1) + ":" + d.premises[i].label();
      n.children.push_back(node(d.premises[i], premises[i], sub));
      if (n.children.back().status == CheckNode::Status::Failed) n.status = CheckNode::Status::Failed;
    }
    return n;
  }

  CheckNode fail(CheckNode n, const std::string& path, const std::string& msg) {
    n.status = CheckNode::Status::Failed;
    n.error = msg;
    if (failed_path_.empty()) {
      failed_path_ = path;
      failed_msg_ = msg;
    }
    return n;
  }

  // ---- binding helpers ----

  const Binding* opt(const Derivation& d, const char* key) const { return d.binding(key); }

  const Binding& req(const Derivation& d, const char* key) const {
    const Binding* b = d.binding(key);
    if (!b) rule_fail(std::string("missing binding ") + key);
    return *b;
  }

  FormalTerm term(const Binding& b, const std::vector<std::string>& clocks, const std::vector<std::string>& vars) {
    try {
      return parse_term(b.text, ParseEnv{env_.defs, vars, clocks}, b.pos);
    } catch (const ParseError& e) {
      rule_fail("binding " + b.key + ": " + e.what());
    }
  }

  static unsigned index(const Binding& b) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(b.text, &used);
      if (used == b.text.size()) return static_cast<unsigned>(v);
    } catch (...) {
    }
    rule_fail("binding " + b.key + " must be a universe index");
  }

  static std::string ident(const Binding& b) {
    std::string s = b.text;
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') || keywords().count(s))
      rule_fail("binding " + b.key + " must be a name");
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) rule_fail("binding " + b.key + " must be a name");
    return s;
  }

  unsigned univ_of(const FormalTerm& t) const { return as(t, Tag::Univ, "a universe").level; }

  // Picks the name for a term binder entering Γ.
  std::string var_binder(const Derivation& d, const Judgment& j, const std::string& given) const {
    if (const Binding* b = d.binding("x")) return ident(*b);
    if (!j.has_var(given) && given != "_") return given;
    if (given == "_") {
      std::set<std::string> avoid;
      for (const auto& h : j.gamma) avoid.insert(h.name);
      return fresh_name("x", avoid);
    }
    rule_fail("binder " + given + " clashes with the context; supply x=<fresh name>");
  }

  std::string clock_binder(const Derivation& d, const Judgment& j, const std::string& given) const {
    std::string k = given;
    if (const Binding* b = d.binding("k")) k = ident(*b);
    if (j.has_clock(k)) rule_fail("side condition " + k + " not in Delta fails; supply k=<fresh clock>");
    return k;
  }

  static Judgment eqm(const Judgment& j, FormalTerm l, FormalTerm r, FormalTerm t) {
    return eq_mem(j.delta, j.gamma, std::move(l), std::move(r), std::move(t));
  }
  static Judgment with_hyp(Judgment j, const std::string& x, FormalTerm a) {
    j.gamma.push_back({x, std::move(a)});
    return j;
  }
  static Judgment with_clock(Judgment j, const std::string& k) {
    j.delta.push_back(k);
    return j;
  }
  static Judgment conv(const Judgment& j, FormalTerm a, FormalTerm b) {
    return open_conv_j(j.delta, j.psi(), std::move(a), std::move(b));
  }

  static void expect_alpha(const FormalTerm& a, const FormalTerm& b, const std::string& what) {
    if (!alpha_equal(a, b)) rule_fail(what + ": " + print(a) + " does not match " + print(b));
  }

  static void need_eqmem(const Judgment& j) {
    if (j.kind != Judgment::Kind::EqMem) rule_fail("rule concludes an equality judgment, not an open conversion");
  }
  static void need_conv(const Judgment& j) {
    if (j.kind != Judgment::Kind::OpenConv) rule_fail("rule concludes an open conversion judgment");
  }

  // ---- rules ----

  std::vector<Judgment> apply(const Derivation& d, const Judgment& j) {
    switch (d.kind) {
      case Derivation::Kind::LemmaRef: {
        if (!env_.lemmas) rule_fail("unknown lemma " + d.lemma);
        auto it = env_.lemmas->find(d.lemma);
        if (it == env_.lemmas->end()) rule_fail("unknown lemma " + d.lemma);
        if (!judgment_equal(it->second, j))
          rule_fail("lemma " + d.lemma + " proves " + print(it->second) + ", expected " + print(j));
        return {};
      }
      case Derivation::Kind::Conv: {
        need_conv(j);
        ClockEnv rho = generic_env(j.delta);
        NameSupply s = NameSupply::after(rho);
        auto psi = j.psi();
        Program a = elab_term(j.delta, psi, j.lhs, rho, s);
        Program b = elab_term(j.delta, psi, j.rhs, rho, s);
        if (open_conv(psi.size(), a, b, env_.fuel) != Tri::Yes)
          rule_fail("conversion Unknown: " + print(j.lhs) + " ~ " + print(j.rhs));
        return {};
      }
      case Derivation::Kind::Trace: {
        need_conv(j);
        ClockEnv rho = generic_env(j.delta);
        NameSupply s = NameSupply::after(rho);
        auto psi = j.psi();
        std::vector<FormalTerm> chain{j.lhs};
        for (const auto& t : d.trace) {
          try {
            chain.push_back(parse_term(t.text, ParseEnv{env_.defs, psi, j.delta}, t.pos));
          } catch (const ParseError& e) {
            rule_fail(std::string("trace: ") + e.what());
          }
        }
        chain.push_back(j.rhs);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          Program a = elab_term(j.delta, psi, chain[i], rho, s);
          Program b = elab_term(j.delta, psi, chain[i + 1], rho, s);
          if (!single_step_related(psi.size(), a, b))
            rule_fail("trace step " + std::to_string(i + 1) + " is not a single reduction: " + print(chain[i]) +
                      " vs " + print(chain[i + 1]));
        }
        return {};
      }
      case Derivation::Kind::Rule: break;
    }
    const auto& L = j.lhs;
    const auto& R = j.rhs;
    const auto& T = j.type;
    auto dl = j.delta;
    auto ps = j.psi();
    switch (d.rule) {
      case RuleName::ConversionSymm:
        need_conv(j);
        return {open_conv_j(dl, ps, R, L)};
      case RuleName::ConversionTrans: {
        need_conv(j);
        FormalTerm m1 = term(req(d, "M1"), dl, ps);
        return {open_conv_j(dl, ps, L, m1), open_conv_j(dl, ps, m1, R)};
      }
      case RuleName::Weakening: {
        need_eqmem(j);
        if (j.gamma.empty()) rule_fail("weakening needs a non-empty context");
        Judgment p = j;
        std::string x = p.gamma.back().name;
        p.gamma.pop_back();
        auto pnames = p.psi();
        for (const auto& t : {L, R, T}) {
          auto r = scope_check(t, dl, pnames);
          if (!r.ok) rule_fail("weakened variable " + x + " occurs in the conclusion (" + r.message() + ")");
        }
        return {p};
      }
      case RuleName::Hypothesis: {
        need_eqmem(j);
        if (j.gamma.empty()) rule_fail("hypothesis needs a non-empty context");
        const Hyp& h = j.gamma.back();
        if (L->tag != Tag::Var || L->name != h.name || R->tag != Tag::Var || R->name != h.name)
          rule_fail("hypothesis concludes " + h.name + " = " + h.name + ", the last variable of the context");
        expect_alpha(T, h.type, "hypothesis type");
        return {};
      }
      case RuleName::ConvMem: {
        need_eqmem(j);
        FormalTerm m01 = term(req(d, "M01"), dl, ps);
        return {eqm(j, m01, R, T), conv(j, L, m01)};
      }
      case RuleName::ConvTy: {
        need_eqmem(j);
        FormalTerm a1 = term(req(d, "A1"), dl, ps);
        return {eqm(j, L, R, a1), conv(j, T, a1)};
      }
      case RuleName::EqSymm:
        need_eqmem(j);
        return {eqm(j, R, L, T)};
      case RuleName::EqTrans: {
        need_eqmem(j);
        FormalTerm m1 = term(req(d, "M1"), dl, ps);
        return {eqm(j, m1, R, T), eqm(j, L, m1, T)};
      }
      case RuleName::ReplaceTy: {
        need_eqmem(j);
        FormalTerm a0 = term(req(d, "A0"), dl, ps);
        unsigned i = index(req(d, "i"));
        return {eqm(j, a0, T, ft::univ(i)), eqm(j, L, R, a0)};
      }
      case RuleName::UnivFormation: {
        need_eqmem(j);
        unsigned i = as(L, Tag::Univ, "a universe").level;
        if (R->tag != Tag::Univ || R->level != i) rule_fail("expected U<" + std::to_string(i) + "> on both sides");
        unsigned jj = univ_of(T);
        if (!(i < jj))
          rule_fail("side condition i < j fails (i=" + std::to_string(i) + ", j=" + std::to_string(jj) + ")");
        return {};
      }
      case RuleName::UnitAx:
        need_eqmem(j);
        as(L, Tag::Star, "star");
        as(R, Tag::Star, "star");
        as(T, Tag::Unit, "unit");
        return {};
      case RuleName::BoolUnivEq:
        need_eqmem(j);
        as(L, Tag::Bool, "bool");
        as(R, Tag::Bool, "bool");
        univ_of(T);
        return {};
      case RuleName::BoolTt:
      case RuleName::BoolFf: {
        need_eqmem(j);
        Tag want = d.rule == RuleName::BoolTt ? Tag::Tt : Tag::Ff;
        const char* name = d.rule == RuleName::BoolTt ? "tt" : "ff";
        as(L, want, name);
        as(R, want, name);
        as(T, Tag::Bool, "bool");
        return {};
      }
      case RuleName::ProdUnivEq:
      case RuleName::ArrUnivEq: {
        need_eqmem(j);
        Tag tag = d.rule == RuleName::ProdUnivEq ? Tag::Sg : Tag::Pi;
        const char* what = tag == Tag::Sg ? "a sigma type" : "a pi type";
        const Node& l = as(L, tag, what);
        const Node& r = as(R, tag, what);
        unsigned i = univ_of(T);
        std::string x = var_binder(d, j, l.args[1].vars[0]);
        Scope b0 = rename_var_binder(l.args[1], 0, x);
        Scope b1 = rename_var_binder(r.args[1], 0, x);
        return {eqm(j, l.args[0].body, r.args[0].body, ft::univ(i)),
                eq_mem(dl, with_hyp(j, x, l.args[0].body).gamma, b0.body, b1.body, ft::univ(i))};
      }
      case RuleName::ProdIntro: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Pair, "a pair");
        const Node& r = as(R, Tag::Pair, "a pair");
        const Node& t = as(T, Tag::Sg, "a sigma type");
        unsigned i = index(req(d, "i"));
        std::string x = var_binder(d, j, t.args[1].vars[0]);
        FormalTerm a = t.args[0].body;
        FormalTerm b = rename_var_binder(t.args[1], 0, x).body;
        auto g = with_hyp(j, x, a).gamma;
        return {eqm(j, a, a, ft::univ(i)), eq_mem(dl, g, b, b, ft::univ(i)),
                eqm(j, l.args[0].body, r.args[0].body, a),
                eqm(j, l.args[1].body, r.args[1].body, subst_formal(b, x, l.args[0].body))};
      }
      case RuleName::ArrIntro: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Lam, "a lambda");
        const Node& r = as(R, Tag::Lam, "a lambda");
        const Node& t = as(T, Tag::Pi, "a pi type");
        unsigned i = index(req(d, "i"));
        std::string x = var_binder(d, j, l.args[0].vars[0]);
        FormalTerm a = t.args[0].body;
        FormalTerm b = rename_var_binder(t.args[1], 0, x).body;
        FormalTerm m0 = rename_var_binder(l.args[0], 0, x).body;
        FormalTerm m1 = rename_var_binder(r.args[0], 0, x).body;
        auto g = with_hyp(j, x, a).gamma;
        return {eqm(j, a, a, ft::univ(i)), eq_mem(dl, g, b, b, ft::univ(i)), eq_mem(dl, g, m0, m1, b)};
      }
      case RuleName::ArrElim: {
        need_eqmem(j);
        const Node& l = as(L, Tag::App, "an application");
        const Node& r = as(R, Tag::App, "an application");
        unsigned i = index(req(d, "i"));
        FormalTerm a = term(req(d, "A"), dl, ps);
        std::string x = "x";
        if (const Binding* bx = opt(d, "x")) x = ident(*bx);
        if (j.has_var(x)) rule_fail("binder " + x + " clashes with the context; supply x=<fresh name>");
        FormalTerm b = term(req(d, "B"), dl, names_plus(ps, x));
        FormalTerm n0 = l.args[1].body;
        expect_alpha(T, subst_formal(b, x, n0), "conclusion type [N0/x]B");
        auto g = with_hyp(j, x, a).gamma;
        return {eqm(j, a, a, ft::univ(i)), eq_mem(dl, g, b, b, ft::univ(i)),
                eqm(j, l.args[0].body, r.args[0].body, ft::pi(x, a, b)), eqm(j, n0, r.args[1].body, a)};
      }
      case RuleName::KArrUnivEq:
      case RuleName::IsectUnivEq: {
        need_eqmem(j);
        Tag tag = d.rule == RuleName::KArrUnivEq ? Tag::All : Tag::Isect;
        const char* what = tag == Tag::All ? "a clock product" : "a clock intersection";
        const Node& l = as(L, tag, what);
        const Node& r = as(R, tag, what);
        unsigned i = univ_of(T);
        std::string k = clock_binder(d, j, l.args[0].clock);
        Judgment p = with_clock(j, k);
        return {eqm(p, rename_clock_binder(l.args[0], k).body, rename_clock_binder(r.args[0], k).body,
                    ft::univ(i))};
      }
      case RuleName::KArrIntro: {
        need_eqmem(j);
        const Node& l = as(L, Tag::KLam, "a clock abstraction");
        const Node& r = as(R, Tag::KLam, "a clock abstraction");
        const Node& t = as(T, Tag::All, "a clock product");
        unsigned i = index(req(d, "i"));
        std::string k = clock_binder(d, j, l.args[0].clock);
        Judgment p = with_clock(j, k);
        FormalTerm a = rename_clock_binder(t.args[0], k).body;
        return {eqm(p, a, a, ft::univ(i)),
                eqm(p, rename_clock_binder(l.args[0], k).body, rename_clock_binder(r.args[0], k).body, a)};
      }
      case RuleName::KArrElim: {
        need_eqmem(j);
        const Node& l = as(L, Tag::CApp, "a clock application");
        const Node& r = as(R, Tag::CApp, "a clock application");
        if (l.name != r.name) rule_fail("both sides must apply the same clock");
        const std::string& kp = l.name;
        if (!j.has_clock(kp)) rule_fail("clock " + kp + " is not in Delta");
        unsigned i = index(req(d, "i"));
        std::string k = "k";
        if (const Binding* bk = opt(d, "k")) k = ident(*bk);
        if (j.has_clock(k)) rule_fail("side condition " + k + " not in Delta fails; supply k=<fresh clock>");
        FormalTerm a = term(req(d, "A"), names_plus(dl, k), ps);
        expect_alpha(T, subst_clock_formal(a, k, kp), "conclusion type [k'/k]A");
        Judgment p = with_clock(j, k);
        return {eqm(p, a, a, ft::univ(i)), eqm(j, l.args[0].body, r.args[0].body, ft::all(k, a))};
      }
      case RuleName::IsectIntro: {
        need_eqmem(j);
        const Node& t = as(T, Tag::Isect, "a clock intersection");
        unsigned i = index(req(d, "i"));
        std::string k = clock_binder(d, j, t.args[0].clock);
        Judgment p = with_clock(j, k);
        FormalTerm a = rename_clock_binder(t.args[0], k).body;
        return {eqm(p, L, R, a), eqm(p, a, a, ft::univ(i))};
      }
      case RuleName::IsectIrrelevance: {
        need_eqmem(j);
        const Node& r = as(R, Tag::Isect, "a clock intersection");
        unsigned i = univ_of(T);
        std::string k = r.args[0].clock;
        if (const Binding* bk = opt(d, "k")) k = ident(*bk);
        if (j.has_clock(k)) rule_fail("side condition " + k + " not in Delta fails: " + k + " is in Delta");
        expect_alpha(rename_clock_binder(r.args[0], k).body, L, "intersected type");
        return {eqm(j, L, L, ft::univ(i))};
      }
      case RuleName::IsectPreservesSigma: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Isect, "a clock intersection");
        unsigned i = univ_of(T);
        std::string k = clock_binder(d, j, l.args[0].clock);
        FormalTerm body = rename_clock_binder(l.args[0], k).body;
        const Node& s = as(body, Tag::Sg, "a sigma type under the intersection");
        std::string x = s.args[1].vars[0];
        FormalTerm a0 = s.args[0].body;
        FormalTerm b0 = s.args[1].body;
        if (free_vars(b0).count(x)) rule_fail("the family must not depend on " + x);
        expect_alpha(R, ft::sg(x, ft::isect(k, a0), ft::isect(k, b0)), "right-hand side");
        Judgment p = with_clock(j, k);
        FormalTerm a1 = a0, b1 = b0;
        if (const Binding* b = opt(d, "A1")) a1 = term(*b, p.delta, ps);
        if (const Binding* b = opt(d, "B1")) b1 = term(*b, p.delta, ps);
        return {eqm(p, a0, a1, ft::univ(i)), eqm(p, b0, b1, ft::univ(i))};
      }
      case RuleName::LaterUnivEq: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Later, "a later type");
        const Node& r = as(R, Tag::Later, "a later type");
        if (l.name != r.name) rule_fail("both sides must use the same clock");
        if (!j.has_clock(l.name)) rule_fail("clock " + l.name + " is not in Delta");
        unsigned i = univ_of(T);
        return {eqm(j, l.args[0].body, r.args[0].body, ft::later(l.name, ft::univ(i)))};
      }
      case RuleName::LaterIntro: {
        need_eqmem(j);
        const Node& t = as(T, Tag::Later, "a later type");
        if (!j.has_clock(t.name)) rule_fail("clock " + t.name + " is not in Delta");
        unsigned i = index(req(d, "i"));
        FormalTerm a = t.args[0].body;
        return {eqm(j, L, R, a), eqm(j, a, a, ft::univ(i))};
      }
      case RuleName::LaterForce: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Isect, "a clock intersection");
        const Node& r = as(R, Tag::Isect, "a clock intersection");
        unsigned i = univ_of(T);
        const std::string& k = l.args[0].clock;
        const Node& lat = as(l.args[0].body, Tag::Later, "a later type under the intersection");
        if (lat.name != k) rule_fail("the later modality must use the intersected clock " + k);
        FormalTerm a1 = rename_clock_binder(r.args[0], k).body;
        return {eqm(j, ft::isect(k, lat.args[0].body), ft::isect(k, a1), ft::univ(i))};
      }
      case RuleName::LaterPreservesPi:
      case RuleName::LaterPreservesSigma: {
        need_eqmem(j);
        Tag tag = d.rule == RuleName::LaterPreservesPi ? Tag::Pi : Tag::Sg;
        const char* what = tag == Tag::Pi ? "a pi type" : "a sigma type";
        const Node& l = as(L, Tag::Later, "a later type");
        const std::string& k = l.name;
        if (!j.has_clock(k)) rule_fail("clock " + k + " is not in Delta");
        unsigned i = univ_of(T);
        const Node& inner = as(l.args[0].body, tag, what);
        const Node& r = as(R, tag, what);
        std::string x = var_binder(d, j, inner.args[1].vars[0]);
        const Node& ra = as(r.args[0].body, Tag::Later, "a later domain");
        FormalTerm rb = rename_var_binder(r.args[1], 0, x).body;
        const Node& rbl = as(rb, Tag::Later, "a later family");
        if (ra.name != k || rbl.name != k) rule_fail("all later modalities must use clock " + k);
        FormalTerm a0 = inner.args[0].body;
        FormalTerm b0 = rename_var_binder(inner.args[1], 0, x).body;
        return {eqm(j, a0, ra.args[0].body, ft::univ(i)),
                eq_mem(dl, with_hyp(j, x, a0).gamma, b0, rbl.args[0].body, ft::later(k, ft::univ(i)))};
      }
      case RuleName::LaterInduction: {
        need_eqmem(j);
        const Node& l = as(L, Tag::Fix, "a fixed point");
        const Node& r = as(R, Tag::Fix, "a fixed point");
        std::string k;
        if (const Binding* bk = opt(d, "k")) {
          k = ident(*bk);
        } else if (dl.size() == 1) {
          k = dl[0];
        } else {
          rule_fail("supply k=<clock> to choose the guarding clock");
        }
        if (!j.has_clock(k)) rule_fail("clock " + k + " is not in Delta");
        std::string x = var_binder(d, j, l.args[0].vars[0]);
        FormalTerm m0 = rename_var_binder(l.args[0], 0, x).body;
        FormalTerm m1 = rename_var_binder(r.args[0], 0, x).body;
        return {eq_mem(dl, with_hyp(j, x, ft::later(k, T)).gamma, m0, m1, T)};
      }
    }
    rule_fail("unknown rule");
  }
};

}  // namespace detail

inline CheckResult check(const Derivation& d, const CheckEnv& env) {
  detail::Checker c(env);
  return c.run(d);
}

// Every judgment in a checked tree, root first.
inline void collect_judgments(const CheckNode& n, std::vector<Judgment>& out) {
  out.push_back(n.conclusion);
  for (const auto& c : n.children) collect_judgments(c, out);
}

}  // namespace gctt
