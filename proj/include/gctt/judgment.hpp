#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gctt/syntax.hpp"

namespace gctt {

struct Hyp {
  std::string name;
  FormalTerm type;  // null in an open-conversion context
};

struct Judgment {
  enum class Kind { EqMem, OpenConv };
  Kind kind = Kind::EqMem;
  std::vector<std::string> delta;
  std::vector<Hyp> gamma;
  FormalTerm lhs, rhs, type;  // type is null for OpenConv
  std::string source;         // verbatim text when parsed from a script

  std::vector<std::string> psi() const {
    std::vector<std::string> out;
    for (const auto& h : gamma) out.push_back(h.name);
    return out;
  }
  bool has_clock(const std::string& k) const { return std::find(delta.begin(), delta.end(), k) != delta.end(); }
  bool has_var(const std::string& x) const {
    for (const auto& h : gamma)
      if (h.name == x) return true;
    return false;
  }
};

inline Judgment eq_mem(std::vector<std::string> delta, std::vector<Hyp> gamma, FormalTerm m0, FormalTerm m1,
                       FormalTerm a) {
  return Judgment{Judgment::Kind::EqMem, std::move(delta), std::move(gamma), std::move(m0), std::move(m1),
                  std::move(a), {}};
}

inline Judgment open_conv_j(std::vector<std::string> delta, std::vector<std::string> psi, FormalTerm m0,
                            FormalTerm m1) {
  std::vector<Hyp> g;
  for (auto& x : psi) g.push_back({std::move(x), nullptr});
  return Judgment{Judgment::Kind::OpenConv, std::move(delta), std::move(g), std::move(m0), std::move(m1), nullptr,
                  {}};
}

inline std::string print(const Judgment& j) {
  std::string s;
  if (j.delta.empty()) s += ".";
  for (std::size_t i = 0; i < j.delta.size(); ++i) s += (i ? ", " : "") + j.delta[i];
  s += " ; ";
  if (j.gamma.empty()) s += ".";
  for (std::size_t i = 0; i < j.gamma.size(); ++i) {
    s += (i ? ", " : "") + j.gamma[i].name;
    if (j.gamma[i].type) s += " : " + print(j.gamma[i].type);
  }
  s += " |- ";
  if (j.kind == Judgment::Kind::OpenConv) return s + print(j.lhs) + " ~ " + print(j.rhs);
  if (alpha_equal(j.lhs, j.rhs)) return s + print(j.lhs) + " : " + print(j.type);
  return s + print(j.lhs) + " = " + print(j.rhs) + " : " + print(j.type);
}

// Contexts compare names exactly; terms and types up to alpha.
inline bool judgment_equal(const Judgment& a, const Judgment& b) {
  if (a.kind != b.kind || a.delta != b.delta || a.gamma.size() != b.gamma.size()) return false;
  for (std::size_t i = 0; i < a.gamma.size(); ++i) {
    if (a.gamma[i].name != b.gamma[i].name) return false;
    if (!a.gamma[i].type != !b.gamma[i].type) return false;
    if (a.gamma[i].type && !alpha_equal(a.gamma[i].type, b.gamma[i].type)) return false;
  }
  if (!alpha_equal(a.lhs, b.lhs) || !alpha_equal(a.rhs, b.rhs)) return false;
  if (!a.type != !b.type) return false;
  return !a.type || alpha_equal(a.type, b.type);
}

// Returns an empty string when the judgment is well formed.
inline std::string validate_judgment(const Judgment& j) {
  for (std::size_t i = 0; i < j.delta.size(); ++i)
    for (std::size_t k = i + 1; k < j.delta.size(); ++k)
      if (j.delta[i] == j.delta[k]) return "duplicate clock " + j.delta[i];
  std::vector<std::string> names;
  for (const auto& h : j.gamma) {
    if (std::find(names.begin(), names.end(), h.name) != names.end()) return "duplicate variable " + h.name;
    if (h.type) {
      auto r = scope_check(h.type, j.delta, names);
      if (!r.ok) return "in hypothesis " + h.name + ": " + r.message();
    }
    names.push_back(h.name);
  }
  for (const auto& t : {j.lhs, j.rhs, j.type}) {
    if (!t) continue;
    auto r = scope_check(t, j.delta, names);
    if (!r.ok) return r.message();
  }
  return {};
}

// ---- rule names ----

enum class RuleName {
  ConversionSymm, ConversionTrans,
  Weakening, Hypothesis, ConvMem, ConvTy, EqSymm, EqTrans, ReplaceTy, UnivFormation,
  UnitAx,
  BoolUnivEq, BoolTt, BoolFf,
  ProdUnivEq, ProdIntro,
  ArrUnivEq, ArrIntro, ArrElim,
  KArrUnivEq, KArrIntro, KArrElim,
  IsectUnivEq, IsectIntro, IsectIrrelevance, IsectPreservesSigma,
  LaterUnivEq, LaterIntro, LaterForce, LaterPreservesPi, LaterPreservesSigma, LaterInduction
};

inline constexpr std::array<std::pair<RuleName, std::string_view>, 32> kRuleNames{{
    {RuleName::ConversionSymm, "Conversion.symm"},
    {RuleName::ConversionTrans, "Conversion.trans"},
    {RuleName::Weakening, "General.weakening"},
    {RuleName::Hypothesis, "General.hypothesis"},
    {RuleName::ConvMem, "General.conv_mem"},
    {RuleName::ConvTy, "General.conv_ty"},
    {RuleName::EqSymm, "General.eq_symm"},
    {RuleName::EqTrans, "General.eq_trans"},
    {RuleName::ReplaceTy, "General.replace_ty"},
    {RuleName::UnivFormation, "General.univ_formation"},
    {RuleName::UnitAx, "Unit.ax_equality"},
    {RuleName::BoolUnivEq, "Bool.univ_eq"},
    {RuleName::BoolTt, "Bool.tt_equality"},
    {RuleName::BoolFf, "Bool.ff_equality"},
    {RuleName::ProdUnivEq, "Prod.univ_eq"},
    {RuleName::ProdIntro, "Prod.intro"},
    {RuleName::ArrUnivEq, "Arr.univ_eq"},
    {RuleName::ArrIntro, "Arr.intro"},
    {RuleName::ArrElim, "Arr.elim"},
    {RuleName::KArrUnivEq, "KArr.univ_eq"},
    {RuleName::KArrIntro, "KArr.intro"},
    {RuleName::KArrElim, "KArr.elim"},
    {RuleName::IsectUnivEq, "Isect.univ_eq"},
    {RuleName::IsectIntro, "Isect.intro"},
    {RuleName::IsectIrrelevance, "Isect.irrelevance"},
    {RuleName::IsectPreservesSigma, "Isect.preserves_sigma"},
    {RuleName::LaterUnivEq, "Later.univ_eq"},
    {RuleName::LaterIntro, "Later.intro"},
    {RuleName::LaterForce, "Later.force"},
    {RuleName::LaterPreservesPi, "Later.preserves_pi"},
    {RuleName::LaterPreservesSigma, "Later.preserves_sigma"},
    {RuleName::LaterInduction, "Later.induction"},
}};

inline std::string to_string(RuleName r) {
  for (const auto& [n, s] : kRuleNames)
    if (n == r) return std::string(s);
  return "?";
}

inline std::optional<RuleName> rule_from_string(std::string_view s) {
  for (const auto& [n, str] : kRuleNames)
    if (str == s) return n;
  return std::nullopt;
}

// ---- derivation syntax ----

// Binding values stay as source text; they are parsed in the scope of the
// node they annotate once its judgment is known.
struct Binding {
  std::string key;
  std::string text;
  Pos pos;
};

struct TermText {
  std::string text;
  Pos pos;
};

struct Derivation {
  enum class Kind { Rule, LemmaRef, Conv, Trace };
  Kind kind = Kind::Rule;
  RuleName rule{};
  std::string lemma;               // LemmaRef
  std::vector<Binding> bindings;   // Rule
  std::vector<TermText> trace;     // Trace
  std::vector<Derivation> premises;
  std::optional<Judgment> conclusion;  // set on the root; filled in for premises by the checker
  Pos pos;

  const Binding* binding(const std::string& key) const {
    for (const auto& b : bindings)
      if (b.key == key) return &b;
    return nullptr;
  }
  std::string label() const {
    switch (kind) {
      case Kind::Rule: return to_string(rule);
      case Kind::LemmaRef: return "lemma " + lemma;
      case Kind::Conv: return "conv";
      case Kind::Trace: return "trace";
    }
    return "?";
  }
};

}  // namespace gctt
