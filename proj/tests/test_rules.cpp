#include <gtest/gtest.h>

#include "gctt/rules.hpp"
#include "gctt/script.hpp"

using namespace gctt;

namespace {

// Checks a script and returns the report of its last lemma.
LemmaReport last(const std::string& src) {
  ScriptReport r = check_script(parse_script(src));
  return r.lemmas.back();
}

::testing::AssertionResult Accepted(const std::string& src) {
  LemmaReport l = last(src);
  if (l.result.ok) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "rejected at " << l.result.path << ": " << l.result.explanation;
}

// Rejected, with a failure path that ends at `where`.
::testing::AssertionResult RejectedAt(const std::string& src, const std::string& where) {
  LemmaReport l = last(src);
  if (l.result.ok) return ::testing::AssertionFailure() << "accepted";
  const std::string& p = l.result.path;
  if (p.size() < where.size() || p.compare(p.size() - where.size(), where.size(), where) != 0)
    return ::testing::AssertionFailure() << "failed at " << p << " (" << l.result.explanation << ")";
  return ::testing::AssertionSuccess();
}

}  // namespace

TEST(Rules, BooleanAndUnitAxioms) {
  EXPECT_TRUE(Accepted("lemma a : . ; . |- tt : bool by { Bool.tt_equality };"));
  EXPECT_TRUE(Accepted("lemma a : . ; . |- star : unit by { Unit.ax_equality };"));
  EXPECT_TRUE(Accepted("lemma a : k ; . |- bool : U<3> by { Bool.univ_eq };"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- tt = ff : bool by { Bool.tt_equality };", "Bool.tt_equality"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- tt : unit by { Bool.tt_equality };", "Bool.tt_equality"));
}

TEST(Rules, Universes) {
  EXPECT_TRUE(Accepted("lemma a : . ; . |- U<0> : U<1> by { General.univ_formation };"));
  EXPECT_TRUE(Accepted("lemma a : . ; . |- U<1> : U<4> by { General.univ_formation };"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- U<2> : U<1> by { General.univ_formation };", "General.univ_formation"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- U<0> = U<1> : U<2> by { General.univ_formation };",
                         "General.univ_formation"));
}

TEST(Rules, ContextRules) {
  EXPECT_TRUE(Accepted("lemma a : . ; x : bool |- x : bool by { General.hypothesis };"));
  EXPECT_TRUE(Accepted(
      "lemma a : . ; x : bool, y : unit |- x : bool by { General.weakening { General.hypothesis } };"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; x : bool, y : unit |- x : bool by { General.hypothesis };",
                         "General.hypothesis"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; x : bool |- x : bool by { General.weakening { General.hypothesis } };",
                         "General.weakening"));
}

TEST(Rules, Functions) {
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- lam x. x : bool -> bool by {\n"
      "  Arr.intro(i = 0) { Bool.univ_eq Bool.univ_eq General.hypothesis }\n"
      "};"));
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- (lam x. x) tt : bool by {\n"
      "  Arr.elim(A = bool, B = bool, i = 0) {\n"
      "    Bool.univ_eq Bool.univ_eq\n"
      "    Arr.intro(i = 0) { Bool.univ_eq Bool.univ_eq General.hypothesis }\n"
      "    Bool.tt_equality\n"
      "  }\n"
      "};"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : . ; . |- (lam x. x) tt : bool by {\n"
      "  Arr.elim(A = bool, B = unit, i = 0) { Bool.univ_eq Unit.ax_equality Bool.tt_equality Bool.tt_equality }\n"
      "};",
      "Arr.elim"));
}

TEST(Rules, PairsCheckTheSubstitutedFamily) {
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- <tt, ff> : bool * bool by {\n"
      "  Prod.intro(i = 0) { Bool.univ_eq Bool.univ_eq Bool.tt_equality Bool.ff_equality }\n"
      "};"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : . ; . |- <tt, ff> : bool * bool by {\n"
      "  Prod.intro(i = 0) { Bool.univ_eq Bool.univ_eq Bool.tt_equality Bool.tt_equality }\n"
      "};",
      "Prod.intro/4:Bool.tt_equality"));
}

TEST(Rules, ClockProducts) {
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- clk-lam k. tt : all k. bool by {\n"
      "  KArr.intro(i = 0) { Bool.univ_eq Bool.tt_equality }\n"
      "};"));
  EXPECT_TRUE(Accepted(
      "lemma b : j ; . |- clk-lam k. tt : all k. bool by {\n"
      "  KArr.intro(i = 0) { Bool.univ_eq Bool.tt_equality }\n"
      "};\n"
      "lemma a : j ; . |- (clk-lam k. tt) @j : bool by {\n"
      "  KArr.elim(A = bool, i = 0) { Bool.univ_eq lemma b }\n"
      "};"));
  EXPECT_TRUE(RejectedAt("lemma a : j ; . |- (clk-lam k. tt) @j : bool by { KArr.elim(A = bool, i = 0) { } };",
                         "KArr.elim"));
}

TEST(Rules, IntersectionIrrelevance) {
  EXPECT_TRUE(Accepted("lemma a : . ; . |- bool = isect k. bool : U<0> by { Isect.irrelevance { Bool.univ_eq } };"));
  EXPECT_TRUE(Accepted(
      "lemma a : j ; . |- later j bool = isect k. later j bool : U<1> by {\n"
      "  Isect.irrelevance { Later.univ_eq { Later.intro(i = 2) { Bool.univ_eq General.univ_formation } } }\n"
      "};"));
  EXPECT_TRUE(RejectedAt("lemma a : k ; . |- bool = isect k. bool : U<0> by { Isect.irrelevance { Bool.univ_eq } };",
                         "Isect.irrelevance"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : . ; . |- bool = isect k. later k bool : U<0> by { Isect.irrelevance { Bool.univ_eq } };",
      "Isect.irrelevance"));
}

TEST(Rules, LaterRules) {
  EXPECT_TRUE(Accepted(
      "lemma a : k ; . |- tt : later k bool by { Later.intro(i = 0) { Bool.tt_equality Bool.univ_eq } };"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : k ; . |- tt : later k bool by { Later.intro(i = 0) { Bool.ff_equality Bool.univ_eq } };",
      "Later.intro/1:Bool.ff_equality"));
  EXPECT_TRUE(Accepted("lemma a : k ; . |- fix x. tt : bool by { Later.induction { Bool.tt_equality } };"));
  EXPECT_TRUE(RejectedAt("lemma a : k, j ; . |- fix x. tt : bool by { Later.induction { Bool.tt_equality } };",
                         "Later.induction"));
  EXPECT_TRUE(Accepted(
      "lemma a : k, j ; . |- fix x. tt : bool by { Later.induction(k = j) { Bool.tt_equality } };"));
}

TEST(Rules, ConversionSteps) {
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- fst <tt, ff> = tt : bool by {\n"
      "  General.conv_mem(M01 = tt) { Bool.tt_equality conv }\n"
      "};"));
  EXPECT_TRUE(Accepted(
      "lemma a : . ; . |- fst <tt, ff> = tt : bool by {\n"
      "  General.conv_mem(M01 = tt) { Bool.tt_equality trace(fst <tt, ff>; tt) }\n"
      "};"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : . ; . |- fst <tt, ff> = tt : bool by {\n"
      "  General.conv_mem(M01 = tt) { Bool.tt_equality trace(fst <tt, ff>; ff) }\n"
      "};",
      "General.conv_mem/2:trace"));
  EXPECT_TRUE(RejectedAt(
      "lemma a : . ; . |- snd <tt, ff> = tt : bool by {\n"
      "  General.conv_mem(M01 = tt) { Bool.tt_equality conv }\n"
      "};",
      "General.conv_mem/2:conv"));
}

TEST(Rules, StructuralFailures) {
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- tt : bool by { Bool.tt_equality { Bool.tt_equality } };",
                         "Bool.tt_equality"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- tt : bool by { General.conv_mem { Bool.tt_equality conv } };",
                         "General.conv_mem"));
  EXPECT_TRUE(RejectedAt("lemma a : . ; . |- tt : bool by { lemma missing };", "lemma missing"));
}

TEST(Rules, TreeRecordsEveryPremise) {
  LemmaReport l = last(
      "lemma a : . ; . |- <tt, ff> : bool * bool by {\n"
      "  Prod.intro(i = 0) { Bool.univ_eq Bool.univ_eq Bool.tt_equality Bool.ff_equality }\n"
      "};");
  ASSERT_TRUE(l.result.ok);
  std::vector<Judgment> js;
  collect_judgments(l.result.tree, js);
  ASSERT_EQ(js.size(), 5u);
  EXPECT_EQ(print(js[3]), ". ; . |- tt : bool");
  EXPECT_EQ(print(js[4]), ". ; . |- ff : bool");
}
