#include <gtest/gtest.h>

#include "gctt/opsem.hpp"
#include "support.hpp"

using namespace gctt;
using gctt::testing::closed_program;

namespace {

std::string value_of(const std::string& src, std::size_t fuel = 10000) {
  EvalOutcome e = eval(closed_program(src), fuel);
  EXPECT_EQ(e.kind, EvalOutcome::Kind::Val) << src << ": " << e.reason;
  return print(e.term);
}

Program open_program(const std::string& src, std::vector<std::string> vars, std::vector<std::string> clocks = {}) {
  ClockEnv rho = generic_env(clocks);
  return elab_term(clocks, vars, parse_term(src, ParseEnv{nullptr, vars, clocks}), rho);
}

}  // namespace

TEST(Opsem, EvaluatesToValues) {
  EXPECT_EQ(value_of("fst (fix x. <tt, x>)"), "tt");
  EXPECT_EQ(value_of("fst (snd (fix x. <tt, <ff, x>>))"), "ff");
  EXPECT_EQ(value_of("fst (snd (snd (fix x. <tt, <ff, x>>)))"), "tt");
  EXPECT_EQ(value_of("(lam x. lam y. x) tt ff"), "tt");
  EXPECT_EQ(value_of("if ff then tt else star"), "star");
  EXPECT_EQ(value_of("ifze(succ (succ zero); zero; n. n)"), "succ zero");
  EXPECT_EQ(value_of("wrec(sup(tt; x. star); a f r. <a, f>)"), "<tt, lam v0. star>");
}

TEST(Opsem, WRecursorRecursesThroughChildren) {
  // The root is labelled tt and has one child labelled ff.
  std::string tree = "sup(tt; x. sup(ff; y. star))";
  EXPECT_EQ(value_of("wrec(" + tree + "; a f r. a)"), "tt");
  EXPECT_EQ(value_of("wrec(" + tree + "; a f r. if a then r star else a)"), "ff");
  EXPECT_EQ(value_of("wrec(" + tree + "; a f r. f star)"), "sup(ff; v0. star)");
  EXPECT_EQ(eval(closed_program("wrec(" + tree + "; a f r. r star)"), 100).kind, EvalOutcome::Kind::Stuck);
}

TEST(Opsem, ValuesDoNotStep) {
  for (const char* s : {"lam x. x", "<tt, fix x. x>", "bool * bool", "later k bool", "clk-lam k. tt", "U<3>",
                        "sup(tt; x. star)", "succ (fst <zero, tt>)"}) {
    Program p = elab_term({"k"}, {}, parse_term(s, ParseEnv{nullptr, {}, {"k"}}), generic_env({"k"}));
    EXPECT_EQ(step(p).kind, StepResult::Kind::Value) << s;
  }
}

TEST(Opsem, StuckAndOutOfFuel) {
  EvalOutcome s = eval(closed_program("fst tt"), 100);
  EXPECT_EQ(s.kind, EvalOutcome::Kind::Stuck);
  EXPECT_NE(s.reason.find("fst"), std::string::npos);
  EXPECT_EQ(eval(closed_program("tt ff"), 100).kind, EvalOutcome::Kind::Stuck);
  EvalOutcome f = eval(closed_program("fix x. x"), 50);
  EXPECT_EQ(f.kind, EvalOutcome::Kind::OutOfFuel);
  EXPECT_EQ(f.steps, 50u);
}

TEST(Opsem, DeepContextsStopWithoutCrashing) {
  EvalOutcome e = eval(closed_program("fix x. fst x"), kDefaultFuel);
  EXPECT_EQ(e.kind, EvalOutcome::Kind::OutOfFuel);
  EXPECT_LT(e.steps, kDefaultFuel);
  EXPECT_FALSE(e.reason.empty());
}

TEST(Opsem, TraceSeesEveryState) {
  std::vector<std::string> seen;
  EvalOutcome e = eval(closed_program("fst <if tt then ff else tt, star>"), 100,
                       [&](const Program& m) { seen.push_back(print(m)); });
  ASSERT_EQ(e.kind, EvalOutcome::Kind::Val);
  EXPECT_EQ(seen, (std::vector<std::string>{"fst <if tt then ff else tt, star>", "if tt then ff else tt", "ff"}));
  EXPECT_EQ(e.steps, 2u);
}

TEST(Opsem, BoundedApproximation) {
  EXPECT_EQ(closed_sq_bounded(closed_program("fst <tt, ff>"), closed_program("tt"), 100), Tri::Yes);
  EXPECT_EQ(closed_sq_bounded(closed_program("tt"), closed_program("ff"), 100), Tri::No);
  EXPECT_EQ(closed_sq_bounded(closed_program("fst tt"), closed_program("snd ff"), 100), Tri::Yes);
  EXPECT_EQ(closed_sq_bounded(closed_program("fst tt"), closed_program("tt"), 100), Tri::No);
  EXPECT_EQ(closed_sq_bounded(closed_program("fix x. x"), closed_program("tt"), 100), Tri::Unknown);
}

TEST(Opsem, OpenConversionMeetsUnderHeadReduction) {
  Program a = open_program("fst <x, tt>", {"x"});
  Program b = open_program("x", {"x"});
  EXPECT_EQ(open_conv(1, a, b, 1000), Tri::Yes);
  EXPECT_EQ(open_conv(1, open_program("(lam y. y) x", {"x"}), open_program("if tt then x else x", {"x"}), 1000),
            Tri::Yes);
  // Values that differ below the head are not identified.
  EXPECT_EQ(open_conv(0, closed_program("lam y. fst <tt, tt>"), closed_program("lam y. tt"), 1000), Tri::Unknown);
  EXPECT_EQ(open_conv(1, open_program("fst x", {"x"}), open_program("x", {"x"}), 1000), Tri::Unknown);
}

TEST(Opsem, StreamTypeConvertsToItsUnfolding) {
  DefTable defs{{"Stream", parse_term("clk-lam k. fix A. bool * later k A")}};
  auto at_k = [&](const std::string& s) {
    return elab_term({"k"}, {}, parse_term(s, ParseEnv{&defs, {}, {"k"}}), generic_env({"k"}));
  };
  EXPECT_EQ(open_conv(0, at_k("Stream @k"), at_k("bool * later k (fix A. bool * later k A)"), 1000), Tri::Yes);
  EXPECT_EQ(open_conv(0, at_k("Stream @k"), at_k("bool * later k (Stream @k)"), 1000), Tri::Unknown);
}

TEST(Opsem, SingleStepRelation) {
  Program a = closed_program("fst <tt, ff>");
  Program b = closed_program("tt");
  EXPECT_TRUE(single_step_related(0, a, b));
  EXPECT_TRUE(single_step_related(0, b, a));
  EXPECT_FALSE(single_step_related(0, closed_program("fst <fst <tt, ff>, ff>"), b));
}
