#include <gtest/gtest.h>

#include "gctt/script.hpp"
#include "support.hpp"

using namespace gctt;

namespace {

const char* kChain =
    "-- a lemma that fails, and one that leans on it\n"
    "def B := bool;\n"
    "lemma good : . ; . |- tt : B by { Bool.tt_equality };\n"
    "lemma bad : . ; . |- tt : unit by { Bool.tt_equality };\n"
    "lemma uses_bad : . ; . |- tt : unit by { lemma bad };\n"
    "lemma uses_good : . ; . |- tt : bool by { lemma good };\n";

}  // namespace

TEST(Script, ParsesDefinitionsAndLemmas) {
  Script s = parse_script(kChain);
  EXPECT_EQ(s.def_order, (std::vector<std::string>{"B"}));
  ASSERT_EQ(s.lemmas.size(), 4u);
  EXPECT_EQ(s.lemmas[1].name, "bad");
  EXPECT_EQ(s.lemmas[1].pos.line, 4);
}

TEST(Script, FailuresPropagateToCitingLemmas) {
  ScriptReport r = check_script(parse_script(kChain));
  ASSERT_EQ(r.lemmas.size(), 4u);
  EXPECT_TRUE(r.lemmas[0].result.ok);
  EXPECT_FALSE(r.lemmas[1].result.ok);
  EXPECT_FALSE(r.lemmas[2].result.ok);
  EXPECT_EQ(r.lemmas[2].result.explanation, "cites lemma bad, which failed");
  EXPECT_TRUE(r.lemmas[3].result.ok) << r.lemmas[3].result.explanation;
  EXPECT_FALSE(r.ok());
}

TEST(Script, LemmasOnlySeeEarlierLemmas) {
  ScriptReport r = check_script(parse_script(
      "lemma first : . ; . |- tt : bool by { lemma later_one };\n"
      "lemma later_one : . ; . |- tt : bool by { Bool.tt_equality };\n"));
  EXPECT_FALSE(r.lemmas[0].result.ok);
  EXPECT_TRUE(r.lemmas[1].result.ok);
}

TEST(Script, ParallelCheckingMatchesSerial) {
  for (const auto& name : gctt::testing::theory_names()) {
    Script s = gctt::testing::load_theory(name);
    ScriptReport a = check_script(s, default_fuel(), 1);
    ScriptReport b = check_script(s, default_fuel(), 4);
    ASSERT_EQ(a.lemmas.size(), b.lemmas.size());
    for (std::size_t i = 0; i < a.lemmas.size(); ++i) {
      EXPECT_EQ(a.lemmas[i].result.ok, b.lemmas[i].result.ok) << name << " " << a.lemmas[i].name;
      EXPECT_EQ(a.lemmas[i].result.path, b.lemmas[i].result.path);
    }
    EXPECT_TRUE(a.ok()) << name;
  }
}

TEST(Script, ParseErrorsCarryPositions) {
  try {
    parse_script("lemma a : . ; . |- tt : bool by { Bool.tt_equality };\nlemma a : . ; . |- tt : bool by { };");
    FAIL() << "expected a duplicate-lemma error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 2);
  }
  EXPECT_THROW(parse_script("lemma a : . ; . |- tt : bool by { Bool.no_such_rule };"), ParseError);
  EXPECT_THROW(parse_script("def B := bool; def B := unit;"), ParseError);
  EXPECT_THROW(parse_script("theorem a : . ; . |- tt : bool by { };"), ParseError);
  EXPECT_THROW(parse_script("lemma a : . ; . |- tt : bool by { Bool.tt_equality"), ParseError);
}
