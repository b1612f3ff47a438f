#include <gtest/gtest.h>

#include "gctt/elaborate.hpp"
#include "gctt/parser.hpp"
#include "gctt/program.hpp"
#include "support.hpp"

using namespace gctt;
using gctt::testing::ProgramGen;

namespace {

std::vector<std::string> level_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

const std::vector<std::string> kClocks{"#1", "#2"};
const ClockEnv kRho{{"#1", ClockName{1}}, {"#2", ClockName{2}}};

// Reference substitution: read both programs back to named syntax,
// substitute by name, and elaborate again.
Program named_subst_top(std::size_t n, const Program& body, const Program& arg) {
  FormalTerm b = debug_formal(body, n + 1);
  FormalTerm a = debug_formal(arg, n);
  FormalTerm r = subst_formal(b, "v" + std::to_string(n), a);
  return elab_term(kClocks, level_names(n), r, kRho);
}

}  // namespace

TEST(Program, ElaborationUsesLevels) {
  EXPECT_EQ(sexpr(elab_term({}, {"x", "y"}, ft::var("x"), {})), "(var 0)");
  EXPECT_EQ(sexpr(elab_term({}, {"x", "y"}, ft::var("y"), {})), "(var 1)");
  Program k = elab_term({}, {}, parse_term("lam x. lam y. x"), {});
  EXPECT_EQ(sexpr(k), "(lam (lam (var 0)))");
}

TEST(Program, ElaborationNamesClocks) {
  Program p = elab_term({"k"}, {}, parse_term("later k (isect j. later j bool)", ParseEnv{nullptr, {}, {"k"}}),
                        {{"k", ClockName{4}}});
  EXPECT_EQ(p->clock, ClockName{4});
  EXPECT_NE(p->kids[0]->clock, ClockName{4});
  EXPECT_THROW(elab_term({}, {}, ft::later("k", ft::bool_()), {}), Error);
}

TEST(Program, SubstitutionMatchesNamedReference) {
  ProgramGen gen(11);
  for (int i = 0; i < 400; ++i) {
    std::size_t n = i % 3;
    Program body = gen.term(n + 1, 3);
    Program arg = gen.term(n, 3);
    Program got = subst_top(n, body, arg);
    Program want = named_subst_top(n, body, arg);
    ASSERT_TRUE(alpha_equal(got, want)) << "body " << print(body, n + 1) << "\narg " << print(arg, n) << "\ngot "
                                        << print(got, n) << "\nwant " << print(want, n);
    ASSERT_TRUE(well_scoped(got, n));
  }
}

TEST(Program, SubstitutedBindersAreRelevelled) {
  // The argument's own binder must move from level 0 to level 1 under lam.
  Program body = pg::lam(pg::var(0));
  Program arg = pg::fix(pg::pair(pg::tt(), pg::var(0)));
  Program r = subst_top(0, body, arg);
  EXPECT_EQ(sexpr(r), "(lam (fix (pair (tt) (var 1))))");
}

TEST(Program, ShiftBoundKeepsFreeVariables) {
  Program m = pg::lam(pg::pair(pg::var(0), pg::var(2)));  // scope 2, binder at level 2
  EXPECT_EQ(sexpr(shift_bound(m, 2, 3)), "(lam (pair (var 0) (var 5)))");
}

TEST(Program, ClockInstantiationAvoidsCapture) {
  ClockName a{1}, b{2};
  Program body = pg::isect(b, pg::later(a, pg::later(b, pg::bool_())));
  Program r = instantiate_clock(body, a, b);
  ASSERT_EQ(r->tag, PTag::Isect);
  EXPECT_NE(r->clock, b);
  EXPECT_EQ(r->kids[0]->clock, b);
  EXPECT_EQ(r->kids[0]->kids[0]->clock, r->clock);
}

TEST(Program, AlphaEqualityIgnoresBoundClockNames) {
  EXPECT_TRUE(alpha_equal(pg::isect(ClockName{3}, pg::later(ClockName{3}, pg::bool_())),
                          pg::isect(ClockName{8}, pg::later(ClockName{8}, pg::bool_()))));
  EXPECT_FALSE(alpha_equal(pg::later(ClockName{3}, pg::bool_()), pg::later(ClockName{8}, pg::bool_())));
}

TEST(Program, LevelUse) {
  Program body = pg::later(ClockName{1}, pg::fix(pg::sg(pg::bool_(), pg::later(ClockName{1}, pg::var(1)))));
  EXPECT_FALSE(uses_level(body, 0));
  EXPECT_TRUE(uses_level(pg::pair(pg::tt(), pg::var(0)), 0));
  EXPECT_TRUE(closed(pg::lam(pg::var(0))));
  EXPECT_FALSE(closed(pg::lam(pg::var(1))));
}
