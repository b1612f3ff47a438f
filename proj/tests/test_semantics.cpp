#include <gtest/gtest.h>

#include "gctt/semantics.hpp"
#include "support.hpp"

using namespace gctt;

namespace {

const ClockName k1{1}, k2{2};

// Parses with clock k bound to #1 and j to #2.
Program prog(const std::string& s, const DefTable* defs = nullptr) {
  std::vector<std::string> delta{"k", "j"};
  return elab_term(delta, {}, parse_term(s, ParseEnv{defs, {}, delta}), generic_env(delta));
}

Tri mem(const World& w, const std::string& a, const std::string& m0, const std::string& m1 = {},
        const DefTable* defs = nullptr) {
  return member(w, prog(m0, defs), prog(m1.empty() ? m0 : m1, defs), prog(a, defs), 2);
}

DefTable stream_defs() {
  Script s = gctt::testing::load_theory("streams.gctt");
  return s.defs;
}

}  // namespace

TEST(Semantics, BaseTypes) {
  World w{{k1, 2}};
  EXPECT_EQ(mem(w, "bool", "tt"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool", "fst <ff, star>", "ff"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool", "tt", "ff"), Tri::No);
  EXPECT_EQ(mem(w, "bool", "star"), Tri::No);
  EXPECT_EQ(mem(w, "unit", "star"), Tri::Yes);
  EXPECT_EQ(mem(w, "void", "tt"), Tri::No);
  EXPECT_EQ(mem(w, "nat", "succ (succ zero)", "ifze(succ zero; zero; n. succ (succ n))"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool", "fix x. x"), Tri::Unknown);
}

TEST(Semantics, PairsAndEquality) {
  World w{{k1, 1}};
  EXPECT_EQ(mem(w, "bool * unit", "<tt, star>"), Tri::Yes);
  EXPECT_EQ(mem(w, "sg (x : bool). Eq bool x tt", "<tt, star>"), Tri::Yes);
  EXPECT_EQ(mem(w, "sg (x : bool). Eq bool x tt", "<ff, star>"), Tri::No);
  EXPECT_EQ(mem(w, "Eq bool tt (fst <tt, ff>)", "star"), Tri::Yes);
}

TEST(Semantics, FunctionsOverFiniteDomains) {
  World w{{k1, 1}};
  EXPECT_EQ(mem(w, "bool -> bool", "lam x. if x then ff else tt"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool -> bool", "lam x. x", "lam x. if x then tt else ff"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool -> bool", "lam x. x", "lam x. tt"), Tri::No);
  EXPECT_EQ(mem(w, "bool -> unit", "lam x. x"), Tri::No);
}

TEST(Semantics, LaterAtZeroIsTotal) {
  World w{{k1, 0}};
  EXPECT_EQ(mem(w, "later k void", "tt", "star"), Tri::Yes);
  EXPECT_EQ(mem(w, "later k bool", "fix x. x"), Tri::Yes);
  World w1{{k1, 1}};
  EXPECT_EQ(mem(w1, "later k bool", "tt", "ff"), Tri::No);
  EXPECT_EQ(mem(w1, "later k (later k void)", "tt"), Tri::Yes);
  EXPECT_EQ(mem(w1, "later k void", "tt"), Tri::No);
}

TEST(Semantics, GuardedStreams) {
  DefTable defs = stream_defs();
  for (unsigned t : {0u, 1u, 3u}) {
    World w{{k1, t}};
    EXPECT_EQ(mem(w, "Stream @k", "ones", {}, &defs), Tri::Yes) << t;
    EXPECT_EQ(mem(w, "fix A. bool * later k A", "fix x. <tt, x>", {}, &defs), Tri::Yes) << t;
  }
  // With time t left, t + 1 pairs are observed and the rest is unconstrained.
  World w0{{k1, 0}}, w1{{k1, 1}}, w2{{k1, 2}};
  EXPECT_EQ(mem(w0, "Stream @k", "<tt, star>", {}, &defs), Tri::Yes);
  EXPECT_EQ(mem(w1, "Stream @k", "<tt, star>", {}, &defs), Tri::No);
  EXPECT_EQ(mem(w1, "Stream @k", "<tt, <ff, star>>", {}, &defs), Tri::Yes);
  EXPECT_EQ(mem(w2, "Stream @k", "<tt, <ff, star>>", {}, &defs), Tri::No);
  EXPECT_EQ(mem(w2, "Seq", "ones", {}, &defs), Tri::Yes);
  EXPECT_EQ(mem(w2, "Seq", "<tt, <tt, star>>", {}, &defs), Tri::No);
}

// A family that ignores its argument still has binders of its own, which
// move down a level once the argument is gone.
TEST(Semantics, NonDependentFamilyWithInnerBinders) {
  World w{{k1, 2}};
  EXPECT_EQ(mem(w, "bool * later k (fix A. bool * later k A)", "fix x. <tt, x>"), Tri::Yes);
  EXPECT_EQ(mem(w, "bool * (bool -> bool)", "<tt, lam y. y>"), Tri::Yes);
}

TEST(Semantics, IntersectionsAndClockProducts) {
  World w{{k1, 2}};
  EXPECT_EQ(mem(w, "isect i. bool", "tt"), Tri::Yes);
  EXPECT_EQ(mem(w, "isect i. later i bool", "tt", "ff"), Tri::No);
  EXPECT_EQ(mem(w, "all i. later i bool", "clk-lam i. tt"), Tri::Yes);
}

TEST(Semantics, Universes) {
  World w{{k1, 1}};
  EXPECT_EQ(mem(w, "U<0>", "bool"), Tri::Yes);
  EXPECT_EQ(mem(w, "U<0>", "bool * later k bool"), Tri::Yes);
  EXPECT_EQ(mem(w, "U<0>", "bool", "unit"), Tri::No);
  EXPECT_EQ(mem(w, "U<1>", "U<0>"), Tri::Yes);
  EXPECT_EQ(mem(w, "U<0>", "tt"), Tri::No);
  EXPECT_EQ(mem(w, "U<1>", "isect i. bool", "bool"), Tri::Yes);
  InterpResult r = interp_type(w, prog("U<2>"), 2);
  EXPECT_EQ(r.kind, InterpResult::Kind::NotAType);
}

TEST(Semantics, UnknownClockIsNotAType) {
  InterpResult r = interp_type(World{{k1, 1}}, prog("later j bool"), 2);
  EXPECT_EQ(r.kind, InterpResult::Kind::NotAType);
  EXPECT_THROW(interp_type(World{}, prog("bool"), 2), Error);
}

TEST(Semantics, RelationsArePers) {
  gctt::testing::ProgramGen gen(3);
  std::vector<Program> sample{prog("tt"),         prog("ff"),          prog("fst <tt, ff>"), prog("star"),
                              prog("<tt, star>"), prog("<ff, star>"),  prog("lam x. x"),     prog("fix x. <tt, x>"),
                              prog("zero"),       prog("succ zero"),   prog("<tt, tt>"),     prog("if tt then ff else tt")};
  for (int i = 0; i < 8; ++i) sample.push_back(gen.term(0, 2));
  std::vector<std::pair<Program, Program>> pairs;
  for (const auto& a : sample)
    for (const auto& b : sample) pairs.emplace_back(a, b);
  for (const char* a : {"bool", "bool * unit", "nat", "later k bool", "bool -> bool", "isect i. bool",
                        "sg (x : bool). Eq bool x tt"}) {
    InterpResult r = interp_type(World{{k1, 1}, {k2, 0}}, prog(a), 2);
    ASSERT_EQ(r.kind, InterpResult::Kind::Rel) << a;
    AuditReport rep = per_audit(*r.rel, pairs);
    EXPECT_TRUE(rep.ok()) << a << ": " << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_GT(rep.checks, 0u);
  }
}

TEST(Semantics, CanonicityCheck) {
  EXPECT_EQ(canonicity_check(prog("fst (fix x. <tt, x>)"), 1000).kind, CanonResult::Kind::Tt);
  EXPECT_EQ(canonicity_check(prog("if tt then ff else tt"), 1000).kind, CanonResult::Kind::Ff);
  EXPECT_EQ(canonicity_check(prog("star"), 1000).kind, CanonResult::Kind::Fail);
  CanonResult f = canonicity_check(prog("fix x. x"), 100);
  EXPECT_EQ(f.kind, CanonResult::Kind::Fail);
  EXPECT_EQ(f.reason, "OutOfFuel");
}
