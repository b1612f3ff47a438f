#include <gtest/gtest.h>

#include <cmath>

#include "gctt/forcing.hpp"

using namespace gctt;

namespace {

const ClockName c1{1}, c2{2};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Is there a map from dom(u) into dom(v), respecting `pin`, with v's
// time at most u's?
bool arrow(const World& v, const World& u, std::optional<std::pair<ClockName, ClockName>> pin = {}) {
  std::vector<ClockName> du;
  for (const auto& [k, t] : u) du.push_back(k);
  std::vector<ClockName> dv;
  for (const auto& [k, t] : v) dv.push_back(k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < du.size(); ++i) total *= dv.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    bool ok = true;
    for (const ClockName& k : du) {
      ClockName img = dv[c % dv.size()];
      c /= dv.size();
      if (v.at(img) > u.at(k) || (pin && pin->first == k && pin->second != img)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Counts subsets of the points that are closed under restriction.
std::size_t brute_monotone_count(const TruncParams& p, bool has_clock) {
  auto pts = family_points(p, has_clock);
  std::size_t n = pts.size();
  std::size_t count = 0;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(s >> a & 1)) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (s >> b & 1) continue;
        std::optional<std::pair<ClockName, ClockName>> pin;
        if (has_clock) pin = {*pts[a].clock, *pts[b].clock};
        if (arrow(pts[b].world, pts[a].world, pin)) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Forcing, WorldCountsMatchClosedForm) {
  for (unsigned pool : {2u, 3u})
    for (unsigned t : {1u, 2u, 3u}) {
      std::size_t want = 0;
      for (unsigned k = 1; k <= pool; ++k)
        want += binom(pool, k) * static_cast<std::size_t>(std::pow(t + 1, k));
      EXPECT_EQ(enumerate_worlds(TruncParams{pool, t}).size(), want) << pool << "," << t;
    }
  EXPECT_EQ(enumerate_worlds(TruncParams{2, 2}).size(), 15u);
  EXPECT_THROW(TruncParams({1, 1}).validate(), Error);
}

TEST(Forcing, MorphismsAndComposition) {
  TruncParams p{2, 2};
  World u{{c1, 1}, {c2, 2}};
  auto ms = morphisms_into(u, p);
  ASSERT_FALSE(ms.empty());
  for (const auto& m : ms) {
    EXPECT_TRUE(is_morphism(m));
    EXPECT_TRUE(arrow(m.source, m.target));
    for (const auto& g : morphisms_into(m.source, p)) EXPECT_TRUE(is_morphism(compose(m, g)));
  }
  EXPECT_FALSE(is_morphism(WorldMorphism{World{{c1, 2}}, World{{c1, 1}}, {{c1, c1}}}));
  EXPECT_THROW(compose(ms[0], WorldMorphism{World{{c1, 0}}, World{{c2, 0}}, {{c2, c1}}}), Error);
}

TEST(Forcing, MonotoneFamiliesMatchBruteForce) {
  TruncParams p{2, 1};
  FamilySet plain = monotone_families(p, false);
  EXPECT_TRUE(plain.exhaustive);
  EXPECT_EQ(plain.truth.size(), brute_monotone_count(p, false));
  FamilySet clocked = monotone_families(p, true);
  EXPECT_TRUE(clocked.exhaustive);
  EXPECT_EQ(clocked.truth.size(), brute_monotone_count(p, true));
}

// A family without a clock argument only sees the least time in a world.
TEST(Forcing, PlainFamiliesAreThresholds) {
  for (unsigned t : {1u, 2u, 3u}) EXPECT_EQ(monotone_families(TruncParams{2, t}, false).truth.size(), t + 2);
}

TEST(Forcing, FormulaSyntax) {
  for (const char* s : {"all k. later k phi(k) => phi(k)", "ex k. true", "phi /\\ psi \\/ false", "phi <=> psi"}) {
    Formula f = parse_formula(s);
    EXPECT_EQ(print(parse_formula(print(f))), print(f)) << s;
  }
  EXPECT_THROW(parse_formula("all . phi"), ParseError);
  EXPECT_THROW(parse_formula("phi /\\"), ParseError);
  EXPECT_THROW(make_theorem("x", parse_formula("later k true")), Error);
}

TEST(Forcing, LaterAndFalsity) {
  TruncParams p{2, 2};
  EXPECT_TRUE(forces(World{{c1, 0}}, parse_formula("later #1 false"), p));
  EXPECT_FALSE(forces(World{{c1, 1}}, parse_formula("later #1 false"), p));
  EXPECT_TRUE(forces(World{{c1, 1}}, parse_formula("later #1 later #1 false"), p));
  EXPECT_TRUE(forces(World{{c1, 2}}, parse_formula("ex k. true"), p));
}

TEST(Forcing, TheoremsHold) {
  TruncParams p{2, 2};
  for (const auto& name : theorem_names()) {
    TheoremResult r = check_theorem(name, p);
    EXPECT_TRUE(r.passed) << name;
    EXPECT_EQ(r.worlds, 15u);
    EXPECT_GT(r.assignments, 0u);
  }
}

TEST(Forcing, NonTheoremHasCounterexample) {
  TheoremResult r = check_theorem(make_theorem("bad", parse_formula("all k. later k phi => phi")), TruncParams{2, 2});
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.counterexample->families.empty());
}

TEST(Forcing, MakeFamilyRejectsNonMonotone) {
  TruncParams p{2, 1};
  EXPECT_NO_THROW(make_family("low", false, [](const World& w, ClockName) {
    for (const auto& [k, t] : w)
      if (t == 0) return true;
    return false;
  }, p));
  EXPECT_THROW(make_family("high", false, [](const World& w, ClockName) {
    for (const auto& [k, t] : w)
      if (t == 1) return true;
    return false;
  }, p), Error);
}
