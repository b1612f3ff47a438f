#pragma once

#include <random>
#include <string>
#include <vector>

#include "gctt/elaborate.hpp"
#include "gctt/opsem.hpp"
#include "gctt/parser.hpp"
#include "gctt/script.hpp"
#include "gctt/semantics.hpp"

namespace gctt::testing {

inline std::string theory_path(const std::string& name) { return std::string(GCTT_THEORIES_DIR) + "/" + name; }

inline const std::vector<std::string>& theory_names() {
  static const std::vector<std::string> n{"canonicity.gctt", "irrelevance.gctt", "streams.gctt"};
  return n;
}

inline Script load_theory(const std::string& name) { return parse_script(read_file(theory_path(name))); }

inline Program closed_program(const std::string& text, const DefTable* defs = nullptr) {
  return elab_term({}, {}, parse_term(text, ParseEnv{defs, {}, {}}), {});
}

// Random programs over the whole grammar. Clocks are drawn from #1..#clocks;
// variables are levels below the current scope.
class ProgramGen {
 public:
  explicit ProgramGen(unsigned seed, unsigned clocks = 2) : rng_(seed), clocks_(clocks) {}

  Program term(std::size_t scope, unsigned depth) {
    if (depth == 0) return leaf(scope);
    unsigned d = depth - 1;
    switch (pick(23)) {
      case 0: return pg::lam(term(scope + 1, d));
      case 1: case 2: return pg::app(term(scope, d), term(scope, d));
      case 3: return pg::fix(term(scope + 1, d));
      case 4: return pg::pair(term(scope, d), term(scope, d));
      case 5: return pg::fst(term(scope, d));
      case 6: return pg::snd(term(scope, d));
      case 7: return pg::ite(term(scope, d), term(scope, d), term(scope, d));
      case 8: return pg::su(term(scope, d));
      case 9: return pg::ifze(term(scope, d), term(scope, d), term(scope + 1, d));
      case 10: return pg::sup(term(scope, d), term(scope + 1, d));
      case 11: return pg::wrec(term(scope, d), term(scope + 3, d));
      case 12: return pg::klam(ClockName{9}, term(scope, d));
      case 13: return pg::capp(term(scope, d), clock());
      case 14: return type(scope, d);
      case 15: return pg::app(pg::lam(term(scope + 1, d)), term(scope, d));
      case 16: return pg::fst(pg::pair(term(scope, d), term(scope, d)));
      case 17: return pg::ite(pick(2) ? pg::tt() : pg::ff(), term(scope, d), term(scope, d));
      case 18: case 19: case 20: return redex(scope, d);
      default: return leaf(scope);
    }
  }

  // Programs whose head is a redex that keeps reducing for a while.
  Program redex(std::size_t scope, unsigned depth) {
    switch (pick(6)) {
      case 0: return pg::fst(pg::fix(pg::pair(term(scope + 1, depth), pg::var(scope))));
      case 1: return pg::snd(pg::snd(pg::fix(pg::pair(term(scope + 1, depth), pg::var(scope)))));
      case 2: return pg::ifze(pg::num(pick(4)), term(scope, depth), term(scope + 1, depth));
      case 3: return pg::app(pg::app(pg::lam(pg::lam(pg::var(scope + pick(2)))), term(scope, depth)), term(scope, depth));
      case 4: return pg::capp(pg::klam(ClockName{9}, term(scope, depth)), clock());
      default: return pg::wrec(pg::sup(term(scope, depth), term(scope + 1, depth)), term(scope + 3, depth));
    }
  }

  Program type(std::size_t scope, unsigned depth) {
    if (depth == 0) {
      switch (pick(5)) {
        case 0: return pg::bool_();
        case 1: return pg::unit();
        case 2: return pg::nat();
        case 3: return pg::void_();
        default: return pg::univ(pick(2));
      }
    }
    unsigned d = depth - 1;
    switch (pick(8)) {
      case 0: return pg::pi(type(scope, d), type(scope + 1, d));
      case 1: return pg::sg(type(scope, d), type(scope + 1, d));
      case 2: return pg::later(clock(), type(scope, d));
      case 3: return pg::isect(ClockName{9}, type(scope, d));
      case 4: return pg::kprod(ClockName{9}, pg::later(ClockName{9}, type(scope, d)));
      case 5: return pg::eq(type(scope, d), term(scope, d), term(scope, d));
      case 6: return pg::fix(pg::sg(pg::bool_(), pg::later(clock(), pg::var(scope))));
      default: return type(scope, 0);
    }
  }

  // Closed types whose formers are all first order.
  Program finitary_type(unsigned depth) {
    if (depth == 0) {
      switch (pick(3)) {
        case 0: return pg::bool_();
        case 1: return pg::unit();
        default: return pg::void_();
      }
    }
    unsigned d = depth - 1;
    switch (pick(5)) {
      case 0: return pg::sg(finitary_type(d), finitary_type(d));
      case 1: return pg::later(clock(), finitary_type(d));
      case 2: return pg::isect(ClockName{9}, finitary_type(d));
      case 3: return pg::eq(pg::bool_(), pick(2) ? pg::tt() : pg::ff(), pick(2) ? pg::tt() : pg::ff());
      default: return finitary_type(0);
    }
  }

  Program leaf(std::size_t scope) {
    if (scope > 0 && pick(3) == 0) return pg::var(pick(static_cast<unsigned>(scope)));
    switch (pick(6)) {
      case 0: return pg::tt();
      case 1: return pg::ff();
      case 2: return pg::star();
      case 3: return pg::ze();
      case 4: return pg::bool_();
      default: return pg::lam(pg::var(scope));
    }
  }

  ClockName clock() { return ClockName{1 + pick(clocks_)}; }
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  unsigned clocks_;
};

}  // namespace gctt::testing
