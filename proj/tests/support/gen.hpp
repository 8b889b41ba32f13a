// Test-only random generators for expressions, automata and lassos.

#ifndef OMEGABS_TESTS_GEN_HPP
#define OMEGABS_TESTS_GEN_HPP

#include <random>

#include "omegabs/expr.hpp"
#include "omegabs/parser.hpp"

namespace omegabs::testgen {

// Random BS-expression of bounded depth.  `with_sugar` adds the +, B+, S+
// forms; `classical_only` restricts to word-regex operators.
inline ExprId gen_bs(std::mt19937& rng, Context& cx, const Alphabet& sigma, int depth,
                     bool with_sugar = true, bool classical_only = false) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0) {
    switch (pick(classical_only ? 4 : 6)) {
      case 0:
      case 1:
        return cx.atom(sigma.letters[pick(static_cast<int>(sigma.letters.size()))]);
      case 2: return cx.eps();
      case 3: return cx.empty();
      case 4: return cx.eps_fin();
      default: return cx.bar_atom(sigma.letters[pick(static_cast<int>(sigma.letters.size()))]);
    }
  }
  int op = pick(classical_only ? 4 : (with_sugar ? 9 : 6));
  switch (op) {
    case 0: return gen_bs(rng, cx, sigma, 0, with_sugar, classical_only);
    case 1:
      return cx.concat(gen_bs(rng, cx, sigma, depth - 1, with_sugar, classical_only),
                       gen_bs(rng, cx, sigma, depth - 1, with_sugar, classical_only));
    case 2:
      return cx.mix(gen_bs(rng, cx, sigma, depth - 1, with_sugar, classical_only),
                    gen_bs(rng, cx, sigma, depth - 1, with_sugar, classical_only));
    case 3: return cx.star(gen_bs(rng, cx, sigma, depth - 1, with_sugar, classical_only));
    case 4: return cx.exp_b(gen_bs(rng, cx, sigma, depth - 1, with_sugar));
    case 5: return cx.exp_s(gen_bs(rng, cx, sigma, depth - 1, with_sugar));
    case 6: return cx.plus(gen_bs(rng, cx, sigma, depth - 1, with_sugar));
    case 7: return cx.plus_b(gen_bs(rng, cx, sigma, depth - 1, with_sugar));
    default: return cx.plus_s(gen_bs(rng, cx, sigma, depth - 1, with_sugar));
  }
}

}  // namespace omegabs::testgen

#endif
