#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omegabs/expr.hpp"
#include "omegabs/parser.hpp"
#include "omegabs/printer.hpp"
#include "support/gen.hpp"

using namespace omegabs;

TEST_CASE("parse basic forms") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');

  CHECK(parse_bs(cx, "a^B . b", ab) == cx.concat(cx.exp_b(cx.atom(a)), cx.atom(b)));
  CHECK(parse_bs(cx, "a^+", ab) == cx.plus(cx.atom(a)));
  CHECK(desugar(cx, parse_bs(cx, "a^+", ab)) == cx.concat(cx.atom(a), cx.star(cx.atom(a))));
  CHECK(parse_bs(cx, "0", ab) == cx.empty());
  CHECK(parse_bs(cx, "1f", ab) == cx.eps_fin());
  CHECK(parse_bs(cx, "~a", ab) == cx.bar_atom(a));
  CHECK(parse_bs(cx, "a*", ab) == parse_bs(cx, "a^*", ab));
  CHECK(parse_bs(cx, "a^S+", ab) == cx.plus_s(cx.atom(a)));

  CHECK_THROWS_AS(parse_bs(cx, "a +", ab), parse_error);
  CHECK_THROWS_AS(parse_bs(cx, "c", ab), parse_error);  // unknown letter
  CHECK_THROWS_AS(parse_bs(cx, "", ab), parse_error);
}

TEST_CASE("parse omega expressions") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');

  OmegaExpr w1 = parse_omega(cx, "(a^S . b)^w", ab);
  REQUIRE(w1.summands.size() == 1);
  CHECK(w1.summands[0].prefix == cx.eps());
  CHECK(w1.summands[0].loop == cx.concat(cx.exp_s(cx.atom(a)), cx.atom(b)));

  OmegaExpr w2 = parse_omega(cx, "(a+b)* . a^w + ((a*.b)*.a^S.b)^w", ab);
  REQUIRE(w2.summands.size() == 2);
  CHECK(w2.summands[0].prefix == cx.star(cx.mix(cx.atom(a), cx.atom(b))));
  CHECK(w2.summands[0].loop == cx.atom(a));
  CHECK(w2.summands[1].prefix == cx.eps());

  OmegaExpr w3 = parse_omega(cx, "a^w", ab);
  REQUIRE(w3.summands.size() == 1);
  CHECK(w3.summands[0].prefix == cx.eps());
  CHECK(w3.summands[0].loop == cx.atom(a));

  CHECK_THROWS_AS(parse_omega(cx, "", ab), parse_error);
  CHECK_THROWS_AS(parse_omega(cx, "a^w.b", ab), parse_error);
  // A B/S exponent in the prefix is rejected.
  CHECK_THROWS_AS(parse_omega(cx, "a^B.b^w", ab), parse_error);
}

TEST_CASE("printer examples and round trips") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');

  CHECK(print_bs(cx, cx.exp_b(cx.atom(a))) == "a^B");
  CHECK(print_bs(cx, cx.mix(cx.atom(a), cx.atom(b))) == "a + b");

  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 5);
    std::string t = print_bs(cx, e);
    CAPTURE(t);
    ExprId back = parse_bs(cx, t, ab);
    CHECK(back == e);
    CHECK(print_bs(cx, back) == t);  // printing is idempotent through parse
  }
}

TEST_CASE("omega print round trip") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    OmegaExpr e;
    int n = 1 + (i % 3);
    for (int s = 0; s < n; ++s) {
      ExprId pre = testgen::gen_bs(rng, cx, ab, 2, false, true);
      ExprId loop = testgen::gen_bs(rng, cx, ab, 3);
      e.summands.push_back({pre, loop});
    }
    std::string t = print_omega(cx, e);
    CAPTURE(t);
    OmegaExpr back = parse_omega(cx, t, ab);
    REQUIRE(back.summands.size() == e.summands.size());
    for (size_t s = 0; s < e.summands.size(); ++s) {
      CHECK(back.summands[s].prefix == e.summands[s].prefix);
      CHECK(back.summands[s].loop == e.summands[s].loop);
    }
  }
}

TEST_CASE("desugar is idempotent") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 4);
    ExprId d = desugar(cx, e);
    CHECK(desugar(cx, d) == d);
  }
}

TEST_CASE("project relabels leaves and preserves shape") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b'), c = cx.letter('c');

  auto to_c = [&](Letter) { return c; };
  CHECK(project(cx, cx.concat(cx.atom(a), cx.atom(b)), to_c) ==
        cx.concat(cx.atom(c), cx.atom(c)));
  auto id = [](Letter l) { return l; };
  ExprId e = cx.exp_s(cx.atom(a));
  CHECK(project(cx, e, id) == e);

  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    ExprId x = testgen::gen_bs(rng, cx, ab, 4);
    CHECK(project(cx, x, id) == x);
  }
}

TEST_CASE("purity and word regex predicates") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a');
  CHECK(is_pure(cx, cx.concat(cx.atom(a), cx.plus_b(cx.bar_atom(a)))));
  CHECK_FALSE(is_pure(cx, cx.star(cx.atom(a))));
  CHECK_FALSE(is_pure(cx, cx.mix(cx.atom(a), cx.atom(cx.letter('b')))));
  CHECK(is_word_regex(cx, parse_bs(cx, "(a+b)*.a", ab)));
  CHECK_FALSE(is_word_regex(cx, parse_bs(cx, "a^B", ab)));
}
