#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omegabs/printer.hpp"
#include "omegabs/seq.hpp"
#include "support/gen.hpp"

using namespace omegabs;

namespace {

WordSequence seq(Context& cx, std::initializer_list<const char*> words) {
  WordSequence s;
  for (auto* w : words) s.push_back(word_from_string(cx, w));
  return s;
}

}  // namespace

TEST_CASE("base case rule sets") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");

  // [[0]] = {<>}
  CHECK(fin_member(cx, cx.empty(), {}));
  CHECK_FALSE(fin_member(cx, cx.empty(), seq(cx, {""})));

  // [[1f]] = all finite sequences of the empty word
  CHECK(fin_member(cx, cx.eps_fin(), seq(cx, {"", ""})));
  CHECK_FALSE(fin_member(cx, cx.eps_fin(), seq(cx, {"a"})));

  // [[a]] contains <>, <a>, <a,a>, ...
  Letter a = cx.letter('a');
  CHECK(fin_member(cx, cx.atom(a), {}));
  CHECK(fin_member(cx, cx.atom(a), seq(cx, {"a", "a"})));
  CHECK_FALSE(fin_member(cx, cx.atom(a), seq(cx, {"aa"})));
  CHECK_FALSE(fin_member(cx, cx.atom(a), seq(cx, {""})));

  auto en = fin_enumerate(cx, cx.atom(a), ab, {2, 1});
  std::set<WordSequence> want = {{}, seq(cx, {"a"}), seq(cx, {"a", "a"})};
  CHECK(en == want);
}

TEST_CASE("mix and concat examples") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');

  auto mix_ab = cx.mix(cx.atom(a), cx.atom(b));
  auto en = fin_enumerate(cx, mix_ab, ab, {1, 1});
  std::set<WordSequence> want = {{}, seq(cx, {"a"}), seq(cx, {"b"})};
  CHECK(en == want);

  auto cat_ab = cx.concat(cx.atom(a), cx.atom(b));
  auto en2 = fin_enumerate(cx, cat_ab, ab, {1, 2});
  std::set<WordSequence> want2 = {{}, seq(cx, {"ab"})};
  CHECK(en2 == want2);

  // Coordinatewise choice at matching indices.
  CHECK(fin_member(cx, mix_ab, seq(cx, {"a", "b", "a"})));
  CHECK_FALSE(fin_member(cx, mix_ab, seq(cx, {"ab"})));
}

TEST_CASE("exponent groupings and witnesses") {
  Context cx;
  Letter a = cx.letter('a');
  FinOracle oracle(cx);

  // <aa, a> in [[a^B]] with witness blocks (a.a)(a)
  ExprId e = cx.exp_b(cx.atom(a));
  WordSequence s = seq(cx, {"aa", "a"});
  CHECK(oracle.member(e, s));
  auto w = oracle.member_grouping(e, s);
  REQUIRE(w.has_value());
  CHECK(w->cuts == std::vector<size_t>{2, 3});

  // Empty groups give empty words: <"", "a"> in [[a^S]].
  CHECK(oracle.member(cx.exp_s(cx.atom(a)), seq(cx, {"", "a"})));
}

TEST_CASE("finite collapse of B and S to star") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    ExprId stars = e;
    // Replace every exponent by *.
    struct Repl {
      Context& cx;
      ExprId run(ExprId x) {
        const ExprNode n = cx.node(x);
        switch (n.op) {
          case Op::ExpB:
          case Op::ExpS:
          case Op::Star: return cx.star(run(n.a));
          case Op::Plus:
          case Op::PlusB:
          case Op::PlusS: return cx.plus(run(n.a));
          case Op::Concat: return cx.concat(run(n.a), run(n.b));
          case Op::Mix: return cx.mix(run(n.a), run(n.b));
          case Op::Finitize: return cx.finitize(run(n.a));
          default: return x;
        }
      }
    } repl{cx};
    stars = repl.run(e);
    CHECK(fin_enumerate(cx, e, ab, {3, 2}) == fin_enumerate(cx, stars, ab, {3, 2}));
  }
}

TEST_CASE("mix idempotence and prefix closure on corpus") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    auto lhs = fin_enumerate(cx, cx.mix(e, e), ab, {3, 2});
    auto rhs = fin_enumerate(cx, e, ab, {3, 2});
    CHECK(lhs == rhs);
    // Prefix closure.
    for (auto& s : rhs) {
      if (s.empty()) continue;
      WordSequence p(s.begin(), s.end() - 1);
      CHECK(rhs.count(p));
    }
  }
}

TEST_CASE("subsequence closure check") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');
  CHECK(subsequence_closed_check(cx, cx.concat(cx.atom(a), cx.atom(b)), ab));
  CHECK(subsequence_closed_check(cx, cx.mix(cx.atom(a), cx.atom(b)), ab));

  std::mt19937 rng(6);
  for (int i = 0; i < 25; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    CHECK(subsequence_closed_check(cx, e, ab, {3, 2}));
  }
}

TEST_CASE("desugared and sugared membership agree") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(11);
  FinOracle oracle(cx);
  auto cands = all_sequences(ab, {3, 2});
  for (int i = 0; i < 30; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    ExprId d = desugar(cx, e);
    for (auto& s : cands) CHECK(oracle.member(e, s) == oracle.member(d, s));
  }
}

TEST_CASE("enumeration cap") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  EnumBounds b;
  b.max_len = 5;
  b.max_word_len = 4;
  b.cap = 1000;
  CHECK_THROWS_AS(all_sequences(ab, b), resource_error);
}
