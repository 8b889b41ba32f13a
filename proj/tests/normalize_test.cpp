#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omegabs/normalize.hpp"
#include "omegabs/printer.hpp"
#include "omegabs/seq.hpp"
#include "support/gen.hpp"

using namespace omegabs;

namespace {

std::set<WordSequence> clean_filter(const std::set<WordSequence>& in) {
  std::set<WordSequence> out;
  for (auto& s : in) {
    bool ok = true;
    for (auto& w : s) ok &= !w.empty();
    if (ok) out.insert(s);
  }
  return out;
}

std::set<WordSequence> enumerate_mix(Context& cx, const std::vector<ExprId>& parts,
                                     const Alphabet& sigma, EnumBounds b) {
  // Enumerated fragment of a mix of languages: coordinates split among the
  // parts, i.e. membership of some coordinate partition.  Since all parts
  // are subsequence closed, this equals the union-of-enumerations closed
  // under coordinatewise interleaving; checking via fin_member of the mix
  // expression is simplest.
  ExprId m = cx.mix_all(parts);
  return fin_enumerate(cx, m, sigma, b);
}

}  // namespace

TEST_CASE("clean examples") {
  Context cx;
  Letter a = cx.letter('a');

  auto c1 = clean(cx, cx.star(cx.atom(a)));
  CHECK(c1.expr == cx.plus(cx.atom(a)));
  CHECK(c1.tag == CleanTag::Eps);

  auto c2 = clean(cx, cx.eps());
  CHECK(c2.expr == cx.empty());
  CHECK(c2.tag == CleanTag::Eps);

  auto c3 = clean(cx, cx.eps_fin());
  CHECK(c3.tag == CleanTag::FEps);

  auto c4 = clean(cx, cx.atom(a));
  CHECK(c4.tag == CleanTag::None);
  CHECK(c4.expr == cx.atom(a));
}

TEST_CASE("clean preserves the nonempty-coordinate fragment") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(31);
  for (int i = 0; i < 80; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    CAPTURE(print_bs(cx, e));
    auto whole = fin_enumerate(cx, e, ab, {3, 2});
    auto cl = clean(cx, e);
    auto cleaned = fin_enumerate(cx, cl.expr, ab, {3, 2});
    CHECK(cleaned == clean_filter(whole));
    // The tag reconstructs the original: e = tag + clean e.
    ExprId tag_expr = cl.tag == CleanTag::None ? cx.empty()
                      : cl.tag == CleanTag::FEps ? cx.eps_fin()
                                                 : cx.eps();
    auto rebuilt = fin_enumerate(cx, cx.mix(tag_expr, cl.expr), ab, {3, 2});
    CHECK(rebuilt == whole);
  }
}

TEST_CASE("split_finite_mix examples and oracle") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a');

  auto s1 = split_finite_mix(cx, cx.eps_fin());
  CHECK(s1.regex == cx.eps());
  CHECK(s1.bs_part == cx.empty());

  auto s2 = split_finite_mix(cx, cx.exp_b(cx.atom(a)));
  CHECK(s2.regex == cx.star(cx.atom(a)));
  CHECK(s2.bs_part == cx.exp_b(cx.atom(a)));

  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    CAPTURE(print_bs(cx, e));
    auto sp = split_finite_mix(cx, e);
    ExprId rebuilt = cx.mix(cx.finitize(sp.regex), sp.bs_part);
    CHECK(fin_enumerate(cx, e, ab, {3, 2}) == fin_enumerate(cx, rebuilt, ab, {3, 2}));
    CHECK_FALSE(contains_op(cx, sp.bs_part, Op::EpsFin));
    CHECK(is_word_regex(cx, sp.regex));
  }
}

TEST_CASE("drop_fepsilon_under_omega examples") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter b = cx.letter('b');

  // (bar a)^w is the empty omega-language.
  OmegaExpr e1 = parse_omega(cx, "(~a)^w", ab);
  CHECK(drop_fepsilon_under_omega(cx, e1).summands.empty());

  // (bar a + b)^w becomes (a + b)* . b^w.
  OmegaExpr e2 = parse_omega(cx, "(~a + b)^w", ab);
  OmegaExpr d2 = drop_fepsilon_under_omega(cx, e2);
  REQUIRE(d2.summands.size() == 1);
  CHECK(d2.summands[0].loop == cx.atom(b));
  CHECK(is_word_regex(cx, d2.summands[0].prefix));
  CHECK(contains_op(cx, d2.summands[0].prefix, Op::Star));

  // EpsFin-free loops stay untouched.
  OmegaExpr e3 = parse_omega(cx, "(a^B.b)^w", ab);
  OmegaExpr d3 = drop_fepsilon_under_omega(cx, e3);
  REQUIRE(d3.summands.size() == 1);
  CHECK(d3.summands[0].loop == desugar(cx, e3.summands[0].loop));
  CHECK(d3.summands[0].prefix == e3.summands[0].prefix);
}

TEST_CASE("pure decomposition examples") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  Letter a = cx.letter('a'), b = cx.letter('b');

  auto p1 = pure_decompose(cx, cx.atom(a));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == cx.atom(a));

  // clean((a+b)*) = (a+b)^+ lifts to the six binary templates.
  auto p2 = pure_decompose(cx, cx.star(cx.mix(cx.atom(a), cx.atom(b))));
  ExprId ap = cx.plus(cx.atom(a)), bp = cx.plus(cx.atom(b));
  std::vector<ExprId> want = {ap,
                              bp,
                              cx.plus(cx.concat(bp, ap)),
                              cx.concat(cx.plus(cx.concat(bp, ap)), bp),
                              cx.plus(cx.concat(ap, bp)),
                              cx.concat(cx.plus(cx.concat(ap, bp)), ap)};
  std::sort(want.begin(), want.end());
  CHECK(p2 == want);

  // The S+ lift of two parts yields the documented 102 pure expressions.
  detail::LiftBudget budget;
  auto p3 = detail::lift_pluss(cx, {cx.atom(a), cx.atom(b)}, budget);
  CHECK(p3.size() <= 102);
  CHECK(p3.size() >= 90);  // after structural dedup of coincident parts
}

TEST_CASE("pure decomposition agrees with the oracle") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "ab");
  std::mt19937 rng(41);
  int done = 0, skipped = 0;
  for (int i = 0; done < 50 && i < 200; ++i) {
    ExprId e = testgen::gen_bs(rng, cx, ab, 3);
    CAPTURE(print_bs(cx, e));
    std::vector<ExprId> parts;
    try {
      parts = pure_decompose(cx, e);
    } catch (const resource_error&) {
      ++skipped;  // wide mix under an exponent; documented limitation
      continue;
    }
    ++done;
    for (ExprId p : parts) CHECK(is_pure(cx, p));
    auto lhs = fin_enumerate(cx, clean(cx, e).expr, ab, {3, 2});
    auto rhs = enumerate_mix(cx, parts, ab, {3, 2});
    CHECK(lhs == rhs);
  }
  CHECK(done == 50);
  CHECK(skipped < 40);
}

TEST_CASE("S exponent over an Eps-tagged operand cleans to a plus") {
  Context cx;
  Alphabet ab = Alphabet::from_string(cx, "a");
  Letter a = cx.letter('a');
  // (a*)^S contains <a,a,a,...> via empty-word padding, so its clean part
  // is (a^+)^+ and not (a^+)^S+.
  ExprId e = cx.exp_s(cx.star(cx.atom(a)));
  auto cl = clean(cx, e);
  CHECK(cl.expr == cx.plus(cx.plus(cx.atom(a))));
  auto en = fin_enumerate(cx, cl.expr, ab, {3, 3});
  auto want = clean_filter(fin_enumerate(cx, e, ab, {3, 3}));
  CHECK(en == want);
}
