// omegabs/normalize.hpp - expression normal forms.
//
//   clean        - removes sequences with empty-word coordinates; reports
//                  which of the three decompositions L, EpsFin+cleanL,
//                  Eps+cleanL applies (mix, not union).
//   split_finite_mix - the bar(M) + K decomposition eliminating EpsFin.
//   drop_fepsilon_under_omega - rewrites every summand loop to its
//                  EpsFin-free part; the finite bar(M) coordinates are
//                  absorbed into the prefix regex (cf. (bar a + b)^w =
//                  (a+b)* b^w).
//   pure_decompose - clean L as a mix of pure expressions, via the
//                  mix-lifting identities.  The n-ary lifts iterate the
//                  binary identities and can blow up; a budget guards the
//                  recursion and trips as resource_error.
//
// One correction to the star-case table: when the operand contains the
// infinite empty-word sequence (tag Eps), arbitrarily many empty words can
// pad the groups of an S exponent, so clean(K^S) is (clean K)^+ rather than
// (clean K)^S+ in that case.  With tags None/EpsFin the padding is finite
// and the usual (clean K)^S+ applies.

#ifndef OMEGABS_NORMALIZE_HPP
#define OMEGABS_NORMALIZE_HPP

#include <map>

#include "expr.hpp"
#include "flags.hpp"

namespace omegabs {

enum class CleanTag : uint8_t { None, FEps, Eps };

struct Cleaned {
  CleanTag tag;
  ExprId expr;
};

namespace detail {

inline CleanTag tag_max(CleanTag a, CleanTag b) { return a > b ? a : b; }

}  // namespace detail

inline Cleaned clean(Context& cx, ExprId e0) {
  ExprId e = desugar(cx, e0);
  constexpr uint32_t kExprTag = 1, kCaseTag = 2;
  auto it = cx.memo().find(Context::memo_key(kExprTag, 0, e));
  if (it != cx.memo().end()) {
    ExprId c = it->second;
    ExprId t = cx.memo().at(Context::memo_key(kCaseTag, 0, e));
    return {static_cast<CleanTag>(t), c};
  }

  const ExprNode n = cx.node(e);
  Cleaned r;
  switch (n.op) {
    case Op::Empty: r = {CleanTag::None, cx.empty()}; break;
    case Op::EpsFin: r = {CleanTag::FEps, cx.empty()}; break;
    case Op::Eps: r = {CleanTag::Eps, cx.empty()}; break;
    case Op::Atom: r = {CleanTag::None, e}; break;
    case Op::BarAtom: r = {CleanTag::None, e}; break;
    case Op::Finitize: {
      Cleaned a = clean(cx, n.a);
      r = {a.tag == CleanTag::None ? CleanTag::None : CleanTag::FEps, cx.finitize(a.expr)};
      break;
    }
    case Op::Mix: {
      Cleaned a = clean(cx, n.a), b = clean(cx, n.b);
      r = {detail::tag_max(a.tag, b.tag), cx.mix(a.expr, b.expr)};
      break;
    }
    case Op::Concat: {
      Cleaned k = clean(cx, n.a), m = clean(cx, n.b);
      ExprId base = cx.concat(k.expr, m.expr);
      std::vector<ExprId> extra;
      CleanTag tag = CleanTag::None;
      auto K = k.expr, M = m.expr;
      using CT = CleanTag;
      // Nine cases of the concatenation table, keyed by the operand tags.
      // The empty-word coordinates of one side expose the other side alone:
      // finitely often for FEps (finite prefixes, i.e. Finitize), possibly
      // cofinitely for Eps (the full clean part).
      if (k.tag == CT::None && m.tag == CT::FEps) extra = {cx.finitize(K)};
      else if (k.tag == CT::None && m.tag == CT::Eps) extra = {K};
      else if (k.tag == CT::FEps && m.tag == CT::None) extra = {cx.finitize(M)};
      else if (k.tag == CT::Eps && m.tag == CT::None) extra = {M};
      else if (k.tag == CT::FEps && m.tag == CT::FEps) {
        extra = {cx.finitize(K), cx.finitize(M)};
        tag = CT::FEps;
      } else if (k.tag == CT::FEps && m.tag == CT::Eps) {
        extra = {K, cx.finitize(M)};
        tag = CT::FEps;
      } else if (k.tag == CT::Eps && m.tag == CT::FEps) {
        extra = {cx.finitize(K), M};
        tag = CT::FEps;
      } else if (k.tag == CT::Eps && m.tag == CT::Eps) {
        extra = {K, M};
        tag = CT::Eps;
      }
      ExprId acc = base;
      for (ExprId x : extra) acc = cx.mix(acc, x);
      r = {tag, acc};
      break;
    }
    case Op::Star: {
      Cleaned a = clean(cx, n.a);
      r = {CleanTag::Eps, cx.plus(a.expr)};
      break;
    }
    case Op::ExpB: {
      Cleaned a = clean(cx, n.a);
      r = {CleanTag::Eps, cx.plus_b(a.expr)};
      break;
    }
    case Op::ExpS: {
      Cleaned a = clean(cx, n.a);
      if (a.tag == CleanTag::Eps)
        r = {CleanTag::Eps, cx.plus(a.expr)};
      else
        r = {CleanTag::FEps, cx.plus_s(a.expr)};
      break;
    }
    case Op::ChainRef:
      throw std::invalid_argument("clean: expand chain nodes first");
    default:
      throw std::logic_error("clean: unexpected sugared node");
  }
  cx.memo()[Context::memo_key(kExprTag, 0, e)] = r.expr;
  cx.memo()[Context::memo_key(kCaseTag, 0, e)] = static_cast<ExprId>(r.tag);
  return r;
}

// M is e with B,S exponents turned into stars and EpsFin into Eps (a word
// regex); K is e with EpsFin replaced by the empty constant.  Then
// [[e]] = [[bar M]] + [[K]].
struct FiniteMixSplit {
  ExprId regex;    // M
  ExprId bs_part;  // K, EpsFin-free
};

inline ExprId regex_of(Context& cx, ExprId e) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::Eps:
    case Op::Atom:
      return e;
    case Op::EpsFin: return cx.eps();
    case Op::BarAtom: return cx.atom(n.letter);
    case Op::Finitize: return regex_of(cx, n.a);
    case Op::Concat: return cx.concat(regex_of(cx, n.a), regex_of(cx, n.b));
    case Op::Mix: return cx.mix(regex_of(cx, n.a), regex_of(cx, n.b));
    case Op::Star:
    case Op::ExpB:
    case Op::ExpS:
      return cx.star(regex_of(cx, n.a));
    case Op::Plus:
    case Op::PlusB:
    case Op::PlusS:
      return cx.plus(regex_of(cx, n.a));
    case Op::ChainRef:
      throw std::invalid_argument("regex_of: expand chain nodes first");
  }
  return e;
}

inline ExprId drop_epsfin(Context& cx, ExprId e) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::Eps:
    case Op::Atom:
      return e;
    case Op::EpsFin:
    case Op::BarAtom:
    case Op::Finitize:
      // EpsFin itself, and anything of the form EpsFin . x, collapse to {<>}.
      return cx.empty();
    case Op::Concat: return cx.concat(drop_epsfin(cx, n.a), drop_epsfin(cx, n.b));
    case Op::Mix: return cx.mix(drop_epsfin(cx, n.a), drop_epsfin(cx, n.b));
    case Op::Star: return cx.star(drop_epsfin(cx, n.a));
    case Op::ExpB: return cx.exp_b(drop_epsfin(cx, n.a));
    case Op::ExpS: return cx.exp_s(drop_epsfin(cx, n.a));
    case Op::Plus: return cx.plus(drop_epsfin(cx, n.a));
    case Op::PlusB: return cx.plus_b(drop_epsfin(cx, n.a));
    case Op::PlusS: return cx.plus_s(drop_epsfin(cx, n.a));
    case Op::ChainRef:
      throw std::invalid_argument("split: expand chain nodes first");
  }
  return e;
}

inline FiniteMixSplit split_finite_mix(Context& cx, ExprId e) {
  return {regex_of(cx, e), drop_epsfin(cx, e)};
}

// Rewrites every loop to its EpsFin-free part K.  A loop whose K part has
// no sequence with infinitely many nonempty words denotes the empty
// omega-language and is dropped.  The finitely many bar(M) coordinates a mix
// may sprinkle into the omega-word are absorbed by extending the prefix with
// (M + flatten K)*: any finite interleaving of M-words and finite K
// fragments is such a prefix, and the remaining K coordinates stay a K
// member by subsequence closure.
inline OmegaExpr drop_fepsilon_under_omega(Context& cx, const OmegaExpr& e) {
  OmegaExpr out;
  for (const auto& s : e.summands) {
    ExprId loop = desugar(cx, s.loop);
    FiniteMixSplit sp = split_finite_mix(cx, loop);
    if (!flags(cx, sp.bs_part).inN) continue;
    if (sp.bs_part == loop) {
      out.summands.push_back({s.prefix, loop});
    } else {
      ExprId ext = cx.star(cx.mix(sp.regex, regex_of(cx, sp.bs_part)));
      out.summands.push_back({cx.concat(s.prefix, ext), sp.bs_part});
    }
  }
  return out;
}

// --- pure decomposition --------------------------------------------------

// Finite prefixes of a pure language: every exponent becomes + and every
// letter is barred.
inline ExprId overline_pure(Context& cx, ExprId e) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Atom:
    case Op::BarAtom:
      return cx.bar_atom(n.letter);
    case Op::Concat: return cx.concat(overline_pure(cx, n.a), overline_pure(cx, n.b));
    case Op::Plus:
    case Op::PlusB:
    case Op::PlusS:
      return cx.plus(overline_pure(cx, n.a));
    default:
      throw std::invalid_argument("overline_pure expects a pure expression");
  }
}

namespace detail {

struct LiftBudget {
  long calls = 20000;
  int depth = 0;
  static constexpr int max_depth = 60;
  void spend() {
    if (--calls < 0 || depth > max_depth)
      throw resource_error("mix-lifting budget exhausted (wide mix under exponent)");
  }
};

struct LiftDepth {
  LiftBudget& b;
  explicit LiftDepth(LiftBudget& budget) : b(budget) { ++b.depth; }
  ~LiftDepth() { --b.depth; }
};

inline std::vector<ExprId> dedup(std::vector<ExprId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// (sum_i r_i^+)^+ = (sum_i r_i)^+ : strip one + layer off each part.
inline std::vector<ExprId> strip_plus(Context& cx, std::vector<ExprId> parts) {
  for (auto& p : parts)
    while (cx.node(p).op == Op::Plus) p = cx.node(p).a;
  return dedup(std::move(parts));
}

std::vector<ExprId> lift_plus(Context& cx, std::vector<ExprId> parts, LiftBudget& budget);

inline std::vector<ExprId> lift_plus6(Context& cx, ExprId l1, ExprId l2) {
  ExprId p1 = cx.plus(l1), p2 = cx.plus(l2);
  return {p1,
          p2,
          cx.plus(cx.concat(p2, p1)),
          cx.concat(cx.plus(cx.concat(p2, p1)), p2),
          cx.plus(cx.concat(p1, p2)),
          cx.concat(cx.plus(cx.concat(p1, p2)), p1)};
}

inline std::vector<ExprId> lift_plus(Context& cx, std::vector<ExprId> parts, LiftBudget& budget) {
  LiftDepth guard(budget);
  budget.spend();
  parts = strip_plus(cx, std::move(parts));
  if (parts.empty()) return {};
  if (parts.size() == 1) return {cx.plus(parts[0])};
  if (parts.size() == 2) return dedup(lift_plus6(cx, parts[0], parts[1]));
  // Left-nested use of the binary identity with A the first part and B the
  // mix of the rest.
  ExprId a = parts[0];
  std::vector<ExprId> rest(parts.begin() + 1, parts.end());
  std::vector<ExprId> pb = lift_plus(cx, rest, budget);
  ExprId ap = cx.plus(a);
  std::vector<ExprId> out = {ap};
  for (ExprId q : pb) out.push_back(q);
  std::vector<ExprId> ba;  // parts of (B^+ A^+)^+
  {
    std::vector<ExprId> sub;
    for (ExprId q : pb) sub.push_back(cx.concat(q, ap));
    ba = lift_plus(cx, sub, budget);
  }
  for (ExprId t : ba) out.push_back(t);
  for (ExprId t : ba)
    for (ExprId q : pb) out.push_back(cx.concat(t, q));
  std::vector<ExprId> ab;  // parts of (A^+ B^+)^+
  {
    std::vector<ExprId> sub;
    for (ExprId q : pb) sub.push_back(cx.concat(ap, q));
    ab = lift_plus(cx, sub, budget);
  }
  for (ExprId t : ab) out.push_back(t);
  for (ExprId t : ab) out.push_back(cx.concat(t, ap));
  return dedup(std::move(out));
}

// Same shape with + replaced by B+ throughout.
inline std::vector<ExprId> lift_plusb(Context& cx, std::vector<ExprId> parts, LiftBudget& budget) {
  LiftDepth guard(budget);
  budget.spend();
  parts = dedup(std::move(parts));
  if (parts.empty()) return {};
  if (parts.size() == 1) return {cx.plus_b(parts[0])};
  ExprId a = parts[0];
  std::vector<ExprId> rest(parts.begin() + 1, parts.end());
  std::vector<ExprId> pb =
      parts.size() == 2 ? std::vector<ExprId>{cx.plus_b(parts[1])} : lift_plusb(cx, rest, budget);
  ExprId ap = cx.plus_b(a);
  std::vector<ExprId> out = {ap};
  for (ExprId q : pb) out.push_back(q);
  std::vector<ExprId> ba;
  {
    std::vector<ExprId> sub;
    for (ExprId q : pb) sub.push_back(cx.concat(q, ap));
    ba = lift_plusb(cx, sub, budget);
  }
  for (ExprId t : ba) out.push_back(t);
  for (ExprId t : ba)
    for (ExprId q : pb) out.push_back(cx.concat(t, q));
  std::vector<ExprId> ab;
  {
    std::vector<ExprId> sub;
    for (ExprId q : pb) sub.push_back(cx.concat(ap, q));
    ab = lift_plusb(cx, sub, budget);
  }
  for (ExprId t : ab) out.push_back(t);
  for (ExprId t : ab) out.push_back(cx.concat(t, ap));
  return dedup(std::move(out));
}

// S+ lifting: (L1+L2)^S+ = (L1+L2)* L1^S+ (L1+L2)* + (L1+L2)* L2^S+
// (L1+L2)* + L2* (L1^+ L2^+)^S+ L1*, with the stars expanded as eps + plus
// and the + expansions taken from lift_plus (102 parts for two pure
// arguments).
inline std::vector<ExprId> lift_pluss(Context& cx, std::vector<ExprId> parts, LiftBudget& budget) {
  LiftDepth guard(budget);
  budget.spend();
  parts = dedup(std::move(parts));
  if (parts.empty()) return {};
  if (parts.size() == 1) return {cx.plus_s(parts[0])};

  ExprId a = parts[0];
  std::vector<ExprId> rest(parts.begin() + 1, parts.end());
  std::vector<ExprId> all_plus = lift_plus(cx, parts, budget);

  auto surround = [&](const std::vector<ExprId>& cores) {
    std::vector<ExprId> out;
    for (ExprId core : cores) {
      out.push_back(core);
      for (ExprId s : all_plus) {
        out.push_back(cx.concat(s, core));
        out.push_back(cx.concat(core, s));
        for (ExprId t : all_plus) out.push_back(cx.concat(cx.concat(s, core), t));
      }
    }
    return out;
  };

  std::vector<ExprId> out;
  // (sum)* A^S+ (sum)*
  for (ExprId t : surround({cx.plus_s(a)})) out.push_back(t);
  // (sum)* B^S+ (sum)*
  std::vector<ExprId> bs =
      rest.size() == 1 ? std::vector<ExprId>{cx.plus_s(rest[0])} : lift_pluss(cx, rest, budget);
  for (ExprId t : surround(bs)) out.push_back(t);
  // B* (A^+ B^+)^S+ A*
  std::vector<ExprId> pb = lift_plus(cx, rest, budget);
  ExprId ap = cx.plus(a);
  std::vector<ExprId> core_parts;
  for (ExprId q : pb) core_parts.push_back(cx.concat(ap, q));
  std::vector<ExprId> cores = lift_pluss(cx, core_parts, budget);
  for (ExprId c : cores) {
    out.push_back(c);
    out.push_back(cx.concat(c, ap));
    for (ExprId q : pb) {
      out.push_back(cx.concat(q, c));
      out.push_back(cx.concat(cx.concat(q, c), ap));
    }
  }
  return dedup(std::move(out));
}

std::vector<ExprId> pure_decompose_rec(Context& cx, ExprId e, LiftBudget& budget);

inline std::vector<ExprId> pure_decompose_rec(Context& cx, ExprId e, LiftBudget& budget) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::EpsFin:
    case Op::Eps:
      return {};
    case Op::Atom:
    case Op::BarAtom:
      return {e};
    case Op::Finitize: {
      std::vector<ExprId> inner = pure_decompose_rec(cx, n.a, budget);
      for (auto& p : inner) p = overline_pure(cx, p);
      return dedup(std::move(inner));
    }
    case Op::Mix: {
      std::vector<ExprId> a = pure_decompose_rec(cx, n.a, budget);
      std::vector<ExprId> b = pure_decompose_rec(cx, n.b, budget);
      a.insert(a.end(), b.begin(), b.end());
      return dedup(std::move(a));
    }
    case Op::Concat: {
      CleanTag tk = clean(cx, n.a).tag, tm = clean(cx, n.b).tag;
      std::vector<ExprId> ks = pure_decompose_rec(cx, n.a, budget);
      std::vector<ExprId> ms = pure_decompose_rec(cx, n.b, budget);
      std::vector<ExprId> out;
      for (ExprId k : ks)
        for (ExprId m : ms) out.push_back(cx.concat(k, m));
      auto add_ol = [&](const std::vector<ExprId>& ps) {
        for (ExprId p : ps) out.push_back(overline_pure(cx, p));
      };
      auto add = [&](const std::vector<ExprId>& ps) {
        for (ExprId p : ps) out.push_back(p);
      };
      using CT = CleanTag;
      if (tk == CT::None && tm == CT::FEps) add_ol(ks);
      else if (tk == CT::None && tm == CT::Eps) add(ks);
      else if (tk == CT::FEps && tm == CT::None) add_ol(ms);
      else if (tk == CT::Eps && tm == CT::None) add(ms);
      else if (tk == CT::FEps && tm == CT::FEps) { add_ol(ks); add_ol(ms); }
      else if (tk == CT::FEps && tm == CT::Eps) { add(ks); add_ol(ms); }
      else if (tk == CT::Eps && tm == CT::FEps) { add_ol(ks); add(ms); }
      else if (tk == CT::Eps && tm == CT::Eps) { add(ks); add(ms); }
      return dedup(std::move(out));
    }
    case Op::Star:
      return lift_plus(cx, pure_decompose_rec(cx, n.a, budget), budget);
    case Op::ExpB:
      return lift_plusb(cx, pure_decompose_rec(cx, n.a, budget), budget);
    case Op::ExpS: {
      std::vector<ExprId> inner = pure_decompose_rec(cx, n.a, budget);
      if (clean(cx, n.a).tag == CleanTag::Eps) return lift_plus(cx, inner, budget);
      return lift_pluss(cx, inner, budget);
    }
    case Op::ChainRef:
      throw std::invalid_argument("pure_decompose: expand chain nodes first");
    default:
      throw std::logic_error("pure_decompose: unexpected sugared node");
  }
}

}  // namespace detail

// clean(e) as a mix of pure expressions.  An empty result denotes {<>}.
inline std::vector<ExprId> pure_decompose(Context& cx, ExprId e, long budget_calls = 20000) {
  detail::LiftBudget budget{budget_calls};
  auto parts = detail::pure_decompose_rec(cx, desugar(cx, e), budget);
  for (ExprId p : parts)
    if (!is_pure(cx, p)) throw std::logic_error("pure_decompose produced an impure part");
  return parts;
}

}  // namespace omegabs

#endif  // OMEGABS_NORMALIZE_HPP
