// omegabs/profile.hpp - symbolic membership for block-described infinite
// sequences.
//
// A description lists (letter, profile) pairs; the i-th word of the
// described infinite sequence is the concatenation letter_1^{f_1(i)} ...
// letter_k^{f_k(i)}.  Membership is decided for the block-expressible
// fragment: mixes of concatenations of x, x^*, x^B, x^S units over single
// letters.  Every profile kind is either bounded or strongly unbounded, so
// mix splits reduce to plain disjunction.

#ifndef OMEGABS_PROFILE_HPP
#define OMEGABS_PROFILE_HPP

#include <variant>

#include "expr.hpp"

namespace omegabs {

struct BlockProfile {
  enum class Kind : uint8_t { Constant, Linear, Periodic };
  Kind kind;
  uint64_t c = 0;              // Constant value
  uint64_t slope = 1, off = 0; // Linear: f(i) = slope*i + off, slope >= 1
  std::vector<uint64_t> period;

  static BlockProfile constant(uint64_t n) { return {Kind::Constant, n, 1, 0, {}}; }
  static BlockProfile linear(uint64_t a, uint64_t b) {
    if (a < 1) throw std::invalid_argument("linear profile needs slope >= 1");
    return {Kind::Linear, 0, a, b, {}};
  }
  static BlockProfile periodic(std::vector<uint64_t> p) {
    if (p.empty()) throw std::invalid_argument("periodic profile needs a nonempty list");
    return {Kind::Periodic, 0, 1, 0, std::move(p)};
  }

  bool bounded() const { return kind != Kind::Linear; }
  bool strongly_unbounded() const { return kind == Kind::Linear; }
  bool exactly_one() const {
    switch (kind) {
      case Kind::Constant: return c == 1;
      case Kind::Linear: return false;
      case Kind::Periodic:
        for (auto v : period)
          if (v != 1) return false;
        return true;
    }
    return false;
  }
};

using BlockDescription = std::vector<std::pair<Letter, BlockProfile>>;

namespace detail {

struct Unit {
  Letter letter;
  enum class Exp : uint8_t { One, Star, B, S } exp;
};

inline void fragment_units(const Context& cx, ExprId e, std::vector<Unit>& out) {
  const ExprNode& n = cx.node(e);
  switch (n.op) {
    case Op::Concat:
      fragment_units(cx, n.a, out);
      fragment_units(cx, n.b, out);
      return;
    case Op::Atom:
      out.push_back({n.letter, Unit::Exp::One});
      return;
    case Op::Star:
    case Op::ExpB:
    case Op::ExpS: {
      const ExprNode& c = cx.node(n.a);
      if (c.op != Op::Atom)
        throw std::invalid_argument("profile_member: exponent over a non-letter");
      auto exp = n.op == Op::Star ? Unit::Exp::Star
                 : n.op == Op::ExpB ? Unit::Exp::B
                                    : Unit::Exp::S;
      out.push_back({c.letter, exp});
      return;
    }
    default:
      throw std::invalid_argument("profile_member: expression outside the block fragment");
  }
}

inline bool units_match(const std::vector<Unit>& units, const BlockDescription& d) {
  if (units.size() != d.size()) return false;
  for (size_t i = 0; i < units.size(); ++i) {
    if (units[i].letter != d[i].first) return false;
    const BlockProfile& p = d[i].second;
    switch (units[i].exp) {
      case Unit::Exp::One:
        if (!p.exactly_one()) return false;
        break;
      case Unit::Exp::Star: break;
      case Unit::Exp::B:
        if (!p.bounded()) return false;
        break;
      case Unit::Exp::S:
        if (!p.strongly_unbounded()) return false;
        break;
    }
  }
  return true;
}

}  // namespace detail

inline bool profile_member(const Context& cx, ExprId e, const BlockDescription& d) {
  const ExprNode& n = cx.node(e);
  if (n.op == Op::Mix)
    return profile_member(cx, n.a, d) || profile_member(cx, n.b, d);
  std::vector<detail::Unit> units;
  detail::fragment_units(cx, e, units);
  return detail::units_match(units, d);
}

}  // namespace omegabs

#endif  // OMEGABS_PROFILE_HPP
