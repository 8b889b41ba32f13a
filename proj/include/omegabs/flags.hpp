// omegabs/flags.hpp - the decidable emptiness flags of BS-expressions.
//
// inI: the language contains an infinite word sequence.
// inN: it contains a sequence with infinitely many nonempty words.
// The two auxiliary flags hasCoord (some sequence of length >= 1) and
// hasWord (some sequence containing a nonempty word) make the flag vector a
// monoid under concatenation, which is what the chain-graph evaluation
// folds along edge paths.
//
// For a chain graph the flags are computed by reachability over pairs
// (state, accumulated flag vector): a chain denotes the finite-mix closure
// of its path languages, so a flag holds iff some single path achieves it.

#ifndef OMEGABS_FLAGS_HPP
#define OMEGABS_FLAGS_HPP

#include <unordered_map>

#include "expr.hpp"

namespace omegabs {

struct FlagVector {
  bool inI = false;
  bool inN = false;
};

struct RichFlags {
  bool inI = false, inN = false, hasCoord = false, hasWord = false;

  uint8_t pack() const {
    return static_cast<uint8_t>(inI | inN << 1 | hasCoord << 2 | hasWord << 3);
  }
  bool operator==(const RichFlags& o) const { return pack() == o.pack(); }
};

inline RichFlags flags_or(RichFlags a, RichFlags b) {
  return {a.inI || b.inI, a.inN || b.inN, a.hasCoord || b.hasCoord, a.hasWord || b.hasWord};
}

inline RichFlags flags_concat(RichFlags a, RichFlags b) {
  RichFlags r;
  r.inI = a.inI && b.inI;
  r.inN = (a.inI && b.inN) || (a.inN && b.inI);
  r.hasCoord = a.hasCoord && b.hasCoord;
  r.hasWord = (a.hasWord && b.hasCoord) || (a.hasCoord && b.hasWord);
  return r;
}

class FlagOracle {
 public:
  explicit FlagOracle(Context& cx) : cx_(cx) {}

  RichFlags rich(ExprId e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    RichFlags r = compute(e);
    memo_[e] = r;
    return r;
  }

  FlagVector flags(ExprId e) {
    RichFlags r = rich(e);
    return {r.inI, r.inN};
  }

 private:
  RichFlags compute(ExprId e) {
    const ExprNode n = cx_.node(e);
    switch (n.op) {
      case Op::Empty: return {false, false, false, false};
      case Op::EpsFin: return {false, false, true, false};
      case Op::Eps: return {true, false, true, false};
      case Op::Atom: return {true, true, true, true};
      case Op::BarAtom: return {false, false, true, true};
      case Op::Finitize: {
        RichFlags a = rich(n.a);
        return {false, false, a.hasCoord, a.hasWord};
      }
      case Op::Concat: return flags_concat(rich(n.a), rich(n.b));
      case Op::Mix: return flags_or(rich(n.a), rich(n.b));
      case Op::Star:
      case Op::ExpB: {
        RichFlags a = rich(n.a);
        return {true, a.inN, true, a.hasWord};
      }
      case Op::ExpS: {
        RichFlags a = rich(n.a);
        return {a.inI, a.inN, true, a.hasWord};
      }
      case Op::Plus:
      case Op::PlusB: {
        RichFlags a = rich(n.a);
        return {a.inI, a.inN, a.hasCoord, a.hasWord};
      }
      case Op::PlusS: {
        RichFlags a = rich(n.a);
        return {a.inI, a.inN, a.hasCoord, a.hasWord};
      }
      case Op::ChainRef: return chain_flags(cx_.chain(n.chain));
    }
    return {};
  }

  RichFlags chain_flags(const ChainGraph& g) {
    // (state, packed flags) reachability along edges, seeded from initial
    // states with one-edge paths.
    std::vector<uint16_t> seen(g.n_states, 0);  // bitset over packed values
    std::vector<std::pair<uint32_t, RichFlags>> work;
    auto push = [&](uint32_t s, RichFlags f) {
      uint16_t bit = static_cast<uint16_t>(1u << f.pack());
      if (seen[s] & bit) return;
      seen[s] |= bit;
      work.emplace_back(s, f);
    };
    std::vector<std::vector<const ChainEdge*>> out(g.n_states);
    for (auto& e : g.edges) out[e.from].push_back(&e);
    for (uint32_t s : g.initial)
      for (auto* e : out[s]) push(e->to, rich(e->label));
    while (!work.empty()) {
      auto [s, f] = work.back();
      work.pop_back();
      for (auto* e : out[s]) push(e->to, flags_concat(f, rich(e->label)));
    }
    RichFlags r;
    for (uint32_t s : g.final)
      for (int p = 0; p < 16; ++p)
        if (seen[s] & (1u << p))
          r = flags_or(r, RichFlags{bool(p & 1), bool(p & 2), bool(p & 4), bool(p & 8)});
    return r;
  }

  Context& cx_;
  std::unordered_map<ExprId, RichFlags> memo_;
};

inline FlagVector flags(Context& cx, ExprId e) { return FlagOracle(cx).flags(e); }

// Classical nonemptiness of a word regex (the prefix part of
// omega-expressions).
inline bool regex_nonempty(const Context& cx, ExprId e) {
  const ExprNode& n = cx.node(e);
  switch (n.op) {
    case Op::Empty: return false;
    case Op::Eps:
    case Op::Atom:
    case Op::Star:
      return true;
    case Op::Concat: return regex_nonempty(cx, n.a) && regex_nonempty(cx, n.b);
    case Op::Mix: return regex_nonempty(cx, n.a) || regex_nonempty(cx, n.b);
    case Op::Plus: return regex_nonempty(cx, n.a);
    default: throw std::invalid_argument("not a word regex");
  }
}

}  // namespace omegabs

#endif  // OMEGABS_FLAGS_HPP
