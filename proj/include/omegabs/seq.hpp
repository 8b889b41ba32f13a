// omegabs/seq.hpp - exact finite-sequence semantics for BS-expressions.
//
// Word sequences are finite lists of finite words.  Membership follows the
// definitional semantics directly:
//   * concatenation is coordinatewise on equal-length sequences,
//   * mix partitions the coordinates between the two operands (sound for
//     BS-regular operands, which are closed under deleting and padding
//     coordinates),
//   * the exponents group consecutive coordinates of an inner sequence;
//     empty groups yield empty words.  On finite sequences the B and S side
//     conditions hold vacuously; they are still evaluated on the witness so
//     the collapse to * is checked, not assumed.
//
// fin_enumerate is the exhaustive oracle used throughout the test suite.

#ifndef OMEGABS_SEQ_HPP
#define OMEGABS_SEQ_HPP

#include <set>
#include <string>
#include <vector>

#include "expr.hpp"
#include "parser.hpp"

namespace omegabs {

using Word = std::vector<Letter>;
using WordSequence = std::vector<Word>;

// Grouping witness: non-decreasing cut positions into the inner sequence.
struct GroupingWitness {
  std::vector<size_t> cuts;
};

inline bool non_decreasing(const std::vector<size_t>& g) {
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i] < g[i - 1]) return false;
  return true;
}

// "Bounded difference" and "strongly unbounded difference" for finite
// witnesses: a finite difference sequence satisfies both.
inline bool bounded_difference(const std::vector<size_t>& g) { return non_decreasing(g); }
inline bool strongly_unbounded_difference(const std::vector<size_t>& g) {
  return non_decreasing(g);
}

namespace detail {

struct SeqHash {
  size_t operator()(const std::pair<ExprId, WordSequence>& k) const {
    size_t h = k.first;
    for (auto& w : k.second) {
      h = h * 1000003u + 0x9e3779b9u;
      for (Letter l : w) h = h * 131u + l;
    }
    return h;
  }
};

}  // namespace detail

// Memoizing membership oracle.  Reuse one instance across queries against
// the same Context to share work between candidates.
class FinOracle {
 public:
  explicit FinOracle(Context& cx) : cx_(cx) {}

  bool member(ExprId e, const WordSequence& s) { return mem(desugared(e), s); }

  // For an exponent node, also reports a grouping witness.
  std::optional<GroupingWitness> member_grouping(ExprId e, const WordSequence& s) {
    ExprId d = desugared(e);
    const ExprNode& n = cx_.node(d);
    if (n.op != Op::Star && n.op != Op::ExpB && n.op != Op::ExpS)
      throw std::invalid_argument("member_grouping expects an exponent node");
    std::optional<GroupingWitness> out;
    search_groupings(n.a, s, 0, {}, {}, [&](const std::vector<size_t>& cuts) {
      out = GroupingWitness{cuts};
      return true;
    });
    return out;
  }

 private:
  ExprId desugared(ExprId e) {
    auto it = desugar_cache_.find(e);
    if (it != desugar_cache_.end()) return it->second;
    ExprId d = desugar(cx_, e);
    desugar_cache_[e] = d;
    return d;
  }

  bool mem(ExprId e, const WordSequence& s) {
    auto key = std::make_pair(e, s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = compute(e, s);
    memo_[key] = r;
    return r;
  }

  bool compute(ExprId e, const WordSequence& s) {
    const ExprNode n = cx_.node(e);
    switch (n.op) {
      case Op::Empty:
        return s.empty();
      case Op::EpsFin:
      case Op::Eps: {
        for (auto& w : s)
          if (!w.empty()) return false;
        return true;
      }
      case Op::Atom:
      case Op::BarAtom: {
        for (auto& w : s)
          if (w.size() != 1 || w[0] != n.letter) return false;
        return true;
      }
      case Op::Finitize:
        return mem(n.a, s);
      case Op::Concat: {
        // Coordinatewise splits; odometer over split positions.
        if (s.empty()) return mem(n.a, s) && mem(n.b, s);
        std::vector<size_t> cut(s.size(), 0);
        while (true) {
          WordSequence u(s.size()), v(s.size());
          for (size_t i = 0; i < s.size(); ++i) {
            u[i] = Word(s[i].begin(), s[i].begin() + cut[i]);
            v[i] = Word(s[i].begin() + cut[i], s[i].end());
          }
          if (mem(n.a, u) && mem(n.b, v)) return true;
          size_t i = 0;
          while (i < s.size() && cut[i] == s[i].size()) cut[i++] = 0;
          if (i == s.size()) return false;
          ++cut[i];
        }
      }
      case Op::Mix: {
        size_t m = s.size();
        if (m > 20) throw resource_error("sequence too long for mix search");
        for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
          WordSequence u, v;
          for (size_t i = 0; i < m; ++i) (mask >> i & 1 ? u : v).push_back(s[i]);
          if (mem(n.a, u) && mem(n.b, v)) return true;
        }
        return false;
      }
      case Op::Star:
      case Op::ExpB:
      case Op::ExpS: {
        bool needs_check = n.op != Op::Star;
        bool found = false;
        search_groupings(n.a, s, 0, {}, {}, [&](const std::vector<size_t>& cuts) {
          if (needs_check) {
            // Vacuous on finite witnesses; evaluated so the finite collapse
            // of B and S to * is a checked fact.
            bool ok = n.op == Op::ExpB ? bounded_difference(cuts)
                                       : strongly_unbounded_difference(cuts);
            if (!ok) return false;
          }
          found = true;
          return true;
        });
        return found;
      }
      case Op::ChainRef:
        throw std::invalid_argument("finite membership on chain nodes: expand them first");
      default:
        throw std::logic_error("unexpected sugared node in membership");
    }
  }

  // Splits every coordinate of s into >= 0 nonempty pieces (empty words get
  // zero pieces), recursing coordinate by coordinate; `flat` accumulates the
  // flattened inner sequence and `cuts` the grouping witness.  Calls `sink`
  // on every grouping whose flattened sequence lies in the inner language;
  // stops when the sink returns true.
  template <typename Sink>
  bool search_groupings(ExprId inner, const WordSequence& s, size_t i, WordSequence flat,
                        std::vector<size_t> cuts, Sink&& sink) {
    if (i == s.size()) {
      if (!mem(inner, flat)) return false;
      return sink(cuts);
    }
    const Word& w = s[i];
    if (w.empty()) {
      cuts.push_back(flat.size());
      return search_groupings(inner, s, i + 1, std::move(flat), std::move(cuts),
                              std::forward<Sink>(sink));
    }
    size_t L = w.size();
    // Compositions of w into nonempty pieces: bitmask over the L-1 gaps.
    for (uint64_t gaps = 0; gaps < (1ull << (L - 1)); ++gaps) {
      WordSequence flat2 = flat;
      std::vector<size_t> cuts2 = cuts;
      Word piece;
      for (size_t j = 0; j < L; ++j) {
        piece.push_back(w[j]);
        if (j + 1 == L || (gaps >> j & 1)) {
          flat2.push_back(piece);
          piece.clear();
        }
      }
      cuts2.push_back(flat2.size());
      if (search_groupings(inner, s, i + 1, std::move(flat2), std::move(cuts2), sink))
        return true;
    }
    return false;
  }

  Context& cx_;
  std::unordered_map<ExprId, ExprId> desugar_cache_;
  std::unordered_map<std::pair<ExprId, WordSequence>, bool, detail::SeqHash> memo_;
};

inline bool fin_member(Context& cx, ExprId e, const WordSequence& s) {
  return FinOracle(cx).member(e, s);
}

struct EnumBounds {
  size_t max_len = 3;       // sequence length
  size_t max_word_len = 2;  // per-word length
  size_t cap = 2'000'000;   // candidate-space guard
};

// All candidate sequences over sigma within the bounds, in lexicographic
// order of (length, content).
inline std::vector<WordSequence> all_sequences(const Alphabet& sigma, const EnumBounds& b) {
  std::vector<Word> words;
  words.push_back({});
  size_t from = 0;
  for (size_t l = 1; l <= b.max_word_len; ++l) {
    size_t to = words.size();
    for (size_t i = from; i < to; ++i)
      for (Letter a : sigma.letters) {
        Word w = words[i];
        w.push_back(a);
        words.push_back(std::move(w));
      }
    from = to;
  }
  double count = 0, pw = 1;
  for (size_t k = 0; k <= b.max_len; ++k) {
    count += pw;
    pw *= static_cast<double>(words.size());
  }
  if (count > static_cast<double>(b.cap))
    throw resource_error("candidate space exceeds enumeration cap");
  std::vector<WordSequence> out;
  out.push_back({});
  size_t lo = 0;
  for (size_t k = 1; k <= b.max_len; ++k) {
    size_t hi = out.size();
    for (size_t i = lo; i < hi; ++i)
      for (const Word& w : words) {
        WordSequence s = out[i];
        s.push_back(w);
        out.push_back(std::move(s));
      }
    lo = hi;
  }
  return out;
}

inline std::set<WordSequence> fin_enumerate(Context& cx, ExprId e, const Alphabet& sigma,
                                            const EnumBounds& b = {}) {
  FinOracle oracle(cx);
  std::set<WordSequence> out;
  for (auto& s : all_sequences(sigma, b))
    if (oracle.member(e, s)) out.insert(s);
  return out;
}

// Necessary consequence of subsequence closure, restricted to the
// enumerated fragment: deleting any single coordinate keeps membership.
inline bool subsequence_closed_check(Context& cx, ExprId e, const Alphabet& sigma,
                                     const EnumBounds& b = {}) {
  auto all = fin_enumerate(cx, e, sigma, b);
  for (auto& s : all) {
    for (size_t i = 0; i < s.size(); ++i) {
      WordSequence t;
      for (size_t j = 0; j < s.size(); ++j)
        if (j != i) t.push_back(s[j]);
      if (!all.count(t)) return false;
    }
  }
  return true;
}

// JSON boundary helpers: sequences as arrays of strings, <> as [].
inline std::string word_to_string(const Context& cx, const Word& w) {
  std::string out;
  for (Letter l : w) out += cx.letter_name(l);
  return out;
}

inline Word word_from_string(Context& cx, const std::string& s) {
  Word w;
  for (char c : s) w.push_back(cx.letter(std::string(1, c)));
  return w;
}

}  // namespace omegabs

#endif  // OMEGABS_SEQ_HPP
