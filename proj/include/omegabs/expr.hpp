// omegabs/expr.hpp - expression ASTs for BS- and omega-BS-regular expressions.
//
// All expressions live in a Context: an interning arena of immutable nodes.
// Structurally equal expressions share the same ExprId, so equality is O(1)
// and every analysis below memoizes on node ids.
//
// Node kinds cover three layers that share one arena:
//   * classical word regexes (Empty, Eps, Atom, Concat, Mix, Star) - Mix is
//     read as union on the word level, which coincides with the sequence
//     mix on the languages "all sequences over L",
//   * BS-regular expressions (adds EpsFin, BarAtom, ExpB/ExpS and the +
//     sugar), interpreted over word sequences,
//   * decompilation output (adds Finitize and ChainRef nodes).
//
// Finitize(e) denotes EpsFin . e, the finite-length restriction of e; barred
// atoms are kept primitive so purity is a syntactic check.
// ChainRef points into a side table of chain graphs: finite graphs whose
// edges are labelled by expressions.  A chain graph denotes the closure of
// the edge-path concatenations under finite mix (see interleave.hpp for why
// this is the right reading of the "infinite sum" arising when intersecting
// an S-shaped control language with a star).

#ifndef OMEGABS_EXPR_HPP
#define OMEGABS_EXPR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace omegabs {

using Letter = uint32_t;
using ExprId = uint32_t;

constexpr ExprId k_no_expr = UINT32_MAX;

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Op : uint8_t {
  Empty,    // {<>}
  EpsFin,   // all finite sequences of the empty word
  Eps,      // all sequences of the empty word
  Atom,     // all sequences of a one-letter word
  BarAtom,  // EpsFin . Atom, kept primitive
  Concat,
  Mix,
  Star,
  Plus,   // sugar: e . e*
  ExpB,
  ExpS,
  PlusB,  // sugar: e . e^B
  PlusS,  // sugar: e . e^S
  Finitize,  // EpsFin . e
  ChainRef,
};

struct ExprNode {
  Op op;
  Letter letter = 0;   // Atom / BarAtom
  ExprId a = k_no_expr;
  ExprId b = k_no_expr;
  uint32_t chain = 0;  // ChainRef
  bool operator==(const ExprNode& o) const {
    return op == o.op && letter == o.letter && a == o.a && b == o.b && chain == o.chain;
  }
};

struct ExprNodeHash {
  size_t operator()(const ExprNode& n) const {
    size_t h = static_cast<size_t>(n.op);
    h = h * 1000003u + n.letter;
    h = h * 1000003u + n.a;
    h = h * 1000003u + n.b;
    h = h * 1000003u + n.chain;
    return h;
  }
};

// A chain graph: edges labelled with expressions; the language is the
// finite-mix closure of { label(e1).label(e2)...label(ek) : e1..ek a path
// from an initial to a final state }.  Paths have at least one edge.
struct ChainEdge {
  uint32_t from, to;
  ExprId label;
  bool operator==(const ChainEdge& o) const {
    return from == o.from && to == o.to && label == o.label;
  }
  bool operator<(const ChainEdge& o) const {
    if (from != o.from) return from < o.from;
    if (to != o.to) return to < o.to;
    return label < o.label;
  }
};

struct ChainGraph {
  uint32_t n_states = 0;
  std::vector<ChainEdge> edges;          // kept sorted
  std::vector<uint32_t> initial, final;  // kept sorted
  bool operator==(const ChainGraph& o) const {
    return n_states == o.n_states && edges == o.edges && initial == o.initial && final == o.final;
  }
};

struct ChainGraphHash {
  size_t operator()(const ChainGraph& g) const {
    size_t h = g.n_states;
    for (auto& e : g.edges) h = h * 1000003u + (e.from * 131u + e.to) * 131u + e.label;
    for (auto s : g.initial) h = h * 131u + s;
    for (auto s : g.final) h = h * 131u + s + 7;
    return h;
  }
};

// Interning context.  Owns the letter table, the expression arena and the
// chain graph table.  Not safe for concurrent mutation; use one Context per
// thread and move values across threads by printing/parsing.
class Context {
 public:
  Context() {
    // Reserved letter 0: the word-sequence separator.
    letter_names_.push_back("□");  // white square
    letter_ids_["□"] = 0;
  }

  // --- letters ------------------------------------------------------------

  static constexpr Letter box = 0;

  Letter letter(const std::string& name) {
    auto it = letter_ids_.find(name);
    if (it != letter_ids_.end()) return it->second;
    Letter id = static_cast<Letter>(letter_names_.size());
    letter_names_.push_back(name);
    letter_ids_[name] = id;
    return id;
  }

  Letter letter(char c) { return letter(std::string(1, c)); }

  std::optional<Letter> find_letter(const std::string& name) const {
    auto it = letter_ids_.find(name);
    if (it == letter_ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& letter_name(Letter l) const { return letter_names_.at(l); }
  size_t letter_count() const { return letter_names_.size(); }

  // Marker letters used while eliminating external constraints; disjoint
  // from user letters by the leading '%'.
  Letter fresh_marker() { return letter("%m" + std::to_string(marker_seq_++)); }
  static bool is_marker_name(const std::string& n) { return !n.empty() && n[0] == '%'; }
  bool is_marker(Letter l) const { return is_marker_name(letter_name(l)); }

  // --- expression arena ----------------------------------------------------

  const ExprNode& node(ExprId id) const { return nodes_[id]; }
  size_t node_count() const { return nodes_.size(); }

  ExprId empty() { return intern({Op::Empty}); }
  ExprId eps_fin() { return intern({Op::EpsFin}); }
  ExprId eps() { return intern({Op::Eps}); }
  ExprId atom(Letter l) { return intern({Op::Atom, l}); }
  ExprId bar_atom(Letter l) { return intern({Op::BarAtom, l}); }

  ExprId concat(ExprId a, ExprId b) {
    // {<>} is absorbing for concatenation up to the empty sequence; the
    // cheap rewrites below keep derived expressions small without changing
    // the denoted language.  Nesting is flattened to the left so printing
    // and parsing agree on one canonical shape.
    if (node(a).op == Op::Empty || node(b).op == Op::Empty) return empty();
    if (node(a).op == Op::Eps) return b;
    if (node(b).op == Op::Eps) return a;
    if (node(a).op == Op::EpsFin && node(b).op == Op::EpsFin) return eps_fin();
    if (node(a).op == Op::EpsFin) return finitize(b);
    if (node(b).op == Op::EpsFin) return finitize(a);
    // EpsFin . x commutes within concatenation; float it to the top so the
    // chain has one canonical shape.
    if (node(a).op == Op::Finitize) return finitize(concat(node(a).a, b));
    if (node(b).op == Op::Finitize) return finitize(concat(a, node(b).a));
    if (node(b).op == Op::Concat) return concat(concat(a, node(b).a), node(b).b);
    return intern({Op::Concat, 0, a, b});
  }

  ExprId mix(ExprId a, ExprId b) {
    if (a == b) return a;  // L + L = L
    if (node(a).op == Op::Empty) return b;
    if (node(b).op == Op::Empty) return a;
    if (node(b).op == Op::Mix) return mix(mix(a, node(b).a), node(b).b);
    return intern({Op::Mix, 0, a, b});
  }

  ExprId mix_all(const std::vector<ExprId>& parts) {
    ExprId acc = empty();
    for (ExprId p : parts) acc = mix(acc, p);
    return acc;
  }

  ExprId star(ExprId e) {
    if (node(e).op == Op::Empty || node(e).op == Op::EpsFin || node(e).op == Op::Eps) return eps();
    if (node(e).op == Op::Star) return e;
    return intern({Op::Star, 0, e});
  }
  ExprId exp_b(ExprId e) {
    if (node(e).op == Op::Empty || node(e).op == Op::EpsFin || node(e).op == Op::Eps) return eps();
    return intern({Op::ExpB, 0, e});
  }
  ExprId exp_s(ExprId e) { return intern({Op::ExpS, 0, e}); }
  ExprId plus(ExprId e) { return intern({Op::Plus, 0, e}); }
  ExprId plus_b(ExprId e) { return intern({Op::PlusB, 0, e}); }
  ExprId plus_s(ExprId e) { return intern({Op::PlusS, 0, e}); }

  ExprId finitize(ExprId e) {
    switch (node(e).op) {
      case Op::Empty: return empty();
      case Op::EpsFin:
      case Op::Eps: return eps_fin();
      case Op::BarAtom:
      case Op::Finitize: return e;
      case Op::Atom: return bar_atom(node(e).letter);
      default: return intern({Op::Finitize, 0, e});
    }
  }

  ExprId chain_ref(ChainGraph g) {
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    std::sort(g.initial.begin(), g.initial.end());
    g.initial.erase(std::unique(g.initial.begin(), g.initial.end()), g.initial.end());
    std::sort(g.final.begin(), g.final.end());
    g.final.erase(std::unique(g.final.begin(), g.final.end()), g.final.end());
    auto it = chain_ids_.find(g);
    uint32_t cid;
    if (it != chain_ids_.end()) {
      cid = it->second;
    } else {
      cid = static_cast<uint32_t>(chains_.size());
      chains_.push_back(g);
      chain_ids_[chains_.back()] = cid;
    }
    return intern({Op::ChainRef, 0, k_no_expr, k_no_expr, cid});
  }

  const ChainGraph& chain(uint32_t cid) const { return chains_[cid]; }

  // Generic memo store shared by the structural recursions in other headers.
  // Keyed by (tag, aux, id); tags below 100 are reserved for fixed uses.
  std::unordered_map<uint64_t, ExprId>& memo() { return memo_; }
  uint32_t fresh_memo_tag() { return memo_tag_++; }

  static uint64_t memo_key(uint32_t tag, uint32_t aux, ExprId id) {
    return (static_cast<uint64_t>(tag) << 48) ^ (static_cast<uint64_t>(aux) << 32) ^ id;
  }

 private:
  ExprId intern(ExprNode n) {
    auto it = node_ids_.find(n);
    if (it != node_ids_.end()) return it->second;
    ExprId id = static_cast<ExprId>(nodes_.size());
    nodes_.push_back(n);
    node_ids_[n] = id;
    return id;
  }

  std::vector<std::string> letter_names_;
  std::unordered_map<std::string, Letter> letter_ids_;
  uint64_t marker_seq_ = 0;

  std::vector<ExprNode> nodes_;
  std::unordered_map<ExprNode, ExprId, ExprNodeHash> node_ids_;

  std::vector<ChainGraph> chains_;
  std::unordered_map<ChainGraph, uint32_t, ChainGraphHash> chain_ids_;

  std::unordered_map<uint64_t, ExprId> memo_;
  uint32_t memo_tag_ = 100;
};

// An omega-expression: a finite union of prefix . loop^w summands.  The
// prefix is a classical word regex, the loop a BS-expression (possibly with
// Finitize/ChainRef nodes when produced by decompilation).  Zero summands
// denote the empty omega-language.
struct OmegaExpr {
  struct Summand {
    ExprId prefix;  // word regex; Eps for "no prefix"
    ExprId loop;
  };
  std::vector<Summand> summands;
};

// --- structural utilities ----------------------------------------------

inline void mix_parts_rec(const Context& cx, ExprId e, std::vector<ExprId>& out) {
  if (cx.node(e).op == Op::Mix) {
    mix_parts_rec(cx, cx.node(e).a, out);
    mix_parts_rec(cx, cx.node(e).b, out);
  } else {
    out.push_back(e);
  }
}

inline std::vector<ExprId> mix_parts(const Context& cx, ExprId e) {
  std::vector<ExprId> out;
  mix_parts_rec(cx, e, out);
  return out;
}

// Removes the +, B+, S+ sugar.  Pure expressions keep their exponents; this
// is only for semantic operations that want three exponent cases.
inline ExprId desugar(Context& cx, ExprId e) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::EpsFin:
    case Op::Eps:
    case Op::Atom:
    case Op::BarAtom:
      return e;
    case Op::Concat: return cx.concat(desugar(cx, n.a), desugar(cx, n.b));
    case Op::Mix: return cx.mix(desugar(cx, n.a), desugar(cx, n.b));
    case Op::Star: return cx.star(desugar(cx, n.a));
    case Op::ExpB: return cx.exp_b(desugar(cx, n.a));
    case Op::ExpS: return cx.exp_s(desugar(cx, n.a));
    case Op::Plus: {
      ExprId d = desugar(cx, n.a);
      return cx.concat(d, cx.star(d));
    }
    case Op::PlusB: {
      ExprId d = desugar(cx, n.a);
      return cx.concat(d, cx.exp_b(d));
    }
    case Op::PlusS: {
      ExprId d = desugar(cx, n.a);
      return cx.concat(d, cx.exp_s(d));
    }
    case Op::Finitize: return cx.finitize(desugar(cx, n.a));
    case Op::ChainRef: return e;
  }
  return e;
}

// Relabels atoms through a total letter-to-letter map.  Preserves the
// operator tree.
inline ExprId project(Context& cx, ExprId e,
                      const std::function<Letter(Letter)>& h) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::EpsFin:
    case Op::Eps:
      return e;
    case Op::Atom: return cx.atom(h(n.letter));
    case Op::BarAtom: return cx.bar_atom(h(n.letter));
    case Op::Concat: return cx.concat(project(cx, n.a, h), project(cx, n.b, h));
    case Op::Mix: return cx.mix(project(cx, n.a, h), project(cx, n.b, h));
    case Op::Star: return cx.star(project(cx, n.a, h));
    case Op::Plus: return cx.plus(project(cx, n.a, h));
    case Op::ExpB: return cx.exp_b(project(cx, n.a, h));
    case Op::ExpS: return cx.exp_s(project(cx, n.a, h));
    case Op::PlusB: return cx.plus_b(project(cx, n.a, h));
    case Op::PlusS: return cx.plus_s(project(cx, n.a, h));
    case Op::Finitize: return cx.finitize(project(cx, n.a, h));
    case Op::ChainRef: {
      ChainGraph g = cx.chain(n.chain);
      for (auto& edge : g.edges) edge.label = project(cx, edge.label, h);
      return cx.chain_ref(std::move(g));
    }
  }
  return e;
}

// Substitutes every occurrence of a letter by an expression.  Barred atoms
// go to Finitize(replacement), matching bar(a) = EpsFin . a.
inline ExprId subst_letter(Context& cx, ExprId e, Letter x, ExprId repl) {
  const ExprNode n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::EpsFin:
    case Op::Eps:
      return e;
    case Op::Atom: return n.letter == x ? repl : e;
    case Op::BarAtom: return n.letter == x ? cx.finitize(repl) : e;
    case Op::Concat:
      return cx.concat(subst_letter(cx, n.a, x, repl), subst_letter(cx, n.b, x, repl));
    case Op::Mix:
      return cx.mix(subst_letter(cx, n.a, x, repl), subst_letter(cx, n.b, x, repl));
    case Op::Star: return cx.star(subst_letter(cx, n.a, x, repl));
    case Op::Plus: return cx.plus(subst_letter(cx, n.a, x, repl));
    case Op::ExpB: return cx.exp_b(subst_letter(cx, n.a, x, repl));
    case Op::ExpS: return cx.exp_s(subst_letter(cx, n.a, x, repl));
    case Op::PlusB: return cx.plus_b(subst_letter(cx, n.a, x, repl));
    case Op::PlusS: return cx.plus_s(subst_letter(cx, n.a, x, repl));
    case Op::Finitize: return cx.finitize(subst_letter(cx, n.a, x, repl));
    case Op::ChainRef: {
      ChainGraph g = cx.chain(n.chain);
      for (auto& edge : g.edges) edge.label = subst_letter(cx, edge.label, x, repl);
      return cx.chain_ref(std::move(g));
    }
  }
  return e;
}

inline void letters_of_rec(const Context& cx, ExprId e, std::map<Letter, bool>& seen) {
  const ExprNode& n = cx.node(e);
  if (n.op == Op::Atom || n.op == Op::BarAtom) {
    seen[n.letter] = true;
    return;
  }
  if (n.op == Op::ChainRef) {
    for (auto& edge : cx.chain(n.chain).edges) letters_of_rec(cx, edge.label, seen);
    return;
  }
  if (n.a != k_no_expr) letters_of_rec(cx, n.a, seen);
  if (n.b != k_no_expr) letters_of_rec(cx, n.b, seen);
}

inline std::vector<Letter> letters_of(const Context& cx, ExprId e) {
  std::map<Letter, bool> seen;
  letters_of_rec(cx, e, seen);
  std::vector<Letter> out;
  for (auto& [l, _] : seen) out.push_back(l);
  return out;
}

// Classical word regex check: Empty, Eps, Atom, Concat, Mix, Star, Plus only.
inline bool is_word_regex(const Context& cx, ExprId e) {
  const ExprNode& n = cx.node(e);
  switch (n.op) {
    case Op::Empty:
    case Op::Eps:
    case Op::Atom:
      return true;
    case Op::Concat:
    case Op::Mix:
      return is_word_regex(cx, n.a) && is_word_regex(cx, n.b);
    case Op::Star:
    case Op::Plus:
      return is_word_regex(cx, n.a);
    default:
      return false;
  }
}

// Pure expressions: atoms, barred atoms, concatenation and the +, B+, S+
// exponents only.
inline bool is_pure(const Context& cx, ExprId e) {
  const ExprNode& n = cx.node(e);
  switch (n.op) {
    case Op::Atom:
    case Op::BarAtom:
      return true;
    case Op::Concat: return is_pure(cx, n.a) && is_pure(cx, n.b);
    case Op::Plus:
    case Op::PlusB:
    case Op::PlusS:
      return is_pure(cx, n.a);
    default:
      return false;
  }
}

inline bool contains_op(const Context& cx, ExprId e, Op what) {
  const ExprNode& n = cx.node(e);
  if (n.op == what) return true;
  if (n.op == Op::ChainRef) {
    for (auto& edge : cx.chain(n.chain).edges)
      if (contains_op(cx, edge.label, what)) return true;
    return false;
  }
  if (n.a != k_no_expr && contains_op(cx, n.a, what)) return true;
  if (n.b != k_no_expr && contains_op(cx, n.b, what)) return true;
  return false;
}

}  // namespace omegabs

#endif  // OMEGABS_EXPR_HPP
