// omegabs/automata.hpp - omega-BS counter automata and word-sequence
// automata.
//
// Transitions carry one action per counter: increment, reset or skip.
// Counters are blind; acceptance of an infinite run asks every counter's
// between-reset increment sequence to be infinite and bounded (B) or
// tending to infinity (S).  The hierarchical subclass restricts actions to
// eps / I_k / R_k, where touching counter k resets all lower ones; it is a
// validated view over the general per-counter representation.

#ifndef OMEGABS_AUTOMATA_HPP
#define OMEGABS_AUTOMATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "lasso.hpp"

namespace omegabs {

using State = uint32_t;

enum class CKind : uint8_t { B, S };
enum class CAct : uint8_t { E, I, R };

struct Transition {
  State from;
  Letter letter;
  std::vector<CAct> acts;  // one per counter
  State to;

  bool operator==(const Transition& o) const {
    return from == o.from && letter == o.letter && acts == o.acts && to == o.to;
  }
  bool operator<(const Transition& o) const {
    if (from != o.from) return from < o.from;
    if (letter != o.letter) return letter < o.letter;
    if (to != o.to) return to < o.to;
    return acts < o.acts;
  }
};

struct HierAction {
  enum class Kind : uint8_t { Eps, Inc, Reset } kind = Kind::Eps;
  uint32_t k = 0;  // 1-based counter index for Inc/Reset
};

enum class AutoKind : uint8_t { Omega, WordSeq };

struct Automaton {
  AutoKind kind = AutoKind::Omega;
  uint32_t n_states = 0;
  State initial = 0;
  std::vector<CKind> counters;
  std::vector<Transition> transitions;
  std::vector<bool> accepting;      // WordSeq variant only
  std::vector<std::string> labels;  // optional per-state provenance
  std::vector<Letter> alphabet;

  bool is_hierarchical() const;
  std::string label(State s) const {
    return s < labels.size() && !labels[s].empty() ? labels[s] : "q" + std::to_string(s);
  }
};

// eps / I_k / R_k view of an action vector, if it has that shape.
inline std::optional<HierAction> hier_view(const std::vector<CAct>& acts) {
  uint32_t n = static_cast<uint32_t>(acts.size());
  uint32_t top = 0;  // last touched counter, 1-based
  for (uint32_t i = 0; i < n; ++i)
    if (acts[i] != CAct::E) top = i + 1;
  if (top == 0) return HierAction{HierAction::Kind::Eps, 0};
  for (uint32_t i = 0; i + 1 < top; ++i)
    if (acts[i] != CAct::R) return std::nullopt;
  if (acts[top - 1] == CAct::R) return HierAction{HierAction::Kind::Reset, top};
  return HierAction{HierAction::Kind::Inc, top};
}

inline std::vector<CAct> hier_acts(uint32_t n_counters, HierAction h) {
  std::vector<CAct> acts(n_counters, CAct::E);
  switch (h.kind) {
    case HierAction::Kind::Eps: break;
    case HierAction::Kind::Reset:
      for (uint32_t i = 0; i < h.k; ++i) acts[i] = CAct::R;
      break;
    case HierAction::Kind::Inc:
      for (uint32_t i = 0; i + 1 < h.k; ++i) acts[i] = CAct::R;
      acts[h.k - 1] = CAct::I;
      break;
  }
  return acts;
}

inline bool Automaton::is_hierarchical() const {
  for (auto& t : transitions)
    if (!hier_view(t.acts)) return false;
  return true;
}

inline void validate(const Automaton& a) {
  if (a.initial >= a.n_states && a.n_states > 0)
    throw std::invalid_argument("automaton: initial state out of range");
  if (a.kind == AutoKind::WordSeq && a.accepting.size() != a.n_states)
    throw std::invalid_argument("automaton: accepting set size mismatch");
  for (auto& t : a.transitions) {
    if (t.from >= a.n_states || t.to >= a.n_states)
      throw std::invalid_argument("automaton: transition state out of range");
    if (t.acts.size() != a.counters.size())
      throw std::invalid_argument("automaton: action arity mismatch");
  }
}

inline void sort_transitions(Automaton& a) {
  std::sort(a.transitions.begin(), a.transitions.end());
  a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                      a.transitions.end());
}

// Restriction to states reachable from the initial state.
inline Automaton prune_unreachable(const Automaton& a) {
  std::vector<bool> seen(a.n_states, false);
  if (a.n_states == 0) return a;
  std::vector<State> work = {a.initial};
  seen[a.initial] = true;
  std::vector<std::vector<const Transition*>> out(a.n_states);
  for (auto& t : a.transitions) out[t.from].push_back(&t);
  while (!work.empty()) {
    State s = work.back();
    work.pop_back();
    for (auto* t : out[s])
      if (!seen[t->to]) {
        seen[t->to] = true;
        work.push_back(t->to);
      }
  }
  std::vector<State> remap(a.n_states, UINT32_MAX);
  Automaton r;
  r.kind = a.kind;
  r.counters = a.counters;
  r.alphabet = a.alphabet;
  for (State s = 0; s < a.n_states; ++s)
    if (seen[s]) {
      remap[s] = r.n_states++;
      r.labels.push_back(s < a.labels.size() ? a.labels[s] : "");
      if (a.kind == AutoKind::WordSeq) r.accepting.push_back(a.accepting[s]);
    }
  r.initial = remap[a.initial];
  for (auto& t : a.transitions)
    if (seen[t.from] && seen[t.to]) r.transitions.push_back({remap[t.from], t.letter, t.acts, remap[t.to]});
  sort_transitions(r);
  return r;
}

// --- runs and counter valuations -----------------------------------------

using Run = std::vector<Transition>;

struct Valuation {
  std::vector<uint64_t> segments;  // increments before each reset, in order
  uint64_t open_tail = 0;          // increments after the last reset
};

inline Valuation valuation(const Run& r, uint32_t counter) {
  Valuation v;
  uint64_t cur = 0;
  for (size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i].to != r[i + 1].from) throw std::invalid_argument("run does not chain");
  for (auto& t : r) {
    CAct a = t.acts.at(counter);
    if (a == CAct::I) ++cur;
    if (a == CAct::R) {
      v.segments.push_back(cur);
      cur = 0;
    }
  }
  v.open_tail = cur;
  return v;
}

// --- constructions --------------------------------------------------------

inline void require_same_alphabet(const Automaton& a, const Automaton& b) {
  std::vector<Letter> x = a.alphabet, y = b.alphabet;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y) throw std::invalid_argument("alphabet mismatch");
}

// Standard synchronized product; counters are the disjoint union, so the
// product recognizes the intersection.
inline Automaton product(const Automaton& a, const Automaton& b) {
  if (a.kind != AutoKind::Omega || b.kind != AutoKind::Omega)
    throw std::invalid_argument("product expects omega automata");
  require_same_alphabet(a, b);
  Automaton r;
  r.kind = AutoKind::Omega;
  r.alphabet = a.alphabet;
  r.counters = a.counters;
  r.counters.insert(r.counters.end(), b.counters.begin(), b.counters.end());

  std::vector<std::vector<const Transition*>> outa(a.n_states), outb(b.n_states);
  for (auto& t : a.transitions) outa[t.from].push_back(&t);
  for (auto& t : b.transitions) outb[t.from].push_back(&t);

  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> work;
  auto get = [&](State p, State q) {
    auto it = ids.find({p, q});
    if (it != ids.end()) return it->second;
    State s = r.n_states++;
    ids[{p, q}] = s;
    r.labels.push_back("(" + a.label(p) + "," + b.label(q) + ")");
    work.push_back({p, q});
    return s;
  };
  r.initial = get(a.initial, b.initial);
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    State from = ids[{p, q}];
    for (auto* ta : outa[p])
      for (auto* tb : outb[q]) {
        if (ta->letter != tb->letter) continue;
        std::vector<CAct> acts = ta->acts;
        acts.insert(acts.end(), tb->acts.begin(), tb->acts.end());
        r.transitions.push_back({from, ta->letter, std::move(acts), get(ta->to, tb->to)});
      }
  }
  sort_transitions(r);
  return r;
}

inline Automaton project_automaton(const Automaton& a,
                                   const std::function<Letter(Letter)>& h) {
  Automaton r = a;
  for (auto& t : r.transitions) t.letter = h(t.letter);
  std::vector<Letter> al;
  for (Letter l : r.alphabet) al.push_back(h(l));
  std::sort(al.begin(), al.end());
  al.erase(std::unique(al.begin(), al.end()), al.end());
  r.alphabet = al;
  sort_transitions(r);
  return r;
}

// --- classical Buchi automata ---------------------------------------------

struct Buchi {
  uint32_t n_states = 0;
  State initial = 0;
  std::vector<std::tuple<State, Letter, State>> transitions;
  std::vector<bool> accepting;
  std::vector<Letter> alphabet;
};

// One B-counter reset at accepting states (never incremented), or one
// S-counter with a nondeterministic increment-or-reset choice at accepting
// states.
enum class EmbedMode : uint8_t { B, S };

inline Automaton buchi_embed(const Buchi& b, EmbedMode mode) {
  Automaton r;
  r.kind = AutoKind::Omega;
  r.n_states = b.n_states;
  r.initial = b.initial;
  r.alphabet = b.alphabet;
  r.counters = {mode == EmbedMode::B ? CKind::B : CKind::S};
  for (auto& [p, l, q] : b.transitions) {
    bool hit = b.accepting[q];
    if (!hit) {
      r.transitions.push_back({p, l, {CAct::E}, q});
    } else if (mode == EmbedMode::B) {
      r.transitions.push_back({p, l, {CAct::R}, q});
    } else {
      r.transitions.push_back({p, l, {CAct::I}, q});
      r.transitions.push_back({p, l, {CAct::R}, q});
    }
  }
  sort_transitions(r);
  return r;
}

// Deterministic Buchi automaton for the single omega-word u v^w.
inline Buchi lasso_buchi(const Lasso& w, const std::vector<Letter>& alphabet) {
  Buchi b;
  b.alphabet = alphabet;
  uint32_t n = static_cast<uint32_t>(w.u.size() + w.v.size());
  b.n_states = n;
  b.initial = 0;
  b.accepting.assign(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    Letter l = i < w.u.size() ? w.u[i] : w.v[i - w.u.size()];
    uint32_t next = i + 1 == n ? static_cast<uint32_t>(w.u.size()) : i + 1;
    b.transitions.push_back({i, l, next});
    if (i >= w.u.size()) b.accepting[i] = true;
  }
  return b;
}

// Independent classical oracle: u v^w is accepted iff the product of the
// automaton with the lasso walk has a reachable accepting state on a cycle.
inline bool classical_lasso_member(const Buchi& b, const Lasso& w) {
  uint32_t m = static_cast<uint32_t>(w.u.size() + w.v.size());
  if (m == w.u.size()) throw std::invalid_argument("lasso period empty");
  auto letter_at = [&](uint32_t pos) {
    return pos < w.u.size() ? w.u[pos] : w.v[pos - w.u.size()];
  };
  auto next_pos = [&](uint32_t pos) {
    return pos + 1 == m ? static_cast<uint32_t>(w.u.size()) : pos + 1;
  };
  auto id = [&](State q, uint32_t pos) { return q * m + pos; };
  size_t nn = static_cast<size_t>(b.n_states) * m;
  std::vector<bool> seen(nn, false);
  std::vector<std::vector<std::pair<State, Letter>>> out(b.n_states);
  for (auto& [p, l, q] : b.transitions) out[p].push_back({q, l});
  std::vector<uint32_t> work;
  if (b.n_states == 0) return false;
  seen[id(b.initial, 0)] = true;
  work.push_back(id(b.initial, 0));
  std::vector<uint32_t> nodes;
  while (!work.empty()) {
    uint32_t n0 = work.back();
    work.pop_back();
    nodes.push_back(n0);
    State q = n0 / m;
    uint32_t pos = n0 % m;
    for (auto& [q2, l] : out[q]) {
      if (l != letter_at(pos)) continue;
      uint32_t n2 = id(q2, next_pos(pos));
      if (!seen[n2]) {
        seen[n2] = true;
        work.push_back(n2);
      }
    }
  }
  // For each reachable accepting node in the cycle region, check it lies on
  // a cycle (reaches itself).
  for (uint32_t n0 : nodes) {
    State q = n0 / m;
    uint32_t pos = n0 % m;
    if (!b.accepting[q] || pos < w.u.size()) continue;
    std::vector<bool> vis(nn, false);
    std::vector<uint32_t> stk = {n0};
    vis[n0] = true;
    bool looped = false;
    while (!stk.empty() && !looped) {
      uint32_t x = stk.back();
      stk.pop_back();
      State qq = x / m;
      uint32_t pp = x % m;
      for (auto& [q2, l] : out[qq]) {
        if (l != letter_at(pp)) continue;
        uint32_t y = id(q2, next_pos(pp));
        if (y == n0) {
          looped = true;
          break;
        }
        if (!vis[y]) {
          vis[y] = true;
          stk.push_back(y);
        }
      }
    }
    if (looped) return true;
  }
  return false;
}

// The box-separator encoding of a word-sequence automaton: an omega
// automaton over Sigma + box with (q, R, q_I) box-transitions from every
// accepting q, R resetting every counter.
inline Automaton seq_automaton_encode(const Automaton& a) {
  if (a.kind != AutoKind::WordSeq)
    throw std::invalid_argument("seq_automaton_encode expects a word-sequence automaton");
  Automaton r = a;
  r.kind = AutoKind::Omega;
  r.accepting.clear();
  r.alphabet.push_back(Context::box);
  std::vector<CAct> reset_all(a.counters.size(), CAct::R);
  for (State q = 0; q < a.n_states; ++q)
    if (a.accepting[q]) r.transitions.push_back({q, Context::box, reset_all, a.initial});
  sort_transitions(r);
  return r;
}

}  // namespace omegabs

#endif  // OMEGABS_AUTOMATA_HPP
