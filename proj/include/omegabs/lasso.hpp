// omegabs/lasso.hpp - ultimately periodic words u v^w.
//
// The canonical form has a primitive period (not a proper power of a
// shorter word) and a shortest spoke: while u ends with the last letter of
// v, that letter is rotated into the period.  Canonical pairs are unique
// per omega-word, so they are safe cache keys.

#ifndef OMEGABS_LASSO_HPP
#define OMEGABS_LASSO_HPP

#include <string>
#include <vector>

#include "expr.hpp"

namespace omegabs {

struct Lasso {
  std::vector<Letter> u;
  std::vector<Letter> v;  // nonempty

  bool operator==(const Lasso& o) const { return u == o.u && v == o.v; }
  bool operator<(const Lasso& o) const { return u != o.u ? u < o.u : v < o.v; }
};

inline bool is_primitive(const std::vector<Letter>& v) {
  size_t n = v.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool rep = true;
    for (size_t i = d; i < n && rep; ++i) rep = v[i] == v[i - d];
    if (rep) return false;
  }
  return true;
}

inline Lasso canonical(Lasso w) {
  if (w.v.empty()) throw std::invalid_argument("lasso period must be nonempty");
  // Primitive period.
  size_t n = w.v.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool rep = true;
    for (size_t i = d; i < n && rep; ++i) rep = w.v[i] == w.v[i - d];
    if (rep) {
      w.v.resize(d);
      break;
    }
  }
  // Shortest spoke: rotate shared trailing letters into the period.
  while (!w.u.empty() && w.u.back() == w.v.back()) {
    w.u.pop_back();
    std::rotate(w.v.begin(), w.v.end() - 1, w.v.end());
  }
  return w;
}

inline std::vector<Letter> unfold(const Lasso& w, size_t len) {
  std::vector<Letter> out;
  for (size_t i = 0; out.size() < len && i < w.u.size(); ++i) out.push_back(w.u[i]);
  while (out.size() < len)
    for (Letter l : w.v) {
      if (out.size() >= len) break;
      out.push_back(l);
    }
  return out;
}

// All canonical lassos with |u| <= max_u and |v| <= max_v.
inline std::vector<Lasso> lasso_corpus(const std::vector<Letter>& sigma, size_t max_u,
                                       size_t max_v) {
  std::vector<std::vector<Letter>> words_u = {{}}, words_v;
  size_t from = 0;
  for (size_t l = 1; l <= std::max(max_u, max_v); ++l) {
    size_t to = words_u.size();
    for (size_t i = from; i < to; ++i)
      for (Letter a : sigma) {
        auto w = words_u[i];
        w.push_back(a);
        words_u.push_back(std::move(w));
      }
    from = to;
  }
  std::vector<Lasso> out;
  for (auto& u : words_u) {
    if (u.size() > max_u) continue;
    for (auto& v : words_u) {
      if (v.empty() || v.size() > max_v) continue;
      Lasso c = canonical({u, v});
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string lasso_to_string(const Context& cx, const Lasso& w) {
  std::string s;
  for (Letter l : w.u) s += cx.letter_name(l);
  s += ":";
  for (Letter l : w.v) s += cx.letter_name(l);
  return s;
}

inline Lasso lasso_from_string(Context& cx, const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("lasso format is u:v, e.g. ab:ba or :ab");
  Lasso w;
  for (size_t i = 0; i < colon; ++i) w.u.push_back(cx.letter(std::string(1, s[i])));
  for (size_t i = colon + 1; i < s.size(); ++i) w.v.push_back(cx.letter(std::string(1, s[i])));
  if (w.v.empty()) throw std::invalid_argument("lasso period must be nonempty");
  return w;
}

}  // namespace omegabs

#endif  // OMEGABS_LASSO_HPP
