// omegabs/parser.hpp - concrete syntax for BS- and omega-BS-regular
// expressions.
//
//   mix    ::= cat ('+' cat)*
//   cat    ::= post ('.' post)*
//   post   ::= prim ('*' | '^*' | '^+' | '^B+' | '^S+' | '^B' | '^S' | '^w')*
//   prim   ::= '(' mix ')' | '0' | '1f' | '1' | '~' letter | letter
//
// '0' is the empty-sequence constant, '1' the empty-word constant, '1f' its
// finite variant, '~a' the barred letter.  Whitespace is insignificant.
// Letters are single characters from the declared alphabet.
//
// An omega-expression is a '+'-separated sum of summands; each summand is a
// '.'-chain whose last factor carries '^w'.  Factors before it form the
// prefix and must be classical word regexes.

#ifndef OMEGABS_PARSER_HPP
#define OMEGABS_PARSER_HPP

#include <string>
#include <vector>

#include "expr.hpp"

namespace omegabs {

struct Alphabet {
  std::vector<Letter> letters;  // ordered, duplicate free

  bool contains(Letter l) const {
    return std::find(letters.begin(), letters.end(), l) != letters.end();
  }

  // One letter per character of `chars`.
  static Alphabet from_string(Context& cx, const std::string& chars) {
    Alphabet a;
    for (char c : chars) {
      Letter l = cx.letter(c);
      if (a.contains(l)) throw std::invalid_argument("duplicate letter in alphabet");
      a.letters.push_back(l);
    }
    if (a.letters.empty()) throw std::invalid_argument("empty alphabet");
    return a;
  }
};

namespace detail {

class Parser {
 public:
  Parser(Context& cx, const Alphabet& sigma, const std::string& text)
      : cx_(cx), sigma_(sigma), text_(text) {}

  ExprId parse_bs() {
    ExprId e = parse_mix(false);
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    return e;
  }

  OmegaExpr parse_omega() {
    OmegaExpr out;
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("empty omega-expression", pos_);
    out.summands.push_back(parse_omega_summand());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      out.summands.push_back(parse_omega_summand());
      skip_ws();
    }
    if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    return out;
  }

 private:
  // One prefix.loop^w term.  The '^w' must sit on the final '.'-factor.
  OmegaExpr::Summand parse_omega_summand() {
    std::vector<ExprId> factors;
    std::vector<bool> omega;
    factors.push_back(parse_post(true, omega));
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        factors.push_back(parse_post(true, omega));
      } else {
        break;
      }
    }
    size_t w_count = 0;
    for (bool b : omega) w_count += b;
    if (w_count != 1 || !omega.back())
      throw parse_error("each summand needs exactly one trailing ^w factor", pos_);
    ExprId prefix = cx_.eps();
    for (size_t i = 0; i + 1 < factors.size(); ++i) prefix = cx_.concat(prefix, factors[i]);
    if (!is_word_regex(cx_, prefix))
      throw parse_error("omega prefix must be a classical regex", pos_);
    return {prefix, factors.back()};
  }

  ExprId parse_mix(bool) {
    ExprId e = parse_cat();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      e = cx_.mix(e, parse_cat());
      skip_ws();
    }
    return e;
  }

  ExprId parse_cat() {
    std::vector<bool> omega;
    ExprId e = parse_post(false, omega);
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      e = cx_.concat(e, parse_post(false, omega));
      skip_ws();
    }
    return e;
  }

  // `allow_omega` admits a single trailing ^w and records it in `omega`.
  ExprId parse_post(bool allow_omega, std::vector<bool>& omega) {
    ExprId e = parse_prim();
    bool saw_omega = false;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        e = cx_.star(e);
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == '^') {
        size_t at = pos_;
        ++pos_;
        if (pos_ >= text_.size()) throw parse_error("dangling '^'", at);
        char c = text_[pos_++];
        switch (c) {
          case '*': e = cx_.star(e); break;
          case '+': e = cx_.plus(e); break;
          case 'B':
            if (pos_ < text_.size() && text_[pos_] == '+') {
              ++pos_;
              e = cx_.plus_b(e);
            } else {
              e = cx_.exp_b(e);
            }
            break;
          case 'S':
            if (pos_ < text_.size() && text_[pos_] == '+') {
              ++pos_;
              e = cx_.plus_s(e);
            } else {
              e = cx_.exp_s(e);
            }
            break;
          case 'w':
            if (!allow_omega) throw parse_error("'^w' not allowed here", at);
            if (saw_omega) throw parse_error("repeated '^w'", at);
            saw_omega = true;
            break;
          default:
            throw parse_error(std::string("unknown exponent '^") + c + "'", at);
        }
        if (saw_omega && (pos_ < text_.size() && (text_[pos_] == '^' || text_[pos_] == '*')))
          throw parse_error("no exponent may follow '^w'", pos_);
        continue;
      }
      break;
    }
    omega.push_back(saw_omega);
    return e;
  }

  ExprId parse_prim() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprId e = parse_mix(false);
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (c == '0') {
      ++pos_;
      return cx_.empty();
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == 'f') {
        ++pos_;
        return cx_.eps_fin();
      }
      return cx_.eps();
    }
    if (c == '~') {
      size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size()) throw parse_error("dangling '~'", at);
      return cx_.bar_atom(parse_letter());
    }
    return cx_.atom(parse_letter());
  }

  Letter parse_letter() {
    size_t at = pos_;
    char c = text_[pos_];
    if (!(c >= 'a' && c <= 'z')) throw parse_error("expected a letter", at);
    ++pos_;
    auto l = cx_.find_letter(std::string(1, c));
    if (!l || !sigma_.contains(*l))
      throw parse_error(std::string("letter '") + c + "' not in alphabet", at);
    return *l;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  Context& cx_;
  const Alphabet& sigma_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ExprId parse_bs(Context& cx, const std::string& text, const Alphabet& sigma) {
  return detail::Parser(cx, sigma, text).parse_bs();
}

inline OmegaExpr parse_omega(Context& cx, const std::string& text, const Alphabet& sigma) {
  return detail::Parser(cx, sigma, text).parse_omega();
}

}  // namespace omegabs

#endif  // OMEGABS_PARSER_HPP
