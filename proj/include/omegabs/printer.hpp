// omegabs/printer.hpp - canonical text output for expressions.
//
// print(parse(t)) is idempotent and parse(print(e)) == e structurally (up to
// the smart-constructor rewrites of Context).  Chain nodes print as an
// opaque CHAIN[...] block and are not parseable; expand them first.

#ifndef OMEGABS_PRINTER_HPP
#define OMEGABS_PRINTER_HPP

#include <sstream>
#include <string>

#include "expr.hpp"

namespace omegabs {

namespace detail {

// Precedence levels: 0 mix, 1 concat, 2 postfix/primary.
inline int prec_of(Op op) {
  switch (op) {
    case Op::Mix: return 0;
    case Op::Concat:
    case Op::Finitize: return 1;
    default: return 2;
  }
}

inline void print_rec(const Context& cx, ExprId e, int min_prec, std::ostream& os) {
  const ExprNode& n = cx.node(e);
  int p = prec_of(n.op);
  bool paren = p < min_prec;
  if (paren) os << '(';
  switch (n.op) {
    case Op::Empty: os << '0'; break;
    case Op::EpsFin: os << "1f"; break;
    case Op::Eps: os << '1'; break;
    case Op::Atom: os << cx.letter_name(n.letter); break;
    case Op::BarAtom: os << '~' << cx.letter_name(n.letter); break;
    case Op::Concat:
      print_rec(cx, n.a, 1, os);
      os << '.';
      print_rec(cx, n.b, 1, os);
      break;
    case Op::Mix:
      print_rec(cx, n.a, 0, os);
      os << " + ";
      print_rec(cx, n.b, 0, os);
      break;
    case Op::Star:
    case Op::Plus:
    case Op::ExpB:
    case Op::ExpS:
    case Op::PlusB:
    case Op::PlusS: {
      // Chained postfix bases keep their own parens so a^B^S round-trips.
      bool base_postfix = prec_of(cx.node(n.a).op) == 2 && cx.node(n.a).a != k_no_expr &&
                          cx.node(n.a).op != Op::ChainRef;
      print_rec(cx, n.a, base_postfix ? 3 : 2, os);
      switch (n.op) {
        case Op::Star: os << "^*"; break;
        case Op::Plus: os << "^+"; break;
        case Op::ExpB: os << "^B"; break;
        case Op::ExpS: os << "^S"; break;
        case Op::PlusB: os << "^B+"; break;
        case Op::PlusS: os << "^S+"; break;
        default: break;
      }
      break;
    }
    case Op::Finitize:
      os << "1f.";
      print_rec(cx, n.a, 2, os);
      break;
    case Op::ChainRef: {
      const ChainGraph& g = cx.chain(n.chain);
      os << "CHAIN[" << g.n_states << ':';
      for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) os << ',';
        os << g.edges[i].from << ">" << g.edges[i].to << ":";
        print_rec(cx, g.edges[i].label, 2, os);
      }
      os << ']';
      break;
    }
  }
  if (paren) os << ')';
}

}  // namespace detail

inline std::string print_bs(const Context& cx, ExprId e) {
  std::ostringstream os;
  detail::print_rec(cx, e, 0, os);
  return os.str();
}

inline std::string print_omega(const Context& cx, const OmegaExpr& e) {
  if (e.summands.empty()) return "0.0^w";  // canonical empty omega-language
  std::ostringstream os;
  for (size_t i = 0; i < e.summands.size(); ++i) {
    if (i) os << " + ";
    const auto& s = e.summands[i];
    if (cx.node(s.prefix).op != Op::Eps) {
      detail::print_rec(cx, s.prefix, 1, os);
      os << '.';
    }
    bool leaf = cx.node(s.loop).a == k_no_expr && cx.node(s.loop).op != Op::ChainRef;
    detail::print_rec(cx, s.loop, leaf ? 2 : 3, os);
    os << "^w";
  }
  return os.str();
}

}  // namespace omegabs

#endif  // OMEGABS_PRINTER_HPP
