#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>

#include "csi/errors.hpp"
#include "csi/ext_real.hpp"
#include "csi/term.hpp"

namespace csi {

/// Timing window with bounds in Q>=0 union {inf}.
struct Interval {
  double lo = 0.0;
  double hi = kPosInf;
  bool lo_closed = true;
  bool hi_closed = false;

  static Interval unbounded() { return Interval{}; }

  static Interval bounded(double lo, double hi) {
    if (lo < 0.0 || hi < lo) throw InvalidParams("invalid interval bounds");
    Interval w;
    w.lo = lo;
    w.hi = hi;
    w.lo_closed = true;
    w.hi_closed = is_finite(hi);
    return w;
  }

  bool is_default() const { return lo == 0.0 && hi == kPosInf; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
           a.hi_closed == b.hi_closed;
  }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// STL formula tree. Core grammar: True, Atom, Not, Or, Until, Since;
/// the remaining cases are sugar that rewrites into the core (desugar()).
struct Formula {
  enum class Kind {
    True,
    Atom,  // term > 0 (strict) or term >= 0 (non-strict)
    Not,
    Or,
    And,
    Implies,
    Until,
    Since,
    Eventually,
    Always,
    Once,
    Historically,
  };

  Kind kind;
  TermPtr term;  // Atom
  bool strict = true;
  Interval window;    // temporal operators
  FormulaPtr lhs, rhs;  // children; unary operators use lhs

  static FormulaPtr make_true() {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::True;
    return f;
  }
  static FormulaPtr atom(TermPtr t, bool strict = true) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Atom;
    f->term = std::move(t);
    f->strict = strict;
    return f;
  }
  static FormulaPtr unary(Kind k, FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    return f;
  }
  static FormulaPtr binary(Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
  }
  static FormulaPtr negate(FormulaPtr a) { return unary(Kind::Not, std::move(a)); }
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::Or, std::move(a), std::move(b));
  }
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::And, std::move(a), std::move(b));
  }
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
    return binary(Kind::Implies, std::move(a), std::move(b));
  }
  static FormulaPtr temporal_binary(Kind k, Interval w, FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->window = w;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
  }
  static FormulaPtr temporal_unary(Kind k, Interval w, FormulaPtr a) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->window = w;
    f->lhs = std::move(a);
    return f;
  }
  static FormulaPtr until(Interval w, FormulaPtr a, FormulaPtr b) {
    return temporal_binary(Kind::Until, w, std::move(a), std::move(b));
  }
  static FormulaPtr since(Interval w, FormulaPtr a, FormulaPtr b) {
    return temporal_binary(Kind::Since, w, std::move(a), std::move(b));
  }
  static FormulaPtr eventually(Interval w, FormulaPtr a) {
    return temporal_unary(Kind::Eventually, w, std::move(a));
  }
  static FormulaPtr always(Interval w, FormulaPtr a) {
    return temporal_unary(Kind::Always, w, std::move(a));
  }
  static FormulaPtr once(Interval w, FormulaPtr a) {
    return temporal_unary(Kind::Once, w, std::move(a));
  }
  static FormulaPtr historically(Interval w, FormulaPtr a) {
    return temporal_unary(Kind::Historically, w, std::move(a));
  }

  bool is_temporal() const {
    switch (kind) {
      case Kind::Until:
      case Kind::Since:
      case Kind::Eventually:
      case Kind::Always:
      case Kind::Once:
      case Kind::Historically: return true;
      default: return false;
    }
  }
};

inline void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::Atom) {
    collect_vars(*f.term, out);
    return;
  }
  if (f.lhs) collect_vars(*f.lhs, out);
  if (f.rhs) collect_vars(*f.rhs, out);
}

inline std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

inline bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::Atom: return a.strict == b.strict && equal(*a.term, *b.term);
    default:
      if (a.is_temporal() && !(a.window == b.window)) return false;
      if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
      if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
      if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
      if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
      return true;
  }
}

/// Rewrites sugar into the core grammar {True, Atom, Not, Or, Until, Since}.
/// Robustness values are preserved exactly; atoms keep their strictness flag
/// (robustness does not distinguish it, Boolean checks do).
inline FormulaPtr desugar(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::True:
    case K::Atom: return f;
    case K::Not: return Formula::negate(desugar(f->lhs));
    case K::Or: return Formula::disjunction(desugar(f->lhs), desugar(f->rhs));
    case K::And:
      return Formula::negate(Formula::disjunction(Formula::negate(desugar(f->lhs)),
                                                  Formula::negate(desugar(f->rhs))));
    case K::Implies:
      return Formula::disjunction(Formula::negate(desugar(f->lhs)), desugar(f->rhs));
    case K::Until:
      return Formula::until(f->window, desugar(f->lhs), desugar(f->rhs));
    case K::Since:
      return Formula::since(f->window, desugar(f->lhs), desugar(f->rhs));
    case K::Eventually:
      return Formula::until(f->window, Formula::make_true(), desugar(f->lhs));
    case K::Always:
      return Formula::negate(Formula::until(f->window, Formula::make_true(),
                                            Formula::negate(desugar(f->lhs))));
    case K::Once:
      return Formula::since(f->window, Formula::make_true(), desugar(f->lhs));
    case K::Historically:
      return Formula::negate(Formula::since(f->window, Formula::make_true(),
                                            Formula::negate(desugar(f->lhs))));
  }
  throw Error("corrupt formula node");
}

namespace detail {

// Precedence levels, loosest to tightest:
//   temporal 0 < '->' 1 < 'or' 2 < 'and' 3 < 'not' 4 < primary 5
inline int formula_prec(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Until:
    case K::Since:
    case K::Eventually:
    case K::Always:
    case K::Once:
    case K::Historically: return 0;
    case K::Implies: return 1;
    case K::Or: return 2;
    case K::And: return 3;
    case K::Not: return 4;
    default: return 5;
  }
}

inline void print_window(const Interval& w, std::string& out) {
  if (w.is_default()) return;
  out += '[';
  out += format_number(w.lo);
  out += ',';
  out += is_finite(w.hi) ? format_number(w.hi) : std::string("inf");
  out += ']';
}

inline void print_formula(const Formula& f, std::string& out, int min_prec) {
  using K = Formula::Kind;
  int prec = formula_prec(f);
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind) {
    case K::True: out += "true"; break;
    case K::Atom:
      detail::print_term(*f.term, out, 0);
      out += f.strict ? " > 0" : " >= 0";
      break;
    case K::Not:
      out += "not ";
      print_formula(*f.lhs, out, 4);
      break;
    case K::And:
      print_formula(*f.lhs, out, 3);
      out += " and ";
      print_formula(*f.rhs, out, 4);
      break;
    case K::Or:
      print_formula(*f.lhs, out, 2);
      out += " or ";
      print_formula(*f.rhs, out, 3);
      break;
    case K::Implies:
      print_formula(*f.lhs, out, 2);
      out += " -> ";
      print_formula(*f.rhs, out, 1);
      break;
    case K::Until:
    case K::Since:
      // Left operand: parens unless it is itself an Until/Since chain head.
      print_formula(*f.lhs, out, f.lhs->kind == K::Until || f.lhs->kind == K::Since ? 0 : 1);
      out += f.kind == K::Until ? " until" : " since";
      print_window(f.window, out);
      out += ' ';
      print_formula(*f.rhs, out, 1);
      break;
    case K::Eventually:
    case K::Always:
    case K::Once:
    case K::Historically:
      switch (f.kind) {
        case K::Eventually: out += "eventually"; break;
        case K::Always: out += "always"; break;
        case K::Once: out += "once"; break;
        default: out += "historically"; break;
      }
      print_window(f.window, out);
      out += ' ';
      print_formula(*f.lhs, out, 0);  // prefix operand extends to the right
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, out, 0);
  return out;
}

}  // namespace csi
