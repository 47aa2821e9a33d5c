#pragma once

#include <charconv>
#include <cmath>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "csi/errors.hpp"

namespace csi {

/// Formats a double with the shortest representation that round-trips.
inline std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Arithmetic expression over named variables and rational constants.
struct Term {
  enum class Kind { Var, Const, Add, Sub, Mul, Div, Neg };

  Kind kind;
  std::string name;  // Var
  double value = 0.0;  // Const
  TermPtr lhs, rhs;  // children; Neg uses lhs only

  static TermPtr var(std::string n) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->name = std::move(n);
    return t;
  }
  static TermPtr constant(double v) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Const;
    t->value = v;
    return t;
  }
  static TermPtr binary(Kind k, TermPtr a, TermPtr b) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
  }
  static TermPtr add(TermPtr a, TermPtr b) { return binary(Kind::Add, std::move(a), std::move(b)); }
  static TermPtr sub(TermPtr a, TermPtr b) { return binary(Kind::Sub, std::move(a), std::move(b)); }
  static TermPtr mul(TermPtr a, TermPtr b) { return binary(Kind::Mul, std::move(a), std::move(b)); }
  static TermPtr div(TermPtr a, TermPtr b) { return binary(Kind::Div, std::move(a), std::move(b)); }
  static TermPtr neg(TermPtr a) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Neg;
    t->lhs = std::move(a);
    return t;
  }
};

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var: out.insert(t.name); break;
    case Term::Kind::Const: break;
    case Term::Kind::Neg: collect_vars(*t.lhs, out); break;
    default:
      collect_vars(*t.lhs, out);
      collect_vars(*t.rhs, out);
  }
}

/// The set R of variable names referenced by the term.
inline std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

/// Evaluates the term; `lookup(name)` supplies variable values.
template <class Lookup>
double eval_term(const Term& t, Lookup&& lookup) {
  switch (t.kind) {
    case Term::Kind::Var: return lookup(t.name);
    case Term::Kind::Const: return t.value;
    case Term::Kind::Add: return eval_term(*t.lhs, lookup) + eval_term(*t.rhs, lookup);
    case Term::Kind::Sub: return eval_term(*t.lhs, lookup) - eval_term(*t.rhs, lookup);
    case Term::Kind::Mul: return eval_term(*t.lhs, lookup) * eval_term(*t.rhs, lookup);
    case Term::Kind::Div: {
      double num = eval_term(*t.lhs, lookup);
      double den = eval_term(*t.rhs, lookup);
      if (std::fabs(den) < 1e-12) throw EvalError("division by near-zero value");
      return num / den;
    }
    case Term::Kind::Neg: return -eval_term(*t.lhs, lookup);
  }
  throw EvalError("corrupt term node");
}

inline bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Var: return a.name == b.name;
    case Term::Kind::Const: return a.value == b.value;
    case Term::Kind::Neg: return equal(*a.lhs, *b.lhs);
    default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

namespace detail {

// Precedence: additive 1, multiplicative 2, unary minus 3, leaf 4.
inline int term_prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Mul:
    case Term::Kind::Div: return 2;
    case Term::Kind::Neg: return 3;
    default: return 4;
  }
}

inline void print_term(const Term& t, std::string& out, int parent_prec) {
  int prec = term_prec(t);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (t.kind) {
    case Term::Kind::Var: out += t.name; break;
    case Term::Kind::Const:
      if (t.value < 0) {
        out += '(';
        out += format_number(t.value);
        out += ')';
      } else {
        out += format_number(t.value);
      }
      break;
    case Term::Kind::Add:
      print_term(*t.lhs, out, prec);
      out += " + ";
      print_term(*t.rhs, out, prec + 1);
      break;
    case Term::Kind::Sub:
      print_term(*t.lhs, out, prec);
      out += " - ";
      print_term(*t.rhs, out, prec + 1);
      break;
    case Term::Kind::Mul:
      print_term(*t.lhs, out, prec);
      out += " * ";
      print_term(*t.rhs, out, prec + 1);
      break;
    case Term::Kind::Div:
      print_term(*t.lhs, out, prec);
      out += " / ";
      print_term(*t.rhs, out, prec + 1);
      break;
    case Term::Kind::Neg:
      out += '-';
      print_term(*t.lhs, out, prec + 1);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out, 0);
  return out;
}

}  // namespace csi
