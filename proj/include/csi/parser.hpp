#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "csi/errors.hpp"
#include "csi/formula.hpp"

namespace csi {

namespace detail {

enum class Tok {
  End,
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  Gt,
  Ge,
  Lt,
  Le,
  Arrow,
  KwTrue,
  KwNot,
  KwAnd,
  KwOr,
  KwUntil,
  KwSince,
  KwAlways,
  KwEventually,
  KwOnce,
  KwHistorically,
  KwInf,
};

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline const char* tok_name(Tok k) {
  switch (k) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Arrow: return "'->'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwNot: return "'not'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwOr: return "'or'";
    case Tok::KwUntil: return "'until'";
    case Tok::KwSince: return "'since'";
    case Tok::KwAlways: return "'always'";
    case Tok::KwEventually: return "'eventually'";
    case Tok::KwOnce: return "'once'";
    case Tok::KwHistorically: return "'historically'";
    case Tok::KwInf: return "'inf'";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

private:
  void tokenize() {
    std::size_t i = 0, line = 1, col = 1;
    auto push = [&](Tok k, std::size_t begin, std::size_t len, std::size_t c) {
      Token t;
      t.kind = k;
      t.text = std::string(text_.substr(begin, len));
      t.line = line;
      t.column = c;
      tokens_.push_back(std::move(t));
    };
    while (i < text_.size()) {
      char ch = text_[i];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        ++col;
        continue;
      }
      std::size_t start = i, start_col = col;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_'))
          ++i, ++col;
        std::string_view word = text_.substr(start, i - start);
        Tok k = keyword(word);
        push(k, start, i - start, start_col);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)) ||
          (ch == '.' && i + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        while (i < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[i])) || text_[i] == '.'))
          ++i, ++col;
        if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
          if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            col += j - i;
            i = j;
          }
        }
        Token t;
        t.kind = Tok::Number;
        t.text = std::string(text_.substr(start, i - start));
        t.number = std::strtod(t.text.c_str(), nullptr);
        t.line = line;
        t.column = start_col;
        tokens_.push_back(std::move(t));
        continue;
      }
      auto two = text_.substr(i, 2);
      if (two == "->") { push(Tok::Arrow, i, 2, start_col); i += 2; col += 2; continue; }
      if (two == ">=") { push(Tok::Ge, i, 2, start_col); i += 2; col += 2; continue; }
      if (two == "<=") { push(Tok::Le, i, 2, start_col); i += 2; col += 2; continue; }
      switch (ch) {
        case '(': push(Tok::LParen, i, 1, start_col); break;
        case ')': push(Tok::RParen, i, 1, start_col); break;
        case '[': push(Tok::LBracket, i, 1, start_col); break;
        case ']': push(Tok::RBracket, i, 1, start_col); break;
        case ',': push(Tok::Comma, i, 1, start_col); break;
        case '+': push(Tok::Plus, i, 1, start_col); break;
        case '-': push(Tok::Minus, i, 1, start_col); break;
        case '*': push(Tok::Star, i, 1, start_col); break;
        case '/': push(Tok::Slash, i, 1, start_col); break;
        case '>': push(Tok::Gt, i, 1, start_col); break;
        case '<': push(Tok::Lt, i, 1, start_col); break;
        default: {
          // Collect the run of operator-ish characters for the message.
          std::size_t j = i;
          while (j < text_.size() && !std::isspace(static_cast<unsigned char>(text_[j])) &&
                 !std::isalnum(static_cast<unsigned char>(text_[j])) && text_[j] != '(' &&
                 text_[j] != ')')
            ++j;
          throw UnknownOperator(line, start_col,
                                std::string(text_.substr(i, std::max<std::size_t>(1, j - i))));
        }
      }
      ++i;
      ++col;
    }
    Token end;
    end.kind = Tok::End;
    end.text = "";
    end.line = line;
    end.column = col;
    tokens_.push_back(end);
  }

  static Tok keyword(std::string_view w) {
    if (w == "true") return Tok::KwTrue;
    if (w == "not") return Tok::KwNot;
    if (w == "and") return Tok::KwAnd;
    if (w == "or") return Tok::KwOr;
    if (w == "until") return Tok::KwUntil;
    if (w == "since") return Tok::KwSince;
    if (w == "always") return Tok::KwAlways;
    if (w == "eventually") return Tok::KwEventually;
    if (w == "once") return Tok::KwOnce;
    if (w == "historically") return Tok::KwHistorically;
    if (w == "inf") return Tok::KwInf;
    return Tok::Ident;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

// Recursive-descent parser over the token stream. Ambiguity between
// '(' term ')' and '(' formula ')' is resolved by trying the atom
// (term cmp term) first and backtracking; the error state keeps the
// furthest failure position so messages stay precise.
class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  struct ParseFail {};  // internal backtracking signal

  FormulaPtr parse() {
    FormulaPtr f = parse_temporal();
    if (peek().kind != Tok::End) fail_here("end of input");
    return f;
  }

  [[noreturn]] void rethrow_as_syntax_error() {
    const Token& t = lexer_.tokens()[err_pos_];
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    // Deduplicate the expected set.
    std::vector<std::string> expected;
    for (const auto& e : err_expected_)
      if (std::find(expected.begin(), expected.end(), e) == expected.end())
        expected.push_back(e);
    throw SyntaxError(t.line, t.column, found, expected);
  }

private:

  const Token& peek() const { return lexer_.tokens()[pos_]; }
  const Token& advance() { return lexer_.tokens()[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  bool accept(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(Tok k) {
    if (!accept(k)) fail_here(tok_name(k));
  }

  [[noreturn]] void fail_here(const std::string& expected) {
    note_failure(expected);
    throw ParseFail{};
  }

  void note_failure(const std::string& expected) {
    if (pos_ > err_pos_) {
      err_pos_ = pos_;
      err_expected_.clear();
    }
    if (pos_ == err_pos_) err_expected_.push_back(expected);
  }

  FormulaPtr parse_temporal() {
    FormulaPtr f = parse_temporal_operand();
    while (at(Tok::KwUntil) || at(Tok::KwSince)) {
      bool is_until = advance().kind == Tok::KwUntil;
      Interval w = parse_optional_window();
      FormulaPtr rhs = parse_temporal_operand();
      f = is_until ? Formula::until(w, f, rhs) : Formula::since(w, f, rhs);
    }
    return f;
  }

  FormulaPtr parse_temporal_operand() {
    if (at(Tok::KwAlways) || at(Tok::KwEventually) || at(Tok::KwOnce) ||
        at(Tok::KwHistorically)) {
      Tok k = advance().kind;
      Interval w = parse_optional_window();
      FormulaPtr body = parse_temporal();  // prefix operand extends right
      switch (k) {
        case Tok::KwAlways: return Formula::always(w, body);
        case Tok::KwEventually: return Formula::eventually(w, body);
        case Tok::KwOnce: return Formula::once(w, body);
        default: return Formula::historically(w, body);
      }
    }
    return parse_implication();
  }

  Interval parse_optional_window() {
    if (!accept(Tok::LBracket)) return Interval::unbounded();
    if (!at(Tok::Number)) fail_here("number");
    double lo = advance().number;
    expect(Tok::Comma);
    double hi;
    if (accept(Tok::KwInf)) {
      hi = kPosInf;
    } else if (at(Tok::Number)) {
      hi = advance().number;
    } else {
      fail_here("number or 'inf'");
    }
    expect(Tok::RBracket);
    if (hi < lo) fail_here("window with lo <= hi");
    return Interval::bounded(lo, hi);
  }

  FormulaPtr parse_implication() {
    FormulaPtr f = parse_or();
    if (accept(Tok::Arrow)) {
      FormulaPtr rhs = parse_implication();  // right-associative
      return Formula::implies(f, rhs);
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::KwOr)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_not();
    while (accept(Tok::KwAnd)) f = Formula::conjunction(f, parse_not());
    return f;
  }

  FormulaPtr parse_not() {
    if (accept(Tok::KwNot)) return Formula::negate(parse_not());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (accept(Tok::KwTrue)) return Formula::make_true();
    // A '(' may open a parenthesized term (atom) or a parenthesized formula.
    // Try the atom first, backtrack on failure.
    std::size_t save = pos_;
    try {
      return parse_atom();
    } catch (ParseFail&) {
      pos_ = save;
    }
    if (accept(Tok::LParen)) {
      FormulaPtr f = parse_temporal();
      expect(Tok::RParen);
      return f;
    }
    fail_here("formula");
  }

  FormulaPtr parse_atom() {
    TermPtr lhs = parse_term();
    if (accept(Tok::Gt)) return Formula::atom(Term::sub(lhs, parse_term()), true);
    if (accept(Tok::Ge)) return Formula::atom(Term::sub(lhs, parse_term()), false);
    if (accept(Tok::Lt)) return Formula::atom(Term::sub(parse_term(), lhs), true);
    if (accept(Tok::Le)) return Formula::atom(Term::sub(parse_term(), lhs), false);
    fail_here("comparison operator");
  }

  TermPtr parse_term() {
    TermPtr t = parse_term_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool plus = advance().kind == Tok::Plus;
      TermPtr rhs = parse_term_mul();
      t = plus ? Term::add(t, rhs) : Term::sub(t, rhs);
    }
    return t;
  }

  TermPtr parse_term_mul() {
    TermPtr t = parse_term_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      bool mul = advance().kind == Tok::Star;
      TermPtr rhs = parse_term_unary();
      t = mul ? Term::mul(t, rhs) : Term::div(t, rhs);
    }
    return t;
  }

  TermPtr parse_term_unary() {
    if (accept(Tok::Minus)) return Term::neg(parse_term_unary());
    return parse_term_primary();
  }

  TermPtr parse_term_primary() {
    if (at(Tok::Ident)) return Term::var(advance().text);
    if (at(Tok::Number)) return Term::constant(advance().number);
    if (accept(Tok::LParen)) {
      TermPtr t = parse_term();
      expect(Tok::RParen);
      return t;
    }
    fail_here("term");
  }

  friend FormulaPtr parse_formula(std::string_view);

  Lexer lexer_;
  std::size_t pos_ = 0;
  std::size_t err_pos_ = 0;
  std::vector<std::string> err_expected_;
};

}  // namespace detail

/// Parses specification text into a formula tree.
/// Throws SyntaxError (with line/column and the expected-token set) or
/// UnknownOperator.
inline FormulaPtr parse_formula(std::string_view text) {
  detail::Parser p(text);
  try {
    return p.parse();
  } catch (detail::Parser::ParseFail&) {
    p.rethrow_as_syntax_error();
  }
}

}  // namespace csi
