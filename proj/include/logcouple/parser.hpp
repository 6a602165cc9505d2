#pragma once

// Recursive-descent parser for terms and conditions.
//
//   term      := ['-'] atom (('+' | '-') atom)*        (right-nested sums)
//   atom      := '0' | 'inf' | 'x' | vector | '(' term ')'
//              | ('psi' | 's' | 'p' | 'd'NAT | '-') '(' term ')'
//   condition := conj ('|' conj)*
//   conj      := unary ('&' unary)*
//   unary     := '!' unary | '(' condition ')' | term ('<' | '=' | '>') term

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "logcouple/errors.hpp"
#include "logcouple/term.hpp"
#include "logcouple/vector.hpp"

namespace logcouple {

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term term() {
    std::vector<Term> items;
    skip();
    if (peek() == '-' && peek(1) != '(') {
      ++pos_;
      items.push_back(Term::neg(atom()));
    } else {
      items.push_back(atom());
    }
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Term next = atom();
      items.push_back(c == '-' ? Term::neg(std::move(next)) : std::move(next));
    }
    Term out = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) out = Term::add(items[i], out);
    return out;
  }

  Condition condition() {
    Condition c = conjunction();
    while (true) {
      skip();
      if (peek() != '|') break;
      ++pos_;
      c = Condition::disj(c, conjunction());
    }
    return c;
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) throw syntax_error("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  bool at_end() {
    skip();
    return pos_ == text_.size();
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) {
      if (pos_ >= text_.size()) throw syntax_error(std::string("expected '") + c + "', found end of input", pos_);
      throw syntax_error(std::string("expected '") + c + "', found '" + peek() + "'", pos_);
    }
    ++pos_;
  }

  Term argument(const std::string& name, std::size_t name_pos) {
    skip();
    if (peek() != '(') throw arity_error("'" + name + "' takes exactly one argument", name_pos);
    ++pos_;
    skip();
    if (peek() == ')') throw arity_error("'" + name + "' takes exactly one argument", name_pos);
    Term t = term();
    skip();
    if (peek() == ',') throw arity_error("'" + name + "' takes exactly one argument", name_pos);
    expect(')');
    return t;
  }

  Term atom() {
    skip();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '\0') throw syntax_error("expected a term, found end of input", pos_);
    if (c == '[') return Term::constant(read_vector_literal(text_, pos_));
    if (c == '(') {
      ++pos_;
      Term t = term();
      expect(')');
      return t;
    }
    if (c == '-') {
      ++pos_;
      return Term::neg(argument("-", start));
    }
    if (is_digit(c)) {
      while (is_digit(peek())) ++pos_;
      if (text_.substr(start, pos_ - start) != "0") {
        throw syntax_error("numbers other than 0 must be written as vector literals", start);
      }
      return Term::zero();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "x") return Term::var();
      if (name == "inf") return Term::infty();
      if (name == "psi") return Term::psi(argument(name, start));
      if (name == "s") return Term::s(argument(name, start));
      if (name == "p") return Term::p(argument(name, start));
      if (name.size() > 1 && name[0] == 'd' && all_digits(name.substr(1))) {
        unsigned long long n = 0;
        try {
          n = std::stoull(name.substr(1));
        } catch (const std::out_of_range&) {
          throw syntax_error("delta index out of range", start);
        }
        if (n == 0) throw unknown_symbol("unknown symbol 'd0' (delta index starts at 1)", start);
        return Term::delta(n, argument(name, start));
      }
      throw unknown_symbol("unknown symbol '" + name + "'", start);
    }
    throw syntax_error(std::string("unexpected '") + c + "'", start);
  }

  Condition conjunction() {
    Condition c = unary();
    while (true) {
      skip();
      if (peek() != '&') break;
      ++pos_;
      c = Condition::conj(c, unary());
    }
    return c;
  }

  Condition unary() {
    skip();
    if (peek() == '!') {
      ++pos_;
      return Condition::negation(unary());
    }
    if (peek() == '(') {
      const std::size_t saved = pos_;
      try {
        ++pos_;
        Condition c = condition();
        expect(')');
        skip();
        const char next = peek();
        if (next != '<' && next != '=' && next != '>' && next != '+' && next != '-') return c;
      } catch (const syntax_error&) {
      }
      pos_ = saved;
    }
    return atom_relation();
  }

  Condition atom_relation() {
    Term lhs = term();
    skip();
    Relation rel;
    switch (peek()) {
      case '<': rel = Relation::Less; break;
      case '=': rel = Relation::Equal; break;
      case '>': rel = Relation::Greater; break;
      default:
        throw syntax_error(pos_ < text_.size() ? std::string("expected relation, found '") + peek() + "'"
                                               : std::string("expected relation, found end of input"),
                           pos_);
    }
    ++pos_;
    Term rhs = term();
    return Condition::atom(std::move(lhs), rel, std::move(rhs));
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool all_digits(std::string_view s) {
    for (char c : s) {
      if (!is_digit(c)) return false;
    }
    return !s.empty();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) {
  detail::Parser p(text);
  Term t = p.term();
  p.expect_end();
  return t;
}

inline Condition parse_condition(std::string_view text) {
  detail::Parser p(text);
  Condition c = p.condition();
  p.expect_end();
  return c;
}

using Parsed = std::variant<Term, Condition>;

/// A term when the whole input is a term, otherwise a condition.
inline Parsed parse(std::string_view text) {
  try {
    return parse_term(text);
  } catch (const syntax_error&) {
    if (text.find_first_of("<=>&|!") == std::string_view::npos) throw;
  }
  return parse_condition(text);
}

}  // namespace logcouple
