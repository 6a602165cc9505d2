#pragma once

// Terms of the language {0, +, -, ψ, ∞, s, p, δ_1, δ_2, ...} in one free
// variable x with vector constants, plus quantifier-free conditions built
// from atoms t1 ⋈ t2 (⋈ in {<, =, >}) with &, | and !.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "logcouple/couple.hpp"
#include "logcouple/vector.hpp"

namespace logcouple {

enum class TermKind { Zero, Infty, Var, Const, Add, Neg, Psi, S, P, Delta };

inline const char* tag_name(TermKind kind) {
  switch (kind) {
    case TermKind::Zero: return "Zero";
    case TermKind::Infty: return "Infty";
    case TermKind::Var: return "Var";
    case TermKind::Const: return "Const";
    case TermKind::Add: return "Add";
    case TermKind::Neg: return "Neg";
    case TermKind::Psi: return "Psi";
    case TermKind::S: return "S";
    case TermKind::P: return "P";
    case TermKind::Delta: return "Delta";
  }
  return "?";
}

/// Immutable term tree with shared subterms.
class Term {
 public:
  static Term zero() { return Term(make(TermKind::Zero)); }
  static Term infty() { return Term(make(TermKind::Infty)); }
  static Term var() { return Term(make(TermKind::Var)); }
  static Term constant(LogVector v) {
    auto n = make(TermKind::Const);
    n->value = std::move(v);
    return Term(std::move(n));
  }
  static Term add(Term lhs, Term rhs) {
    auto n = make(TermKind::Add);
    n->children = {std::move(lhs), std::move(rhs)};
    return Term(std::move(n));
  }
  static Term neg(Term t) { return unary(TermKind::Neg, std::move(t)); }
  static Term psi(Term t) { return unary(TermKind::Psi, std::move(t)); }
  static Term s(Term t) { return unary(TermKind::S, std::move(t)); }
  static Term p(Term t) { return unary(TermKind::P, std::move(t)); }
  static Term delta(unsigned long long n, Term t) {
    if (n == 0) throw error("delta index must be at least 1");
    auto node = make(TermKind::Delta);
    node->divisor = n;
    node->children = {std::move(t)};
    return Term(std::move(node));
  }

  TermKind kind() const noexcept { return node_->kind; }
  const LogVector& value() const { return node_->value; }
  unsigned long long divisor() const { return node_->divisor; }
  const Term& child(std::size_t i = 0) const { return node_->children.at(i); }
  std::size_t arity() const noexcept { return node_->children.size(); }

  bool has_var() const {
    if (kind() == TermKind::Var) return true;
    for (const auto& c : node_->children) {
      if (c.has_var()) return true;
    }
    return false;
  }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : node_->children) n += c.size();
    return n;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
    return d;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->value == b.node_->value &&
           a.node_->divisor == b.node_->divisor && a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    TermKind kind;
    LogVector value;
    unsigned long long divisor = 0;
    std::vector<Term> children;
  };

  explicit Term(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<Node> make(TermKind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
  }
  static Term unary(TermKind kind, Term t) {
    auto n = make(kind);
    n->children = {std::move(t)};
    return Term(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Evaluation

/// Structural evaluation at x. Total: ∞ is the default value of every map.
inline ExtValue eval(const Term& t, const ExtValue& x) {
  switch (t.kind()) {
    case TermKind::Zero: return ExtValue(LogVector{});
    case TermKind::Infty: return ExtValue::infinity();
    case TermKind::Var: return x;
    case TermKind::Const: return ExtValue(t.value());
    case TermKind::Add: return eval(t.child(0), x) + eval(t.child(1), x);
    case TermKind::Neg: return -eval(t.child(0), x);
    case TermKind::Psi: return psi(eval(t.child(0), x));
    case TermKind::S: return succ(eval(t.child(0), x));
    case TermKind::P: return pred(eval(t.child(0), x));
    case TermKind::Delta:
      return scale(Rational(Integer(1), Integer(t.divisor())), eval(t.child(0), x));
  }
  return ExtValue::infinity();
}

// ---------------------------------------------------------------------------
// Canonical text
//
// Sums are right-nested: "a + b - c" is Add(a, Add(b, Neg(c))). A sum in the
// left operand of a sum, or after a binary minus, is parenthesized.

namespace detail {

inline void print_term(const Term& t, std::string& out);

inline void print_operand(const Term& t, std::string& out) {
  if (t.kind() == TermKind::Add) {
    out += '(';
    print_term(t, out);
    out += ')';
  } else {
    print_term(t, out);
  }
}

inline void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Zero: out += '0'; return;
    case TermKind::Infty: out += "inf"; return;
    case TermKind::Var: out += 'x'; return;
    case TermKind::Const: out += to_string(t.value()); return;
    case TermKind::Add: {
      print_operand(t.child(0), out);
      const Term* rest = &t.child(1);
      while (true) {
        const bool last = rest->kind() != TermKind::Add;
        const Term& item = last ? *rest : rest->child(0);
        if (item.kind() == TermKind::Neg) {
          out += " - ";
          print_operand(item.child(0), out);
        } else {
          out += " + ";
          print_operand(item, out);
        }
        if (last) break;
        rest = &rest->child(1);
      }
      return;
    }
    case TermKind::Neg:
      out += "-(";
      print_term(t.child(0), out);
      out += ')';
      return;
    case TermKind::Psi: out += "psi("; break;
    case TermKind::S: out += "s("; break;
    case TermKind::P: out += "p("; break;
    case TermKind::Delta: out += "d" + std::to_string(t.divisor()) + "("; break;
  }
  print_term(t.child(0), out);
  out += ')';
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out);
  return out;
}

inline nlohmann::json to_json(const Term& t) {
  nlohmann::json j;
  j["tag"] = tag_name(t.kind());
  switch (t.kind()) {
    case TermKind::Const: j["value"] = to_string(t.value()); break;
    case TermKind::Delta:
      j["n"] = t.divisor();
      j["arg"] = to_json(t.child(0));
      break;
    case TermKind::Add: j["args"] = {to_json(t.child(0)), to_json(t.child(1))}; break;
    case TermKind::Neg:
    case TermKind::Psi:
    case TermKind::S:
    case TermKind::P: j["arg"] = to_json(t.child(0)); break;
    default: break;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Conditions

enum class Relation { Less, Equal, Greater };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

inline bool holds(Relation r, const ExtValue& a, const ExtValue& b) {
  const auto c = a <=> b;
  switch (r) {
    case Relation::Less: return c < 0;
    case Relation::Equal: return c == 0;
    case Relation::Greater: return c > 0;
  }
  return false;
}

enum class ConditionKind { Atom, And, Or, Not };

/// Boolean combination of atoms.
class Condition {
 public:
  static Condition atom(Term lhs, Relation rel, Term rhs) {
    auto n = std::make_shared<Node>();
    n->kind = ConditionKind::Atom;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->rel = rel;
    return Condition(std::move(n));
  }
  static Condition conj(Condition a, Condition b) { return binary(ConditionKind::And, std::move(a), std::move(b)); }
  static Condition disj(Condition a, Condition b) { return binary(ConditionKind::Or, std::move(a), std::move(b)); }
  static Condition negation(Condition a) {
    auto n = std::make_shared<Node>();
    n->kind = ConditionKind::Not;
    n->children = {std::move(a)};
    return Condition(std::move(n));
  }

  ConditionKind kind() const noexcept { return node_->kind; }
  const Term& lhs() const { return node_->lhs; }
  const Term& rhs() const { return node_->rhs; }
  Relation relation() const { return node_->rel; }
  const Condition& child(std::size_t i = 0) const { return node_->children.at(i); }

  std::vector<std::pair<Term, Term>> atoms() const {
    std::vector<std::pair<Term, Term>> out;
    collect(out);
    return out;
  }

  friend bool operator==(const Condition& a, const Condition& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == ConditionKind::Atom) {
      return a.lhs() == b.lhs() && a.relation() == b.relation() && a.rhs() == b.rhs();
    }
    return a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    ConditionKind kind = ConditionKind::Atom;
    Term lhs = Term::zero();
    Term rhs = Term::zero();
    Relation rel = Relation::Equal;
    std::vector<Condition> children;
  };

  explicit Condition(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  static Condition binary(ConditionKind kind, Condition a, Condition b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->children = {std::move(a), std::move(b)};
    return Condition(std::move(n));
  }

  void collect(std::vector<std::pair<Term, Term>>& out) const {
    if (kind() == ConditionKind::Atom) {
      out.emplace_back(lhs(), rhs());
      return;
    }
    for (const auto& c : node_->children) c.collect(out);
  }

  std::shared_ptr<const Node> node_;
};

inline bool eval_condition(const Condition& c, const ExtValue& x) {
  switch (c.kind()) {
    case ConditionKind::Atom: return holds(c.relation(), eval(c.lhs(), x), eval(c.rhs(), x));
    case ConditionKind::And: return eval_condition(c.child(0), x) && eval_condition(c.child(1), x);
    case ConditionKind::Or: return eval_condition(c.child(0), x) || eval_condition(c.child(1), x);
    case ConditionKind::Not: return !eval_condition(c.child(0), x);
  }
  return false;
}

namespace detail {
inline void print_condition(const Condition& c, std::string& out, int parent_prec) {
  switch (c.kind()) {
    case ConditionKind::Atom:
      out += to_string(c.lhs());
      out += ' ';
      out += to_string(c.relation());
      out += ' ';
      out += to_string(c.rhs());
      return;
    case ConditionKind::Not:
      out += '!';
      if (c.child(0).kind() == ConditionKind::Atom) {
        out += '(';
        print_condition(c.child(0), out, 0);
        out += ')';
      } else {
        print_condition(c.child(0), out, 3);
      }
      return;
    case ConditionKind::And:
    case ConditionKind::Or: {
      const int prec = c.kind() == ConditionKind::And ? 2 : 1;
      // binary connectives associate to the left
      const bool paren = prec < parent_prec;
      if (paren) out += '(';
      print_condition(c.child(0), out, prec);
      out += prec == 2 ? " & " : " | ";
      print_condition(c.child(1), out, prec + 1);
      if (paren) out += ')';
      return;
    }
  }
}
}  // namespace detail

inline std::string to_string(const Condition& c) {
  std::string out;
  detail::print_condition(c, out, 0);
  return out;
}

}  // namespace logcouple
