#pragma once

// Behaviour of a one-variable term for large arguments in Γ: beyond some
// threshold it is either constant or affine x ↦ qx + β.

#include <algorithm>
#include <string>
#include <variant>

#include "logcouple/couple.hpp"
#include "logcouple/term.hpp"

namespace logcouple {

struct EventuallyConstant {
  ExtValue value;
  friend bool operator==(const EventuallyConstant&, const EventuallyConstant&) = default;
};

/// x ↦ q·x + β with q != 0.
struct EventuallyAffine {
  Rational q;
  LogVector beta;
  friend bool operator==(const EventuallyAffine&, const EventuallyAffine&) = default;
};

struct EventualForm {
  std::variant<EventuallyConstant, EventuallyAffine> form;
  /// The form is exact for every x > threshold.
  LogVector threshold;

  bool is_constant() const { return std::holds_alternative<EventuallyConstant>(form); }
  const EventuallyConstant& constant() const { return std::get<EventuallyConstant>(form); }
  const EventuallyAffine& affine() const { return std::get<EventuallyAffine>(form); }

  ExtValue operator()(const LogVector& x) const {
    if (is_constant()) return constant().value;
    return ExtValue(affine().q * x + affine().beta);
  }

  friend bool operator==(const EventualForm&, const EventualForm&) = default;
};

namespace detail {

inline EventualForm constant_form(ExtValue v, LogVector threshold) {
  return EventualForm{EventuallyConstant{std::move(v)}, std::move(threshold)};
}

inline EventualForm affine_form(Rational q, LogVector beta, LogVector threshold) {
  if (q == 0) return constant_form(ExtValue(std::move(beta)), std::move(threshold));
  return EventualForm{EventuallyAffine{std::move(q), std::move(beta)}, std::move(threshold)};
}

/// N·e_0 with |qN| > max(|β_0|, |1 - β_0|): past it the leading coordinate
/// of qx + β is neither 0 nor 1, so ψ and s give s0 and p gives ∞.
inline LogVector escape_threshold(const EventuallyAffine& f) {
  using boost::multiprecision::abs;
  const Rational b0 = f.beta.coeff(0);
  const Rational lead = abs(b0), other = abs(1 - b0);
  const Rational bound = std::max(lead, other) / Rational(abs(f.q));
  const Integer n = numerator_of(bound) / denominator_of(bound) + 1;
  return Rational(n) * LogVector::unit(0);
}

}  // namespace detail

inline EventualForm eventual_form(const Term& t) {
  using detail::affine_form;
  using detail::constant_form;
  switch (t.kind()) {
    case TermKind::Zero: return constant_form(LogVector{}, LogVector{});
    case TermKind::Infty: return constant_form(ExtValue::infinity(), LogVector{});
    case TermKind::Const: return constant_form(t.value(), LogVector{});
    case TermKind::Var: return affine_form(1, LogVector{}, LogVector{});
    case TermKind::Add: {
      const EventualForm a = eventual_form(t.child(0));
      const EventualForm b = eventual_form(t.child(1));
      LogVector threshold = std::max(a.threshold, b.threshold);
      if (a.is_constant() && b.is_constant()) {
        return constant_form(a.constant().value + b.constant().value, std::move(threshold));
      }
      if (a.is_constant() || b.is_constant()) {
        const ExtValue& c = a.is_constant() ? a.constant().value : b.constant().value;
        const EventuallyAffine& f = a.is_constant() ? b.affine() : a.affine();
        if (c.is_infinite()) return constant_form(c, std::move(threshold));
        return affine_form(f.q, f.beta + c.finite(), std::move(threshold));
      }
      return affine_form(a.affine().q + b.affine().q, a.affine().beta + b.affine().beta, std::move(threshold));
    }
    case TermKind::Neg: {
      EventualForm a = eventual_form(t.child(0));
      if (a.is_constant()) return constant_form(-a.constant().value, std::move(a.threshold));
      return affine_form(-a.affine().q, -a.affine().beta, std::move(a.threshold));
    }
    case TermKind::Delta: {
      const Rational r(Integer(1), Integer(t.divisor()));
      EventualForm a = eventual_form(t.child(0));
      if (a.is_constant()) return constant_form(scale(r, a.constant().value), std::move(a.threshold));
      return affine_form(r * a.affine().q, r * a.affine().beta, std::move(a.threshold));
    }
    case TermKind::Psi:
    case TermKind::S:
    case TermKind::P: {
      EventualForm a = eventual_form(t.child(0));
      if (a.is_constant()) {
        const ExtValue& v = a.constant().value;
        const ExtValue out = t.kind() == TermKind::Psi ? psi(v) : t.kind() == TermKind::S ? succ(v) : pred(v);
        return constant_form(out, std::move(a.threshold));
      }
      LogVector threshold = std::max(a.threshold, detail::escape_threshold(a.affine()));
      if (t.kind() == TermKind::P) return constant_form(ExtValue::infinity(), std::move(threshold));
      return constant_form(s0(), std::move(threshold));
    }
  }
  throw error("unknown term kind");
}

inline std::string to_string(const EventualForm& f) {
  std::string body;
  if (f.is_constant()) {
    body = "constant " + to_string(f.constant().value);
  } else {
    body = "affine " + to_string(f.affine().q) + "*x + " + to_string(f.affine().beta);
  }
  return body + " for x > " + to_string(f.threshold);
}

}  // namespace logcouple
