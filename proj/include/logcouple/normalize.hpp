#pragma once

#include "logcouple/compose.hpp"
#include "logcouple/sfunction.hpp"
#include "logcouple/term.hpp"

namespace logcouple {

/// The function ψ_m ↦ t(ψ_m) as a piecewise s-function, by induction on t.
inline PiecewiseSFunction term_to_piecewise(const Term& t) {
  switch (t.kind()) {
    case TermKind::Zero: return PiecewiseSFunction(SFunction::constant(LogVector{}));
    case TermKind::Infty: return PiecewiseSFunction(SFunction());
    case TermKind::Var: return PiecewiseSFunction(SFunction::iterate(0));
    case TermKind::Const: return PiecewiseSFunction(SFunction::constant(t.value()));
    case TermKind::Add: return term_to_piecewise(t.child(0)) + term_to_piecewise(t.child(1));
    case TermKind::Neg: return -term_to_piecewise(t.child(0));
    case TermKind::Delta:
      return scale(Rational(Integer(1), Integer(t.divisor())), term_to_piecewise(t.child(0)));
    case TermKind::Psi: return compose_psi(term_to_piecewise(t.child(0)));
    case TermKind::S: return compose_s(term_to_piecewise(t.child(0)));
    case TermKind::P: return compose_p(term_to_piecewise(t.child(0)));
  }
  throw error("unknown term kind");
}

}  // namespace logcouple
