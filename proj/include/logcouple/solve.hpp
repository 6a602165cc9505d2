#pragma once

// Solving one-variable conditions over Ψ.
//
// For a linear difference D = Σ q_j s^{k_j}(x) - β and m + k_1 beyond the
// support of β, the e-coordinates of D(ψ_m) are the fixed pattern q - β_i,
// then q repeated, then the partial sums q - q_1, q - q_1 - q_2, ... . The
// first nonzero coordinate, and so the sign, no longer depends on m.

#include <algorithm>
#include <optional>

#include "logcouple/normalize.hpp"
#include "logcouple/psi_subset.hpp"
#include "logcouple/term.hpp"

namespace logcouple {

/// Least level from which the sign of a linear s-function is constant.
inline Level sign_stability_bound(const SFunction& d) {
  if (d.is_constant()) return 0;
  const auto top = d.beta().max_index();
  const long long maxsupp = top ? static_cast<long long>(*top) : -1;
  return static_cast<Level>(std::max<long long>(0, maxsupp - d.lowest_shift() + 2));
}

namespace detail {

/// Levels where `rel` holds between the two sides, one joint piece at a time.
inline PsiSubset solve_atom(const Term& lhs, Relation rel, const Term& rhs, Level* bound) {
  const auto a = split_domains(term_to_piecewise(lhs));
  const auto b = split_domains(term_to_piecewise(rhs));
  std::vector<PsiInterval> runs;
  auto keep = [&](Level lo, std::optional<Level> hi, bool yes) {
    if (yes) runs.push_back(PsiInterval{lo, hi});
  };
  for (const auto& j : refine(a, b)) {
    const Level lo = j.interval.lo;
    const auto& hi = j.interval.hi;
    if (bound && hi) *bound = std::max(*bound, *hi);
    const bool uniform = (j.a.is_constant() && j.b.is_constant()) ||
                         (j.a.is_constant() && j.a.value().is_infinite()) ||
                         (j.b.is_constant() && j.b.value().is_infinite());
    if (uniform) {
      keep(lo, hi, holds(rel, j.a(lo), j.b(lo)));
      continue;
    }
    // both sides finite on the whole piece here
    const Level stable = std::max(lo, sign_stability_bound(j.a - j.b));
    if (bound) *bound = std::max(*bound, stable);
    const Level scan_end = hi ? std::min(*hi, stable) : stable;
    for (Level m = lo; m < scan_end; ++m) keep(m, m + 1, holds(rel, j.a(m), j.b(m)));
    if (!hi || stable < *hi) keep(stable, hi, holds(rel, j.a(stable), j.b(stable)));
  }
  return PsiSubset::from_runs(std::move(runs));
}

inline PsiSubset solve(const Condition& c, Level* bound) {
  switch (c.kind()) {
    case ConditionKind::Atom: return solve_atom(c.lhs(), c.relation(), c.rhs(), bound);
    case ConditionKind::And: return solve(c.child(0), bound) & solve(c.child(1), bound);
    case ConditionKind::Or: return solve(c.child(0), bound) | solve(c.child(1), bound);
    case ConditionKind::Not: return solve(c.child(0), bound).complement();
  }
  throw error("unknown condition kind");
}

}  // namespace detail

/// {x ∈ Ψ : c(x)}.
inline PsiSubset solve(const Condition& c) { return detail::solve(c, nullptr); }

/// A level B such that every atom of `c` has constant truth value on each
/// of its pieces beyond B: the largest piece boundary or sign-stability
/// level met while solving, and at least 1.
inline Level stability_bound(const Condition& c) {
  Level bound = 1;
  detail::solve(c, &bound);
  return bound;
}

}  // namespace logcouple
