#pragma once

// Structure maps of the asymptotic couple on ⊕_n Q e_n:
//   ψ(a)   = ψ_n where n is the leading index of a
//   ∫a     = the unique b != 0 with b + ψ(b) = a
//   s(a)   = ψ(∫a)
//   p      = inverse of s on Ψ^{>s0}, ∞ elsewhere
//   χ(a)   = ∫ψ(a) for a < 0
// All maps that the term language uses are totalized through ∞.

#include <cstddef>
#include <optional>

#include "logcouple/errors.hpp"
#include "logcouple/vector.hpp"

namespace logcouple {

/// ψ_n as a Ψ-element, identified by its level n.
struct PsiElement {
  std::size_t level = 0;

  LogVector vector() const { return psi_vector(level); }
  friend auto operator<=>(const PsiElement&, const PsiElement&) = default;
};

/// s0 = ψ_0 = e_0, the least element of Ψ.
inline LogVector s0() { return psi_vector(0); }

inline ExtValue psi(const LogVector& a) {
  auto lead = a.leading_index();
  if (!lead) return ExtValue::infinity();
  return psi_vector(*lead);
}

inline ExtValue psi(const ExtValue& a) {
  if (a.is_infinite()) return a;
  return psi(a.finite());
}

namespace detail {
/// Least n with r_n != 1.
inline std::size_t first_non_unit_index(const LogVector& a) {
  std::size_t n = 0;
  for (const auto& [index, coeff] : a.entries()) {
    if (index != n || coeff != 1) break;
    ++n;
  }
  return n;
}
}  // namespace detail

inline LogVector integral(const LogVector& a) {
  // (1,...,1, r_n, r_{n+1}, ...) -> (0,...,0, r_n - 1, r_{n+1}, ...)
  return a - psi_vector(detail::first_non_unit_index(a));
}

inline LogVector succ(const LogVector& a) { return psi_vector(detail::first_non_unit_index(a)); }

inline ExtValue succ(const ExtValue& a) {
  if (a.is_infinite()) return a;
  return succ(a.finite());
}

/// Level n when a = ψ_n.
inline std::optional<std::size_t> psi_level(const LogVector& a) {
  if (a.is_zero()) return std::nullopt;
  const std::size_t n = detail::first_non_unit_index(a);
  if (n != a.support_size()) return std::nullopt;
  return n - 1;
}

inline std::optional<std::size_t> psi_level(const ExtValue& a) {
  if (a.is_infinite()) return std::nullopt;
  return psi_level(a.finite());
}

inline bool in_psi(const ExtValue& a) { return psi_level(a).has_value(); }

inline ExtValue pred(const ExtValue& a) {
  auto level = psi_level(a);
  if (!level || *level == 0) return ExtValue::infinity();
  return psi_vector(*level - 1);
}

/// α' = α + ψ(α); undefined at 0.
inline LogVector prime(const LogVector& a) {
  if (a.is_zero()) throw zero_argument("prime is undefined at 0");
  return a + psi(a).finite();
}

/// α† = ψ(α).
inline ExtValue dagger(const ExtValue& a) { return psi(a); }

inline LogVector chi(const LogVector& a) {
  if (a.sign() >= 0) throw non_negative_argument("chi requires a negative argument");
  return integral(psi(a).finite());
}

/// s^k(a) for k >= 0, p^{-k}(a) for k < 0.
inline ExtValue iterate_succ(ExtValue a, long long k) {
  for (; k > 0; --k) a = succ(a);
  for (; k < 0 && a.is_finite(); ++k) a = pred(a);
  return a;
}

}  // namespace logcouple
