#pragma once

// ψ∘F, s∘F and p∘F for an s-function F, each returned as a total piecewise
// s-function on Ψ.
//
// Write L = m + k_1 for the argument ψ_m. For m in D_F the e-coordinates of
// F(ψ_m) are q - β_i for i <= L (q = Σ q_j), then q - q_1 - β_{L+1} at L+1,
// and so on. ψ(F) reads off the first nonzero coordinate and s(F) the first
// coordinate different from 1. In both cases the answer is decided by one
// index d determined by β and q alone:
//
//   L + 1 <  d   the answer is ψ_{L+1} = s^{k_1+1}(x)
//   L + 1 == d   the answer depends on q_1 and β_d, so it is evaluated directly
//   L + 1 >  d   the answer is the constant ψ_d
//
// which is the threshold comparison "s^{k_1+1}(x) against ψ_d".

#include <optional>
#include <set>
#include <variant>

#include "logcouple/couple.hpp"
#include "logcouple/sfunction.hpp"

namespace logcouple {

namespace detail {

/// First index i with β_i != c, counting absent coordinates as 0.
/// Empty when β is the constant vector c, which only happens for c = 0, β = 0.
inline std::optional<Level> first_index_not_equal(const LogVector& beta, const Rational& c) {
  if (c == 0) return beta.leading_index();
  return first_non_unit_index(scale(1 / c, beta));
}

template <class Direct>
PiecewiseSFunction threshold_table(const SFunction& f, std::optional<Level> d, Direct&& direct) {
  const Level start = f.domain_start();
  const long long k1 = f.lowest_shift();
  const SFunction below = SFunction::iterate(k1 + 1);
  PieceBuilder b;
  b.push(0, start, SFunction());
  if (!d) {
    b.push(start, std::nullopt, below);
    return PiecewiseSFunction(b.take());
  }
  const SFunction above = SFunction::constant(psi_vector(*d));
  // L + 1 == d  <=>  m == d - k_1 - 1
  const long long t = static_cast<long long>(*d) - k1 - 1;
  if (t < static_cast<long long>(start)) {
    b.push(start, std::nullopt, above);
  } else {
    const auto tl = static_cast<Level>(t);
    b.push(start, tl, below);
    b.push(tl, tl + 1, SFunction::constant(direct(tl)));
    b.push(tl + 1, std::nullopt, above);
  }
  return PiecewiseSFunction(b.take());
}

}  // namespace detail

inline PiecewiseSFunction compose_psi(const SFunction& f) {
  if (f.is_constant()) return PiecewiseSFunction(SFunction::constant(psi(f.value())));
  const Rational q = f.coefficient_sum();
  return detail::threshold_table(f, detail::first_index_not_equal(f.beta(), q),
                                 [&](Level m) { return psi(f(m)); });
}

inline PiecewiseSFunction compose_s(const SFunction& f) {
  if (f.is_constant()) return PiecewiseSFunction(SFunction::constant(succ(f.value())));
  const Rational q = f.coefficient_sum();
  return detail::threshold_table(f, detail::first_index_not_equal(f.beta(), q - 1),
                                 [&](Level m) { return succ(f(m)); });
}

struct AllPsi {
  friend bool operator==(const AllPsi&, const AllPsi&) = default;
};

/// Levels m in D_F with F(ψ_m) in Ψ, in increasing order.
struct ExceptionalPoints {
  std::vector<Level> levels;
  friend bool operator==(const ExceptionalPoints&, const ExceptionalPoints&) = default;
};

using ImageClass = std::variant<AllPsi, ExceptionalPoints>;

/// Where a linear F meets Ψ.
///
/// F(ψ_m) = ψ_l means Σ q_j ψ_{m+k_j} - ψ_l = β in the Ψ-basis. The term ψ_l
/// can cancel at most one of the extreme levels m+k_1, m+k_n, so the lowest
/// Ψ-basis index of β is m+k_1 or the highest is m+k_n. Both candidates are
/// checked by evaluation.
inline ImageClass image_in_psi(const SFunction& f) {
  if (f.is_constant()) throw error("image_in_psi expects a linear s-function");
  const auto& shifts = f.shifts();
  if (f.beta().is_zero()) {
    // independence of Ψ: only s^k(x) itself lands in Ψ
    if (shifts.size() == 1 && shifts[0].q == 1) return AllPsi{};
    return ExceptionalPoints{};
  }
  const auto basis = to_psi_basis(f.beta());
  const std::size_t n = shifts.size();
  if (basis.size() > n + 1 || basis.size() + 1 < n) return ExceptionalPoints{};
  std::set<Level> found;
  for (long long m : {static_cast<long long>(basis.begin()->first) - shifts.front().k,
                      static_cast<long long>(basis.rbegin()->first) - shifts.back().k}) {
    if (m < 0) continue;
    const auto level = static_cast<Level>(m);
    if (f.in_domain(level) && in_psi(f(level))) found.insert(level);
  }
  return ExceptionalPoints{{found.begin(), found.end()}};
}

inline PiecewiseSFunction compose_p(const SFunction& f) {
  if (f.is_constant()) return PiecewiseSFunction(SFunction::constant(pred(f.value())));
  const Level start = f.domain_start();
  PieceBuilder b;
  b.push(0, start, SFunction());
  const auto image = image_in_psi(f);
  if (std::holds_alternative<AllPsi>(image)) {
    const long long k = f.lowest_shift();
    // F(min D_F) = ψ_0 when k <= 0, and p(ψ_0) = ∞
    const Level from = k <= 0 ? start + 1 : start;
    b.push(start, from, SFunction());
    b.push(from, std::nullopt, SFunction::iterate(k - 1));
    return PiecewiseSFunction(b.take());
  }
  for (Level m : std::get<ExceptionalPoints>(image).levels) {
    b.extend_to(m, SFunction());
    b.push(m, m + 1, SFunction::constant(pred(f(m))));
  }
  b.extend_to(std::nullopt, SFunction());
  return PiecewiseSFunction(b.take());
}

// Piecewise versions: compose each piece and keep the part inside it.

namespace detail {
template <class Compose>
PiecewiseSFunction compose_pieces(const PiecewiseSFunction& f, Compose&& compose) {
  PieceBuilder b;
  const PiecewiseSFunction split = split_domains(f);
  for (const auto& p : split.pieces()) append_window(b, compose(p.fn), p.interval);
  return PiecewiseSFunction(b.take());
}
}  // namespace detail

inline PiecewiseSFunction compose_psi(const PiecewiseSFunction& f) {
  return detail::compose_pieces(f, [](const SFunction& g) { return compose_psi(g); });
}
inline PiecewiseSFunction compose_s(const PiecewiseSFunction& f) {
  return detail::compose_pieces(f, [](const SFunction& g) { return compose_s(g); });
}
inline PiecewiseSFunction compose_p(const PiecewiseSFunction& f) {
  return detail::compose_pieces(f, [](const SFunction& g) { return compose_p(g); });
}

}  // namespace logcouple
