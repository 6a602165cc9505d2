#pragma once

// The chain β_0 = e_0, β_{k+1} = s(β_k), α_{k+1} = ∫β_k, with the four
// commuting relations checked at every step.

#include <cstddef>
#include <vector>

#include "logcouple/couple.hpp"

namespace logcouple::oracle {

struct ClosureStep {
  std::size_t k = 0;
  bool succ_ok = false;      // s(β_k) = β_{k+1}
  bool integral_ok = false;  // ∫β_k = α_{k+1}
  bool psi_ok = false;       // ψ(α_{k+1}) = β_{k+1}
  bool chi_ok = false;       // χ(α_{k+1}) = α_{k+2}
  bool expected_ok = false;  // β_{k+1} = ψ_{k+1} and α_{k+1} = -e_{k+1}

  bool all() const { return succ_ok && integral_ok && psi_ok && chi_ok && expected_ok; }
};

struct ClosureChain {
  std::vector<LogVector> beta;   // β_0 .. β_{n_max}
  std::vector<LogVector> alpha;  // α_1 .. α_{n_max}
  std::vector<ClosureStep> steps;

  bool all() const {
    if (beta.empty() || beta[0] != psi_vector(0)) return false;
    for (const auto& s : steps) {
      if (!s.all()) return false;
    }
    return true;
  }
};

inline ClosureChain closure_chain(std::size_t n_max) {
  if (n_max < 1) throw error("closure_chain needs n_max >= 1");
  // one step past n_max so that χ(α_{n_max}) has something to compare with
  std::vector<LogVector> beta{LogVector::unit(0)};
  std::vector<LogVector> alpha{LogVector{}};
  for (std::size_t k = 0; k <= n_max; ++k) {
    beta.push_back(succ(beta[k]));
    alpha.push_back(integral(beta[k]));
  }
  ClosureChain out;
  out.beta.assign(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
  out.alpha.assign(alpha.begin() + 1, alpha.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
  for (std::size_t k = 0; k < n_max; ++k) {
    ClosureStep step;
    step.k = k;
    const LogVector& a = alpha[k + 1];
    step.succ_ok = succ(beta[k]) == beta[k + 1] && in_psi(beta[k + 1]);
    step.integral_ok = integral(beta[k]) == a && prime(a) == beta[k];
    step.psi_ok = psi(a) == ExtValue(beta[k + 1]);
    step.chi_ok = a.sign() < 0 && chi(a) == alpha[k + 2];
    step.expected_ok = beta[k + 1] == psi_vector(k + 1) && a == -LogVector::unit(k + 1);
    out.steps.push_back(step);
  }
  return out;
}

}  // namespace logcouple::oracle
