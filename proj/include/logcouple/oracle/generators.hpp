#pragma once

// Seeded random inputs for the property suites. Sampling is biased toward
// the inputs where the algebra branches: prefixes of ones, exact Ψ-elements,
// leading coordinate -1, and coefficient sums 0 and 1.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "logcouple/couple.hpp"
#include "logcouple/sfunction.hpp"
#include "logcouple/term.hpp"

namespace logcouple::oracle {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_support = 8;
  std::uint64_t max_numerator = 100;
  std::uint64_t max_denominator = 20;
  std::size_t samples = 10000;
  /// Highest Ψ-level scanned by pointwise oracles.
  std::size_t max_level = 40;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream per (seed, name), so suites never share state.
inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return splitmix64(seed ^ splitmix64(h));
}

class Generator {
 public:
  explicit Generator(GenConfig cfg) : Generator(cfg, splitmix64(cfg.seed)) {}
  Generator(GenConfig cfg, std::uint64_t stream) : cfg_(cfg), rng_(stream) {}

  const GenConfig& config() const noexcept { return cfg_; }

  /// Uniform in [lo, hi]. Modulo reduction keeps streams identical across
  /// standard libraries; the bias is irrelevant at these ranges.
  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
  }

  bool chance(int percent) { return uniform(0, 99) < percent; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<long long>(items.size()) - 1))];
  }

  Rational rational() {
    if (chance(40)) return Rational(uniform(-3, 3));
    const auto num = static_cast<long long>(cfg_.max_numerator);
    const auto den = static_cast<long long>(cfg_.max_denominator);
    return Rational(Integer(uniform(-num, num)), Integer(uniform(1, den)));
  }

  Rational nonzero_rational() {
    Rational r = rational();
    while (r == 0) r = rational();
    return r;
  }

  std::size_t index() { return static_cast<std::size_t>(uniform(0, static_cast<long long>(cfg_.max_support) + 3)); }

  LogVector sparse_vector() {
    std::vector<std::pair<std::size_t, Rational>> entries;
    const auto count = uniform(0, static_cast<long long>(cfg_.max_support));
    for (long long i = 0; i < count; ++i) entries.emplace_back(index(), rational());
    return from_sum(entries);
  }

  LogVector vector() {
    switch (uniform(0, 9)) {
      case 0:
        return psi_vector(index());
      case 1: {
        // ones up to n, then an arbitrary tail
        const std::size_t n = index();
        return psi_vector(n) + shifted_tail(n + 1);
      }
      case 2:
        return from_psi_basis({{index(), rational()}, {index(), rational()}});
      case 3:
        return Rational(-1) * LogVector::unit(0) + shifted_tail(1);
      case 4:
        return LogVector{};
      default:
        return sparse_vector();
    }
  }

  LogVector nonzero_vector() {
    LogVector v = vector();
    while (v.is_zero()) v = vector();
    return v;
  }

  LogVector positive_vector() {
    LogVector v = nonzero_vector();
    return v.sign() < 0 ? -v : v;
  }

  PsiElement psi_element() { return PsiElement{index()}; }

  /// Vector constants for terms: small, and mostly in or near Ψ so that
  /// comparisons with values on Ψ are decided past the first coordinate.
  LogVector term_constant() {
    const auto j = static_cast<std::size_t>(uniform(0, 5));
    switch (uniform(0, 9)) {
      case 0:
      case 1:
      case 2: return psi_vector(j);
      case 3:
      case 4: return psi_vector(j) + Rational(uniform(-2, 2)) * LogVector::unit(j + 1 + static_cast<std::size_t>(uniform(0, 2)));
      case 5: return Rational(uniform(-2, 3)) * psi_vector(j);
      case 6: return psi_vector(j + 1 + static_cast<std::size_t>(uniform(0, 3))) - psi_vector(j);
      default: {
        std::vector<Rational> coords(static_cast<std::size_t>(uniform(1, 4)));
        for (auto& c : coords) c = chance(50) ? Rational(uniform(-1, 2)) : rational();
        return LogVector::from_dense(coords);
      }
    }
  }

  Term leaf() {
    const auto r = uniform(0, 99);
    if (r < 10) return Term::zero();
    if (r < 13) return Term::infty();
    if (r < 63) return Term::var();
    return Term::constant(term_constant());
  }

  /// Term of depth at most `depth`; depth 0 gives a leaf. Differences are
  /// drawn often because cancelling coefficients is where pieces appear.
  Term term(int depth) {
    if (depth <= 0 || chance(20)) return leaf();
    if (chance(10)) return shift_sum();
    const auto r = uniform(0, 99);
    if (r < 25) return Term::add(term(depth - 1), term(depth - 1));
    if (r < 40) return Term::add(term(depth - 1), Term::neg(term(depth - 1)));
    if (r < 45) return Term::neg(term(depth - 1));
    if (r < 60) return Term::psi(term(depth - 1));
    if (r < 75) return Term::s(term(depth - 1));
    if (r < 90) return Term::p(term(depth - 1));
    return Term::delta(static_cast<unsigned long long>(uniform(1, 4)), term(depth - 1));
  }

  Condition condition(int atoms, int depth) {
    if (atoms <= 1) {
      static const std::vector<Relation> relations{Relation::Less, Relation::Equal, Relation::Greater};
      const int d = static_cast<int>(uniform(1, std::max(1, depth)));
      Term lhs = chance(40) ? shift_sum() : term(d);
      Term rhs = chance(40) ? Term::constant(term_constant()) : term(d);
      Condition c = Condition::atom(std::move(lhs), pick(relations), std::move(rhs));
      return chance(15) ? Condition::negation(c) : c;
    }
    const int left = static_cast<int>(uniform(1, atoms - 1));
    Condition a = condition(left, depth);
    Condition b = condition(atoms - left, depth);
    Condition c = chance(50) ? Condition::conj(a, b) : Condition::disj(a, b);
    return chance(15) ? Condition::negation(c) : c;
  }

  /// A signed sum of one to three iterates s^k(x), |k| <= 2, sometimes
  /// under ψ, s or p: the shapes whose solution sets have real thresholds.
  Term shift_sum() {
    auto iterate = [this](Term t) {
      const auto k = uniform(-2, 2);
      for (long long i = 0; i < k; ++i) t = Term::s(t);
      for (long long i = 0; i > k; --i) t = Term::p(t);
      return t;
    };
    Term out = iterate(Term::var());
    const auto n = uniform(0, 2);
    for (long long i = 0; i < n; ++i) {
      Term next = iterate(Term::var());
      out = Term::add(out, chance(50) ? Term::neg(next) : next);
    }
    if (chance(40)) out = Term::add(out, Term::constant(term_constant()));
    switch (uniform(0, 5)) {
      case 0: return Term::psi(out);
      case 1: return Term::s(out);
      case 2: return Term::p(out);
      default: return out;
    }
  }

  /// Linear s-function with k strictly increasing and q != 0.
  SFunction sfunction() {
    const auto n = uniform(1, 4);
    std::vector<long long> ks;
    while (static_cast<long long>(ks.size()) < n) {
      const long long k = uniform(-3, 4);
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    std::vector<Shift> shifts;
    for (long long k : ks) shifts.push_back(Shift{k, chance(50) ? Rational(chance(50) ? 1 : -1) : nonzero_rational()});
    // steer the coefficient sum onto the branch values 0 and 1
    const auto steer = uniform(0, 3);
    if (steer < 2 && shifts.size() > 1) {
      Rational rest = 0;
      for (std::size_t j = 0; j + 1 < shifts.size(); ++j) rest += shifts[j].q;
      const Rational last = Rational(steer) - rest;
      if (last != 0) shifts.back().q = last;
    }
    return SFunction::linear(shifts, sfunction_beta(shifts));
  }

 private:
  static LogVector from_sum(const std::vector<std::pair<std::size_t, Rational>>& entries) {
    LogVector v;
    for (const auto& [i, c] : entries) v += c * LogVector::unit(i);
    return v;
  }

  LogVector shifted_tail(std::size_t from) {
    LogVector v;
    const auto count = uniform(0, 3);
    for (long long i = 0; i < count; ++i) v += rational() * LogVector::unit(from + static_cast<std::size_t>(uniform(0, 3)));
    return v;
  }

  LogVector sfunction_beta(const std::vector<Shift>& shifts) {
    Rational q = 0;
    for (const auto& s : shifts) q += s.q;
    switch (uniform(0, 7)) {
      case 0: return LogVector{};
      case 1: {
        // F(ψ_m) lands exactly on ψ_l
        const long long m = uniform(std::max<long long>(0, -shifts.front().k), 6);
        LogVector image;
        for (const auto& s : shifts) image += s.q * psi_vector(static_cast<std::size_t>(m + s.k));
        return image - psi_vector(static_cast<std::size_t>(uniform(0, 8)));
      }
      case 2:
        // agrees with q (or q - 1) for a while: puts the threshold deep
        return (chance(50) ? q : q - 1) * psi_vector(static_cast<std::size_t>(uniform(0, 5))) + shifted_tail(6);
      case 3: return Rational(-1) * LogVector::unit(0) + shifted_tail(1);
      case 4: return psi_vector(static_cast<std::size_t>(uniform(0, 5)));
      default: return sparse_vector();
    }
  }

  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// One-shot draws from a fresh stream seeded by cfg.seed.

inline LogVector gen_vector(const GenConfig& cfg) { return Generator(cfg).vector(); }
inline PsiElement gen_psi_element(const GenConfig& cfg) { return Generator(cfg).psi_element(); }
inline Term gen_term(const GenConfig& cfg, int depth) { return Generator(cfg).term(depth); }
inline SFunction gen_sfunction(const GenConfig& cfg) { return Generator(cfg).sfunction(); }

}  // namespace logcouple::oracle
