#pragma once

// s-functions on Ψ and their piecewise combinations.
//
// Levels identify Ψ-elements: level n is ψ_n. An s-function is either a
// constant in Γ ∪ {∞} or
//
//     F(x) = Σ_j q_j s^{k_j}(x) - β,   k_1 < ... < k_n,  q_j != 0,
//
// where s^k for negative k is p^{-k}. F is ∞ exactly on the initial segment
// I_F = {levels < -k_1} and finite on D_F = Ψ \ I_F.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcouple/couple.hpp"
#include "logcouple/errors.hpp"
#include "logcouple/vector.hpp"

namespace logcouple {

using Level = std::size_t;

struct Shift {
  long long k = 0;
  Rational q;

  friend bool operator==(const Shift&, const Shift&) = default;
};

class SFunction {
 public:
  /// The constant ∞.
  SFunction() : constant_(ExtValue::infinity()) {}

  static SFunction constant(ExtValue value) {
    SFunction f;
    f.constant_ = std::move(value);
    return f;
  }

  /// Merges equal shifts and drops zero coefficients. When nothing is left
  /// the result is the constant -β.
  static SFunction linear(std::vector<Shift> shifts, LogVector beta) {
    std::sort(shifts.begin(), shifts.end(), [](const Shift& a, const Shift& b) { return a.k < b.k; });
    std::vector<Shift> merged;
    for (auto& s : shifts) {
      if (!merged.empty() && merged.back().k == s.k) {
        merged.back().q += s.q;
      } else {
        merged.push_back(std::move(s));
      }
    }
    std::erase_if(merged, [](const Shift& s) { return s.q == 0; });
    if (merged.empty()) return constant(ExtValue(-beta));
    SFunction f;
    f.constant_.reset();
    f.shifts_ = std::move(merged);
    f.beta_ = std::move(beta);
    return f;
  }

  /// s^k(x)
  static SFunction iterate(long long k) { return linear({Shift{k, Rational(1)}}, LogVector{}); }

  bool is_constant() const noexcept { return constant_.has_value(); }
  bool is_linear() const noexcept { return !constant_.has_value(); }

  const ExtValue& value() const {
    if (!constant_) throw error("value() requested from a linear s-function");
    return *constant_;
  }
  const std::vector<Shift>& shifts() const noexcept { return shifts_; }
  const LogVector& beta() const noexcept { return beta_; }

  long long lowest_shift() const { return shifts_.at(0).k; }
  long long highest_shift() const { return shifts_.at(shifts_.size() - 1).k; }

  /// q = Σ q_j
  Rational coefficient_sum() const {
    Rational q = 0;
    for (const auto& s : shifts_) q += s.q;
    return q;
  }

  /// Least level of D_F; 0 for constants.
  Level domain_start() const {
    if (is_constant() || lowest_shift() >= 0) return 0;
    return static_cast<Level>(-lowest_shift());
  }

  bool in_domain(Level m) const { return m >= domain_start(); }

  /// Value at ψ_m.
  ExtValue operator()(Level m) const {
    if (is_constant()) return *constant_;
    if (!in_domain(m)) return ExtValue::infinity();
    // coordinate i of Σ q_j ψ_{m+k_j} is the sum of q_j over j with m+k_j >= i
    const auto top = static_cast<Level>(static_cast<long long>(m) + highest_shift());
    std::vector<Rational> coords(top + 1);
    Rational running = 0;
    std::size_t j = shifts_.size();
    for (Level i = top + 1; i-- > 0;) {
      while (j > 0 && static_cast<long long>(m) + shifts_[j - 1].k >= static_cast<long long>(i)) {
        running += shifts_[j - 1].q;
        --j;
      }
      coords[i] = running;
    }
    return ExtValue(LogVector::from_dense(coords) - beta_);
  }

  friend bool operator==(const SFunction& a, const SFunction& b) {
    return a.constant_ == b.constant_ && a.shifts_ == b.shifts_ && a.beta_ == b.beta_;
  }

  // Pointwise arithmetic. For linear operands the result is exact on the
  // intersection of their domains; PiecewiseSFunction splits domains first.

  friend SFunction operator+(const SFunction& a, const SFunction& b) {
    if (a.is_constant() && b.is_constant()) return constant(a.value() + b.value());
    if (a.is_constant() || b.is_constant()) {
      const SFunction& c = a.is_constant() ? a : b;
      const SFunction& l = a.is_constant() ? b : a;
      if (c.value().is_infinite()) return c;
      return linear(l.shifts_, l.beta_ - c.value().finite());
    }
    std::vector<Shift> shifts = a.shifts_;
    shifts.insert(shifts.end(), b.shifts_.begin(), b.shifts_.end());
    return linear(std::move(shifts), a.beta_ + b.beta_);
  }

  friend SFunction operator-(const SFunction& a) {
    if (a.is_constant()) return constant(-a.value());
    std::vector<Shift> shifts = a.shifts_;
    for (auto& s : shifts) s.q = -s.q;
    return linear(std::move(shifts), -a.beta_);
  }

  friend SFunction operator-(const SFunction& a, const SFunction& b) { return a + (-b); }

 private:
  std::optional<ExtValue> constant_;
  std::vector<Shift> shifts_;
  LogVector beta_;
};

inline SFunction add_sf(const SFunction& a, const SFunction& b) { return a + b; }
inline SFunction neg_sf(const SFunction& a) { return -a; }

/// Multiplication by a nonzero rational (δ_n is scaling by 1/n).
inline SFunction scale_sf(const Rational& q, const SFunction& f) {
  if (q == 0) throw error("scale_sf requires a nonzero factor");
  if (f.is_constant()) return SFunction::constant(scale(q, f.value()));
  std::vector<Shift> shifts = f.shifts();
  for (auto& s : shifts) s.q *= q;
  return SFunction::linear(std::move(shifts), q * f.beta());
}

inline ExtValue eval_sf(const SFunction& f, Level m) { return f(m); }
inline ExtValue eval_sf(const SFunction& f, PsiElement x) { return f(x.level); }

// ---------------------------------------------------------------------------

/// [lo, hi) in Ψ by levels; hi empty means ∞.
struct PsiInterval {
  Level lo = 0;
  std::optional<Level> hi;

  bool contains(Level m) const { return m >= lo && (!hi || m < *hi); }
  bool is_singleton() const { return hi && *hi == lo + 1; }
  bool empty() const { return hi && *hi <= lo; }

  friend bool operator==(const PsiInterval&, const PsiInterval&) = default;
};

inline bool ends_before(const std::optional<Level>& a, const std::optional<Level>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

inline std::optional<Level> min_end(const std::optional<Level>& a, const std::optional<Level>& b) {
  return ends_before(a, b) ? a : b;
}

struct Piece {
  PsiInterval interval;
  SFunction fn;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Appends contiguous pieces, merging neighbours that carry the same function.
class PieceBuilder {
 public:
  explicit PieceBuilder(Level start = 0) : end_(start) {}

  void push(Level lo, std::optional<Level> hi, const SFunction& fn) {
    if (hi && *hi <= lo) return;
    if (!end_ || lo != *end_) throw error("pieces must be contiguous");
    if (!pieces_.empty() && pieces_.back().fn == fn) {
      pieces_.back().interval.hi = hi;
    } else {
      pieces_.push_back(Piece{PsiInterval{lo, hi}, fn});
    }
    end_ = hi;
  }

  /// Pushes [current end, hi).
  void extend_to(std::optional<Level> hi, const SFunction& fn) { push(end_.value(), hi, fn); }

  std::optional<Level> end() const { return end_; }
  bool closed() const { return !end_.has_value(); }
  std::vector<Piece> take() { return std::move(pieces_); }

 private:
  std::vector<Piece> pieces_;
  std::optional<Level> end_;
};

/// Finite ordered partition of Ψ into intervals, one s-function per piece.
class PiecewiseSFunction {
 public:
  PiecewiseSFunction() : PiecewiseSFunction(SFunction::constant(ExtValue::infinity())) {}

  explicit PiecewiseSFunction(SFunction f) { pieces_.push_back(Piece{PsiInterval{0, std::nullopt}, std::move(f)}); }

  /// Validates that the pieces cover Ψ contiguously from level 0 to ∞.
  explicit PiecewiseSFunction(const std::vector<Piece>& pieces) {
    PieceBuilder b;
    for (const auto& p : pieces) {
      if (p.interval.empty()) throw error("empty piece");
      b.push(p.interval.lo, p.interval.hi, p.fn);
    }
    if (!b.closed()) throw error("pieces must extend to infinity");
    pieces_ = b.take();
  }

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  const Piece& piece_at(Level m) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), m,
                               [](Level v, const Piece& p) { return v < p.interval.lo; });
    return *(it - 1);
  }

  ExtValue operator()(Level m) const { return piece_at(m).fn(m); }

  /// Finite piece boundaries after level 0.
  std::vector<Level> breakpoints() const {
    std::vector<Level> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].interval.lo);
    return out;
  }

  friend bool operator==(const PiecewiseSFunction&, const PiecewiseSFunction&) = default;

 private:
  std::vector<Piece> pieces_;
};

inline ExtValue eval_piecewise(const PiecewiseSFunction& f, Level m) { return f(m); }

/// Common refinement of two partitions: (interval, fa, fb) triples.
struct JointPiece {
  PsiInterval interval;
  SFunction a;
  SFunction b;
};

inline std::vector<JointPiece> refine(const PiecewiseSFunction& fa, const PiecewiseSFunction& fb) {
  std::vector<JointPiece> out;
  auto ia = fa.pieces().begin();
  auto ib = fb.pieces().begin();
  Level lo = 0;
  while (true) {
    std::optional<Level> hi = min_end(ia->interval.hi, ib->interval.hi);
    out.push_back(JointPiece{PsiInterval{lo, hi}, ia->fn, ib->fn});
    if (!hi) break;
    lo = *hi;
    if (ia->interval.hi == hi) ++ia;
    if (ib->interval.hi == hi) ++ib;
  }
  return out;
}

/// Splits every linear piece at the start of its domain, replacing the part
/// below with the constant ∞. Afterwards linear pieces are finite throughout.
inline PiecewiseSFunction split_domains(const PiecewiseSFunction& f) {
  PieceBuilder b;
  for (const auto& p : f.pieces()) {
    const Level start = p.fn.domain_start();
    if (p.fn.is_linear() && start > p.interval.lo) {
      const Level cut = p.interval.hi ? std::min(start, *p.interval.hi) : start;
      b.push(p.interval.lo, cut, SFunction::constant(ExtValue::infinity()));
      b.push(cut, p.interval.hi, p.fn);
    } else {
      b.push(p.interval.lo, p.interval.hi, p.fn);
    }
  }
  return PiecewiseSFunction(b.take());
}

/// Copies the part of `g` (a total function) lying inside `window` into `b`.
inline void append_window(PieceBuilder& b, const PiecewiseSFunction& g, const PsiInterval& window) {
  for (const auto& p : g.pieces()) {
    const Level lo = std::max(p.interval.lo, window.lo);
    const std::optional<Level> hi = min_end(p.interval.hi, window.hi);
    if (hi && *hi <= lo) continue;
    b.push(lo, hi, p.fn);
  }
}

template <class Fn>
PiecewiseSFunction map_pieces(const PiecewiseSFunction& f, Fn&& fn) {
  PieceBuilder b;
  for (const auto& p : f.pieces()) b.push(p.interval.lo, p.interval.hi, fn(p.fn));
  return PiecewiseSFunction(b.take());
}

inline PiecewiseSFunction operator+(const PiecewiseSFunction& a, const PiecewiseSFunction& b) {
  PieceBuilder out;
  for (const auto& j : refine(split_domains(a), split_domains(b))) {
    out.push(j.interval.lo, j.interval.hi, j.a + j.b);
  }
  return PiecewiseSFunction(out.take());
}

inline PiecewiseSFunction operator-(const PiecewiseSFunction& a) {
  return map_pieces(a, [](const SFunction& f) { return -f; });
}

inline PiecewiseSFunction scale(const Rational& q, const PiecewiseSFunction& a) {
  return map_pieces(a, [&](const SFunction& f) { return scale_sf(q, f); });
}

// ---------------------------------------------------------------------------
// Text

/// How Ψ-elements are written: as vectors, or as psi_n with `psi_names`.
struct TextStyle {
  bool psi_names = false;
};

inline std::string render(const ExtValue& v, TextStyle style = {}) {
  if (style.psi_names) {
    if (auto level = psi_level(v)) return "psi_" + std::to_string(*level);
  }
  return to_string(v);
}

inline std::string render_level(Level m, TextStyle style = {}) { return render(ExtValue(psi_vector(m)), style); }

inline std::string shift_name(long long k) {
  if (k == 0) return "x";
  if (k == 1) return "s(x)";
  if (k == -1) return "p(x)";
  return (k > 0 ? "s^" : "p^") + std::to_string(k > 0 ? k : -k) + "(x)";
}

inline std::string render(const SFunction& f, TextStyle style = {}) {
  if (f.is_constant()) return render(f.value(), style);
  std::string out;
  bool first = true;
  for (const auto& s : f.shifts()) {
    Rational q = s.q;
    if (!first) {
      out += q < 0 ? " - " : " + ";
      if (q < 0) q = -q;
    } else if (q == -1) {
      out += "-";
      q = 1;
    }
    first = false;
    if (q != 1) out += to_string(q) + "*";
    out += shift_name(s.k);
  }
  if (!f.beta().is_zero()) out += " - " + to_string(f.beta());
  return out;
}

inline std::string to_string(const SFunction& f) { return render(f); }

inline std::string render(const PsiInterval& i, TextStyle style = {}) {
  return "[" + render_level(i.lo, style) + ", " + (i.hi ? render_level(*i.hi, style) : std::string("inf")) + ")";
}

inline std::string to_string(const PsiInterval& i) { return render(i, TextStyle{true}); }

/// One line per piece.
inline std::string render(const PiecewiseSFunction& f, TextStyle style = {}) {
  std::string out;
  for (const auto& p : f.pieces()) out += render(p.interval, style) + "  " + render(p.fn, style) + "\n";
  return out;
}

}  // namespace logcouple
