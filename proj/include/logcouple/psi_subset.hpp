#pragma once

// Subsets of Ψ that are finite unions of intervals and points.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "logcouple/sfunction.hpp"

namespace logcouple {

class PsiSubset {
 public:
  PsiSubset() = default;

  static PsiSubset all() { return from_runs({PsiInterval{0, std::nullopt}}); }
  static PsiSubset none() { return PsiSubset(); }
  static PsiSubset point(Level m) { return from_runs({PsiInterval{m, m + 1}}); }
  static PsiSubset interval(Level lo, std::optional<Level> hi) { return from_runs({PsiInterval{lo, hi}}); }

  /// Normalizes arbitrary runs: sorts, merges overlapping and adjacent ones.
  static PsiSubset from_runs(std::vector<PsiInterval> runs) {
    std::erase_if(runs, [](const PsiInterval& r) { return r.empty(); });
    std::sort(runs.begin(), runs.end(), [](const PsiInterval& a, const PsiInterval& b) { return a.lo < b.lo; });
    PsiSubset out;
    for (const auto& r : runs) {
      if (!out.runs_.empty()) {
        auto& last = out.runs_.back();
        if (!last.hi) break;
        if (r.lo <= *last.hi) {
          if (ends_before(last.hi, r.hi)) last.hi = r.hi;
          continue;
        }
      }
      out.runs_.push_back(r);
    }
    return out;
  }

  /// Maximal runs, sorted, pairwise separated by at least one level.
  const std::vector<PsiInterval>& runs() const noexcept { return runs_; }

  /// Runs of length at least two.
  std::vector<PsiInterval> intervals() const {
    std::vector<PsiInterval> out;
    for (const auto& r : runs_) {
      if (!r.is_singleton()) out.push_back(r);
    }
    return out;
  }

  /// Isolated levels.
  std::vector<Level> points() const {
    std::vector<Level> out;
    for (const auto& r : runs_) {
      if (r.is_singleton()) out.push_back(r.lo);
    }
    return out;
  }

  bool empty() const noexcept { return runs_.empty(); }
  bool is_all() const { return runs_.size() == 1 && runs_[0].lo == 0 && !runs_[0].hi; }

  bool contains(Level m) const {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), m,
                               [](Level v, const PsiInterval& r) { return v < r.lo; });
    return it != runs_.begin() && (it - 1)->contains(m);
  }

  /// True when the stored runs are sorted and nonempty with a gap between neighbours.
  bool is_normalized() const {
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      if (runs_[i].empty()) return false;
      if (i + 1 < runs_.size()) {
        if (!runs_[i].hi || *runs_[i].hi >= runs_[i + 1].lo) return false;
      }
    }
    return true;
  }

  PsiSubset complement() const {
    std::vector<PsiInterval> out;
    Level cursor = 0;
    for (const auto& r : runs_) {
      if (r.lo > cursor) out.push_back(PsiInterval{cursor, r.lo});
      if (!r.hi) return from_runs(std::move(out));
      cursor = *r.hi;
    }
    out.push_back(PsiInterval{cursor, std::nullopt});
    return from_runs(std::move(out));
  }

  friend PsiSubset operator|(const PsiSubset& a, const PsiSubset& b) {
    std::vector<PsiInterval> runs = a.runs_;
    runs.insert(runs.end(), b.runs_.begin(), b.runs_.end());
    return from_runs(std::move(runs));
  }

  friend PsiSubset operator&(const PsiSubset& a, const PsiSubset& b) {
    return (a.complement() | b.complement()).complement();
  }

  friend bool operator==(const PsiSubset&, const PsiSubset&) = default;

 private:
  std::vector<PsiInterval> runs_;
};

/// Components joined by " u ": intervals as [lo, hi), points as {p}.
inline std::string render(const PsiSubset& s, TextStyle style = {}) {
  if (s.empty()) return "empty";
  std::string out;
  for (const auto& r : s.runs()) {
    if (!out.empty()) out += " u ";
    out += r.is_singleton() ? "{" + render_level(r.lo, style) + "}" : render(r, style);
  }
  return out;
}

}  // namespace logcouple
