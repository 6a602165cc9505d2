#pragma once

// The ordered Q-vector space ⊕_n Q e_n under the lexicographic order, plus a
// top element ∞. Text form is `[r0, r1, ..., rk]` or `inf`.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logcouple/errors.hpp"
#include "logcouple/rational.hpp"

namespace logcouple {

/// Finitely supported rational sequence, stored sparsely with no zero entries.
class LogVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  LogVector() = default;

  /// Sorts, merges duplicate indices and drops zeros.
  static LogVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    LogVector v;
    for (auto& [index, coeff] : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == index) {
        v.entries_.back().second += coeff;
      } else {
        v.entries_.emplace_back(index, std::move(coeff));
      }
    }
    v.drop_zeros();
    return v;
  }

  static LogVector from_dense(const std::vector<Rational>& coords) {
    LogVector v;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] != 0) v.entries_.emplace_back(i, coords[i]);
    }
    return v;
  }

  /// e_n
  static LogVector unit(std::size_t n) {
    LogVector v;
    v.entries_.emplace_back(n, Rational(1));
    return v;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  Rational coeff(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Rational(0);
  }

  /// Least index with a nonzero coordinate.
  std::optional<std::size_t> leading_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().first;
  }

  std::optional<std::size_t> max_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().first;
  }

  /// Sign of the leading coordinate; 0 for the zero vector.
  int sign() const { return entries_.empty() ? 0 : entries_.front().second.sign(); }

  /// Dense coordinates r_0..r_{max_index}.
  std::vector<Rational> dense() const {
    std::vector<Rational> out;
    if (entries_.empty()) return out;
    out.resize(entries_.back().first + 1);
    for (const auto& [i, c] : entries_) out[i] = c;
    return out;
  }

  LogVector& operator+=(const LogVector& other) {
    *this = combine(*this, other, false);
    return *this;
  }
  LogVector& operator-=(const LogVector& other) {
    *this = combine(*this, other, true);
    return *this;
  }

  friend LogVector operator+(const LogVector& a, const LogVector& b) { return combine(a, b, false); }
  friend LogVector operator-(const LogVector& a, const LogVector& b) { return combine(a, b, true); }

  friend LogVector operator-(LogVector a) {
    for (auto& e : a.entries_) e.second = -e.second;
    return a;
  }

  friend LogVector operator*(const Rational& q, LogVector a) {
    if (q == 0) return LogVector{};
    for (auto& e : a.entries_) e.second *= q;
    return a;
  }

  friend bool operator==(const LogVector&, const LogVector&) = default;

  /// Lexicographic order: a < b iff the first nonzero coordinate of b - a is positive.
  friend std::strong_ordering operator<=>(const LogVector& a, const LogVector& b) {
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
      if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
        return ia->second.sign() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      if (ia == a.entries_.end() || ib->first < ia->first) {
        return ib->second.sign() > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      if (ia->second != ib->second) {
        return ia->second < ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      ++ia;
      ++ib;
    }
    return std::strong_ordering::equal;
  }

 private:
  static LogVector combine(const LogVector& a, const LogVector& b, bool subtract) {
    LogVector out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
      if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
        out.entries_.push_back(*ia++);
      } else if (ia == a.entries_.end() || ib->first < ia->first) {
        out.entries_.emplace_back(ib->first, subtract ? Rational(-ib->second) : ib->second);
        ++ib;
      } else {
        Rational c = subtract ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
        if (c != 0) out.entries_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  void drop_zeros() {
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
  }

  std::vector<Entry> entries_;
};

inline LogVector scale(const Rational& q, const LogVector& a) { return q * a; }

/// ψ_n = e_0 + ... + e_n.
inline LogVector psi_vector(std::size_t n) {
  std::vector<LogVector::Entry> entries;
  entries.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) entries.emplace_back(k, Rational(1));
  return LogVector::from_entries(std::move(entries));
}

/// An element of Γ ∪ {∞}. ∞ is greater than every finite value and absorbs
/// addition and negation.
class ExtValue {
 public:
  ExtValue() : value_(LogVector{}) {}
  ExtValue(LogVector v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtValue infinity() {
    ExtValue v;
    v.value_.reset();
    return v;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const LogVector& finite() const {
    if (!value_) throw error("finite value requested from infinity");
    return *value_;
  }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtValue(*a.value_ + *b.value_);
  }

  friend ExtValue operator-(const ExtValue& a) {
    if (a.is_infinite()) return a;
    return ExtValue(-*a.value_);
  }

  friend bool operator==(const ExtValue&, const ExtValue&) = default;

  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<LogVector> value_;
};

inline ExtValue add(const ExtValue& a, const ExtValue& b) { return a + b; }
inline ExtValue negate(const ExtValue& a) { return -a; }
inline std::strong_ordering compare(const ExtValue& a, const ExtValue& b) { return a <=> b; }

/// δ_n-style scaling extended to ∞.
inline ExtValue scale(const Rational& q, const ExtValue& a) {
  if (a.is_infinite()) return a;
  return ExtValue(q * a.finite());
}

/// Archimedean class. Classes of nonzero vectors are determined by the
/// leading index; a smaller leading index is a larger class.
class ArchClass {
 public:
  static ArchClass of_zero() { return ArchClass(std::nullopt); }
  static ArchClass lead_index(std::size_t n) { return ArchClass(n); }

  bool is_zero_class() const noexcept { return !lead_.has_value(); }
  std::size_t index() const { return lead_.value(); }

  friend bool operator==(const ArchClass&, const ArchClass&) = default;

  friend std::strong_ordering operator<=>(const ArchClass& a, const ArchClass& b) {
    if (!a.lead_ || !b.lead_) {
      if (!a.lead_ && !b.lead_) return std::strong_ordering::equal;
      return !a.lead_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return *b.lead_ <=> *a.lead_;
  }

 private:
  explicit ArchClass(std::optional<std::size_t> lead) : lead_(lead) {}
  std::optional<std::size_t> lead_;
};

inline ArchClass arch_class(const LogVector& a) {
  auto lead = a.leading_index();
  return lead ? ArchClass::lead_index(*lead) : ArchClass::of_zero();
}

inline LogVector abs(const LogVector& a) { return a.sign() < 0 ? -a : a; }

/// Coefficients c with a = Σ c_n ψ_n; c_n = r_n - r_{n+1}.
inline std::map<std::size_t, Rational> to_psi_basis(const LogVector& a) {
  std::map<std::size_t, Rational> out;
  const auto& entries = a.entries();
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& [index, coeff] = entries[j];
    // c_index = r_index - r_{index+1}
    Rational next = (j + 1 < entries.size() && entries[j + 1].first == index + 1) ? entries[j + 1].second
                                                                                  : Rational(0);
    if (coeff != next) out[index] = coeff - next;
    // c_{index-1} = r_{index-1} - r_index, when r_{index-1} = 0
    if (index > 0 && (j == 0 || entries[j - 1].first != index - 1)) out[index - 1] = -coeff;
  }
  return out;
}

inline LogVector from_psi_basis(const std::map<std::size_t, Rational>& coeffs) {
  LogVector sum;
  for (const auto& [n, c] : coeffs) sum += c * psi_vector(n);
  return sum;
}

// ---------------------------------------------------------------------------
// Vector literal format

inline std::string to_string(const LogVector& v) {
  std::string out = "[";
  const auto dense = v.dense();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (i) out += ',';
    out += to_string(dense[i]);
  }
  out += ']';
  return out;
}

inline std::string to_string(const ExtValue& v) { return v.is_infinite() ? "inf" : to_string(v.finite()); }

inline std::ostream& operator<<(std::ostream& os, const LogVector& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << to_string(v); }

namespace detail {
inline void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}
}  // namespace detail

/// Reads `[r0, ..., rk]` starting at `pos` (which must point at '[').
inline LogVector read_vector_literal(std::string_view text, std::size_t& pos, std::size_t base_offset = 0) {
  if (pos >= text.size() || text[pos] != '[') throw syntax_error("expected '['", base_offset + pos);
  ++pos;
  std::vector<Rational> coords;
  detail::skip_space(text, pos);
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return LogVector{};
  }
  while (true) {
    detail::skip_space(text, pos);
    coords.push_back(read_rational(text, pos, base_offset));
    detail::skip_space(text, pos);
    if (pos >= text.size()) throw syntax_error("unterminated vector literal", base_offset + pos);
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') throw syntax_error("expected ',' or ']'", base_offset + pos);
    ++pos;
  }
  return LogVector::from_dense(coords);
}

/// Parses a complete vector literal or `inf`.
inline ExtValue parse_ext_value(std::string_view text) {
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  ExtValue out;
  if (text.substr(pos, 3) == "inf") {
    pos += 3;
    out = ExtValue::infinity();
  } else {
    out = ExtValue(read_vector_literal(text, pos));
  }
  detail::skip_space(text, pos);
  if (pos != text.size()) throw syntax_error("trailing characters after value", pos);
  return out;
}

inline LogVector parse_vector(std::string_view text) {
  ExtValue v = parse_ext_value(text);
  if (v.is_infinite()) throw syntax_error("expected a finite vector", 0);
  return v.finite();
}

}  // namespace logcouple
