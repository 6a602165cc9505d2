#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "logcouple/errors.hpp"

namespace logcouple {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational. Always stored in lowest terms with a positive denominator,
/// so value equality is representation equality.
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

inline int sign(const Rational& r) { return r.sign(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline Integer read_integer(std::string_view text, std::size_t& pos, std::size_t base_offset) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw syntax_error("expected digits", base_offset + start);
  return Integer(std::string(text.substr(start, pos - start)));
}

}  // namespace detail

/// Reads an optionally signed integer or fraction starting at `pos`.
/// `base_offset` only shifts the positions reported in errors.
inline Rational read_rational(std::string_view text, std::size_t& pos, std::size_t base_offset = 0) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer num = detail::read_integer(text, pos, base_offset);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = detail::read_integer(text, pos, base_offset);
    if (den == 0) throw syntax_error("zero denominator", base_offset + den_pos);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  Rational r = read_rational(text, pos);
  if (pos != text.size()) throw syntax_error("trailing characters in rational", pos);
  return r;
}

}  // namespace logcouple
