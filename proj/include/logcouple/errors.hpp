#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logcouple {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position()` is a byte offset into the input.
class syntax_error : public error {
 public:
  syntax_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class arity_error : public syntax_error {
 public:
  using syntax_error::syntax_error;
};

class unknown_symbol : public syntax_error {
 public:
  using syntax_error::syntax_error;
};

/// chi() called on a value >= 0.
class non_negative_argument : public error {
 public:
  using error::error;
};

/// prime() called on 0.
class zero_argument : public error {
 public:
  using error::error;
};

class unknown_suite : public error {
 public:
  explicit unknown_suite(const std::string& name) : error("unknown suite: " + name) {}
};

}  // namespace logcouple
