#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minplus {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive routine refused to run because its input exceeds a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t reached)
      : std::runtime_error(what), cap_(cap), reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  /// Size of the offending input, or the partial count reached before giving up.
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

}  // namespace minplus
