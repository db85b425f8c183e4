#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace congsig {

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No path between an origin and a destination.
class NoPathError : public std::runtime_error {
 public:
  NoPathError(int origin, int dest)
      : std::runtime_error("no path from node " + std::to_string(origin) + " to node " +
                           std::to_string(dest)),
        origin_(origin),
        dest_(dest) {}

  int origin() const noexcept { return origin_; }
  int dest() const noexcept { return dest_; }

 private:
  int origin_;
  int dest_;
};

}  // namespace congsig
