#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmcsolve {

/// Malformed graph or weights input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration outgrew its budget. Raised instead of returning a partial
/// (and therefore possibly wrong) answer; signals that the input is outside
/// the graph class the budget was sized for.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limit)
      : std::runtime_error(what + " exceeded budget of " + std::to_string(limit)), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// An exhaustive routine was called on an input larger than it supports.
class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(const std::string& routine, int n, int limit)
      : std::runtime_error(routine + ": n=" + std::to_string(n) + " exceeds limit " +
                           std::to_string(limit)) {}
};

}  // namespace pmcsolve
