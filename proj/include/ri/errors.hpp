#pragma once

#include <stdexcept>
#include <string>

namespace ri {

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A requested method cannot be applied: exact enumeration over the cap,
// or an asymptotic reference for a statistic with no registered limit law.
class MethodConstraintError : public std::runtime_error {
 public:
  explicit MethodConstraintError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ri
