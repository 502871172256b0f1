#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropilinear {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of operands do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Max-plus and min-plus operands were mixed.
class FlavorError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A search hit its configured node or cell budget before deciding.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// No (period, transient) pair was confirmed within the configured bounds.
class DetectionFailed : public Error {
 public:
  using Error::Error;
};

inline void require_dims(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace tropilinear
