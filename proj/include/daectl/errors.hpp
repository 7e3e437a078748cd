#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace daectl {

/// Shape or size mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (zero polynomial, bad selection, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zero pivot met by elimination without row switching.
class PivotError : public std::domain_error {
 public:
  PivotError(std::size_t pivot, const std::string& what)
      : std::domain_error(what), pivot_(pivot) {}

  /// 0-based index of the vanishing diagonal pivot.
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

/// Malformed textual input (rational strings, triple files, CLI lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace daectl
