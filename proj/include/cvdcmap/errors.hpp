// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cvdcmap {

/// Invalid argument outside an operation's declared domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical model is undefined for the given input.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The (a', b') path has zero length, so equidistant resampling is undefined.
class DegeneratePathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No lightness in [0, 100] gives a displayable color for some (a', b').
class InfeasiblePointError : public std::runtime_error {
 public:
  InfeasiblePointError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// No straight J' line fits inside the per-index lightness bounds.
class InfeasibleLineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A regression has no spread in its independent variable.
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error(what), row_(row), column_(column) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class UnknownColormapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvdcmap
