#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperbound {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Default slack for invariant checks on doubles. Every API that checks an
/// invariant takes its tolerance as a parameter defaulting to this value.
inline constexpr double kDefaultTolerance = 1e-9;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs of mismatched shape (vector/matrix dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented domain invariant (off the hyperboloid,
/// non-positive height, determinant not 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Floating point type used when the high-precision mode is selected.
using ExtendedReal = long double;

}  // namespace hyperbound
