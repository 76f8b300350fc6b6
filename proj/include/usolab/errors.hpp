#pragma once

#include <stdexcept>
#include <string>

namespace usolab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A coordinate, dimension or index outside its admissible range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Morris instances exist only for odd dimensions.
class ParityError : public Error {
public:
  using Error::Error;
};

/// An exhaustive routine was asked to work above its configured cap.
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// A square matrix turned out to be singular during elimination.
class SingularMatrixError : public Error {
public:
  SingularMatrixError(const std::string& what, int column)
      : Error(what), column_(column) {}

  /// 0-based column at which no nonzero pivot was found.
  int column() const noexcept { return column_; }

private:
  int column_;
};

/// A basis matrix A_B was singular, so M cannot be a P-matrix.
class NotPMatrixError : public Error {
public:
  using Error::Error;
};

/// Some basis solution has a zero coordinate.
class DegeneracyError : public Error {
public:
  DegeneracyError(const std::string& what, std::string basis, int coordinate)
      : Error(what), basis_(std::move(basis)), coordinate_(coordinate) {}

  const std::string& basis() const noexcept { return basis_; }
  /// 1-based coordinate with the zero entry.
  int coordinate() const noexcept { return coordinate_; }

private:
  std::string basis_;
  int coordinate_;
};

/// extract_solution was called on a basis whose solution is not nonnegative.
class NotASolutionError : public Error {
public:
  NotASolutionError(const std::string& what, int coordinate)
      : Error(what), coordinate_(coordinate) {}

  int coordinate() const noexcept { return coordinate_; }

private:
  int coordinate_;
};

/// Orientation data violating edge consistency or unique-sink requirements.
class MalformedOrientationError : public Error {
public:
  using Error::Error;
};

/// A checker was called on input that does not satisfy its precondition.
class DependencyError : public Error {
public:
  using Error::Error;
};

/// Text or JSON input that cannot be parsed.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

/// Seeded sampling gave up before producing a valid object.
class GenerationError : public Error {
public:
  using Error::Error;
};

}  // namespace usolab
