#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigfide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node count not a power of two, or too small for the requested operation.
class InvalidGridError : public Error {
 public:
  using Error::Error;
};

/// Input vector or matrix has the wrong length/shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied function returned a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Normalised error metric with a zero normaliser.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

/// s and e do not fall on collocation nodes.
class CommensurabilityError : public Error {
 public:
  using Error::Error;
};

/// The two constructions of the derivative matrix disagree.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, std::size_t row, std::size_t col,
                    double deviation)
      : Error(what), row_(row), col_(col), deviation_(deviation) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::size_t row_, col_;
  double deviation_;
};

/// Inconsistent inputs to G-map or system assembly (frame mismatch, bad boundary matrix).
class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// The G-map disagrees with its quadrature oracle.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t node, double deviation)
      : Error(what), node_(node), deviation_(deviation) {}
  std::size_t node() const noexcept { return node_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::size_t node_;
  double deviation_;
};

/// Exact zero pivot in LU, or a collocation system too ill-conditioned to trust.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Building a manufactured problem failed (quadrature did not converge).
class ManufactureError : public Error {
 public:
  using Error::Error;
};

/// Wraps an error raised inside solve_fide with the pipeline stage it came from.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace trigfide
