#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vshift {

enum class ErrorKind {
  pole,
  overflow,
  accuracy,
  divergence,
  parameter,
  domain,
  symmetry,
  region,
  tolerance,
  degenerate,
  unsupported_order,
  config,
  parse,
  consistency,
  evaluation,
  max_iter,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` identifies the failure
/// class for machine-readable reporting.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindError : public Error {
 public:
  explicit KindError(const std::string& what) : Error(K, what) {}
};

using PoleError = KindError<ErrorKind::pole>;
using OverflowError = KindError<ErrorKind::overflow>;
using AccuracyError = KindError<ErrorKind::accuracy>;
using DivergenceError = KindError<ErrorKind::divergence>;
using ParameterError = KindError<ErrorKind::parameter>;
using DomainError = KindError<ErrorKind::domain>;
using SymmetryError = KindError<ErrorKind::symmetry>;
using RegionError = KindError<ErrorKind::region>;
using ToleranceError = KindError<ErrorKind::tolerance>;
using DegenerateError = KindError<ErrorKind::degenerate>;
using UnsupportedOrderError = KindError<ErrorKind::unsupported_order>;
using ConfigError = KindError<ErrorKind::config>;
using ParseError = KindError<ErrorKind::parse>;
using ConsistencyError = KindError<ErrorKind::consistency>;
using MaxIterError = KindError<ErrorKind::max_iter>;

/// Raised when a user-supplied evaluator fails; carries the offending abscissa.
class EvaluationError : public Error {
 public:
  EvaluationError(double t, const std::string& what)
      : Error(ErrorKind::evaluation, what), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

}  // namespace vshift
