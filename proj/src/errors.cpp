#include "vshift/errors.hpp"

namespace vshift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::pole: return "PoleError";
    case ErrorKind::overflow: return "OverflowError";
    case ErrorKind::accuracy: return "AccuracyError";
    case ErrorKind::divergence: return "DivergenceError";
    case ErrorKind::parameter: return "ParameterError";
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::symmetry: return "SymmetryError";
    case ErrorKind::region: return "RegionError";
    case ErrorKind::tolerance: return "ToleranceError";
    case ErrorKind::degenerate: return "DegenerateError";
    case ErrorKind::unsupported_order: return "UnsupportedOrderError";
    case ErrorKind::config: return "ConfigError";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::consistency: return "ConsistencyError";
    case ErrorKind::evaluation: return "EvaluationError";
    case ErrorKind::max_iter: return "MaxIterError";
  }
  return "Error";
}

}  // namespace vshift
