#include <string>

#include "vshift/errors.hpp"
#include "vshift/types.hpp"

namespace vshift {

EvalSettings::EvalSettings(double rel_tol, int max_terms, int em_terms, double quad_abs_tol)
    : rel_tol_(rel_tol), max_terms_(max_terms), em_terms_(em_terms), quad_abs_tol_(quad_abs_tol) {
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be positive");
  if (max_terms < 16) throw ParameterError("max_terms must be at least 16");
  if (em_terms < 1) throw ParameterError("em_terms must be at least 1");
  if (!(quad_abs_tol > 0.0)) throw ParameterError("quad_abs_tol must be positive");
}

EvalSettings EvalSettings::with_rel_tol(double v) const {
  return {v, max_terms_, em_terms_, quad_abs_tol_};
}

EvalSettings EvalSettings::with_max_terms(int v) const {
  return {rel_tol_, v, em_terms_, quad_abs_tol_};
}

EvalSettings EvalSettings::with_quad_abs_tol(double v) const {
  return {rel_tol_, max_terms_, em_terms_, v};
}

}  // namespace vshift
