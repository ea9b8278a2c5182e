#pragma once

#include "bergman/cpoly.hpp"

#include <functional>

namespace bergman {

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;
};

/// Adaptive 7/15-point Gauss-Kronrod integration of a complex-valued f over
/// [a, b]; the interval with the largest error estimate is bisected until the
/// summed estimate meets max(abs_tol, rel_tol * |I|). ConvergenceError when
/// max_subdivisions is exhausted first.
QuadratureResult integrate_gk15(const std::function<cplx(double)>& f, double a, double b,
                                const QuadratureOptions& opts = {});

/// Complex log(1 + x) and exp(w) - 1 without cancellation for small arguments.
cplx log1p_c(cplx x);
cplx expm1_c(cplx w);

}  // namespace bergman
