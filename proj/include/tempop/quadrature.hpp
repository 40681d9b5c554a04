#pragma once

#include <functional>

namespace tempop {

struct QuadratureResult {
  double value;
  double error_estimate;
  int subdivisions;
};

// Adaptive Gauss-Kronrod (G7, K15): greedy bisection of the interval with the
// largest error estimate until |error| <= max(abs_tol, rel_tol * |value|).
// Throws std::runtime_error if the budget of subdivisions is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol = 1e-12,
                           int max_subdivisions = 4000);

}  // namespace tempop
