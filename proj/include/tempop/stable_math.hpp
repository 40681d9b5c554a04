#pragma once

#include <cmath>

// Hyperbolic forms used throughout the oscillator thermometer, written so
// that both ends of the argument range stay finite: coth and csch^2 are
// expressed through expm1, arcoth through log1p. All functions take the
// dimensionless group theta = hbar*omega / (2 k_B T) or a variance ratio.

namespace tempop {

// coth(t) for t > 0. Exact identity coth t = 1 + 2/(e^{2t} - 1); expm1
// keeps the small-t limit 1/t accurate and the overflow of e^{2t} collapses
// harmlessly to coth = 1.
inline double coth_positive(double t) {
  return 1.0 + 2.0 / std::expm1(2.0 * t);
}

// csch^2(t) = 4 e^{2t} / (e^{2t} - 1)^2 for t > 0. The squared denominator
// overflows once e^{2t} > 1e154, so the far tail switches to 4 e^{-2t}.
inline double csch_squared(double t) {
  if (t > 170.0) return 4.0 * std::exp(-2.0 * t);
  const double em = std::expm1(2.0 * t);
  return 4.0 * (em + 1.0) / (em * em);
}

// arcoth(1 + delta) = (1/2) log(1 + 2/delta) for delta > 0. Taking the
// excess over 1 directly avoids re-forming the cancellation u - 1.
inline double arcoth_excess(double delta) {
  return 0.5 * std::log1p(2.0 / delta);
}

// arcoth(u) for u > 1.
inline double arcoth(double u) { return arcoth_excess(u - 1.0); }

}  // namespace tempop
