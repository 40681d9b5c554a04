#pragma once

#include <cmath>

namespace tempop {

// Orthonormal Hermite functions h_n(u) = H_n(u) e^{-u^2/2} / sqrt(2^n n! sqrt(pi)),
// the dimensionless harmonic-oscillator eigenfunctions. Evaluated by the
// three-term recurrence on the normalized functions,
//   h_n = u sqrt(2/n) h_{n-1} - sqrt((n-1)/n) h_{n-2},
// which keeps every intermediate O(1) instead of letting H_n blow up.
inline double hermite_function(int n, double u) {
  const double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
  if (n == 0) return h0;
  double prev = h0;
  double curr = std::sqrt(2.0) * u * h0;
  for (int k = 2; k <= n; ++k) {
    const double next =
        u * std::sqrt(2.0 / k) * curr - std::sqrt((k - 1.0) / k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace tempop
