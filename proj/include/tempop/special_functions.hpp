#pragma once

namespace tempop {

// standard normal CDF via erfc
double normal_cdf(double z);

// regularized lower incomplete gamma P(a, x): series for x < a + 1,
// Lentz continued fraction otherwise; absolute accuracy ~1e-14
double regularized_gamma_p(double a, double x);

// regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed on the
// branch that is accurate in the tail
double regularized_gamma_q(double a, double x);

// abscissa x such that Q(a, x) <= eps; coarse but guaranteed upper bound
double gamma_upper_tail_abscissa(double a, double eps);

}  // namespace tempop
