#pragma once

// Scalar special functions needed by the distribution code: regularized
// incomplete beta (continued fraction), beta / F distribution helpers.
// Self-contained so the far-tail precision contract (1e-10 relative) is
// owned and tested here rather than inherited from a platform libm.

#include <utility>

namespace twroot {

// log Beta(a,b)
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b) by the Lentz continued fraction.
// Relative accuracy ~1e-13 for moderate parameters and >=1e-10 in the far
// tail (x near 0 with the unswapped series), which is where F-distribution
// tail probabilities live.
double ibeta(double a, double b, double x);

// Natural log of I_x(a,b), computed without underflow: usable down to
// magnitudes ~1e-300 and below in log space.
double ibeta_log(double a, double b, double x);

// Inverse of ibeta in x for fixed (a,b): smallest x with I_x(a,b) >= p.
// Newton iterations safeguarded by bisection; |I_x - p| <= 1e-13 or x
// bracketed to 1e-15.
double ibeta_inv(double a, double b, double p);

// Beta(a,b) distribution.
double beta_cdf(double x, double a, double b);
double beta_quantile(double p, double a, double b);

// Central F distribution with (d1, d2) degrees of freedom.  The survival
// function evaluates the complement incomplete beta directly so deep
// upper-tail values keep full relative precision.
double f_cdf(double x, double d1, double d2);
double f_sf(double x, double d1, double d2);
double f_sf_log(double x, double d1, double d2); // ln of f_sf

} // namespace twroot
