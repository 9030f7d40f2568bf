#pragma once

// Tracy-Widom distributions F_beta (beta = 1 and 2): CDF, PDF, quantile,
// sampling.
//
// Evaluation strategy: a dense table of high-precision values on
// [-10, 6] (step 0.02), generated once by Fredholm-determinant
// quadrature (tools/make_tw_grid) and compiled in.  At runtime the CDF
// is a monotone piecewise-cubic (Fritsch-Carlson) interpolant of
// log(CDF) on the left half and log(1-CDF) on the right half, which
// keeps relative accuracy in both tails; outside the table the known
// asymptotic tail expansions take over, with their constants fixed by
// continuity at the table edges.

#include "twroot/rng.hpp"

#include <cstddef>

namespace twroot {

enum class TWBeta : int { one = 1, two = 2 };

// The embedded support grid plus the analytic-tail switch points.
struct TWGrid {
    const double* abscissae;    // strictly increasing, size knots
    const double* log_cdf;      // ln F at each knot
    const double* log_sf;       // ln (1-F) at each knot
    std::size_t knots;
    double tail_switch_lo;      // below: analytic left tail
    double tail_switch_hi;      // above: analytic right tail
};

// Access the embedded grid for one order (for diagnostics and the
// regeneration check).
const TWGrid& tw_grid(TWBeta beta);

// CDF: total on finite reals, monotone, absolute accuracy <= 1e-6 on
// [-10, 6] (measured ~5e-8); analytic tails outside with correct leading
// behavior.  Non-finite input is a domain error.
double tw_cdf(double s, TWBeta beta = TWBeta::one);

// Survival function 1 - CDF, with full relative precision in the right
// tail (evaluated from the log-sf representation directly).
double tw_sf(double s, TWBeta beta = TWBeta::one);

// Density: derivative of the interpolant / tail expansions; nonnegative.
double tw_pdf(double s, TWBeta beta = TWBeta::one);

// Quantile by bracketed root-finding on tw_cdf, |s| tolerance 1e-8.
// alpha outside (0,1) is a domain error; alpha in the unresolvable tails
// (< 1e-14 or > 1 - 1e-14) raises tail_limit_error rather than
// returning a non-number.
double tw_quantile(double alpha, TWBeta beta = TWBeta::one);

// Right edge of the certified high-accuracy region (the table edge) and
// the survival probability there.  p-values requiring evaluation beyond
// this point raise tail_limit_error carrying tw_sf_at_certified_edge.
double tw_certified_right_edge();
double tw_sf_at_certified_edge(TWBeta beta = TWBeta::one);

// Inverse-CDF sampling from the caller's stream.
double tw_sample(RngStream& rng, TWBeta beta = TWBeta::one);

} // namespace twroot
