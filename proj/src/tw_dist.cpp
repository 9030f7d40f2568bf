#include "twroot/tw_dist.hpp"
#include "twroot/errors.hpp"
#include "tw_grid_data.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace twroot {

namespace {

using detail::tw_grid_knots;

constexpr double grid_lo = -10.0;
constexpr double grid_hi = 6.0;
constexpr double grid_h = 0.02;

// Fritsch-Carlson slopes on a uniform grid: harmonic mean of adjacent
// secants (zero across sign changes), three-point one-sided ends with
// the usual monotonicity clamp.  Guarantees a monotone interpolant.
std::vector<double> pchip_slopes(const double* y, std::size_t n) {
    std::vector<double> d(n - 1), m(n);
    for (std::size_t k = 0; k + 1 < n; ++k) d[k] = (y[k + 1] - y[k]) / grid_h;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        m[k] = (d[k - 1] * d[k] > 0.0) ? 2.0 * d[k - 1] * d[k] / (d[k - 1] + d[k]) : 0.0;
    }
    auto endpoint = [](double d0, double d1) {
        double s = 0.5 * (3.0 * d0 - d1);
        if (s * d0 <= 0.0) return 0.0;
        if (std::fabs(s) > 3.0 * std::fabs(d0)) return 3.0 * d0;
        return s;
    };
    m[0] = endpoint(d[0], d[1]);
    m[n - 1] = endpoint(d[n - 2], d[n - 3]);
    return m;
}

// Cubic Hermite evaluation and derivative on knot interval i.
double hermite(const double* y, const std::vector<double>& m, std::size_t i, double t) {
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y[i] + grid_h * h10 * m[i] + h01 * y[i + 1] + grid_h * h11 * m[i + 1];
}

double hermite_deriv(const double* y, const std::vector<double>& m, std::size_t i, double t) {
    const double dh00 = 6.0 * t * (t - 1.0);
    const double dh10 = (1.0 - t) * (1.0 - 3.0 * t);
    const double dh01 = -dh00;
    const double dh11 = t * (3.0 * t - 2.0);
    return (dh00 * y[i] + dh01 * y[i + 1]) / grid_h + dh10 * m[i] + dh11 * m[i + 1];
}

// Tail exponents without their additive constants.
//   beta=1 left : ln F  = -|s|^3/24 - |s|^{3/2}/(3 sqrt 2) - ln|s|/16 + c
//   beta=2 left : ln F  = -|s|^3/12 - ln|s|/8 + c
//   beta=1 right: ln sf = -(2/3) s^{3/2} - (3/4) ln s - ln(4 sqrt pi) + c
//   beta=2 right: ln sf = -(4/3) s^{3/2} - (3/2) ln s - ln(16 pi) + c
// The constants c are fixed by continuity at the grid edges (they land on
// the known asymptotic values; see the tests).
double left_exponent(double s, int beta) {
    const double a = -s; // s < 0 here
    if (beta == 1)
        return -a * a * a / 24.0 - std::pow(a, 1.5) / (3.0 * std::sqrt(2.0)) - std::log(a) / 16.0;
    return -a * a * a / 12.0 - std::log(a) / 8.0;
}

double left_exponent_deriv(double s, int beta) {
    const double a = -s;
    if (beta == 1)
        return a * a / 8.0 + 0.5 * std::sqrt(a) / std::sqrt(2.0) + 1.0 / (16.0 * a);
    return a * a / 4.0 + 1.0 / (8.0 * a);
}

double right_exponent(double s, int beta) {
    if (beta == 1)
        return -2.0 / 3.0 * std::pow(s, 1.5) - 0.75 * std::log(s) - std::log(4.0 * std::sqrt(M_PI));
    return -4.0 / 3.0 * std::pow(s, 1.5) - 1.5 * std::log(s) - std::log(16.0 * M_PI);
}

double right_exponent_deriv(double s, int beta) {
    if (beta == 1) return -std::sqrt(s) - 0.75 / s;
    return -2.0 * std::sqrt(s) - 1.5 / s;
}

struct DistTable {
    const double* log_cdf;
    const double* log_sf;
    std::vector<double> slope_cdf;
    std::vector<double> slope_sf;
    std::size_t mid;        // first knot with F >= 1/2; switch between halves
    double c_left, c_right; // continuity-matched tail constants
    TWGrid view;

    DistTable(const double* lc, const double* ls, int beta)
        : log_cdf(lc), log_sf(ls),
          slope_cdf(pchip_slopes(lc, tw_grid_knots)),
          slope_sf(pchip_slopes(ls, tw_grid_knots)) {
        mid = 0;
        const double lhalf = std::log(0.5);
        while (mid + 1 < tw_grid_knots && log_cdf[mid] < lhalf) ++mid;
        c_left = log_cdf[0] - left_exponent(grid_lo, beta);
        c_right = log_sf[tw_grid_knots - 1] - right_exponent(grid_hi, beta);
        view = TWGrid{detail::tw_grid_abscissae, log_cdf, log_sf,
                      tw_grid_knots, grid_lo, grid_hi};
    }
};

const DistTable& table(TWBeta beta) {
    static const DistTable t1(detail::tw1_log_cdf, detail::tw1_log_sf, 1);
    static const DistTable t2(detail::tw2_log_cdf, detail::tw2_log_sf, 2);
    return beta == TWBeta::one ? t1 : t2;
}

std::size_t knot_interval(double s, double& t) {
    double u = (s - grid_lo) / grid_h;
    auto i = static_cast<std::ptrdiff_t>(u);
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(tw_grid_knots) - 2);
    t = u - static_cast<double>(i);
    return static_cast<std::size_t>(i);
}

void check_finite(double s, const char* who) {
    if (!std::isfinite(s)) throw domain_error(std::string(who) + ": non-finite argument");
}

// ln F and ln sf at any point (each one valid everywhere, evaluated from
// whichever representation carries the precision).
double log_cdf_at(double s, const DistTable& tab, int beta) {
    if (s < grid_lo) return tab.c_left + left_exponent(s, beta);
    if (s > grid_hi) return std::log1p(-std::exp(tab.c_right + right_exponent(s, beta)));
    double t;
    const std::size_t i = knot_interval(s, t);
    if (i + 1 <= tab.mid) return hermite(tab.log_cdf, tab.slope_cdf, i, t);
    return std::log1p(-std::exp(hermite(tab.log_sf, tab.slope_sf, i, t)));
}

double log_sf_at(double s, const DistTable& tab, int beta) {
    if (s > grid_hi) return tab.c_right + right_exponent(s, beta);
    if (s < grid_lo) return std::log1p(-std::exp(tab.c_left + left_exponent(s, beta)));
    double t;
    const std::size_t i = knot_interval(s, t);
    if (i + 1 <= tab.mid) return std::log1p(-std::exp(hermite(tab.log_cdf, tab.slope_cdf, i, t)));
    return hermite(tab.log_sf, tab.slope_sf, i, t);
}

} // namespace

const TWGrid& tw_grid(TWBeta beta) { return table(beta).view; }

double tw_cdf(double s, TWBeta beta) {
    check_finite(s, "tw_cdf");
    const DistTable& tab = table(beta);
    const int b = static_cast<int>(beta);
    if (s < grid_lo) return std::exp(tab.c_left + left_exponent(s, b));
    if (s > grid_hi) return -std::expm1(tab.c_right + right_exponent(s, b));
    double t;
    const std::size_t i = knot_interval(s, t);
    if (i + 1 <= tab.mid) return std::exp(hermite(tab.log_cdf, tab.slope_cdf, i, t));
    return -std::expm1(hermite(tab.log_sf, tab.slope_sf, i, t));
}

double tw_sf(double s, TWBeta beta) {
    check_finite(s, "tw_sf");
    const DistTable& tab = table(beta);
    const int b = static_cast<int>(beta);
    if (s > grid_hi) return std::exp(tab.c_right + right_exponent(s, b));
    if (s < grid_lo) return -std::expm1(tab.c_left + left_exponent(s, b));
    double t;
    const std::size_t i = knot_interval(s, t);
    if (i + 1 <= tab.mid) return -std::expm1(hermite(tab.log_cdf, tab.slope_cdf, i, t));
    return std::exp(hermite(tab.log_sf, tab.slope_sf, i, t));
}

double tw_pdf(double s, TWBeta beta) {
    check_finite(s, "tw_pdf");
    const DistTable& tab = table(beta);
    const int b = static_cast<int>(beta);
    double v;
    if (s < grid_lo) {
        v = std::exp(tab.c_left + left_exponent(s, b)) * left_exponent_deriv(s, b);
    } else if (s > grid_hi) {
        v = -std::exp(tab.c_right + right_exponent(s, b)) * right_exponent_deriv(s, b);
    } else {
        double t;
        const std::size_t i = knot_interval(s, t);
        if (i + 1 <= tab.mid) {
            // pdf = F * d(ln F)/ds
            v = std::exp(hermite(tab.log_cdf, tab.slope_cdf, i, t)) *
                hermite_deriv(tab.log_cdf, tab.slope_cdf, i, t);
        } else {
            // pdf = -sf * d(ln sf)/ds
            v = -std::exp(hermite(tab.log_sf, tab.slope_sf, i, t)) *
                hermite_deriv(tab.log_sf, tab.slope_sf, i, t);
        }
    }
    return v > 0.0 ? v : 0.0;
}

double tw_quantile(double alpha, TWBeta beta) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw domain_error("tw_quantile: alpha must lie in (0,1)");
    constexpr double tail_eps = 1e-14;
    if (alpha < tail_eps)
        throw tail_limit_error("tw_quantile: alpha below the resolvable lower tail", tail_eps);
    if (alpha > 1.0 - tail_eps)
        throw tail_limit_error("tw_quantile: alpha above the resolvable upper tail",
                               1.0 - tail_eps);

    const DistTable& tab = table(beta);
    const int b = static_cast<int>(beta);
    // Bisect on the log representation that carries relative precision
    // for this alpha; brackets hold for both orders.
    double lo = -13.0, hi = 14.0;
    const bool left_half = alpha < 0.5;
    const double target = left_half ? std::log(alpha) : std::log1p(-alpha);
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = left_half ? log_cdf_at(mid, tab, b) : log_sf_at(mid, tab, b);
        const bool go_right = left_half ? (v < target) : (v > target);
        if (go_right) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double tw_certified_right_edge() { return grid_hi; }

double tw_sf_at_certified_edge(TWBeta beta) {
    return std::exp(table(beta).log_sf[tw_grid_knots - 1]);
}

double tw_sample(RngStream& rng, TWBeta beta) {
    // inverse-CDF: clamp the uniform into the resolvable range (the
    // clamp probability, 2e-14, is unreachable in practice)
    double u = rng.uniform();
    u = std::clamp(u, 2e-14, 1.0 - 2e-14);
    return tw_quantile(u, beta);
}

} // namespace twroot
