#include "twroot/greatest_root.hpp"
#include "twroot/errors.hpp"
#include "twroot/special.hpp"
#include "twroot/tw_dist.hpp"

#include <cmath>
#include <string>

namespace twroot {

namespace {

bool is_count(double x) { return x >= 1.0 && x == std::floor(x); }

double logit(double t) { return std::log(t / (1.0 - t)); }

double ilogit(double x) {
    // stable in both directions
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

void check_theta(double theta, const char* who) {
    if (!(theta > 0.0 && theta < 1.0))
        throw domain_error(std::string(who) + ": observed root must lie strictly in (0,1)");
}

} // namespace

void validate(const GreatestRootParams& g) {
    if (!(std::isfinite(g.p) && std::isfinite(g.m) && std::isfinite(g.n)))
        throw domain_error("greatest-root params: non-finite field");
    if (!is_count(g.p))
        throw domain_error("greatest-root params: p must be a positive integer (dimension)");
    if (!(g.n > 0.0))
        throw domain_error("greatest-root params: hypothesis df n must be positive");
    if (!(g.m >= g.p))
        throw domain_error("greatest-root params: error df m must be at least the dimension p");
    if (g.n < g.p && !is_count(g.n))
        throw domain_error("greatest-root params: n < p requires integer n (dual dimension)");
}

GreatestRootParams canonical(const GreatestRootParams& g) {
    validate(g);
    if (g.n < g.p) return {g.n, g.m + g.n - g.p, g.p};
    return g;
}

TableParams to_table(const GreatestRootParams& g) {
    validate(g);
    const double s = std::min(g.n, g.p);
    return {s, (std::fabs(g.n - g.p) - 1.0) / 2.0, (g.m - g.p - 1.0) / 2.0};
}

GreatestRootParams params_from_table(const TableParams& t) {
    if (!(std::isfinite(t.s) && std::isfinite(t.m_t) && std::isfinite(t.n_t)))
        throw domain_error("table params: non-finite field");
    if (!is_count(t.s)) throw domain_error("table params: s must be a positive integer");
    if (!(t.m_t >= -0.5) || !(t.n_t >= -0.5))
        throw domain_error("table params: m and n must be >= -1/2");
    return {t.s, t.s + 2.0 * t.n_t + 1.0, t.s + 2.0 * t.m_t + 1.0};
}

SASParams to_sas(const GreatestRootParams& g) {
    validate(g);
    return {g.p, g.n, g.m};
}

GreatestRootParams params_from_sas(const SASParams& s) {
    if (!(std::isfinite(s.p_s) && std::isfinite(s.q_s) && std::isfinite(s.v_s)))
        throw domain_error("sas params: non-finite field");
    if (!is_count(s.p_s) || !is_count(s.q_s))
        throw domain_error("sas params: ranks p and q must be positive integers");
    if (!(s.v_s >= s.p_s))
        throw domain_error("sas params: error df v must be at least the model rank p");
    return params_from_table({std::min(s.p_s, s.q_s),
                              (std::fabs(s.p_s - s.q_s) - 1.0) / 2.0,
                              (s.v_s - s.p_s - 1.0) / 2.0});
}

double hypothesis_df(const GreatestRootParams& g) {
    const TableParams t = to_table(canonical(g));
    return t.s + 2.0 * t.m_t + 1.0;
}

double error_df(const GreatestRootParams& g) {
    const TableParams t = to_table(canonical(g));
    return t.s + 2.0 * t.n_t + 1.0;
}

TWApproxConstants tw_constants(const GreatestRootParams& g) {
    const GreatestRootParams c = canonical(g);
    const double N = c.m + c.n - 1.0;
    const double lo = (std::min(c.p, c.n) - 0.5) / N;
    const double hi = (std::max(c.p, c.n) - 0.5) / N;
    if (!(lo > 0.0))
        throw domain_error("tw_constants: min(p,n) must exceed 1/2");
    if (!(hi < 1.0))
        throw domain_error("tw_constants: angle undefined, (max(p,n)-1/2)/(m+n-1) >= 1");
    // phi + gamma < pi is equivalent to lo + hi < 1, i.e. m > p exactly; test
    // the raw parameters rather than the computed angles, whose rounding can
    // land a hair below pi on the boundary and let a degenerate case through
    if (!(c.m > c.p))
        throw domain_error("tw_constants: error df m must exceed the dimension p "
                           "(m = p puts phi + gamma at pi, where the logit-scale "
                           "constants do not exist)");
    const double gamma = 2.0 * std::asin(std::sqrt(lo));
    const double phi = 2.0 * std::asin(std::sqrt(hi));
    if (!(phi + gamma < M_PI))
        throw domain_error("tw_constants: phi + gamma >= pi (need error df m > p)");
    const double mu = 2.0 * std::log(std::tan(0.5 * (phi + gamma)));
    const double s3 = 16.0 / (N * N * std::pow(std::sin(phi + gamma), 2) *
                              std::sin(phi) * std::sin(gamma));
    return {gamma, phi, mu, std::cbrt(s3), N};
}

double quantile_approx(const GreatestRootParams& g, double alpha) {
    const TWApproxConstants c = tw_constants(g);
    const double f = tw_quantile(alpha, TWBeta::one);
    return ilogit(c.mu + c.sigma * f);
}

double pvalue_tw(double theta_obs, const GreatestRootParams& g) {
    check_theta(theta_obs, "pvalue_tw");
    const TWApproxConstants c = tw_constants(g);
    const double z = (logit(theta_obs) - c.mu) / c.sigma;
    if (z > tw_certified_right_edge())
        throw tail_limit_error("pvalue_tw: statistic beyond the certified tail; "
                               "p-value is below the attached bound",
                               tw_sf_at_certified_edge(TWBeta::one));
    return tw_sf(z, TWBeta::one);
}

double pvalue_f_bound(double theta_obs, const GreatestRootParams& g) {
    check_theta(theta_obs, "pvalue_f_bound");
    // 1 - F_{nu1,nu2}(nu2 theta/(nu1(1-theta))) collapses algebraically to
    // the regularized incomplete beta of the complement: no 1-p subtraction.
    return ibeta(0.5 * error_df(g), 0.5 * hypothesis_df(g), 1.0 - theta_obs);
}

double pvalue_f_bound_log10(double theta_obs, const GreatestRootParams& g) {
    check_theta(theta_obs, "pvalue_f_bound");
    return ibeta_log(0.5 * error_df(g), 0.5 * hypothesis_df(g), 1.0 - theta_obs) /
           std::log(10.0);
}

double smallest_root_pvalue(double theta_obs, const GreatestRootParams& g) {
    check_theta(theta_obs, "smallest_root_pvalue");
    const GreatestRootParams c = canonical(g);
    return pvalue_tw(1.0 - theta_obs, {c.p, c.n, c.m});
}

double beta_exact_cdf(double x, const GreatestRootParams& g) {
    const GreatestRootParams c = canonical(g);
    if (c.p != 1.0)
        throw domain_error("beta_exact: needs min(p,n) = 1 (univariate root)");
    if (!(x >= 0.0 && x <= 1.0))
        throw domain_error("beta_exact_cdf: x outside [0,1]");
    return ibeta(0.5 * c.n, 0.5 * c.m, x);
}

double beta_exact_quantile(const GreatestRootParams& g, double alpha) {
    const GreatestRootParams c = canonical(g);
    if (c.p != 1.0)
        throw domain_error("beta_exact: needs min(p,n) = 1 (univariate root)");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw domain_error("beta_exact_quantile: alpha must lie in (0,1)");
    return ibeta_inv(0.5 * c.n, 0.5 * c.m, alpha);
}

TestOutcome summarize(double theta_obs, const GreatestRootParams& g,
                      const std::vector<double>& alphas) {
    check_theta(theta_obs, "summarize");
    TestOutcome out;
    out.statistic = theta_obs;
    out.params = canonical(g);
    try {
        out.p_tw = pvalue_tw(theta_obs, g);
        out.p_tw_is_bound = false;
    } catch (const tail_limit_error& e) {
        out.p_tw = e.bound;
        out.p_tw_is_bound = true;
    }
    out.p_f_bound = pvalue_f_bound(theta_obs, g);
    out.p_f_bound_log10 = pvalue_f_bound_log10(theta_obs, g);
    for (double a : alphas) out.critical_values[a] = quantile_approx(g, a);
    out.table_view = to_table(g);
    out.sas_view = to_sas(g);
    return out;
}

} // namespace twroot
