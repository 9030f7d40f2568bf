#pragma once
// Parameter conventions and quantile / p-value formulas for the null
// distribution of the greatest root statistic theta(p, m, n): the largest
// eigenvalue of (A+B)^{-1} B with A ~ W_p(m', I), B ~ W_p(n', I) in the
// MKB (Muirhead/Mardia-Kent-Bibby) parametrization used throughout.
//
//   p : dimension (positive integer)
//   m : error degrees of freedom      (real, m >= p)
//   n : hypothesis degrees of freedom (real, n > 0)
//
// Three equivalent conventions circulate; converters below are exact for
// half-integer inputs:
//   "Table"  (s, m_t, n_t): s = min(n,p), m_t = (|n-p|-1)/2, n_t = (m-p-1)/2
//   SAS      (p_s, q_s, v_s): model rank / hypothesis rank / error df
//
// The approximation: W = logit(theta) is centered and scaled with constants
// mu, sigma built from two angles, and (W - mu)/sigma is referred to the
// Tracy-Widom F1 law.  Everything here respects the distributional duality
//   theta(p, m, n)  =d  theta(n, m+n-p, p)
// bit-for-bit, by canonicalizing to n >= p before computing.

#include <map>
#include <vector>

namespace twroot {

struct GreatestRootParams {
    double p; // dimension (count)
    double m; // error degrees of freedom, m >= p
    double n; // hypothesis degrees of freedom, n > 0
};

struct TableParams {
    double s;   // number of nonzero roots (count)
    double m_t; // >= -1/2
    double n_t; // >= -1/2
};

struct SASParams {
    double p_s; // rank of the model matrix M (dimension)
    double q_s; // rank of the hypothesis matrix L
    double v_s; // error degrees of freedom, v_s >= p_s
};

// Centering/scaling constants of the logit-scale approximation:
//   sin^2(gamma/2) = (min(p,n) - 1/2) / (m+n-1)
//   sin^2(phi/2)   = (max(p,n) - 1/2) / (m+n-1)
//   mu             = 2 ln tan((phi+gamma)/2)
//   sigma^3        = 16 / ((m+n-1)^2 sin^2(phi+gamma) sin phi sin gamma)
struct TWApproxConstants {
    double gamma; // radians, in (0, pi)
    double phi;   // radians, in (0, pi); phi + gamma < pi
    double mu;    // logit scale
    double sigma; // logit scale, > 0
    double N_t;   // m + n - 1  (= 2(s + m_t + n_t) + 1)
};

// Everything a hypothesis-test driver reports about one observed root.
struct TestOutcome {
    double statistic; // observed theta, in (0,1)
    GreatestRootParams params;
    double p_tw;           // Tracy-Widom p-value (or its upper bound, see flag)
    bool p_tw_is_bound;    // true when the statistic lies beyond the certified
                           // tail: p_tw then holds the bound "p < p_tw"
    double p_f_bound;      // F-approximation p-value; anti-conservative lower bound
    double p_f_bound_log10;
    bool conservative_bound = false; // sequential-test results: the reference null
                                     // is stochastically larger, p-value is an
                                     // upper bound rather than exact
    std::map<double, double> critical_values; // alpha -> theta_alpha (increasing)
    TableParams table_view;
    SASParams sas_view;
};

// Throws domain_error unless p is a positive integer, m >= p, n > 0 and,
// when n < p (so the dual parametrization is the meaningful one), n is a
// positive integer too.
void validate(const GreatestRootParams& g);

// (p,m,n) -> (n, m+n-p, p) when n < p, identity otherwise; the dual triple
// has the same theta distribution, and all evaluators start from this form.
GreatestRootParams canonical(const GreatestRootParams& g);

TableParams to_table(const GreatestRootParams& g);
GreatestRootParams params_from_table(const TableParams& t);

SASParams to_sas(const GreatestRootParams& g);
GreatestRootParams params_from_sas(const SASParams& s);

// F-approximation degrees of freedom: nu1 = s + 2 m_t + 1 (hypothesis),
// nu2 = s + 2 n_t + 1 (error), from the canonical form.
double hypothesis_df(const GreatestRootParams& g);
double error_df(const GreatestRootParams& g);

TWApproxConstants tw_constants(const GreatestRootParams& g);

// theta_alpha = ilogit(mu + sigma * f_alpha), f_alpha the F1 quantile.
// Tail-limit errors from the F1 quantile propagate.
double quantile_approx(const GreatestRootParams& g, double alpha);

// P(theta > theta_obs) ~= 1 - F1((logit(theta_obs) - mu)/sigma).  When the
// standardized statistic lies beyond the certified right edge of the F1
// table, throws tail_limit_error carrying the certified bound (the p-value
// is below it) rather than extrapolating.
double pvalue_tw(double theta_obs, const GreatestRootParams& g);

// F-approximation to the same tail probability,
//   P_F = 1 - F_{nu1,nu2}( nu2 theta / (nu1 (1-theta)) ),
// evaluated without cancellation as I_{1-theta}(nu2/2, nu1/2).  A lower
// bound on the exact p-value (anti-conservative); documented as such.
double pvalue_f_bound(double theta_obs, const GreatestRootParams& g);
// log10 of the same quantity, usable far past double underflow.
double pvalue_f_bound_log10(double theta_obs, const GreatestRootParams& g);

// Lower-tail p-value of the smallest root via the reflection
// theta_min(p,m,n) =d 1 - theta_max(p,n,m) (note the m/n reversal):
// P(theta_min < x) = pvalue_tw(1-x; p, n, m).
double smallest_root_pvalue(double theta_obs, const GreatestRootParams& g);

// Exact special case: when the canonical dimension is 1 the root is a
// beta variable, theta ~ Beta(n/2, m/2).  Oracle plumbing for tests and
// the simulation harness; domain_error when min(p,n) != 1.
double beta_exact_cdf(double x, const GreatestRootParams& g);
double beta_exact_quantile(const GreatestRootParams& g, double alpha);

// Assemble the full report for one observed root.  Critical values are
// computed at the CDF levels `alphas` (theta_alpha increasing in alpha;
// alpha = 0.95 is the 5%-test critical value); a tail-limited TW p-value
// is stored as its bound with p_tw_is_bound set.
TestOutcome summarize(double theta_obs, const GreatestRootParams& g,
                      const std::vector<double>& alphas = {0.90, 0.95, 0.99, 0.999});

} // namespace twroot
