#pragma once
// Seedable, parallel Monte Carlo engine for the exact null greatest-root
// distribution (double Wishart): the verification oracle behind every
// approximation claim, and a user-facing simulator.
//
// Determinism contract: a fixed (seed, reps, params) produces a
// bit-identical sample multiset for ANY worker count, because replication
// i always draws from its own substream RngStream(seed, i).  The OpenMP
// kernel and the serial reference implementation below are interchangeable
// and are compared by the benchmark target.

#include "twroot/greatest_root.hpp"
#include "twroot/mv_tests.hpp"
#include "twroot/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twroot {

struct SimConfig {
    std::uint64_t reps = 10000;
    std::uint64_t seed = 1;
    int workers = 0; // <= 0: TWROOT_WORKERS env var, else all available cores
    GreatestRootParams params{2, 7, 2}; // integer df required for sampling
};

struct EmpiricalDist {
    std::vector<double> sample; // sorted ascending, all in (0,1)
    std::uint64_t reps = 0;
    GreatestRootParams params{0, 0, 0};
    std::map<double, double> summary_quantiles; // at 0.5/0.9/0.95/0.99

    // Type-1 (order statistic) estimator: the ceil(alpha*reps)-th smallest.
    double quantile(double alpha) const;
};

// Worker count used when SimConfig.workers <= 0: the TWROOT_WORKERS
// environment variable when set to a positive integer, else the OpenMP
// default (1 in a serial build).
int default_workers();

// One W_p(I, df) draw.  Gram product of a df x p Gaussian matrix for
// df <= 2p, Bartlett (Cholesky-factor) construction above that; the two
// routes are cross-validated in the tests.
Eigen::MatrixXd sample_wishart(int p, long df, RngStream& rng);

// reps i.i.d. draws of theta(p,m,n), sorted.  Throws domain_error for
// non-integer degrees of freedom (the simulation is only defined there).
EmpiricalDist sample_greatest_root(const SimConfig& cfg);
// Serial reference kernel: identical output, no threading.
EmpiricalDist sample_greatest_root_serial(const SimConfig& cfg);

struct CompareRow {
    double alpha;
    double theta_tw; // logit/Tracy-Widom approximate quantile
    double theta_mc; // empirical quantile
    double rel_err;  // theta_tw / theta_mc - 1
    double mc_se;    // MC standard error of theta_mc (binomial band through
                     // the empirical quantile slope)
};

// One simulation, many quantile comparisons.
std::vector<CompareRow> compare_tw_vs_mc(const SimConfig& cfg,
                                         const std::vector<double>& alphas);

// CSV with header: alpha,theta_tw,theta_mc,rel_err,mc_se
std::string compare_csv(const std::vector<CompareRow>& rows);

// --- end-to-end size calibration of the mv_tests procedures ---

enum class NoiseLaw { gaussian, t5, sign };
enum class TestKind { manova, independence, cca, cov_equality };

// Null-model scenario: dimensions plus the error law driving the data.
// Interpretation per test:
//   manova       : k groups of group_size observations on p variables
//   independence : n observations on p1 + p2 variables
//   cca          : n observations, first set p variables, second set q
//   cov_equality : two samples of n observations each on p variables
struct Scenario {
    TestKind test = TestKind::manova;
    NoiseLaw law = NoiseLaw::gaussian;
    int p = 2;
    int k = 2;
    int group_size = 10;
    int p1 = 1, p2 = 1;
    int q = 1;
    int n = 20;
    double alpha = 0.05; // nominal size at the TW critical value
};

struct SizeEstimate {
    double rate;
    double se; // binomial standard error
    std::uint64_t reps;
};

// Empirical rejection rate of the scenario's test at its TW critical value
// under the null (cfg.params is unused here; reps/seed/workers apply).
// Scenario-level domain errors (e.g. a single group) propagate.
SizeEstimate null_rejection_rate(const Scenario& sc, const SimConfig& cfg);

// Generic permutation cross-check on a concrete dataset, shaped like the
// scenario's test: group labels are permuted (manova, cov_equality) or the
// rows of the second variable block are permuted against the first
// (independence, cca), and the statistic is recomputed each time.
// Returns (1 + #{theta_perm >= theta_obs}) / (reps + 1).  A diagnostic
// companion to the analytic p-values, not a calibrated replacement.
double permutation_pvalue(const Scenario& sc, const Eigen::MatrixXd& values,
                          const std::vector<int>& groups, std::uint64_t reps,
                          std::uint64_t seed);

} // namespace twroot
