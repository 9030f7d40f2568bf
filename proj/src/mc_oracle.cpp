#include "twroot/mc_oracle.hpp"
#include "twroot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twroot {

namespace {

bool whole(double x) { return x == std::floor(x); }

// validates and returns the canonical triple with integer df, the only
// form the double-Wishart sampler is defined for
GreatestRootParams sim_params(const GreatestRootParams& g) {
    if (!whole(g.m) || !whole(g.n))
        throw domain_error("mc_oracle: simulation requires integer degrees of freedom");
    return canonical(g);
}

// theta = largest eigenvalue of (A+B)^{-1}B, A ~ W_p(m), B ~ W_p(n)
double draw_theta(int p, long m, long n, RngStream& rng) {
    const Eigen::MatrixXd a = sample_wishart(p, m, rng);
    const Eigen::MatrixXd b = sample_wishart(p, n, rng);
    Eigen::LLT<Eigen::MatrixXd> llt(a + b);
    if (llt.info() != Eigen::Success)
        throw conditioning_error("mc_oracle: A+B draw not positive definite");
    const Eigen::MatrixXd t = llt.matrixL().solve(b);
    Eigen::MatrixXd mm = llt.matrixL().solve(t.transpose()).transpose();
    mm = 0.5 * (mm + mm.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mm);
    if (es.info() != Eigen::Success)
        throw conditioning_error("mc_oracle: eigensolver failed on a replication");
    return std::clamp(es.eigenvalues()(p - 1), std::numeric_limits<double>::min(),
                      std::nextafter(1.0, 0.0));
}

// Parallel replication loop; any replication's exception is re-thrown
// with its original type after the loop finishes.
template <class Body>
void run_reps(std::uint64_t reps, int workers, const Body& body) {
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(reps); ++i) {
        try {
            body(static_cast<std::uint64_t>(i));
        } catch (...) {
#pragma omp critical(twroot_mc_err)
            if (!err) err = std::current_exception();
        }
    }
#else
    (void)workers;
    for (std::uint64_t i = 0; i < reps; ++i) {
        try {
            body(i);
        } catch (...) {
            if (!err) err = std::current_exception();
        }
    }
#endif
    if (err) std::rethrow_exception(err);
}

EmpiricalDist finalize(std::vector<double>&& draws, const SimConfig& cfg,
                       const GreatestRootParams& c) {
    std::sort(draws.begin(), draws.end());
    EmpiricalDist d;
    d.sample = std::move(draws);
    d.reps = cfg.reps;
    d.params = c;
    for (double a : {0.5, 0.9, 0.95, 0.99}) d.summary_quantiles[a] = d.quantile(a);
    return d;
}

void check_reps(const SimConfig& cfg) {
    if (cfg.reps < 1) throw domain_error("mc_oracle: need at least one replication");
}

} // namespace

double EmpiricalDist::quantile(double alpha) const {
    if (sample.empty()) throw domain_error("EmpiricalDist: empty sample");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw domain_error("EmpiricalDist: quantile level outside (0,1]");
    // order statistic at ceil(alpha*reps); the tiny shift keeps an exactly
    // representable product from being pushed up a rank by float rounding
    auto k = static_cast<std::uint64_t>(
        std::ceil(alpha * static_cast<double>(reps) - 1e-9));
    k = std::min(std::max<std::uint64_t>(k, 1), reps);
    return sample[k - 1];
}

int default_workers() {
    if (const char* env = std::getenv("TWROOT_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v < 1 << 20) return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Eigen::MatrixXd sample_wishart(int p, long df, RngStream& rng) {
    if (p < 1) throw domain_error("sample_wishart: dimension must be positive");
    if (df < 1) throw domain_error("sample_wishart: df must be a positive integer");
    if (df <= 2 * static_cast<long>(p)) {
        // Gram product of a df x p Gaussian matrix: exact for any df,
        // cheapest when df is small (and the only route for df < p)
        Eigen::MatrixXd g(df, p);
        for (long i = 0; i < df; ++i)
            for (int j = 0; j < p; ++j) g(i, j) = rng.normal();
        return g.transpose() * g;
    }
    // Bartlett construction: W = L L' with chi-distributed diagonal
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i) {
        l(i, i) = std::sqrt(rng.chisq(static_cast<double>(df - i)));
        for (int j = 0; j < i; ++j) l(i, j) = rng.normal();
    }
    return l * l.transpose();
}

EmpiricalDist sample_greatest_root_serial(const SimConfig& cfg) {
    check_reps(cfg);
    const GreatestRootParams c = sim_params(cfg.params);
    const int p = static_cast<int>(c.p);
    const long m = static_cast<long>(c.m), n = static_cast<long>(c.n);
    std::vector<double> draws(cfg.reps);
    for (std::uint64_t i = 0; i < cfg.reps; ++i) {
        RngStream rng(cfg.seed, i);
        draws[i] = draw_theta(p, m, n, rng);
    }
    return finalize(std::move(draws), cfg, c);
}

EmpiricalDist sample_greatest_root(const SimConfig& cfg) {
    check_reps(cfg);
    const GreatestRootParams c = sim_params(cfg.params);
    const int p = static_cast<int>(c.p);
    const long m = static_cast<long>(c.m), n = static_cast<long>(c.n);
    const int workers = cfg.workers > 0 ? cfg.workers : default_workers();
    std::vector<double> draws(cfg.reps);
    run_reps(cfg.reps, workers, [&](std::uint64_t i) {
        RngStream rng(cfg.seed, i);
        draws[i] = draw_theta(p, m, n, rng);
    });
    return finalize(std::move(draws), cfg, c);
}

std::vector<CompareRow> compare_tw_vs_mc(const SimConfig& cfg,
                                         const std::vector<double>& alphas) {
    const EmpiricalDist d = sample_greatest_root(cfg);
    const double reps = static_cast<double>(cfg.reps);
    std::vector<CompareRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        CompareRow r;
        r.alpha = a;
        r.theta_tw = quantile_approx(cfg.params, a);
        r.theta_mc = d.quantile(a);
        const double se_p = std::sqrt(a * (1.0 - a) / reps);
        // binomial band mapped through the local quantile slope
        const double lo = std::max(a - se_p, 1.0 / reps);
        const double hi = std::min(a + se_p, 1.0);
        const double slope = (d.quantile(hi) - d.quantile(lo)) / (hi - lo);
        r.mc_se = se_p * std::max(slope, 0.0);
        r.rel_err = r.theta_tw / r.theta_mc - 1.0;
        rows.push_back(r);
    }
    return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::string out = "alpha,theta_tw,theta_mc,rel_err,mc_se\n";
    char line[192];
    for (const CompareRow& r : rows) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      r.alpha, r.theta_tw, r.theta_mc, r.rel_err, r.mc_se);
        out += line;
    }
    return out;
}

namespace {

double noise(RngStream& rng, NoiseLaw law) {
    switch (law) {
    case NoiseLaw::gaussian: return rng.normal();
    case NoiseLaw::t5: return rng.normal() / std::sqrt(rng.chisq(5.0) / 5.0);
    case NoiseLaw::sign: return rng.uniform() < 0.5 ? -1.0 : 1.0;
    }
    throw domain_error("mc_oracle: unknown noise law");
}

Eigen::MatrixXd noise_matrix(Eigen::Index rows, Eigen::Index cols, RngStream& rng,
                             NoiseLaw law) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = noise(rng, law);
    return m;
}

GreatestRootParams scenario_null_params(const Scenario& sc) {
    switch (sc.test) {
    case TestKind::manova: {
        const int n = sc.k * sc.group_size;
        return {static_cast<double>(sc.p), static_cast<double>(n - sc.k),
                static_cast<double>(sc.k - 1)};
    }
    case TestKind::independence:
        return {static_cast<double>(sc.p2), static_cast<double>(sc.n - 1 - sc.p1),
                static_cast<double>(sc.p1)};
    case TestKind::cca:
        return {static_cast<double>(sc.p), static_cast<double>(sc.n - sc.q - 1),
                static_cast<double>(sc.q)};
    case TestKind::cov_equality:
        return {static_cast<double>(sc.p), static_cast<double>(sc.n - 1),
                static_cast<double>(sc.n - 1)};
    }
    throw domain_error("mc_oracle: unknown test kind");
}

double scenario_statistic(const Scenario& sc, RngStream& rng) {
    switch (sc.test) {
    case TestKind::manova: {
        const int n = sc.k * sc.group_size;
        DataMatrix d{noise_matrix(n, sc.p, rng, sc.law), std::vector<int>(n)};
        for (int i = 0; i < n; ++i) d.groups[static_cast<std::size_t>(i)] = i / sc.group_size;
        return manova_one_way(d).statistic;
    }
    case TestKind::independence: {
        DataMatrix d{noise_matrix(sc.n, sc.p1 + sc.p2, rng, sc.law), {}};
        return independence_test(d, sc.p1, sc.p2).statistic;
    }
    case TestKind::cca: {
        DataMatrix x{noise_matrix(sc.n, sc.p, rng, sc.law), {}};
        DataMatrix y{noise_matrix(sc.n, sc.q, rng, sc.law), {}};
        return cca(x, y).front();
    }
    case TestKind::cov_equality: {
        const Eigen::MatrixXd s1 = noise_matrix(sc.n, sc.p, rng, sc.law);
        const Eigen::MatrixXd s2 = noise_matrix(sc.n, sc.p, rng, sc.law);
        auto cov = [&](const Eigen::MatrixXd& m) {
            const Eigen::MatrixXd c = m.rowwise() - m.colwise().mean();
            return Eigen::MatrixXd(c.transpose() * c / (sc.n - 1.0));
        };
        return cov_equality_test(cov(s1), sc.n - 1.0, cov(s2), sc.n - 1.0).statistic;
    }
    }
    throw domain_error("mc_oracle: unknown test kind");
}

// The scenario's statistic on concrete data instead of freshly drawn noise.
double data_statistic(const Scenario& sc, const Eigen::MatrixXd& values,
                      const std::vector<int>& groups) {
    switch (sc.test) {
    case TestKind::manova:
        return manova_one_way(DataMatrix{values, groups}).statistic;
    case TestKind::independence:
        return independence_test(DataMatrix{values, {}}, sc.p1, sc.p2).statistic;
    case TestKind::cca: {
        if (values.cols() != sc.p + sc.q)
            throw domain_error("mc_oracle: cca data must have p + q columns");
        DataMatrix x{values.leftCols(sc.p), {}};
        DataMatrix y{values.rightCols(sc.q), {}};
        return cca(x, y).front();
    }
    case TestKind::cov_equality: {
        if (groups.size() != static_cast<std::size_t>(values.rows()))
            throw domain_error("mc_oracle: cov_equality needs a label per row");
        std::vector<Eigen::Index> a, b;
        for (Eigen::Index i = 0; i < values.rows(); ++i)
            (groups[static_cast<std::size_t>(i)] == 0 ? a : b).push_back(i);
        if (a.size() < 2 || b.size() < 2)
            throw domain_error("mc_oracle: cov_equality needs two groups of >= 2 rows");
        auto cov = [&](const std::vector<Eigen::Index>& idx) {
            Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), values.cols());
            for (std::size_t i = 0; i < idx.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = values.row(idx[i]);
            const Eigen::MatrixXd c = m.rowwise() - m.colwise().mean();
            return Eigen::MatrixXd(c.transpose() * c / (static_cast<double>(idx.size()) - 1.0));
        };
        return cov_equality_test(cov(a), static_cast<double>(a.size()) - 1.0,
                                 cov(b), static_cast<double>(b.size()) - 1.0)
            .statistic;
    }
    }
    throw domain_error("mc_oracle: unknown test kind");
}

// Fisher-Yates driven by the replication's own stream.
template <class T>
void shuffle_with(std::vector<T>& v, RngStream& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
        std::swap(v[i - 1], v[j < i ? j : i - 1]);
    }
}

} // namespace

double permutation_pvalue(const Scenario& sc, const Eigen::MatrixXd& values,
                          const std::vector<int>& groups, std::uint64_t reps,
                          std::uint64_t seed) {
    if (reps < 1) throw domain_error("mc_oracle: permutation reps must be >= 1");
    const double observed = data_statistic(sc, values, groups);
    const bool permute_labels =
        sc.test == TestKind::manova || sc.test == TestKind::cov_equality;
    const int split = sc.test == TestKind::cca ? sc.p : sc.p1;
    if (!permute_labels && (split < 1 || split >= values.cols()))
        throw domain_error("mc_oracle: permutation split outside the data columns");

    std::vector<unsigned char> ge(reps, 0);
    run_reps(reps, default_workers(), [&](std::uint64_t i) {
        RngStream rng(seed, i);
        double stat;
        if (permute_labels) {
            std::vector<int> g = groups;
            shuffle_with(g, rng);
            stat = data_statistic(sc, values, g);
        } else {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(values.rows()));
            for (std::size_t r = 0; r < order.size(); ++r)
                order[r] = static_cast<Eigen::Index>(r);
            shuffle_with(order, rng);
            Eigen::MatrixXd v = values;
            for (std::size_t r = 0; r < order.size(); ++r)
                v.row(static_cast<Eigen::Index>(r)).rightCols(values.cols() - split) =
                    values.row(order[r]).rightCols(values.cols() - split);
            stat = data_statistic(sc, v, groups);
        }
        ge[i] = stat >= observed ? 1 : 0;
    });
    std::uint64_t hits = 0;
    for (unsigned char r : ge) hits += r;
    return (1.0 + static_cast<double>(hits)) / (static_cast<double>(reps) + 1.0);
}

SizeEstimate null_rejection_rate(const Scenario& sc, const SimConfig& cfg) {
    check_reps(cfg);
    if (!(sc.alpha > 0.0 && sc.alpha < 1.0))
        throw domain_error("mc_oracle: scenario alpha outside (0,1)");
    // validates the scenario's dimensions up front: degenerate settings
    // (one group, n too small, ...) throw before any sampling
    const double crit = quantile_approx(scenario_null_params(sc), 1.0 - sc.alpha);
    const int workers = cfg.workers > 0 ? cfg.workers : default_workers();
    std::vector<unsigned char> reject(cfg.reps, 0);
    run_reps(cfg.reps, workers, [&](std::uint64_t i) {
        RngStream rng(cfg.seed, i);
        reject[i] = scenario_statistic(sc, rng) > crit ? 1 : 0;
    });
    std::uint64_t hits = 0;
    for (unsigned char r : reject) hits += r;
    SizeEstimate out;
    out.reps = cfg.reps;
    out.rate = static_cast<double>(hits) / static_cast<double>(cfg.reps);
    out.se = std::sqrt(out.rate * (1.0 - out.rate) / static_cast<double>(cfg.reps));
    return out;
}

} // namespace twroot
