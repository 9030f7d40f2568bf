#include "doctest.h"
#include "helpers.hpp"

#include "twroot/errors.hpp"
#include "twroot/greatest_root.hpp"

#include <cmath>
#include <vector>

using namespace twroot;

namespace {

GreatestRootParams mkb(double p, double m, double n) { return {p, m, n}; }

// A spread of valid triples used by the property checks below.  m is kept
// strictly above p so the centering constants exist (phi + gamma < pi).
std::vector<GreatestRootParams> triple_grid() {
    std::vector<GreatestRootParams> out;
    for (int p = 1; p <= 5; ++p)
        for (int n = 1; n <= 5; ++n)
            for (double dm : {0.5, 3.0, 10.5}) out.push_back(mkb(p, p + dm, n));
    return out;
}

} // namespace

TEST_CASE("parameter conventions convert exactly for half-integer inputs") {
    // table (s, m_t, n_t) -> (p, m, n): p = s, m = s + 2 n_t + 1, n = s + 2 m_t + 1
    const GreatestRootParams a = params_from_table({4, 0, 18.5});
    CHECK(a.p == 4.0);
    CHECK(a.m == 42.0);
    CHECK(a.n == 5.0);
    const GreatestRootParams b = params_from_table({2, -0.5, 2});
    CHECK(b.p == 2.0);
    CHECK(b.m == 7.0);
    CHECK(b.n == 2.0);

    // round trips are bit-exact
    const TableParams t1 = to_table(mkb(1, 2, 1));
    CHECK(t1.s == 1.0);
    CHECK(t1.m_t == -0.5);
    CHECK(t1.n_t == 0.0);
    const GreatestRootParams back = params_from_table(t1);
    CHECK(back.p == 1.0);
    CHECK(back.m == 2.0);
    CHECK(back.n == 1.0);

    const TableParams t2 = to_table(mkb(1, 10, 4));
    CHECK(t2.s == 1.0);
    CHECK(t2.m_t == 1.0);
    CHECK(t2.n_t == 4.0);

    // SAS (model rank, hypothesis rank, error df)
    const GreatestRootParams c = params_from_sas({4, 5, 42});
    CHECK(c.p == 4.0);
    CHECK(c.m == 42.0);
    CHECK(c.n == 5.0);
    const TableParams tc = to_table(c);
    CHECK(tc.s == 4.0);
    CHECK(tc.m_t == 0.0);
    CHECK(tc.n_t == 18.5);
    const GreatestRootParams d = params_from_sas({1, 1, 10});
    CHECK(d.p == 1.0);
    CHECK(d.m == 10.0);
    CHECK(d.n == 1.0);
    const SASParams sd = to_sas(mkb(4, 42, 5));
    CHECK(sd.p_s == 4.0);
    CHECK(sd.q_s == 5.0);
    CHECK(sd.v_s == 42.0);

    // F-bound degrees of freedom from the canonical form
    CHECK(hypothesis_df(b) == 2.0);
    CHECK(error_df(b) == 7.0);
    CHECK(hypothesis_df(a) == 5.0);
    CHECK(error_df(a) == 42.0);
}

TEST_CASE("canonicalization and the table view are duality-invariant") {
    const GreatestRootParams g = mkb(4, 42, 2); // n < p: dual form is canonical
    const GreatestRootParams cg = canonical(g);
    CHECK(cg.p == 2.0);
    CHECK(cg.m == 40.0);
    CHECK(cg.n == 4.0);
    const GreatestRootParams cc = canonical(cg);
    CHECK(cc.p == cg.p);
    CHECK(cc.m == cg.m);
    CHECK(cc.n == cg.n);
    // already-canonical triples pass through unchanged
    const GreatestRootParams keep = canonical(mkb(4, 42, 5));
    CHECK(keep.p == 4.0);
    CHECK(keep.m == 42.0);
    CHECK(keep.n == 5.0);
    // (s, m_t, n_t) is the same whichever member of the dual pair you start from
    const TableParams tg = to_table(g);
    const TableParams tcg = to_table(cg);
    CHECK(tg.s == tcg.s);
    CHECK(tg.m_t == tcg.m_t);
    CHECK(tg.n_t == tcg.n_t);
    CHECK(tg.s == 2.0);
    CHECK(tg.m_t == 0.5);
    CHECK(tg.n_t == 18.5);
}

TEST_CASE("centering constants match the high-precision pins") {
    struct Pin {
        GreatestRootParams g;
        double gamma, phi, mu, sigma;
    };
    const std::vector<Pin> pins{
        {{4, 42, 5}, 0.55892416940250762213, 0.63621931813575215983,
         -0.76962589356996804587, 0.30268779955017645232},
        {{2, 7, 2}, 0.89566479385786497202, 0.89566479385786497202,
         0.44468582126144567825, 0.75529551446284212259},
        {{2, 22, 2}, 0.51647514084687583024, 0.51647514084687583024,
         -1.131652142746309872, 0.55196385753340744211},
        {{4, 132, 5}, 0.32223683088239949195, 0.36584018120161942111,
         -2.0528404984365535458, 0.26652811361517785034},
        {{4, 133, 4}, 0.32223683088239949195, 0.32223683088239949195,
         -2.1939848336818087159, 0.28803778249055133439},
    };
    for (const Pin& pin : pins) {
        const TWApproxConstants k = tw_constants(pin.g);
        CHECK_REL(k.gamma, pin.gamma, 1e-12);
        CHECK_REL(k.phi, pin.phi, 1e-12);
        CHECK_REL(k.mu, pin.mu, 1e-12);
        CHECK_REL(k.sigma, pin.sigma, 1e-12);
        CHECK(k.N_t == pin.g.m + pin.g.n - 1.0);
    }
}

TEST_CASE("centering constants satisfy their defining identities") {
    for (const GreatestRootParams& g : triple_grid()) {
        const TWApproxConstants k = tw_constants(g);
        const double N = g.m + g.n - 1.0;
        CHECK(k.N_t == N);
        // sin^2 halves recover the defining ratios
        const double lo = std::min(g.p, g.n), hi = std::max(g.p, g.n);
        CHECK_REL(std::sin(k.gamma / 2) * std::sin(k.gamma / 2), (lo - 0.5) / N, 1e-12);
        CHECK_REL(std::sin(k.phi / 2) * std::sin(k.phi / 2), (hi - 0.5) / N, 1e-12);
        CHECK(k.phi + k.gamma < 3.14159265358979323846);
        // mu = 2 ln tan((phi+gamma)/2)
        CHECK_REL(k.mu, 2.0 * std::log(std::tan((k.phi + k.gamma) / 2)), 1e-12);
        // sigma^3 N^2 sin^2(phi+gamma) sin phi sin gamma = 16
        const double s3 = k.sigma * k.sigma * k.sigma;
        const double sp = std::sin(k.phi + k.gamma);
        CHECK_REL(s3 * N * N * sp * sp * std::sin(k.phi) * std::sin(k.gamma), 16.0,
                  1e-10);
        CHECK(k.sigma > 0.0);
    }
}

TEST_CASE("dual parameter triples give bit-identical answers") {
    for (const GreatestRootParams& g : triple_grid()) {
        const GreatestRootParams d = mkb(g.n, g.m + g.n - g.p, g.p);
        const TWApproxConstants kg = tw_constants(g);
        const TWApproxConstants kd = tw_constants(d);
        CHECK(kg.gamma == kd.gamma);
        CHECK(kg.phi == kd.phi);
        CHECK(kg.mu == kd.mu);
        CHECK(kg.sigma == kd.sigma);
        CHECK(quantile_approx(g, 0.95) == quantile_approx(d, 0.95));
        CHECK(quantile_approx(g, 0.99) == quantile_approx(d, 0.99));
        CHECK(pvalue_tw(0.4, g) == pvalue_tw(0.4, d));
        CHECK(pvalue_f_bound(0.4, g) == pvalue_f_bound(0.4, d));
    }
}

TEST_CASE("worked quantiles match the independent pipeline") {
    // independent root-solve pipeline values; agreement is limited by the
    // interpolation error of the embedded table (~1e-9 relative here)
    CHECK_REL(quantile_approx(mkb(4, 42, 5), 0.95), 0.383859393438, 1e-8);
    CHECK_REL(quantile_approx(mkb(2, 22, 2), 0.95), 0.356381338718, 1e-8);
    CHECK_REL(quantile_approx(mkb(4, 132, 5), 0.99), 0.180415589005, 1e-8);
    CHECK_REL(quantile_approx(mkb(4, 133, 4), 0.99), 0.166428320193, 1e-8);
    // same numbers through the table-convention entry point
    CHECK_REL(quantile_approx(params_from_table({4, 0, 18.5}), 0.95), 0.383859393438,
              1e-8);
}

TEST_CASE("worked p-values match the independent pipeline") {
    CHECK_REL(pvalue_tw(0.652, mkb(4, 42, 5)), 5.5838199554e-05, 1e-6);
    CHECK_REL(pvalue_tw(0.663, mkb(2, 7, 2)), 1.1878334950e-01, 1e-6);
    // F bound: pure incomplete-beta evaluations, pinned to 1e-12 against a
    // 50-digit oracle
    CHECK_REL(pvalue_f_bound(0.652, mkb(4, 42, 5)), 1.0174771335516967e-08, 1e-12);
    CHECK_REL(pvalue_f_bound(0.737, mkb(2, 7, 2)), 0.0093292153828632231, 1e-12);
    // log10 variant agrees with the direct value where both exist
    CHECK_REL(pvalue_f_bound_log10(0.652, mkb(4, 42, 5)),
              std::log10(pvalue_f_bound(0.652, mkb(4, 42, 5))), 1e-12);
    CHECK_REL(pvalue_f_bound_log10(0.737, mkb(2, 7, 2)),
              std::log10(pvalue_f_bound(0.737, mkb(2, 7, 2))), 1e-12);
}

TEST_CASE("p-value from a rounded statistic lands in the rounding band") {
    // reference value quoted from a 3-decimal input: any theta in
    // [0.9845, 0.9855) rounds to 0.985, so the exact p is only known to lie
    // in the band the endpoints produce
    const double p = pvalue_tw(0.985, params_from_table({2, -0.5, 2}));
    CHECK(p >= 2.31e-5);
    CHECK(p <= 2.85e-5);
}

TEST_CASE("quantile and p-value are mutually inverse") {
    const std::vector<GreatestRootParams> triples{mkb(4, 42, 5), mkb(2, 7, 2),
                                                  mkb(3, 15, 8)};
    for (const GreatestRootParams& g : triples) {
        for (double alpha : {0.1, 0.05, 0.01, 1e-4}) {
            const double theta = quantile_approx(g, 1.0 - alpha);
            CHECK(theta > 0.0);
            CHECK(theta < 1.0);
            CHECK_REL(pvalue_tw(theta, g), alpha, 1e-6);
        }
        // quantiles increase strictly in the level
        double prev = 0.0;
        for (double a : {0.01, 0.1, 0.5, 0.9, 0.95, 0.99, 0.999}) {
            const double q = quantile_approx(g, a);
            CHECK(q > prev);
            prev = q;
        }
    }
}

TEST_CASE("smallest-root p-value is the reflected greatest-root p-value") {
    // theta_min(p,m,n) =d 1 - theta_max(p,n,m): the lower-tail probability at x
    // equals the upper-tail probability of the reflected statistic at 1-x
    for (double x : {0.05, 0.2, 0.5, 0.8}) {
        CHECK(smallest_root_pvalue(x, mkb(2, 7, 7)) == pvalue_tw(1.0 - x, mkb(2, 7, 7)));
        CHECK(smallest_root_pvalue(x, mkb(2, 9, 7)) == pvalue_tw(1.0 - x, mkb(2, 7, 9)));
        CHECK(smallest_root_pvalue(x, mkb(3, 20, 6)) ==
              pvalue_tw(1.0 - x, mkb(3, 6, 20)));
    }
    // the lower 5% point of the smallest root is 1 minus the upper 5% point
    // of the reflected greatest root
    const double x05 = 1.0 - quantile_approx(mkb(2, 9, 7), 0.95);
    CHECK_REL(smallest_root_pvalue(x05, mkb(2, 7, 9)), 0.05, 1e-6);
    // n = p reflects onto the m = p boundary where the approximation's
    // centering constants do not exist
    CHECK_THROWS_AS(smallest_root_pvalue(0.2, mkb(2, 7, 2)), domain_error);
}

TEST_CASE("dimension-one root is an exact beta variable") {
    // p = 1, m = 10, n = 4: theta ~ Beta(n/2, m/2) = Beta(2, 5)
    const GreatestRootParams g = mkb(1, 10, 4);
    CHECK_REL(beta_exact_quantile(g, 0.5), 0.264449983295660, 1e-10);
    CHECK_REL(beta_exact_cdf(0.264449983295660, g), 0.5, 1e-10);
    // Beta(1,1) is uniform: p = 1, m = 2, n = 2
    const GreatestRootParams u = mkb(1, 2, 2);
    for (double a : {0.05, 0.25, 0.5, 0.9}) {
        CHECK_REL(beta_exact_quantile(u, a), a, 1e-12);
        CHECK_REL(beta_exact_cdf(a, u), a, 1e-12);
    }
    // n = 1 with p > 1 reaches the beta case through the dual form
    CHECK(beta_exact_cdf(0.3, mkb(3, 10, 1)) == beta_exact_cdf(0.3, mkb(1, 8, 3)));
    // not a dimension-one problem
    CHECK_THROWS_AS(beta_exact_cdf(0.3, mkb(2, 7, 2)), domain_error);
    CHECK_THROWS_AS(beta_exact_quantile(mkb(2, 7, 2), 0.5), domain_error);
}

TEST_CASE("statistics beyond the certified tail raise the bounded error") {
    // (s, m_t, n_t) = (6, -1/2, 2): theta = 0.999 standardizes past the right
    // edge of the certified table, so the p-value is only known to be below
    // the survival mass at the edge
    const GreatestRootParams g = params_from_table({6, -0.5, 2});
    bool thrown = false;
    try {
        pvalue_tw(0.999, g);
    } catch (const tail_limit_error& e) {
        thrown = true;
        CHECK(e.bound > 0.0);
        CHECK_REL(e.bound, 1.9408140733423451e-06, 1e-7);
    }
    CHECK(thrown);
    // quantile levels beyond the table propagate the same error
    CHECK_THROWS_AS(quantile_approx(mkb(2, 7, 2), 1.0 - 5e-15), tail_limit_error);
}

TEST_CASE("parameter validation rejects out-of-domain triples") {
    CHECK_THROWS_AS(validate(mkb(4, 3, 5)), domain_error);    // m < p
    CHECK_THROWS_AS(validate(mkb(2.5, 7, 2)), domain_error);  // fractional dimension
    CHECK_THROWS_AS(validate(mkb(4, 42, 2.5)), domain_error); // n < p needs integer n
    CHECK_THROWS_AS(validate(mkb(2, 7, 0)), domain_error);    // n must be positive
    CHECK_THROWS_AS(validate(mkb(2, 7, -1)), domain_error);
    CHECK_THROWS_AS(validate(mkb(0, 7, 2)), domain_error); // p must be positive
    CHECK_NOTHROW(validate(mkb(4, 42, 2)));                // dual-integer n is fine
    CHECK_NOTHROW(validate(mkb(4, 42.5, 5)));              // fractional m is fine
    // m = p makes phi + gamma = pi: the logit-scale constants do not exist.
    // (2,2,7) is the rounding-hazard case: the computed angle sum lands a few
    // ulp below pi, so the guard must be on the parameters, not the angles.
    CHECK_THROWS_AS(tw_constants(mkb(2, 2, 2)), domain_error);
    CHECK_THROWS_AS(tw_constants(mkb(3, 3, 5)), domain_error);
    CHECK_THROWS_AS(tw_constants(mkb(2, 2, 7)), domain_error);
    CHECK_THROWS_AS(pvalue_tw(0.5, mkb(2, 2, 7)), domain_error);
    CHECK_THROWS_AS(quantile_approx(mkb(2, 2, 7), 0.95), domain_error);
}

TEST_CASE("summarize assembles the full report consistently") {
    const GreatestRootParams g = mkb(4, 42, 5);
    const TestOutcome o = summarize(0.652, g);
    CHECK(o.statistic == 0.652);
    CHECK(o.params.p == 4.0);
    CHECK(o.p_tw == pvalue_tw(0.652, g));
    CHECK_FALSE(o.p_tw_is_bound);
    CHECK(o.p_f_bound == pvalue_f_bound(0.652, g));
    CHECK_REL(o.p_f_bound_log10, std::log10(o.p_f_bound), 1e-12);
    CHECK_FALSE(o.conservative_bound);
    // default critical-value ladder, increasing in alpha
    REQUIRE(o.critical_values.size() == 4);
    CHECK(o.critical_values.count(0.90) == 1);
    CHECK(o.critical_values.at(0.95) == quantile_approx(g, 0.95));
    double prev = 0.0;
    for (const auto& [alpha, theta] : o.critical_values) {
        CHECK(theta > prev);
        prev = theta;
    }
    // convention views ride along
    CHECK(o.table_view.s == 4.0);
    CHECK(o.table_view.m_t == 0.0);
    CHECK(o.table_view.n_t == 18.5);
    CHECK(o.sas_view.p_s == 4.0);
    CHECK(o.sas_view.q_s == 5.0);
    CHECK(o.sas_view.v_s == 42.0);
    // custom ladder
    const TestOutcome o2 = summarize(0.652, g, {0.5, 0.8});
    REQUIRE(o2.critical_values.size() == 2);
    CHECK(o2.critical_values.count(0.5) == 1);
    CHECK(o2.critical_values.count(0.8) == 1);
}

TEST_CASE("summarize reports a bound when the statistic is off the table") {
    const TestOutcome o = summarize(0.999, params_from_table({6, -0.5, 2}));
    CHECK(o.statistic == 0.999);
    CHECK(o.p_tw_is_bound);
    CHECK_REL(o.p_tw, 1.9408140733423451e-06, 1e-7);
    // the F bound still evaluates exactly: I_0.001(5.5, 3)
    CHECK_REL(o.p_f_bound, 7.6950130538835485e-16, 1e-12);
    CHECK_REL(o.p_f_bound_log10, std::log10(7.6950130538835485e-16), 1e-12);
    // critical values are unaffected by the tail condition
    CHECK(o.critical_values.at(0.95) ==
          quantile_approx(params_from_table({6, -0.5, 2}), 0.95));
}
