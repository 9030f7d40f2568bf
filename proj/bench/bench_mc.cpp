// Benchmark: serial reference sampler vs the OpenMP kernel at increasing
// worker counts.  Also asserts bit-identity of every parallel run against
// the serial stream — the determinism contract the tests rely on.
//
// Usage: bench_mc [reps] [p m n] [seed]
//   defaults: 200000 replications of theta(2, 7, 2), seed 1.

#include "twroot/mc_oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    using namespace twroot;

    SimConfig cfg;
    cfg.reps = (argc > 1) ? std::atoll(argv[1]) : 200000;
    if (argc > 4) {
        cfg.params.p = std::atof(argv[2]);
        cfg.params.m = std::atof(argv[3]);
        cfg.params.n = std::atof(argv[4]);
    }
    cfg.seed = (argc > 5) ? std::strtoull(argv[5], nullptr, 10) : 1;

    std::printf("sampling theta(p=%g, m=%g, n=%g), %llu replications, seed %llu\n\n",
                cfg.params.p, cfg.params.m, cfg.params.n,
                static_cast<unsigned long long>(cfg.reps),
                static_cast<unsigned long long>(cfg.seed));

    // Serial reference first: the baseline for both timing and identity.
    auto t0 = std::chrono::steady_clock::now();
    const EmpiricalDist ref = sample_greatest_root_serial(cfg);
    const double t_ref = seconds_since(t0);
    std::printf("%-18s %9.3f s  %8.2f kreps/s  speedup %5.2fx\n",
                "serial reference", t_ref, cfg.reps / t_ref / 1e3, 1.0);

    const int max_workers = omp_get_max_threads();
    std::vector<int> counts{1};
    for (int w = 2; w < max_workers; w *= 2) counts.push_back(w);
    if (max_workers > 1) counts.push_back(max_workers);

    bool all_identical = true;
    for (int w : counts) {
        SimConfig c = cfg;
        c.workers = w;
        t0 = std::chrono::steady_clock::now();
        const EmpiricalDist d = sample_greatest_root(c);
        const double t = seconds_since(t0);
        const bool same = d.sample == ref.sample;
        all_identical = all_identical && same;
        char label[32];
        std::snprintf(label, sizeof label, "openmp, %d worker%s", w,
                      w == 1 ? "" : "s");
        std::printf("%-18s %9.3f s  %8.2f kreps/s  speedup %5.2fx  %s\n",
                    label, t, cfg.reps / t / 1e3, t_ref / t,
                    same ? "bit-identical" : "MISMATCH");
    }

    if (!all_identical) {
        std::printf("\nFAIL: parallel output diverged from the serial reference\n");
        return 1;
    }
    std::printf("\nall parallel runs reproduce the serial stream exactly\n");
    return 0;
}
