#pragma once
// Command-line surface: distribution queries, greatest-root quantiles and
// p-values under any parameter convention, CSV-driven test procedures,
// Monte Carlo simulation/comparison, and grid maintenance.
//
// run() is the whole program minus the process boundary, so tests can
// drive it with argument vectors and capture both streams.

#include <iosfwd>

namespace twroot::cli {

// Returns the process exit code: 0 success, 2 domain errors (including
// malformed input and non-testable hypotheses), 3 conditioning errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twroot::cli
