#pragma once

// Shared assertions for the test suite.

#include <cmath>

namespace twtest {

// Relative error with a floor so exact-zero references don't divide by 0.
inline double rel_err(double got, double want) {
    const double denom = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / denom;
}

} // namespace twtest

// Relative-tolerance check that stays meaningful for values like 1e-176
// (doctest's Approx adds an absolute scale of 1, which would swallow them).
#define CHECK_REL(got, want, tol)                                             \
    do {                                                                      \
        const double got_ = (got), want_ = (want);                            \
        CHECK_MESSAGE(twtest::rel_err(got_, want_) <= (tol),                  \
                      "got " << got_ << ", want " << want_ << " (rel err "    \
                             << twtest::rel_err(got_, want_) << " > " << (tol)\
                             << ")");                                         \
    } while (0)
