#pragma once

#include <stdexcept>
#include <string>

namespace twroot {

// Invalid parameter or argument values: the requested quantity is not
// defined (wrong domain, impossible degrees of freedom, alpha outside
// (0,1), ...).  CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix that must be (numerically) positive definite or full rank is
// not, so the computation cannot proceed.  Message names the offending
// matrix.  CLI maps this to exit code 3.
class conditioning_error : public std::runtime_error {
public:
    explicit conditioning_error(const std::string& what) : std::runtime_error(what) {}
};

// A linear hypothesis C1*B = 0 that is not estimable under a
// rank-deficient design matrix; the null distribution is undefined.
class testability_error : public domain_error {
public:
    explicit testability_error(const std::string& what) : domain_error(what) {}
};

// The requested probability or quantile lies beyond the certified tail
// of the distribution table.  `bound` is the best available one-sided
// bound at the point where certification ends (e.g. "the p-value is
// smaller than `bound`").  Raised instead of silently returning a
// non-number.
class tail_limit_error : public std::runtime_error {
public:
    tail_limit_error(const std::string& what, double bound_)
        : std::runtime_error(what), bound(bound_) {}
    double bound;
};

} // namespace twroot
