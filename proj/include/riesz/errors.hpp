#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Invalid parameters or arguments outside an operation's stated domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Parameter set sits exactly on an excluded endpoint (e.g. s = d-2 where a
// closed-form constant vanishes and the formula no longer represents the
// measure).
class UnsupportedEndpointError : public DomainError {
public:
    explicit UnsupportedEndpointError(const std::string& what) : DomainError(what) {}
};

// Numerical routine failed to reach its tolerance; carries the best estimate
// obtained and the error actually achieved.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best_estimate, double achieved_error)
        : std::runtime_error(what),
          best_estimate(best_estimate),
          achieved_error(achieved_error) {}

    explicit NumericError(const std::string& what)
        : NumericError(what, 0.0, 0.0) {}

    double best_estimate;
    double achieved_error;
};

} // namespace riesz
