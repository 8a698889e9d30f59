#pragma once

#include <stdexcept>
#include <string>

namespace fracpme {

// Thrown when a slope parameter violates the admissibility assumption of the
// closed-form bracket (the square root in the upper support bound turns
// imaginary).
struct BracketError : std::domain_error {
    explicit BracketError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when the free-boundary detector finds no sign change on the grid
// although one was guaranteed; usually means the grid is too coarse.
struct NoZeroError : std::runtime_error {
    explicit NoZeroError(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-point iteration failed to reach the requested tolerance.
struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, double beta_value, int iterations_run,
                        double residual)
        : std::runtime_error(what), beta(beta_value), iterations(iterations_run),
          final_residual(residual) {}
    double beta;
    int iterations;
    double final_residual;
};

// Time stepper of the PDE cross-check left the admissible range.
struct InstabilityError : std::runtime_error {
    explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracpme
