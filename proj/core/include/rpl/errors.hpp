#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rpl {

/// Bad argument or malformed input (CLI exit code 1).
class InvalidParameter : public std::runtime_error {
public:
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration failed to reach the requested residual (CLI exit code 2).
/// Carries the best iterate found so the caller can inspect it.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, double residual, int iterations,
                  std::vector<double> best = {})
        : std::runtime_error(what), residual(residual), iterations(iterations),
          best_iterate(std::move(best)) {}

    double residual;
    int iterations;
    std::vector<double> best_iterate;
};

/// Operator sample violated a coercivity/monotonicity bound; message names the witness.
class StructureViolation : public std::runtime_error {
public:
    explicit StructureViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A verify-mode assertion failed (CLI exit code 3).
class VerifyFailure : public std::runtime_error {
public:
    explicit VerifyFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rpl
