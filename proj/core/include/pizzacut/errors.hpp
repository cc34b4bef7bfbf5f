#pragma once

#include <stdexcept>
#include <string>

namespace pizza {

/// Base class for all library errors. `exit_code()` and `kind()` are what the
/// CLI maps to process exit codes and machine-readable error JSON.
class Error : public std::runtime_error {
public:
    Error(int exit_code, const char* kind, const std::string& message)
        : std::runtime_error(message), exit_code_(exit_code), kind_(kind) {}

    int exit_code() const noexcept { return exit_code_; }
    const char* kind() const noexcept { return kind_; }

private:
    int exit_code_;
    const char* kind_;
};

/// Malformed input: bad polygon, bad parameters, unparseable document.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& message) : Error(2, "invalid_input", message) {}
};

/// Fair partition requested for odd n; such a partition may not exist.
class OddNError : public Error {
public:
    explicit OddNError(const std::string& message) : Error(3, "odd_n", message) {}
};

/// A root-finding budget was exhausted or a required bracket failed to hold.
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& message)
        : Error(4, "numerical_failure", message) {}
};

/// A search finished without meeting a bound that is guaranteed to exist;
/// signals a numerical problem or invalid input.
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& message)
        : Error(5, "theorem_violation", message) {}
};

/// A sampled cut of the concentric-disk witness exceeded the deficiency bound
/// by more than the discretization margin.
class WitnessFailure : public Error {
public:
    explicit WitnessFailure(const std::string& message)
        : Error(5, "witness_failure", message) {}
};

}  // namespace pizza
