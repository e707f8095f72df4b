#pragma once

#include <stdexcept>
#include <string>

namespace hplab {

// Parameter outside the mathematical domain (divergent integral, Pochhammer pole).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation point outside the convergence region.
struct RegionError : std::runtime_error {
    explicit RegionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller violated an operation precondition (chart mismatch, broken constraint).
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Evaluation point on (or too close to) a singular divisor.
struct SingularLocusError : std::runtime_error {
    explicit SingularLocusError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedError : std::logic_error {
    explicit UnsupportedError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hplab
