#pragma once

#include <stdexcept>
#include <string>

namespace ptri {

#define PTRI_ERROR(Name)                                                        \
    struct Name : std::runtime_error {                                          \
        explicit Name(const std::string& what) : std::runtime_error(what) {}    \
    }

PTRI_ERROR(InsufficientPrecision);
PTRI_ERROR(ZeroArgument);
PTRI_ERROR(NotInDomain);
PTRI_ERROR(NotLargelyContinuous);
PTRI_ERROR(EmptyFace);
PTRI_ERROR(WindowTooLarge);
PTRI_ERROR(NotLowerSubset);
PTRI_ERROR(EmptyTarget);
PTRI_ERROR(NotFitting);
PTRI_ERROR(NotInCell);
PTRI_ERROR(NotInComplex);
PTRI_ERROR(DivisionByZeroAtSample);
PTRI_ERROR(ValidationError);
// Loud failure when an exact Gamma-level decision would need more search than
// the configured budget; never a silent guess.
PTRI_ERROR(DecisionBudgetExceeded);

#undef PTRI_ERROR

struct PreconditionViolation : std::runtime_error {
    std::string claim;
    PreconditionViolation(std::string claim_, const std::string& what)
        : std::runtime_error(claim_ + ": " + what), claim(std::move(claim_)) {}
};

struct PostconditionViolation : std::runtime_error {
    std::string claim;
    PostconditionViolation(std::string claim_, const std::string& what)
        : std::runtime_error(claim_ + ": " + what), claim(std::move(claim_)) {}
};

struct CertificationFailure : std::runtime_error {
    std::string claim;
    CertificationFailure(std::string claim_, const std::string& what)
        : std::runtime_error(claim_ + ": " + what), claim(std::move(claim_)) {}
};

} // namespace ptri
