#ifndef BELLSIM_ERRORS_HPP
#define BELLSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellsim {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Angle input was NaN or infinite.
class InvalidAngleError : public Error {
public:
    explicit InvalidAngleError(const std::string& what) : Error(what) {}
};

// Interval-message index does not name an interval for the given theta.
class InconsistentMessageError : public Error {
public:
    explicit InconsistentMessageError(const std::string& what) : Error(what) {}
};

// A party attempted to send past the declared communication budget.
class BudgetViolationError : public Error {
public:
    explicit BudgetViolationError(const std::string& what) : Error(what) {}
};

// Measurement is not a member of the scenario's measurement set.
class UnknownMeasurementError : public Error {
public:
    explicit UnknownMeasurementError(const std::string& what) : Error(what) {}
};

// Scenario violates the marginal-consistency requirement.
class InvalidScenarioError : public Error {
public:
    explicit InvalidScenarioError(const std::string& what) : Error(what) {}
};

// Operands have different dimensions (e.g. measurements on different n).
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// Requested size exceeds the supported resource cap.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

}  // namespace bellsim

#endif  // BELLSIM_ERRORS_HPP
