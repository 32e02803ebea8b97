#ifndef FSL_ERRORS_HPP
#define FSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsl {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point or region was used with a mismatched spatial dimension.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

/// Volume (or another bounded-only operation) requested for an unbounded region.
class UnboundedRegionError : public Error {
public:
    explicit UnboundedRegionError(const std::string& what)
        : Error("unbounded region: " + what) {}
};

/// The sampling rule (>= 8 samples per period of the total instantaneous
/// frequency) is violated for a requested transform evaluation.
class UndersampledError : public Error {
public:
    explicit UndersampledError(const std::string& what)
        : Error("undersampled: " + what) {}
};

/// A grid would exceed the configured node budget.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what)
        : Error("budget exceeded: " + what) {}
};

/// A norm was requested over a region that contains no grid node.
class EmptyRestrictionError : public Error {
public:
    explicit EmptyRestrictionError(const std::string& what)
        : Error("empty restriction: " + what) {}
};

/// Parameter outside its documented domain.
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what)
        : Error("invalid argument: " + what) {}
};

}  // namespace fsl

#endif  // FSL_ERRORS_HPP
