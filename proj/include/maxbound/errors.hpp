#pragma once

#include <stdexcept>
#include <string>

namespace maxbound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Argument inside the domain but outside the range an evaluation route can
/// serve; the message names the alternative route.
class RangeError : public std::range_error {
public:
    explicit RangeError(const std::string& what) : std::range_error(what) {}
};

/// A numerical procedure failed to converge. Carries the residual error
/// estimate at the point of failure.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double error_estimate)
        : std::runtime_error(what + " (error estimate " +
                             std::to_string(error_estimate) + ")"),
          estimate(error_estimate) {}
    double estimate;
};

/// A declared enumeration or sample budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched vector/block shapes.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace maxbound
