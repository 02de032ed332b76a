#pragma once

#include <stdexcept>
#include <string>

namespace wpbounds {

/// Precondition violated by a caller-supplied argument.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two geodesics share an ideal endpoint (or collapse onto one another).
class TangencyError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative procedure (series, adaptive quadrature) ran past its cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wpbounds
