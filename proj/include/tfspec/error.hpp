#pragma once

#include <stdexcept>
#include <string>

namespace tfspec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Requested size (quadrature points, degree, ...) outside the supported range.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A Jacobi term does not have the exponent/parameter shape an operator identity needs.
class PatternError : public Error {
public:
    using Error::Error;
};

/// Integrand carries a non-integrable endpoint singularity.
class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A user function returned a non-finite value at a sample point.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double rcond)
        : Error(what), rcond_(rcond) {}
    /// Reciprocal condition number estimate of the offending matrix.
    double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tfspec
