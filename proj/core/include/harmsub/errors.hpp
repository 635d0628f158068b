#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace harmsub {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed series/report document. `byte` is the offset reported by the parser.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t byte)
        : Error(what), byte_(byte) {}
    std::size_t byte() const { return byte_; }

private:
    std::size_t byte_;
};

/// A pointwise map blew up (non-finite value) inside a stencil or sample set.
class SingularEvaluation : public Error {
public:
    SingularEvaluation(const std::string& what, std::complex<double> at)
        : Error(what), at_(at) {}
    std::complex<double> at() const { return at_; }

private:
    std::complex<double> at_;
};

/// Denominator magnitude fell at or below the configured division epsilon.
class NearZeroDenominator : public Error {
public:
    NearZeroDenominator(const std::string& what, std::complex<double> at)
        : Error(what), at_(at) {}
    std::complex<double> at() const { return at_; }

private:
    std::complex<double> at_;
};

/// More than half of the requested boundary samples were excluded or flagged.
class DegenerateBoundary : public Error {
public:
    using Error::Error;
};

/// A declared hypothesis (univalence, center match, ...) failed a probe.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// Bisection found no radius at which the image leaves the target region.
class NoCrossing : public Error {
public:
    using Error::Error;
};

/// psi(1,0,0;0) differs from the required normalization constant.
class NormalizationViolation : public Error {
public:
    using Error::Error;
};

/// |f| is constant on the probed circle and f is not a monomial.
class FlatModulus : public Error {
public:
    using Error::Error;
};

} // namespace harmsub
