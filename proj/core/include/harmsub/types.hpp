#pragma once

#include <cmath>
#include <complex>

#include "harmsub/errors.hpp"

namespace harmsub {

using Complex = std::complex<double>;

/// Slack for on-circle evaluation points (truncated series are entire,
/// the guard only filters raw input noise).
inline constexpr double kBoundaryTol = 1e-12;

/// Default epsilon below which a divisor counts as zero.
inline constexpr double kDivisionEps = 1e-12;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A point of the closed unit disk (|z| <= 1 + kBoundaryTol).
class EvalPoint {
public:
    explicit EvalPoint(Complex z) : z_(z) {
        if (!is_finite(z))
            throw Error("EvalPoint: non-finite point");
        if (std::abs(z) > 1.0 + kBoundaryTol)
            throw Error("EvalPoint: |z| exceeds the closed unit disk");
    }

    static EvalPoint polar(double r, double theta) {
        return EvalPoint(std::polar(r, theta));
    }

    Complex value() const { return z_; }
    double radius() const { return std::abs(z_); }

private:
    Complex z_;
};

} // namespace harmsub
