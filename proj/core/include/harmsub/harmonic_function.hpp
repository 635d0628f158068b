#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "harmsub/series.hpp"

namespace harmsub {

/// Closed-form analytic parts of f = h + conj(g) with their first and
/// second derivatives. Used for maps that are not finite series (the
/// half-plane map and friends).
struct AnalyticParts {
    std::function<Complex(Complex)> h, dh, d2h;
    std::function<Complex(Complex)> g, dg, d2g;
};

/// A harmonic map with exact operator access: value, Df, DFrak f, and the
/// second-order D^2 f (= DFrak applied to Df). Backed either by a finite
/// HarmonicSeries (coefficient rules) or by closed-form analytic parts.
/// Value-semantic and immutable; safe for concurrent use.
class HarmonicFunction {
public:
    static HarmonicFunction from_series(HarmonicSeries s, std::string label = "series");
    static HarmonicFunction from_parts(AnalyticParts parts, std::string label);

    Complex value(Complex z) const;
    Complex d(Complex z) const;       // Df = z h' - conj(z g')
    Complex dfrak(Complex z) const;   // DFrak f = z h' + conj(z g')
    Complex d2(Complex z) const;      // D^2 f = Df + z^2 h'' - conj(z^2 g'')
    double jacobian(Complex z) const; // |h'|^2 - |g'|^2

    Complex center() const { return value(Complex(0.0)); }

    /// z -> f(rho z); operator values scale as D(f(rho.)) (z) = (Df)(rho z).
    HarmonicFunction radial_scale(double rho) const;

    const std::optional<HarmonicSeries>& series() const { return series_; }
    const std::string& label() const { return label_; }

private:
    HarmonicFunction() = default;

    std::optional<HarmonicSeries> series_;
    // Operator series cached at construction; D and DFrak are degree-preserving.
    std::optional<HarmonicSeries> d_series_, dfrak_series_, d2_series_;
    std::shared_ptr<const AnalyticParts> parts_;
    double scale_ = 1.0; // evaluation prescaling for radial_scale on parts
    std::string label_;
};

/// q(z) = (1+z)/(1-z) + conj(z/(1-z)); maps the disk onto Re w > -1/2,
/// blows up at z = 1.
HarmonicFunction half_plane_map();

/// q(z) = 1 + M1 z + M2 conj(z); maps the disk onto the axis-aligned
/// ellipse centered at 1 with semi-axes M1+M2 (real) and M1-M2 (imaginary).
HarmonicFunction affine_ellipse_map(double M1, double M2);

} // namespace harmsub
