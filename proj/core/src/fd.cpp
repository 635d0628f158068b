#include "harmsub/fd.hpp"

#include <cmath>

namespace harmsub {

PointwiseMap as_pointwise(const HarmonicSeries& f, std::string label) {
    return PointwiseMap{
        [f](Complex z) { return evaluate(f, EvalPoint(z)); },
        std::move(label)};
}

PointwiseMap as_pointwise(const HarmonicFunction& f) {
    return PointwiseMap{[f](Complex z) { return f.value(z); }, f.label()};
}

namespace {

// std::polar requires rho >= 0; a negative radius flips through the origin.
Complex polar_pt(double r, double theta) {
    return r >= 0.0 ? std::polar(r, theta) : std::polar(-r, theta + M_PI);
}

Complex probe(const PointwiseMap& f, Complex z) {
    const Complex v = f.eval(z);
    if (!is_finite(v))
        throw SingularEvaluation("finite-difference stencil hit a singular value of " +
                                     (f.label.empty() ? std::string("map") : f.label),
                                 z);
    return v;
}

} // namespace

Complex fd_D(const PointwiseMap& f, EvalPoint z, const FDConfig& cfg) {
    cfg.validate();
    const Complex z0 = z.value();
    if (std::abs(z0) == 0.0)
        return Complex(0.0);
    const double r = std::abs(z0);
    const double theta = std::arg(z0);
    const double h = cfg.step_h;
    const Complex fp = probe(f, std::polar(r, theta + h));
    const Complex fm = probe(f, std::polar(r, theta - h));
    // Df = (1/i) df/dtheta
    return (fp - fm) / (2.0 * h) / Complex(0.0, 1.0);
}

Complex fd_Dfrak(const PointwiseMap& f, EvalPoint z, const FDConfig& cfg) {
    cfg.validate();
    const Complex z0 = z.value();
    if (std::abs(z0) == 0.0)
        return Complex(0.0);
    const double r = std::abs(z0);
    const double theta = std::arg(z0);
    const double h = cfg.step_h;
    if (r + h <= 1.0 + kBoundaryTol) {
        const Complex fp = probe(f, polar_pt(r + h, theta));
        const Complex fm = probe(f, polar_pt(r - h, theta));
        return r * (fp - fm) / (2.0 * h);
    }
    // One-sided second-order inward stencil for on-circle points.
    const Complex f0 = probe(f, polar_pt(r, theta));
    const Complex f1 = probe(f, polar_pt(r - h, theta));
    const Complex f2 = probe(f, polar_pt(r - 2.0 * h, theta));
    return r * (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * h);
}

} // namespace harmsub
