#include "harmsub/boundary_map.hpp"

#include <cmath>

namespace harmsub {

namespace {

double wrap_angle(double t) {
    t = std::fmod(t, 2.0 * M_PI);
    return t < 0.0 ? t + 2.0 * M_PI : t;
}

double angular_gap(double a, double b) {
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, 2.0 * M_PI - d);
}

} // namespace

BoundaryMapQ::BoundaryMapQ(HarmonicFunction q, std::vector<double> exception_angles,
                           double exclusion_radius,
                           std::optional<DomainSpec> declared_image)
    : q_(std::move(q)),
      exception_angles_(std::move(exception_angles)),
      exclusion_radius_(exclusion_radius),
      declared_image_(std::move(declared_image)) {
    if (!(exclusion_radius_ > 0.0))
        throw Error("BoundaryMapQ: exclusion_radius must be positive");
    // Declared exception angles must show actual blow-up: |q| on approach
    // (just outside the exclusion arc) has to dwarf |q| far from the angle.
    for (double te : exception_angles_) {
        const Complex far = q_.value(std::polar(1.0, te + M_PI));
        const Complex near = q_.value(std::polar(1.0, te + 2.0 * exclusion_radius_));
        if (!(std::abs(near) > 10.0 * (1.0 + std::abs(far))))
            throw HypothesisViolation(
                "BoundaryMapQ: declared exception angle shows no blow-up");
    }
}

bool BoundaryMapQ::excluded(double theta) const {
    for (double te : exception_angles_)
        if (angular_gap(theta, te) < exclusion_radius_)
            return true;
    return false;
}

std::vector<BoundarySample> BoundaryMapQ::boundary_samples(int n,
                                                           double eps_div) const {
    if (n < 16)
        throw Error("boundary_samples: need n >= 16");
    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(n));
    int flagged = 0;
    int excluded_count = 0;
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n;
        if (excluded(theta)) {
            ++excluded_count;
            continue;
        }
        BoundarySample s;
        s.theta = theta;
        s.zeta = std::polar(1.0, theta);
        s.q = q_.value(s.zeta);
        s.dq = q_.d(s.zeta);
        s.d2q = q_.d2(s.zeta);
        s.dq_near_zero = std::abs(s.dq) <= eps_div;
        if (s.dq_near_zero)
            ++flagged;
        out.push_back(s);
    }
    if (2 * (excluded_count + flagged) > n)
        throw DegenerateBoundary(
            "boundary_samples: more than half the samples excluded or flagged");
    return out;
}

DiskImage BoundaryMapQ::image_of_disk(int n_boundary,
                                      std::span<const double> interior_radii,
                                      int n_interior_angles) const {
    if (n_boundary < 1)
        throw Error("image_of_disk: need n_boundary >= 1");
    DiskImage img;
    img.boundary.reserve(static_cast<std::size_t>(n_boundary));
    for (int k = 0; k < n_boundary; ++k) {
        const double theta = 2.0 * M_PI * k / n_boundary;
        if (excluded(theta))
            continue;
        img.boundary.push_back({theta, 1.0, q_.value(std::polar(1.0, theta))});
    }
    for (double r : interior_radii) {
        if (!(r >= 0.0) || r >= 1.0)
            throw Error("image_of_disk: interior radii must lie in [0, 1)");
        for (int k = 0; k < n_interior_angles; ++k) {
            const double theta = 2.0 * M_PI * k / n_interior_angles;
            img.interior.push_back({theta, r, q_.value(std::polar(r, theta))});
        }
    }
    return img;
}

DomainSpec BoundaryMapQ::image_domain(int n_boundary) const {
    if (declared_image_)
        return *declared_image_;
    if (!exception_angles_.empty())
        throw HypothesisViolation(
            "image_domain: unbounded image (exception angles declared and no "
            "closed-form image provided)");
    JordanImage j;
    j.boundary.reserve(static_cast<std::size_t>(n_boundary));
    for (int k = 0; k < n_boundary; ++k)
        j.boundary.push_back(q_.value(std::polar(1.0, 2.0 * M_PI * k / n_boundary)));
    return DomainSpec(std::move(j));
}

BoundaryMapQ BoundaryMapQ::radial_scale(double rho) const {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw Error("radial_scale: rho must lie in (0, 1)");
    return BoundaryMapQ(q_.radial_scale(rho), {}, exclusion_radius_, std::nullopt);
}

} // namespace harmsub
