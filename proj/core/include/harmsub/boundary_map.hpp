#pragma once

#include <optional>
#include <span>
#include <vector>

#include "harmsub/domain.hpp"
#include "harmsub/harmonic_function.hpp"

namespace harmsub {

struct BoundarySample {
    double theta;
    Complex zeta;    // e^{i theta}
    Complex q;       // q(zeta)
    Complex dq;      // Dq(zeta)
    Complex d2q;     // D^2 q(zeta)
    bool dq_near_zero = false;
};

struct DiskImage {
    struct Point {
        double theta;
        double r;
        Complex w;
    };
    std::vector<Point> boundary; // r = 1, exception arcs clipped
    std::vector<Point> interior; // concentric circles
};

/// A candidate target map q for the subordination machinery: the map, its
/// declared exception angles E(q) (boundary blow-up points), the angular
/// exclusion neighborhood removed around each of them, and optionally a
/// closed-form description of q(D) (otherwise a winding-number polyline is
/// built on demand). Construction sanity-checks that |q| actually grows on
/// approach to each declared exception angle.
class BoundaryMapQ {
public:
    BoundaryMapQ(HarmonicFunction q,
                 std::vector<double> exception_angles = {},
                 double exclusion_radius = 1e-3,
                 std::optional<DomainSpec> declared_image = std::nullopt);

    const HarmonicFunction& map() const { return q_; }
    Complex center() const { return q_.center(); }
    const std::vector<double>& exception_angles() const { return exception_angles_; }
    double exclusion_radius() const { return exclusion_radius_; }
    const std::optional<DomainSpec>& declared_image() const { return declared_image_; }

    bool excluded(double theta) const;

    /// n >= 16 uniform angles on [0, 2pi) minus exclusion neighborhoods;
    /// evaluates q, Dq, D^2 q on the circle and flags |Dq| <= eps_div.
    /// Throws DegenerateBoundary when more than half the requested samples
    /// are excluded or flagged.
    std::vector<BoundarySample> boundary_samples(int n,
                                                 double eps_div = kDivisionEps) const;

    /// Boundary polyline q(e^{i theta}) (exception arcs clipped) plus
    /// interior samples on concentric circles.
    DiskImage image_of_disk(int n_boundary, std::span<const double> interior_radii,
                            int n_interior_angles) const;

    /// Declared image if present, else a jordan_image polyline at the given
    /// resolution (requires a bounded image, i.e. no exception angles).
    DomainSpec image_domain(int n_boundary = 1024) const;

    /// q_rho(z) = q(rho z); the scaled map is regular on the closed disk,
    /// so E(q_rho) is empty.
    BoundaryMapQ radial_scale(double rho) const;

private:
    HarmonicFunction q_;
    std::vector<double> exception_angles_;
    double exclusion_radius_;
    std::optional<DomainSpec> declared_image_;
};

} // namespace harmsub
