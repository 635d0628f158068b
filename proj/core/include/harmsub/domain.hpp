#pragma once

#include <span>
#include <variant>
#include <vector>

#include "harmsub/types.hpp"

namespace harmsub {

/// Near-boundary membership is three-valued within kGeomTol.
inline constexpr double kGeomTol = 1e-9;

enum class Region { inside, outside, boundary };

/// How a boolean containment query collapses the boundary band:
/// containment certificates must not claim "inside" near the boundary,
/// violation scans must not hide a grazing value behind tolerance.
enum class BoundaryPolicy { as_outside, as_inside };

struct HalfPlane {
    double c; // Re w > c
};

struct Disk {
    Complex center;
    double radius;
};

/// Axis-aligned: semi_major along the real axis, semi_minor along the
/// imaginary axis (semi_major >= semi_minor > 0).
struct Ellipse {
    Complex center;
    double semi_major;
    double semi_minor;
};

/// Region bounded by a closed simple polyline (implicit closure, >= 16
/// vertices); membership by nonzero winding number.
struct JordanImage {
    std::vector<Complex> boundary;
};

class DomainSpec {
public:
    explicit DomainSpec(HalfPlane h);
    explicit DomainSpec(Disk d);
    explicit DomainSpec(Ellipse e);
    explicit DomainSpec(JordanImage j);

    Region classify(Complex w, double tol = kGeomTol) const;
    bool contains(Complex w, BoundaryPolicy policy = BoundaryPolicy::as_outside) const;

    /// Euclidean distance from w to the boundary curve (any side).
    double distance_to_boundary(Complex w) const;

    bool is_bounded() const;
    const char* kind_name() const;

    template <class T> const T* get_if() const { return std::get_if<T>(&v_); }

private:
    std::variant<HalfPlane, Disk, Ellipse, JordanImage> v_;
};

/// Winding number of the implicitly closed polyline around w.
int winding_number(std::span<const Complex> polyline, Complex w);

/// Exact distance from a point to an axis-aligned ellipse boundary
/// (robust bisection on the orthogonal-projection parameter).
double point_ellipse_distance(const Ellipse& e, Complex w);

double point_segment_distance(Complex w, Complex s0, Complex s1);

} // namespace harmsub
