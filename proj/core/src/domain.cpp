#include "harmsub/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace harmsub {

namespace {

void validate(const HalfPlane& h) {
    if (!std::isfinite(h.c))
        throw Error("half_plane: non-finite offset");
}

void validate(const Disk& d) {
    if (!is_finite(d.center) || !(d.radius > 0.0))
        throw Error("disk: requires finite center and radius > 0");
}

void validate(const Ellipse& e) {
    if (!is_finite(e.center) || !(e.semi_minor > 0.0) ||
        !(e.semi_major >= e.semi_minor))
        throw Error("ellipse: requires semi_major >= semi_minor > 0");
}

bool segments_intersect(Complex a, Complex b, Complex c, Complex d) {
    const auto cross = [](Complex u, Complex v) {
        return u.real() * v.imag() - u.imag() * v.real();
    };
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

void validate(const JordanImage& j) {
    if (j.boundary.size() < 16)
        throw Error("jordan_image: needs at least 16 vertices");
    for (Complex v : j.boundary)
        if (!is_finite(v))
            throw Error("jordan_image: non-finite vertex");
    // Simplicity at sampling resolution: proper crossings of non-adjacent
    // edges. Full check up to 1024 vertices, strided spot-check above.
    const std::size_t n = j.boundary.size();
    const std::size_t stride = n <= 1024 ? 1 : n / 1024;
    for (std::size_t i = 0; i < n; i += stride) {
        const Complex a = j.boundary[i];
        const Complex b = j.boundary[(i + 1) % n];
        for (std::size_t k = i + 2; k < n; k += stride) {
            if (i == 0 && k == n - 1)
                continue; // adjacent through closure
            if (segments_intersect(a, b, j.boundary[k], j.boundary[(k + 1) % n]))
                throw Error("jordan_image: boundary self-intersects");
        }
    }
}

} // namespace

DomainSpec::DomainSpec(HalfPlane h) : v_(h) { validate(h); }
DomainSpec::DomainSpec(Disk d) : v_(d) { validate(d); }
DomainSpec::DomainSpec(Ellipse e) : v_(e) { validate(e); }
DomainSpec::DomainSpec(JordanImage j) : v_(std::move(j)) {
    validate(std::get<JordanImage>(v_));
}

int winding_number(std::span<const Complex> poly, Complex w) {
    // Crossing-count winding: an upward edge strictly left of w adds one
    // turn, a downward edge strictly right of w removes one.
    int winding = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = poly[i];
        const Complex b = poly[(i + 1) % n];
        const auto side = (b.real() - a.real()) * (w.imag() - a.imag()) -
                          (w.real() - a.real()) * (b.imag() - a.imag());
        if (a.imag() <= w.imag()) {
            if (b.imag() > w.imag() && side > 0)
                ++winding;
        } else {
            if (b.imag() <= w.imag() && side < 0)
                --winding;
        }
    }
    return winding;
}

double point_segment_distance(Complex w, Complex s0, Complex s1) {
    const Complex d = s1 - s0;
    const double len2 = std::norm(d);
    if (len2 == 0.0)
        return std::abs(w - s0);
    double t = ((w.real() - s0.real()) * d.real() +
                (w.imag() - s0.imag()) * d.imag()) /
               len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (s0 + t * d));
}

double point_ellipse_distance(const Ellipse& e, Complex w) {
    // Fold into the first quadrant of the centered frame.
    const double e0 = e.semi_major;
    const double e1 = e.semi_minor;
    const double y0 = std::abs(w.real() - e.center.real());
    const double y1 = std::abs(w.imag() - e.center.imag());

    if (y1 > 0.0) {
        // Root of F(t) = (e0 y0/(t+e0^2))^2 + (e1 y1/(t+e1^2))^2 - 1 on
        // (-e1^2, inf); F decreases from +inf to -1, bracket per Eberly.
        const double t0 = -e1 * e1 + e1 * y1;
        const double t1 = -e1 * e1 + std::hypot(e0 * y0, e1 * y1);
        double lo = t0, hi = std::max(t1, t0);
        const auto F = [&](double t) {
            const double r0 = e0 * y0 / (t + e0 * e0);
            const double r1 = e1 * y1 / (t + e1 * e1);
            return r0 * r0 + r1 * r1 - 1.0;
        };
        while (F(hi) > 0.0)
            hi = 2.0 * hi + e1 * e1 + 1.0;
        for (int i = 0; i < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo)); ++i) {
            const double mid = 0.5 * (lo + hi);
            (F(mid) > 0.0 ? lo : hi) = mid;
        }
        const double t = 0.5 * (lo + hi);
        const double x0 = e0 * e0 * y0 / (t + e0 * e0);
        const double x1 = e1 * e1 * y1 / (t + e1 * e1);
        return std::hypot(x0 - y0, x1 - y1);
    }
    // On the major axis: nearest point is interior to the arc until the
    // evolute cusp, the vertex after it.
    const double numer = e0 * y0;
    const double denom = e0 * e0 - e1 * e1;
    if (denom > 0.0 && numer < denom) {
        const double xde0 = numer / denom;
        const double x0 = e0 * xde0;
        const double x1 = e1 * std::sqrt(1.0 - xde0 * xde0);
        return std::hypot(x0 - y0, x1);
    }
    return std::abs(y0 - e0);
}

Region DomainSpec::classify(Complex w, double tol) const {
    if (const auto* h = std::get_if<HalfPlane>(&v_)) {
        const double d = w.real() - h->c;
        if (std::abs(d) <= tol)
            return Region::boundary;
        return d > 0.0 ? Region::inside : Region::outside;
    }
    if (const auto* d = std::get_if<Disk>(&v_)) {
        const double g = std::abs(w - d->center) - d->radius;
        if (std::abs(g) <= tol)
            return Region::boundary;
        return g < 0.0 ? Region::inside : Region::outside;
    }
    if (const auto* e = std::get_if<Ellipse>(&v_)) {
        if (point_ellipse_distance(*e, w) <= tol)
            return Region::boundary;
        const double u = (w.real() - e->center.real()) / e->semi_major;
        const double v = (w.imag() - e->center.imag()) / e->semi_minor;
        return u * u + v * v < 1.0 ? Region::inside : Region::outside;
    }
    const auto& j = std::get<JordanImage>(v_);
    double dmin = std::numeric_limits<double>::infinity();
    const std::size_t n = j.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        dmin = std::min(dmin, point_segment_distance(w, j.boundary[i],
                                                     j.boundary[(i + 1) % n]));
        if (dmin <= tol)
            return Region::boundary;
    }
    return winding_number(j.boundary, w) != 0 ? Region::inside : Region::outside;
}

bool DomainSpec::contains(Complex w, BoundaryPolicy policy) const {
    switch (classify(w)) {
    case Region::inside: return true;
    case Region::outside: return false;
    case Region::boundary: return policy == BoundaryPolicy::as_inside;
    }
    return false;
}

double DomainSpec::distance_to_boundary(Complex w) const {
    if (const auto* h = std::get_if<HalfPlane>(&v_))
        return std::abs(w.real() - h->c);
    if (const auto* d = std::get_if<Disk>(&v_))
        return std::abs(std::abs(w - d->center) - d->radius);
    if (const auto* e = std::get_if<Ellipse>(&v_))
        return point_ellipse_distance(*e, w);
    const auto& j = std::get<JordanImage>(v_);
    double dmin = std::numeric_limits<double>::infinity();
    const std::size_t n = j.boundary.size();
    for (std::size_t i = 0; i < n; ++i)
        dmin = std::min(dmin, point_segment_distance(w, j.boundary[i],
                                                     j.boundary[(i + 1) % n]));
    return dmin;
}

bool DomainSpec::is_bounded() const {
    return !std::holds_alternative<HalfPlane>(v_);
}

const char* DomainSpec::kind_name() const {
    if (std::holds_alternative<HalfPlane>(v_)) return "half_plane";
    if (std::holds_alternative<Disk>(v_)) return "disk";
    if (std::holds_alternative<Ellipse>(v_)) return "ellipse";
    return "jordan_image";
}

} // namespace harmsub
