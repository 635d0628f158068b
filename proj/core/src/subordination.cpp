#include "harmsub/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace harmsub {

namespace {

// Golden-section minimization of a smooth scalar function on [a, b].
double minimize_scalar(const std::function<double(double)>& f, double a, double b,
                       int iters = 80) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-13; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

UnivalenceReport univalence_probe(const HarmonicFunction& f, GridResolution res) {
    UnivalenceReport out;
    // Sense-preservation sweep.
    for (int i = 1; i <= res.n_r; ++i) {
        const double r = 0.95 * i / res.n_r;
        for (int k = 0; k < res.n_theta; ++k) {
            const Complex z = std::polar(r, 2.0 * M_PI * k / res.n_theta);
            if (!(f.jacobian(z) > 0.0)) {
                out.result = UnivalenceReport::Result::jacobian_violation;
                out.witness = z;
                return out;
            }
        }
    }
    // Pairwise injectivity on a coarser grid; antipodal pairs are on the
    // grid, which catches the even two-to-one maps exactly.
    const int n_r = std::max(2, res.n_r / 2);
    const int n_t = std::max(8, res.n_theta / 2) & ~1;
    std::vector<std::pair<Complex, Complex>> vals; // (f(z), z)
    vals.reserve(static_cast<std::size_t>(n_r) * n_t);
    double scale = 0.0;
    for (int i = 1; i <= n_r; ++i)
        for (int k = 0; k < n_t; ++k) {
            const Complex z = std::polar(0.95 * i / n_r, 2.0 * M_PI * k / n_t);
            const Complex v = f.value(z);
            scale = std::max(scale, std::abs(v));
            vals.emplace_back(v, z);
        }
    const double tol = 1e-9 * (1.0 + scale);
    const double min_sep = 1e-6;
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        return a.first.real() < b.first.real();
    });
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i + 1; j < vals.size() &&
                                    vals[j].first.real() - vals[i].first.real() <= tol;
             ++j) {
            if (std::abs(vals[i].first - vals[j].first) <= tol &&
                std::abs(vals[i].second - vals[j].second) > min_sep) {
                out.result = UnivalenceReport::Result::collision;
                out.colliding_pair = {vals[i].second, vals[j].second};
                return out;
            }
        }
    }
    return out;
}

SubordinationVerdict check_subordination_values(
    const std::function<Complex(Complex)>& f, const HarmonicFunction& F,
    const DomainSpec& F_image, SubResolution res, bool assume_univalent) {
    if (!assume_univalent && !univalence_probe(F).passed())
        throw HypothesisViolation(
            "check_subordination: F failed the univalence probe");

    SubordinationVerdict v;
    v.resolution = res;
    // Outermost circles first: witnesses surface where the image escapes.
    for (int i = res.n_radii; i >= 1; --i) {
        const double r = res.r_max * i / res.n_radii;
        for (int k = 0; k < res.n_angles; ++k) {
            const Complex z = std::polar(r, 2.0 * M_PI * k / res.n_angles);
            const Complex w = f(z);
            if (!F_image.contains(w, BoundaryPolicy::as_outside)) {
                v.relation = Relation::none;
                v.witness = w;
                return v;
            }
        }
    }
    const bool centers_match = std::abs(f(Complex(0.0)) - F.center()) <= res.center_tol;
    v.relation = centers_match ? Relation::strong : Relation::weak;
    return v;
}

SubordinationVerdict check_subordination(const HarmonicFunction& f,
                                         const HarmonicFunction& F,
                                         const DomainSpec& F_image,
                                         SubResolution res, bool assume_univalent) {
    return check_subordination_values(
        [&f](Complex z) { return f.value(z); }, F, F_image, res, assume_univalent);
}

namespace {

bool circle_contained(const HarmonicFunction& p, const DomainSpec& dom, double r,
                      int n_theta) {
    for (int k = 0; k < n_theta; ++k) {
        const Complex w = p.value(std::polar(r, 2.0 * M_PI * k / n_theta));
        if (!dom.contains(w, BoundaryPolicy::as_outside))
            return false;
    }
    return true;
}

double circle_min_clearance(const HarmonicFunction& p, const DomainSpec& dom,
                            double r, int n_theta) {
    double dmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_theta; ++k) {
        const Complex w = p.value(std::polar(r, 2.0 * M_PI * k / n_theta));
        dmin = std::min(dmin, dom.distance_to_boundary(w));
    }
    return dmin;
}

} // namespace

std::optional<JackWitness> jack_probe(const HarmonicFunction& p,
                                      const BoundaryMapQ& q, JackResolution res) {
    if (p.series() && p.series()->is_constant(0.0))
        throw HypothesisViolation("jack_probe: p must be nonconstant");
    if (std::abs(p.center() - q.center()) > res.center_tol)
        throw HypothesisViolation("jack_probe: p(0) != q(0)");
    if (!univalence_probe(q.map()).passed())
        throw HypothesisViolation("jack_probe: q failed the univalence probe");

    const DomainSpec dom = q.image_domain(std::max(res.n_boundary, 512));

    // Image scale for the clearance threshold.
    double diam = 0.0;
    const Complex c = q.center();
    for (int k = 0; k < 64; ++k)
        diam = std::max(diam, std::abs(p.value(std::polar(0.9, 2.0 * M_PI * k / 64)) - c));

    const double r_rim = 1.0 - 1e-9;
    if (circle_contained(p, dom, r_rim, res.n_theta)) {
        const double clearance = circle_min_clearance(p, dom, r_rim, res.n_theta);
        if (clearance > res.clearance_tol * (1.0 + diam))
            return std::nullopt; // strictly inside: subordinate
        throw NoCrossing("jack_probe: containment holds up to the rim without "
                         "strict clearance (r0 -> 1)");
    }

    double lo = 0.0, hi = r_rim;
    for (int i = 0; i < res.max_iter && hi - lo > res.r_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (circle_contained(p, dom, mid, res.n_theta) ? lo : hi) = mid;
    }
    const double r0 = 0.5 * (lo + hi);
    // Containment that only breaks within the rim band is a touching limit
    // (or polyline quantization), not a crossing.
    if (r0 >= 1.0 - 10.0 * res.r_tol)
        throw NoCrossing("jack_probe: containment persists to the rim (r0 -> 1)");

    // Contact point on |z| = r0: nearest approach of the image circle to
    // the target boundary, coarse scan plus golden-section polish.
    const auto dist_at = [&](double theta) {
        return dom.distance_to_boundary(p.value(std::polar(r0, theta)));
    };
    double best_theta = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < res.n_theta; ++k) {
        const double t = 2.0 * M_PI * k / res.n_theta;
        const double d = dist_at(t);
        if (d < best) {
            best = d;
            best_theta = t;
        }
    }
    const double step = 2.0 * M_PI / res.n_theta;
    best_theta = minimize_scalar(dist_at, best_theta - step, best_theta + step);
    const Complex z0 = std::polar(r0, best_theta);
    const Complex pz0 = p.value(z0);

    // Match zeta0 on the unit circle (excluded arcs skipped).
    const auto match_at = [&](double alpha) {
        return std::abs(q.map().value(std::polar(1.0, alpha)) - pz0);
    };
    double best_alpha = 0.0;
    double best_match = std::numeric_limits<double>::infinity();
    for (int k = 0; k < res.n_boundary; ++k) {
        const double a = 2.0 * M_PI * k / res.n_boundary;
        if (q.excluded(a))
            continue;
        const double d = match_at(a);
        if (d < best_match) {
            best_match = d;
            best_alpha = a;
        }
    }
    const double bstep = 2.0 * M_PI / res.n_boundary;
    best_alpha = minimize_scalar(match_at, best_alpha - bstep, best_alpha + bstep);

    JackWitness w;
    w.r0 = r0;
    w.z0 = z0;
    w.zeta0 = std::polar(1.0, best_alpha);
    const Complex dq = q.map().d(w.zeta0);
    const Complex dp = p.d(z0);
    if (std::abs(dq) <= kDivisionEps)
        throw NearZeroDenominator("jack_probe: Dq vanishes at the matched point",
                                  w.zeta0);
    if (std::abs(dp) <= kDivisionEps)
        throw NearZeroDenominator("jack_probe: Dp vanishes at the contact point", z0);
    w.lhs_ratio = dp / dq;
    w.m = w.lhs_ratio.real();
    w.curvature_gap = (p.d2(z0) / dp).real() -
                      w.m * (q.map().d2(w.zeta0) / dq).real();
    return w;
}

AnalyticContact analytic_jack_probe(const HarmonicSeries& f, double r0) {
    if (!f.is_analytic(0.0))
        throw Error("analytic_jack_probe: co-analytic part must vanish");
    if (!(r0 > 0.0) || !(r0 < 1.0))
        throw Error("analytic_jack_probe: r0 must lie in (0, 1)");

    const auto& a = f.analytic_coeffs();
    int nonzero = -1;
    int count = 0;
    for (std::size_t n = 0; n < a.size(); ++n)
        if (std::abs(a[n]) > 0.0) {
            nonzero = static_cast<int>(n);
            ++count;
        }
    if (count == 0)
        throw Error("analytic_jack_probe: f vanishes identically");
    if (count == 1 && nonzero >= 1) {
        // Monomial: |f| constant on the circle, every angle maximizes.
        AnalyticContact c;
        c.m = nonzero;
        c.curvature = nonzero;
        c.z0 = std::polar(r0, 0.0);
        return c;
    }

    // f'' coefficients for the curvature term.
    std::vector<Complex> d2(std::max<std::size_t>(a.size(), 3) - 2, Complex(0.0));
    for (std::size_t n = 2; n < a.size(); ++n)
        d2[n - 2] = a[n] * static_cast<double>(n) * static_cast<double>(n - 1);
    const auto horner = [](const std::vector<Complex>& c, Complex z) {
        Complex acc = 0.0;
        for (std::size_t n = c.size(); n-- > 0;)
            acc = acc * z + c[n];
        return acc;
    };

    const auto modulus = [&](double theta) {
        return std::abs(evaluate(f, EvalPoint::polar(r0, theta)));
    };
    const int n_grid = 2048;
    double best_theta = 0.0, best = -1.0, low = std::numeric_limits<double>::max();
    for (int k = 0; k < n_grid; ++k) {
        const double t = 2.0 * M_PI * k / n_grid;
        const double v = modulus(t);
        low = std::min(low, v);
        if (v > best) {
            best = v;
            best_theta = t;
        }
    }
    if (best - low <= 1e-12 * (1.0 + best))
        throw FlatModulus("analytic_jack_probe: |f| constant on the circle");

    const HarmonicSeries zfp = apply_D(f); // series of z f'(z)
    // Newton on g(theta) = Im[z f'/f] = -d/dtheta log|f|: zero at the max.
    double theta = best_theta;
    for (int it = 0; it < 16; ++it) {
        const Complex z = std::polar(r0, theta);
        const Complex fv = evaluate(f, EvalPoint(z));
        if (std::abs(fv) <= kDivisionEps)
            throw NearZeroDenominator(
                "analytic_jack_probe: f vanishes near the maximizer", z);
        const Complex zfpv = evaluate(zfp, EvalPoint(z));
        const Complex F = zfpv / fv;
        // dF/dtheta = i z F'(z) with F' = (zf')'/f - (zf') f'/f^2.
        const Complex zfp_prime = wirtinger_dz(zfp, EvalPoint(z));
        const Complex fpv = wirtinger_dz(f, EvalPoint(z));
        const Complex dF = Complex(0, 1) * z * (zfp_prime / fv - zfpv * fpv / (fv * fv));
        if (std::abs(dF.imag()) < 1e-18)
            break;
        const double delta = F.imag() / dF.imag();
        theta -= delta;
        if (std::abs(delta) < 1e-15)
            break;
    }

    AnalyticContact c;
    c.z0 = std::polar(r0, theta);
    const Complex fv = evaluate(f, EvalPoint(c.z0));
    const Complex fpv = wirtinger_dz(f, EvalPoint(c.z0));
    if (std::abs(fv) <= kDivisionEps || std::abs(fpv) <= kDivisionEps)
        throw NearZeroDenominator("analytic_jack_probe: degenerate contact", c.z0);
    const Complex F = c.z0 * fpv / fv;
    c.m = F.real();
    c.im_residual = std::abs(F.imag());
    c.curvature = (1.0 + c.z0 * horner(d2, c.z0) / fpv).real();
    return c;
}

} // namespace harmsub
