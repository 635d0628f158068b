#pragma once

#include <optional>

#include "harmsub/boundary_map.hpp"

namespace harmsub {

struct GridResolution {
    int n_r = 16;
    int n_theta = 96;
};

/// Falsification-only univalence check: a pass is "likely", never a proof.
struct UnivalenceReport {
    enum class Result { likely_univalent, jacobian_violation, collision };
    Result result = Result::likely_univalent;
    std::optional<Complex> witness;            // z with J_f(z) <= 0
    std::optional<std::pair<Complex, Complex>> colliding_pair;

    bool passed() const { return result == Result::likely_univalent; }
};

UnivalenceReport univalence_probe(const HarmonicFunction& f, GridResolution res = {});

enum class Relation { strong, weak, none };

struct SubResolution {
    int n_radii = 16;
    int n_angles = 256;
    double r_max = 0.99;
    double center_tol = 1e-9;
};

struct SubordinationVerdict {
    Relation relation = Relation::none;
    std::optional<Complex> witness; // an f-sample outside F(D) when relation == none
    SubResolution resolution;
};

/// Containment characterization: strong iff every sample of f over the
/// concentric circles lies in F_image and the centers match; weak on
/// containment with mismatched centers; otherwise none with a witness.
/// Radii are scanned outermost-first, so the witness comes from the circle
/// closest to the boundary. F must pass the univalence probe unless
/// declared univalent.
SubordinationVerdict check_subordination(const HarmonicFunction& f,
                                         const HarmonicFunction& F,
                                         const DomainSpec& F_image,
                                         SubResolution res = {},
                                         bool assume_univalent = false);

/// Same check for a value-only map (compositions that leave the series
/// class); f(0) supplies the center.
SubordinationVerdict check_subordination_values(
    const std::function<Complex(Complex)>& f, const HarmonicFunction& F,
    const DomainSpec& F_image, SubResolution res = {}, bool assume_univalent = false);

struct JackResolution {
    double r_tol = 1e-4;     // bisection tolerance in radius
    int max_iter = 40;
    int n_theta = 1024;      // contact search on the critical circle
    int n_boundary = 2048;   // zeta-matching resolution on the unit circle
    double center_tol = 1e-9;
    double clearance_tol = 1e-4; // subordinate/no-crossing split, image-scale relative
};

/// Boundary-contact data at the first circle whose image leaves q(D):
/// the critical radius r0, the contact points z0 (inner) and zeta0 (on the
/// unit circle), the complex ratio Dp(z0)/Dq(zeta0) with m = Re(ratio),
/// and curvature_gap = Re(D^2 p/Dp)(z0) - m Re(D^2 q/Dq)(zeta0).
/// The analytic theory predicts m >= 1; for harmonic targets the measured
/// ratio can drop below 1, so the field reports the value as-is.
struct JackWitness {
    Complex z0;
    Complex zeta0;
    double m = 0.0;
    Complex lhs_ratio{};
    double curvature_gap = 0.0;
    double r0 = 0.0;
};

/// Locates r0 = sup{r : p(D_r) subset q(D)} by bisection and extracts the
/// contact witness. Returns nothing when p stays strictly inside q(D);
/// throws NoCrossing when containment persists to the rim without strict
/// clearance (images that merely touch in the limit, e.g. p == q).
std::optional<JackWitness> jack_probe(const HarmonicFunction& p,
                                      const BoundaryMapQ& q,
                                      JackResolution res = {});

struct AnalyticContact {
    double m = 0.0;         // Re[z f'(z)/f(z)] at the max-modulus point
    double curvature = 0.0; // Re[1 + z f''(z)/f'(z)] there
    Complex z0{};
    double im_residual = 0.0; // |Im[z f'/f]| at the located maximizer
};

/// Max-modulus contact data for an analytic series on |z| = r0. Monomials
/// a_n z^n (constant modulus, every angle maximizes) return (n, n) directly;
/// any other constant-modulus series raises FlatModulus.
AnalyticContact analytic_jack_probe(const HarmonicSeries& f, double r0);

} // namespace harmsub
