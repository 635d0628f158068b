#pragma once

#include <span>
#include <vector>

#include "harmsub/fd.hpp"

namespace harmsub {

/// Outcome of a residual-style identity check. PASS means the largest
/// residual over the sample set stayed below cfg.tol_report; it is a
/// falsification verdict, not a proof.
struct IdentityReport {
    std::string what;
    bool pass = false;
    double max_residual = 0.0;
    Complex witness_point{};       // sample attaining max_residual
    std::string witness_detail;    // which sub-identity attained it
    int samples_used = 0;
    int samples_skipped = 0;
    double tol = 0.0;
};

/// Tensor sample grid: every radius crossed with n_angles uniform angles.
/// Angles are offset by half a step so axis points (and the zeros that like
/// to sit on them) are not sampled.
std::vector<EvalPoint> polar_grid(std::span<const double> radii, int n_angles,
                                  bool half_step_offset = true);

/// r in {0.1, ..., 0.9} x 64 angles.
std::vector<EvalPoint> default_grid();

/// Product rule D(phi psi) = phi D(psi) + psi D(phi) and the DFrak analog;
/// with include_quotient also D(phi/psi) = (psi D(phi) - phi D(psi))/psi^2
/// (psi must stay away from 0 on the samples, or the stencil throws
/// SingularEvaluation at the offending sample).
IdentityReport verify_product_rule(const PointwiseMap& phi, const PointwiseMap& psi,
                                   std::span<const EvalPoint> samples,
                                   const FDConfig& cfg = {},
                                   bool include_quotient = true);

/// Polar identities for |f| and arg f (four checks):
///   d|f|/dtheta = -|f| Im(Df/f),      d|f|/dr = (|f|/r) Re(DFrak f/f),
///   d(arg f)/dtheta = Re(Df/f),       d(arg f)/dr = (1/r) Im(DFrak f/f).
/// Left sides by finite differences (angle differences taken branch-safely
/// as arg(f(z1)/f(z2))), right sides from exact operator values. Samples
/// with |f| <= eps_div raise NearZeroDenominator.
IdentityReport verify_polar_identities(const HarmonicFunction& f,
                                       std::span<const EvalPoint> samples,
                                       const FDConfig& cfg = {},
                                       double eps_div = kDivisionEps);

/// Conjugation / real-part / imaginary-part / modulus / argument identities:
///   D conj(f) = -conj(Df)            DFrak conj(f) = conj(DFrak f)
///   D Re f    = i Im(Df)             DFrak Re f    = Re(DFrak f)
///   D Im f    = -i Re(Df)            DFrak Im f    = Im(DFrak f)
///   D |f|     = i |f| Im(Df/f)       DFrak |f|     = |f| Re(DFrak f/f)
///   D arg f   = -i Re(Df/f)          DFrak arg f   = Im(DFrak f/f)
/// conj/Re/Im stay harmonic and are checked through exact coefficient
/// operators; |f| and arg f are not harmonic and use finite differences.
IdentityReport verify_conj_re_im_identities(const HarmonicSeries& f,
                                            std::span<const EvalPoint> samples,
                                            const FDConfig& cfg = {},
                                            double eps_div = kDivisionEps);

/// Composition with an analytic outer map: D(phi o psi) = phi'(psi) D(psi)
/// (the conj(psi)-slot derivative vanishes for analytic phi), same for DFrak.
IdentityReport verify_composition_rule(const std::function<Complex(Complex)>& phi,
                                       const std::function<Complex(Complex)>& dphi,
                                       const HarmonicFunction& psi,
                                       std::span<const EvalPoint> samples,
                                       const FDConfig& cfg = {});

} // namespace harmsub
