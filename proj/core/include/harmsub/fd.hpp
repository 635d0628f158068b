#pragma once

#include <functional>
#include <string>

#include "harmsub/harmonic_function.hpp"
#include "harmsub/types.hpp"

namespace harmsub {

/// Black-box smooth map on the disk, evaluation only. Deterministic;
/// finite away from its declared singularities.
struct PointwiseMap {
    std::function<Complex(Complex)> eval;
    std::string label;
};

PointwiseMap as_pointwise(const HarmonicSeries& f, std::string label = "series");
PointwiseMap as_pointwise(const HarmonicFunction& f);

struct FDConfig {
    double step_h = 1e-5;
    enum class Scheme { central } scheme = Scheme::central;
    double tol_report = 1e-6;

    void validate() const {
        if (!(step_h > 0.0) || !(step_h < 1e-2))
            throw Error("FDConfig: step_h must lie in (0, 1e-2)");
    }
};

/// Df by the polar identity df/dtheta = i Df: central difference in theta
/// along the circle through z. Returns 0 at z = 0. Truncation error O(h^2).
/// Throws SingularEvaluation if the map blows up within the stencil.
Complex fd_D(const PointwiseMap& f, EvalPoint z, const FDConfig& cfg = {});

/// DFrak f = r df/dr: central difference along the ray through z; the
/// stencil falls back to a one-sided inward difference when r + h would
/// leave the closed disk. Returns 0 at z = 0.
Complex fd_Dfrak(const PointwiseMap& f, EvalPoint z, const FDConfig& cfg = {});

} // namespace harmsub
