#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmsub/admissibility.hpp"

namespace harmsub {

/// Turn-key scenario runner for the four bundled differential-subordination
/// setups:
///   1: psi = r+s against q(z) = 1 + M1 z + M2 conj(z), Omega = q's ellipse.
///   2: psi = r+s against the same q with Omega = disk(1, 2 M1); q + Dq
///      collapses to 1 + 2 M1 z exactly (q solves the relation sharply).
///   3: psi = r+s+t, Omega = disk(1, M2); holds when M2 < ((sqrt(33)-5)/4) M1.
///   4: psi = r+s against the half-plane map, Omega = {Re w > -1/2}.
/// Every run includes deliberately failing controls so a PASS is informative.
struct ExampleConfig {
    int id = 1;
    double M1 = 0.8;
    double M2 = 0.4;
    std::optional<AdmissibilityScanConfig> scan_override;
};

struct ExampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    int id = 0;
    bool pass = false;
    std::vector<ExampleCheck> checks;
    double scan_margin = 0.0;
};

ExampleReport run_example(const ExampleConfig& cfg);

/// The largest admissible M2/M1 ratio of scenario 3, scaled by M1:
/// ((sqrt(33)-5)/4) M1, the positive root of 2x^2 + 5x - 1 = 0.
double example3_threshold(double M1);

/// Chain evaluator g(x) = 2(1-x)/(1+x) - (1+x) - x at x = M2/M1; the
/// scenario-3 bound holds iff g(x) > 0 (curvature term bounded below by
/// (1-x)/(1+x)).
double example3_chain_value(double x);

/// Same chain with the exact curvature ratio 1 for the degree-1 map:
/// 2(1-x) - (1+x) - x = 1 - 4x (sharper threshold x < 1/4).
double example3_chain_value_exact_ratio(double x);

/// Re[q(zeta) + m Dq(zeta)] = -1/2 - m/(4 sin^2(theta/2)) for the
/// half-plane map at zeta = e^{i theta}. Rejects theta on the exception
/// angle (theta == 0 mod 2pi).
double example4_closed_form(double theta, double m);

} // namespace harmsub
