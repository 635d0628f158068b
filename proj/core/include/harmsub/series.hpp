#pragma once

#include <optional>
#include <vector>

#include "harmsub/types.hpp"

namespace harmsub {

/// Truncated harmonic mapping f = h + conj(g) stored as the coefficient
/// pair h(z) = sum a_n z^n, g(z) = sum b_n z^n, n = 0..N. Both sequences
/// share the truncation degree N; the shorter input is zero-padded.
/// Immutable after construction; all operations below are pure.
class HarmonicSeries {
public:
    HarmonicSeries(std::vector<Complex> a, std::vector<Complex> b);

    /// f = h, g = 0.
    static HarmonicSeries analytic(std::vector<Complex> a);

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Complex>& analytic_coeffs() const { return a_; }
    const std::vector<Complex>& coanalytic_coeffs() const { return b_; }
    Complex a(int n) const { return a_[static_cast<std::size_t>(n)]; }
    Complex b(int n) const { return b_[static_cast<std::size_t>(n)]; }

    /// f(0) = a_0 + conj(b_0).
    Complex center() const { return a_[0] + std::conj(b_[0]); }

    /// Normalization is a checked flag, never a mutation: requires
    /// f(0) == c (exactly, up to kBoundaryTol) and records the constant.
    void declare_center(Complex c);
    const std::optional<Complex>& declared_center() const { return declared_center_; }

    bool is_analytic(double tol = 0.0) const;
    bool is_constant(double tol = 0.0) const;

    bool operator==(const HarmonicSeries& o) const {
        return a_ == o.a_ && b_ == o.b_;
    }

private:
    std::vector<Complex> a_;
    std::vector<Complex> b_;
    std::optional<Complex> declared_center_;
};

/// h(z) + conj(g(z)) by Horner summation of the stored truncation.
Complex evaluate(const HarmonicSeries& f, EvalPoint z);

/// Formal derivatives: df/dz = h'(z), df/dzbar = conj(g'(z)).
Complex wirtinger_dz(const HarmonicSeries& f, EvalPoint z);
Complex wirtinger_dzbar(const HarmonicSeries& f, EvalPoint z);

/// Df = z h' - conj(z g'): coefficientwise a_n -> n a_n, b_n -> -n b_n. Exact.
HarmonicSeries apply_D(const HarmonicSeries& f);
/// DFrak f = z h' + conj(z g'): a_n -> n a_n, b_n -> n b_n. Exact.
HarmonicSeries apply_Dfrak(const HarmonicSeries& f);

enum class Operator { D, Dfrak };

/// Order-n operator. Higher orders follow the radial recurrence
/// X^n f = r d/dr (X^{n-1} f), i.e. the first application is X and every
/// further one is DFrak; hence D^2 f = Df + z^2 h'' - conj(z^2 g'') holds
/// coefficientwise. Rejects order < 1.
HarmonicSeries apply_Dn(const HarmonicSeries& f, int order, Operator op);

/// J_f = |h'|^2 - |g'|^2.
double jacobian(const HarmonicSeries& f, EvalPoint z);
/// omega = g'/h'; throws NearZeroDenominator when |h'(z)| <= eps_div.
Complex dilatation(const HarmonicSeries& f, EvalPoint z, double eps_div = kDivisionEps);

/// conj(f) = g + conj(h): swaps the coefficient roles.
HarmonicSeries conjugate(const HarmonicSeries& f);
/// Re f and Im f as (real-valued) harmonic mappings u + conj(u).
HarmonicSeries real_part(const HarmonicSeries& f);
HarmonicSeries imag_part(const HarmonicSeries& f);

HarmonicSeries add(const HarmonicSeries& f, const HarmonicSeries& g);
HarmonicSeries scale(const HarmonicSeries& f, Complex c);
/// f(rho z): a_n -> rho^n a_n, b_n -> rho^n b_n.
HarmonicSeries radial_scale(const HarmonicSeries& f, double rho);

} // namespace harmsub
