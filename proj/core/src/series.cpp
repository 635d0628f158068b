#include "harmsub/series.hpp"

#include <algorithm>
#include <cmath>

namespace harmsub {

namespace {

void check_finite(const std::vector<Complex>& c, const char* which) {
    for (const Complex& v : c)
        if (!is_finite(v))
            throw Error(std::string("HarmonicSeries: non-finite ") + which +
                        " coefficient");
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// Derivative sum c_n n z^{n-1} by Horner on the shifted coefficients.
Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (std::size_t n = c.size(); n-- > 1;)
        acc = acc * z + c[n] * static_cast<double>(n);
    return acc;
}

} // namespace

HarmonicSeries::HarmonicSeries(std::vector<Complex> a, std::vector<Complex> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || b_.empty())
        throw Error("HarmonicSeries: empty coefficient array");
    check_finite(a_, "analytic");
    check_finite(b_, "co-analytic");
    const std::size_t n = std::max(a_.size(), b_.size());
    a_.resize(n, Complex(0.0));
    b_.resize(n, Complex(0.0));
}

HarmonicSeries HarmonicSeries::analytic(std::vector<Complex> a) {
    std::vector<Complex> b(a.empty() ? 1 : a.size(), Complex(0.0));
    return HarmonicSeries(std::move(a), std::move(b));
}

void HarmonicSeries::declare_center(Complex c) {
    if (std::abs(center() - c) > kBoundaryTol)
        throw NormalizationViolation("HarmonicSeries: declared center mismatch");
    declared_center_ = c;
}

bool HarmonicSeries::is_analytic(double tol) const {
    return std::all_of(b_.begin(), b_.end(),
                       [tol](Complex c) { return std::abs(c) <= tol; });
}

bool HarmonicSeries::is_constant(double tol) const {
    for (std::size_t n = 1; n < a_.size(); ++n)
        if (std::abs(a_[n]) > tol || std::abs(b_[n]) > tol)
            return false;
    return true;
}

Complex evaluate(const HarmonicSeries& f, EvalPoint z) {
    return horner(f.analytic_coeffs(), z.value()) +
           std::conj(horner(f.coanalytic_coeffs(), z.value()));
}

Complex wirtinger_dz(const HarmonicSeries& f, EvalPoint z) {
    return horner_derivative(f.analytic_coeffs(), z.value());
}

Complex wirtinger_dzbar(const HarmonicSeries& f, EvalPoint z) {
    return std::conj(horner_derivative(f.coanalytic_coeffs(), z.value()));
}

namespace {

// x + 0.0 flushes the negative zeros the sign flip would otherwise leave
// in vanished coefficients.
Complex clean_zero(Complex v) {
    return Complex(v.real() + 0.0, v.imag() + 0.0);
}

HarmonicSeries first_order(const HarmonicSeries& f, double coanalytic_sign) {
    std::vector<Complex> a(f.analytic_coeffs());
    std::vector<Complex> b(f.coanalytic_coeffs());
    for (std::size_t n = 0; n < a.size(); ++n) {
        a[n] = clean_zero(a[n] * static_cast<double>(n));
        b[n] = clean_zero(b[n] * (coanalytic_sign * static_cast<double>(n)));
    }
    return HarmonicSeries(std::move(a), std::move(b));
}

} // namespace

HarmonicSeries apply_D(const HarmonicSeries& f) { return first_order(f, -1.0); }

HarmonicSeries apply_Dfrak(const HarmonicSeries& f) { return first_order(f, +1.0); }

HarmonicSeries apply_Dn(const HarmonicSeries& f, int order, Operator op) {
    if (order < 1)
        throw Error("apply_Dn: order must be >= 1");
    HarmonicSeries out = (op == Operator::D) ? apply_D(f) : apply_Dfrak(f);
    for (int k = 1; k < order; ++k)
        out = apply_Dfrak(out);
    return out;
}

double jacobian(const HarmonicSeries& f, EvalPoint z) {
    return std::norm(wirtinger_dz(f, z)) - std::norm(wirtinger_dzbar(f, z));
}

Complex dilatation(const HarmonicSeries& f, EvalPoint z, double eps_div) {
    const Complex hp = wirtinger_dz(f, z);
    if (std::abs(hp) <= eps_div)
        throw NearZeroDenominator("dilatation: |h'(z)| at or below eps_div",
                                  z.value());
    return horner_derivative(f.coanalytic_coeffs(), z.value()) / hp;
}

HarmonicSeries conjugate(const HarmonicSeries& f) {
    return HarmonicSeries(f.coanalytic_coeffs(), f.analytic_coeffs());
}

HarmonicSeries real_part(const HarmonicSeries& f) {
    std::vector<Complex> u(f.analytic_coeffs().size());
    for (std::size_t n = 0; n < u.size(); ++n)
        u[n] = 0.5 * (f.a(static_cast<int>(n)) + f.b(static_cast<int>(n)));
    return HarmonicSeries(u, u);
}

HarmonicSeries imag_part(const HarmonicSeries& f) {
    std::vector<Complex> v(f.analytic_coeffs().size());
    const Complex half_over_i(0.0, -0.5);
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = half_over_i *
               (f.a(static_cast<int>(n)) - f.b(static_cast<int>(n)));
    return HarmonicSeries(v, v);
}

HarmonicSeries add(const HarmonicSeries& f, const HarmonicSeries& g) {
    const std::size_t n = std::max(f.analytic_coeffs().size(),
                                   g.analytic_coeffs().size());
    std::vector<Complex> a(n, Complex(0.0)), b(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        if (k < f.analytic_coeffs().size()) {
            a[k] += f.analytic_coeffs()[k];
            b[k] += f.coanalytic_coeffs()[k];
        }
        if (k < g.analytic_coeffs().size()) {
            a[k] += g.analytic_coeffs()[k];
            b[k] += g.coanalytic_coeffs()[k];
        }
    }
    return HarmonicSeries(std::move(a), std::move(b));
}

HarmonicSeries scale(const HarmonicSeries& f, Complex c) {
    std::vector<Complex> a(f.analytic_coeffs());
    std::vector<Complex> b(f.coanalytic_coeffs());
    // c*(A + conj(B)) = c*A + conj(conj(c)*B)
    for (Complex& v : a) v *= c;
    for (Complex& v : b) v *= std::conj(c);
    return HarmonicSeries(std::move(a), std::move(b));
}

HarmonicSeries radial_scale(const HarmonicSeries& f, double rho) {
    std::vector<Complex> a(f.analytic_coeffs());
    std::vector<Complex> b(f.coanalytic_coeffs());
    double p = 1.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        a[n] *= p;
        b[n] *= p;
        p *= rho;
    }
    return HarmonicSeries(std::move(a), std::move(b));
}

} // namespace harmsub
