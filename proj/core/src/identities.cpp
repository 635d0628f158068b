#include "harmsub/identities.hpp"

#include <cmath>

namespace harmsub {

namespace {

constexpr Complex kI(0.0, 1.0);

struct ResidualTracker {
    IdentityReport report;

    explicit ResidualTracker(std::string what, double tol) {
        report.what = std::move(what);
        report.tol = tol;
    }

    void update(double residual, Complex at, const char* detail) {
        if (residual > report.max_residual) {
            report.max_residual = residual;
            report.witness_point = at;
            report.witness_detail = detail;
        }
    }

    IdentityReport finish(int used, int skipped) {
        report.samples_used = used;
        report.samples_skipped = skipped;
        report.pass = report.max_residual < report.tol;
        return report;
    }
};

Complex polar_pt(double r, double theta) {
    return r >= 0.0 ? std::polar(r, theta) : std::polar(-r, theta + M_PI);
}

Complex probe(const PointwiseMap& f, Complex z) {
    const Complex v = f.eval(z);
    if (!is_finite(v))
        throw SingularEvaluation("identity check: singular evaluation of " + f.label, z);
    return v;
}

// Central theta-difference of a real-valued functional of f along the circle.
double fd_theta(const std::function<double(Complex)>& g, Complex z, double h) {
    const double r = std::abs(z);
    const double t = std::arg(z);
    return (g(std::polar(r, t + h)) - g(std::polar(r, t - h))) / (2.0 * h);
}

double fd_r(const std::function<double(Complex)>& g, Complex z, double h) {
    const double r = std::abs(z);
    const double t = std::arg(z);
    if (r + h <= 1.0 + kBoundaryTol)
        return (g(polar_pt(r + h, t)) - g(polar_pt(r - h, t))) / (2.0 * h);
    return (3.0 * g(polar_pt(r, t)) - 4.0 * g(polar_pt(r - h, t)) +
            g(polar_pt(r - 2.0 * h, t))) /
           (2.0 * h);
}

// Branch-safe angular derivative of arg f: compares angles via the quotient.
double fd_theta_arg(const PointwiseMap& f, Complex z, double h) {
    const double r = std::abs(z);
    const double t = std::arg(z);
    const Complex fp = probe(f, std::polar(r, t + h));
    const Complex fm = probe(f, std::polar(r, t - h));
    return std::arg(fp / fm) / (2.0 * h);
}

double fd_r_arg(const PointwiseMap& f, Complex z, double h) {
    const double r = std::abs(z);
    const double t = std::arg(z);
    const Complex fp = probe(f, polar_pt(r + h, t));
    const Complex fm = probe(f, polar_pt(r - h, t));
    return std::arg(fp / fm) / (2.0 * h);
}

} // namespace

std::vector<EvalPoint> polar_grid(std::span<const double> radii, int n_angles,
                                  bool half_step_offset) {
    if (n_angles < 1)
        throw Error("polar_grid: need at least one angle");
    std::vector<EvalPoint> pts;
    pts.reserve(radii.size() * static_cast<std::size_t>(n_angles));
    const double phase = half_step_offset ? 0.5 : 0.0;
    for (double r : radii)
        for (int k = 0; k < n_angles; ++k)
            pts.push_back(EvalPoint::polar(
                r, 2.0 * M_PI * (static_cast<double>(k) + phase) / n_angles));
    return pts;
}

std::vector<EvalPoint> default_grid() {
    std::vector<double> radii;
    for (int i = 1; i <= 9; ++i)
        radii.push_back(0.1 * i);
    return polar_grid(radii, 64);
}

IdentityReport verify_product_rule(const PointwiseMap& phi, const PointwiseMap& psi,
                                   std::span<const EvalPoint> samples,
                                   const FDConfig& cfg, bool include_quotient) {
    cfg.validate();
    ResidualTracker out("product/quotient rule", cfg.tol_report);

    const PointwiseMap prod{
        [&phi, &psi](Complex z) { return phi.eval(z) * psi.eval(z); },
        phi.label + "*" + psi.label};
    const PointwiseMap quot{
        [&phi, &psi](Complex z) { return phi.eval(z) / psi.eval(z); },
        phi.label + "/" + psi.label};

    int used = 0;
    for (const EvalPoint& z : samples) {
        const Complex zc = z.value();
        const Complex pv = probe(phi, zc);
        const Complex qv = probe(psi, zc);
        const Complex dphi = fd_D(phi, z, cfg);
        const Complex dpsi = fd_D(psi, z, cfg);
        const Complex fphi = fd_Dfrak(phi, z, cfg);
        const Complex fpsi = fd_Dfrak(psi, z, cfg);

        out.update(std::abs(fd_D(prod, z, cfg) - (pv * dpsi + qv * dphi)), zc,
                   "D product");
        out.update(std::abs(fd_Dfrak(prod, z, cfg) - (pv * fpsi + qv * fphi)), zc,
                   "DFrak product");
        if (include_quotient) {
            if (std::abs(qv) <= kDivisionEps)
                throw SingularEvaluation(
                    "quotient rule: divisor vanishes at a sample", zc);
            const Complex q2 = qv * qv;
            out.update(std::abs(fd_D(quot, z, cfg) - (qv * dphi - pv * dpsi) / q2),
                       zc, "D quotient");
            out.update(std::abs(fd_Dfrak(quot, z, cfg) - (qv * fphi - pv * fpsi) / q2),
                       zc, "DFrak quotient");
        }
        ++used;
    }
    return out.finish(used, 0);
}

IdentityReport verify_polar_identities(const HarmonicFunction& f,
                                       std::span<const EvalPoint> samples,
                                       const FDConfig& cfg, double eps_div) {
    cfg.validate();
    ResidualTracker out("polar identities", cfg.tol_report);
    const PointwiseMap fp = as_pointwise(f);
    const auto modulus = [&fp](Complex z) { return std::abs(probe(fp, z)); };

    int used = 0;
    for (const EvalPoint& z : samples) {
        const Complex zc = z.value();
        const double r = std::abs(zc);
        if (r == 0.0)
            continue; // both sides vanish; the polar stencil needs r > 0
        const Complex fv = probe(fp, zc);
        if (std::abs(fv) <= eps_div)
            throw NearZeroDenominator("polar identities: |f| below eps_div", zc);
        const Complex df_over_f = f.d(zc) / fv;
        const Complex dfrak_over_f = f.dfrak(zc) / fv;
        const double h = cfg.step_h;

        out.update(std::abs(fd_theta(modulus, zc, h) -
                            (-std::abs(fv) * df_over_f.imag())),
                   zc, "d|f|/dtheta");
        out.update(std::abs(fd_r(modulus, zc, h) -
                            std::abs(fv) / r * dfrak_over_f.real()),
                   zc, "d|f|/dr");
        out.update(std::abs(fd_theta_arg(fp, zc, h) - df_over_f.real()), zc,
                   "d(arg f)/dtheta");
        out.update(std::abs(fd_r_arg(fp, zc, h) - dfrak_over_f.imag() / r), zc,
                   "d(arg f)/dr");
        ++used;
    }
    return out.finish(used, static_cast<int>(samples.size()) - used);
}

IdentityReport verify_conj_re_im_identities(const HarmonicSeries& f,
                                            std::span<const EvalPoint> samples,
                                            const FDConfig& cfg, double eps_div) {
    cfg.validate();
    ResidualTracker out("conj/Re/Im/|f|/arg identities", cfg.tol_report);

    const HarmonicSeries df = apply_D(f);
    const HarmonicSeries dfrak_f = apply_Dfrak(f);
    const HarmonicSeries d_conj = apply_D(conjugate(f));
    const HarmonicSeries dfrak_conj = apply_Dfrak(conjugate(f));
    const HarmonicSeries d_re = apply_D(real_part(f));
    const HarmonicSeries dfrak_re = apply_Dfrak(real_part(f));
    const HarmonicSeries d_im = apply_D(imag_part(f));
    const HarmonicSeries dfrak_im = apply_Dfrak(imag_part(f));

    const PointwiseMap fp = as_pointwise(f);
    const auto modulus = [&fp](Complex z) { return std::abs(probe(fp, z)); };

    int used = 0;
    int skipped = 0;
    for (const EvalPoint& z : samples) {
        const Complex zc = z.value();
        const Complex dfv = evaluate(df, z);
        const Complex dfrakv = evaluate(dfrak_f, z);

        // (a) conjugation
        out.update(std::abs(evaluate(d_conj, z) + std::conj(dfv)), zc, "D conj");
        out.update(std::abs(evaluate(dfrak_conj, z) - std::conj(dfrakv)), zc,
                   "DFrak conj");
        // (b) real part
        out.update(std::abs(evaluate(d_re, z) - kI * dfv.imag()), zc, "D Re");
        out.update(std::abs(evaluate(dfrak_re, z) - dfrakv.real()), zc, "DFrak Re");
        // (c) imaginary part
        out.update(std::abs(evaluate(d_im, z) + kI * dfv.real()), zc, "D Im");
        out.update(std::abs(evaluate(dfrak_im, z) - dfrakv.imag()), zc, "DFrak Im");

        // (d),(e) need f(z) != 0 and a positive radius for the polar stencils.
        const Complex fv = evaluate(f, z);
        const double r = std::abs(zc);
        if (std::abs(fv) <= eps_div)
            throw NearZeroDenominator("conj/Re/Im identities: |f| below eps_div", zc);
        if (r == 0.0) {
            ++skipped;
            continue;
        }
        const Complex df_over_f = dfv / fv;
        const Complex dfrak_over_f = dfrakv / fv;
        const double h = cfg.step_h;

        out.update(std::abs(fd_theta(modulus, zc, h) / kI -
                            kI * std::abs(fv) * df_over_f.imag()),
                   zc, "D |f|");
        out.update(std::abs(r * fd_r(modulus, zc, h) -
                            std::abs(fv) * dfrak_over_f.real()),
                   zc, "DFrak |f|");
        out.update(std::abs(fd_theta_arg(fp, zc, h) / kI -
                            (-kI) * df_over_f.real()),
                   zc, "D arg");
        out.update(std::abs(r * fd_r_arg(fp, zc, h) - dfrak_over_f.imag()), zc,
                   "DFrak arg");
        ++used;
    }
    return out.finish(used, skipped);
}

IdentityReport verify_composition_rule(const std::function<Complex(Complex)>& phi,
                                       const std::function<Complex(Complex)>& dphi,
                                       const HarmonicFunction& psi,
                                       std::span<const EvalPoint> samples,
                                       const FDConfig& cfg) {
    cfg.validate();
    ResidualTracker out("composition rule", cfg.tol_report);
    const PointwiseMap composed{
        [&phi, &psi](Complex z) { return phi(psi.value(z)); },
        "phi(" + psi.label() + ")"};

    int used = 0;
    for (const EvalPoint& z : samples) {
        const Complex zc = z.value();
        const Complex chain = dphi(psi.value(zc));
        out.update(std::abs(fd_D(composed, z, cfg) - chain * psi.d(zc)), zc,
                   "D composition");
        out.update(std::abs(fd_Dfrak(composed, z, cfg) - chain * psi.dfrak(zc)),
                   zc, "DFrak composition");
        ++used;
    }
    return out.finish(used, 0);
}

} // namespace harmsub
