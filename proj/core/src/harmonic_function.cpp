#include "harmsub/harmonic_function.hpp"

namespace harmsub {

HarmonicFunction HarmonicFunction::from_series(HarmonicSeries s, std::string label) {
    HarmonicFunction f;
    f.series_ = std::move(s);
    f.d_series_ = apply_D(*f.series_);
    f.dfrak_series_ = apply_Dfrak(*f.series_);
    f.d2_series_ = apply_Dfrak(*f.d_series_);
    f.label_ = std::move(label);
    return f;
}

HarmonicFunction HarmonicFunction::from_parts(AnalyticParts parts, std::string label) {
    HarmonicFunction f;
    f.parts_ = std::make_shared<const AnalyticParts>(std::move(parts));
    f.label_ = std::move(label);
    return f;
}

Complex HarmonicFunction::value(Complex z) const {
    if (series_)
        return evaluate(*series_, EvalPoint(z));
    const Complex w = scale_ * z;
    return parts_->h(w) + std::conj(parts_->g(w));
}

Complex HarmonicFunction::d(Complex z) const {
    if (series_)
        return evaluate(*d_series_, EvalPoint(z));
    const Complex w = scale_ * z;
    return w * parts_->dh(w) - std::conj(w * parts_->dg(w));
}

Complex HarmonicFunction::dfrak(Complex z) const {
    if (series_)
        return evaluate(*dfrak_series_, EvalPoint(z));
    const Complex w = scale_ * z;
    return w * parts_->dh(w) + std::conj(w * parts_->dg(w));
}

Complex HarmonicFunction::d2(Complex z) const {
    if (series_)
        return evaluate(*d2_series_, EvalPoint(z));
    const Complex w = scale_ * z;
    const Complex w2 = w * w;
    return w * parts_->dh(w) + w2 * parts_->d2h(w) -
           std::conj(w * parts_->dg(w) + w2 * parts_->d2g(w));
}

double HarmonicFunction::jacobian(Complex z) const {
    if (series_)
        return harmsub::jacobian(*series_, EvalPoint(z));
    const Complex w = scale_ * z;
    return std::norm(parts_->dh(w)) - std::norm(parts_->dg(w));
}

HarmonicFunction HarmonicFunction::radial_scale(double rho) const {
    HarmonicFunction f;
    f.label_ = label_ + "@rho";
    if (series_)
        return from_series(harmsub::radial_scale(*series_, rho), f.label_);
    f.parts_ = parts_;
    f.scale_ = scale_ * rho;
    return f;
}

HarmonicFunction half_plane_map() {
    AnalyticParts p;
    p.h = [](Complex z) { return (1.0 + z) / (1.0 - z); };
    p.dh = [](Complex z) { const Complex d = 1.0 - z; return 2.0 / (d * d); };
    p.d2h = [](Complex z) { const Complex d = 1.0 - z; return 4.0 / (d * d * d); };
    p.g = [](Complex z) { return z / (1.0 - z); };
    p.dg = [](Complex z) { const Complex d = 1.0 - z; return 1.0 / (d * d); };
    p.d2g = [](Complex z) { const Complex d = 1.0 - z; return 2.0 / (d * d * d); };
    return HarmonicFunction::from_parts(std::move(p), "halfplane");
}

HarmonicFunction affine_ellipse_map(double M1, double M2) {
    return HarmonicFunction::from_series(
        HarmonicSeries({Complex(1.0), Complex(M1)}, {Complex(0.0), Complex(M2)}),
        "ellipse");
}

} // namespace harmsub
