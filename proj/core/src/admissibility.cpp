#include "harmsub/admissibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace harmsub {

PsiSpec PsiSpec::affine(Complex alpha, Complex beta, Complex gamma, Complex delta) {
    for (Complex c : {alpha, beta, gamma, delta})
        if (!is_finite(c))
            throw Error("PsiSpec: non-finite affine coefficient");
    PsiSpec p;
    p.affine_ = Affine{alpha, beta, gamma, delta};
    p.depends_on_t_ = std::abs(gamma) > 0.0;
    p.depends_on_z_ = false;
    p.label_ = "affine";
    return p;
}

PsiSpec PsiSpec::custom(std::function<Complex(Complex, Complex, Complex, Complex)> eval,
                        std::string label, bool depends_on_t, bool depends_on_z) {
    PsiSpec p;
    p.eval_ = std::move(eval);
    p.depends_on_t_ = depends_on_t;
    p.depends_on_z_ = depends_on_z;
    p.label_ = std::move(label);
    return p;
}

Complex PsiSpec::operator()(Complex r, Complex s, Complex t, Complex z) const {
    if (affine_)
        return affine_->alpha * r + affine_->beta * s + affine_->gamma * t +
               affine_->delta;
    return eval_(r, s, t, z);
}

std::optional<HarmonicSeries> PsiSpec::apply_to_series(const HarmonicSeries& p) const {
    if (!affine_)
        return std::nullopt;
    HarmonicSeries acc = scale(p, affine_->alpha);
    acc = add(acc, scale(apply_D(p), affine_->beta));
    acc = add(acc, scale(apply_Dn(p, 2, Operator::D), affine_->gamma));
    acc = add(acc, HarmonicSeries({affine_->delta}, {Complex(0.0)}));
    return acc;
}

double cone_lower_bound(double m, Complex dq, Complex d2q, ConeVariant variant) {
    const double ratio = (d2q / dq).real();
    return variant == ConeVariant::lemma_form ? m * ratio : m * ratio - 1.0;
}

namespace {

int scan_thread_count(long work_items) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    unsigned cap = std::min(hw, 8u);
    if (const char* env = std::getenv("HARMSUB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            cap = static_cast<unsigned>(std::min<long>(v, 64));
    }
    if (work_items < 64)
        return 1;
    return static_cast<int>(std::min<long>(cap, work_items));
}

std::vector<double> geometric_m_grid(double m_max, int n_m) {
    std::vector<double> grid;
    if (m_max <= 1.0) {
        grid.push_back(1.0);
        return grid;
    }
    grid.reserve(static_cast<std::size_t>(n_m));
    for (int j = 0; j < n_m; ++j)
        grid.push_back(std::pow(m_max, static_cast<double>(j) / (n_m - 1)));
    grid.front() = 1.0; // exact endpoint
    return grid;
}

struct WorkerResult {
    long best_index = -1; // flat lexicographic (zeta, m, t, z) index
    ScanWitness witness;
    long tested = 0;
    long skipped = 0;
    double margin = std::numeric_limits<double>::infinity();
    Complex margin_arg{};
    std::vector<double> per_m_min;
};

} // namespace

ScanReport scan_admissibility(const PsiSpec& psi, const BoundaryMapQ& q,
                              const DomainSpec& omega,
                              const AdmissibilityScanConfig& cfg) {
    cfg.validate();
    const std::vector<BoundarySample> boundary = q.boundary_samples(cfg.n_zeta);
    const Complex center = q.center();
    const double inradius = omega.distance_to_boundary(center);
    const std::vector<double> m_grid = geometric_m_grid(cfg.m_max, cfg.n_m);

    // s-relative t-cone offsets; the exact cone boundary x = bound is always
    // on the grid (first x sample). Collapsed to the vertex when psi ignores t.
    std::vector<double> xs{0.0}, ys{0.0};
    if (psi.depends_on_t()) {
        xs.resize(static_cast<std::size_t>(cfg.n_tx));
        for (int i = 0; i < cfg.n_tx; ++i)
            xs[static_cast<std::size_t>(i)] = cfg.t_x_max * i / (cfg.n_tx - 1);
        ys.resize(static_cast<std::size_t>(cfg.n_ty));
        for (int j = 0; j < cfg.n_ty; ++j)
            ys[static_cast<std::size_t>(j)] =
                -cfg.t_y_max + 2.0 * cfg.t_y_max * j / (cfg.n_ty - 1);
    }
    std::vector<Complex> zs{Complex(0.0)};
    if (psi.depends_on_z()) {
        for (int i = 1; i <= cfg.n_z_r; ++i)
            for (int k = 0; k < cfg.n_z_theta; ++k)
                zs.push_back(std::polar(cfg.z_r_max * i / cfg.n_z_r,
                                        2.0 * M_PI * k / cfg.n_z_theta));
    }

    const long n_m = static_cast<long>(m_grid.size());
    const long n_t = static_cast<long>(xs.size() * ys.size());
    const long n_z = static_cast<long>(zs.size());
    const long per_zeta = n_m * n_t * n_z;

    std::atomic<long> best_so_far(std::numeric_limits<long>::max());

    const auto scan_range = [&](std::size_t zeta_begin, std::size_t zeta_end) {
        WorkerResult res;
        res.per_m_min.assign(m_grid.size(),
                             std::numeric_limits<double>::infinity());
        for (std::size_t i = zeta_begin; i < zeta_end; ++i) {
            const long zeta_base = static_cast<long>(i) * per_zeta;
            if (zeta_base >= best_so_far.load(std::memory_order_relaxed))
                break; // a lexicographically earlier violation already exists
            const BoundarySample& bs = boundary[i];
            if (bs.dq_near_zero) {
                res.skipped += per_zeta;
                continue;
            }
            const Complex r = bs.q;
            for (long j = 0; j < n_m; ++j) {
                const double m = m_grid[static_cast<std::size_t>(j)];
                const Complex s = m * bs.dq;
                if (std::abs(s) <= kDivisionEps) {
                    res.skipped += n_t * n_z;
                    continue;
                }
                const double bound =
                    cone_lower_bound(m, bs.dq, bs.d2q, cfg.variant);
                long t_index = 0;
                for (double x_off : xs) {
                    for (double y : ys) {
                        const Complex t = s * Complex(bound + x_off, y);
                        for (long l = 0; l < n_z; ++l) {
                            const Complex z = zs[static_cast<std::size_t>(l)];
                            const Complex value = psi(r, s, t, z);
                            if (!is_finite(value))
                                throw SingularEvaluation(
                                    "scan_admissibility: psi evaluated non-finite",
                                    z);
                            ++res.tested;
                            const Region region = omega.classify(value);
                            if (region != Region::outside) {
                                res.best_index =
                                    zeta_base + (j * n_t + t_index) * n_z + l;
                                res.witness = ScanWitness{
                                    bs.theta, bs.zeta, m,       t,
                                    z,        value,   region == Region::boundary};
                                long expect = best_so_far.load(
                                    std::memory_order_relaxed);
                                while (res.best_index < expect &&
                                       !best_so_far.compare_exchange_weak(
                                           expect, res.best_index)) {
                                }
                                return res;
                            }
                            const double dist_center = std::abs(value - center);
                            auto& pm = res.per_m_min[static_cast<std::size_t>(j)];
                            pm = std::min(pm, dist_center);
                            const double clearance = dist_center - inradius;
                            if (clearance < res.margin) {
                                res.margin = clearance;
                                res.margin_arg = value;
                            }
                        }
                        ++t_index;
                    }
                }
            }
        }
        return res;
    };

    const int n_threads = scan_thread_count(
        static_cast<long>(boundary.size()) * std::max<long>(per_zeta, 1));
    std::vector<WorkerResult> results;
    if (n_threads <= 1) {
        results.push_back(scan_range(0, boundary.size()));
    } else {
        results.resize(static_cast<std::size_t>(n_threads));
        std::vector<std::exception_ptr> errors(
            static_cast<std::size_t>(n_threads));
        std::vector<std::thread> pool;
        const std::size_t chunk =
            (boundary.size() + static_cast<std::size_t>(n_threads) - 1) /
            static_cast<std::size_t>(n_threads);
        for (int t = 0; t < n_threads; ++t) {
            const std::size_t begin =
                std::min(boundary.size(), static_cast<std::size_t>(t) * chunk);
            const std::size_t end = std::min(boundary.size(), begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                try {
                    results[static_cast<std::size_t>(t)] = scan_range(begin, end);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    ScanReport report;
    report.config = cfg;
    report.variant = cfg.variant;
    report.m_grid = m_grid;
    report.per_m_min_center_distance.assign(
        m_grid.size(), std::numeric_limits<double>::infinity());
    long best = std::numeric_limits<long>::max();
    for (const WorkerResult& r : results) {
        report.samples_tested += r.tested;
        report.samples_skipped += r.skipped;
        if (r.best_index >= 0 && r.best_index < best) {
            best = r.best_index;
            report.witness = r.witness;
        }
        for (std::size_t j = 0; j < m_grid.size(); ++j)
            report.per_m_min_center_distance[j] =
                std::min(report.per_m_min_center_distance[j], r.per_m_min[j]);
    }
    if (report.witness) {
        report.verdict = ScanReport::Verdict::violation;
        report.margin = 0.0;
    } else {
        report.verdict = ScanReport::Verdict::no_violation_found;
        double margin = std::numeric_limits<double>::infinity();
        Complex arg{};
        for (const WorkerResult& r : results)
            if (r.margin < margin) {
                margin = r.margin;
                arg = r.margin_arg;
            }
        report.margin = margin;
        report.margin_arg = arg;
    }
    return report;
}

ImplicationReport check_implication(const PsiSpec& psi, const BoundaryMapQ& q,
                                    const DomainSpec& omega,
                                    std::span<const ImplicationCandidate> candidates,
                                    const ImplicationConfig& cfg) {
    ImplicationReport report;
    const DomainSpec q_image = q.image_domain();

    // z-samples for the premise sweep (z = 0 included).
    std::vector<Complex> zs{Complex(0.0)};
    for (int i = 1; i <= cfg.n_z_r; ++i)
        for (int k = 0; k < cfg.n_z_theta; ++k)
            zs.push_back(std::polar(cfg.z_r_max * i / cfg.n_z_r,
                                    2.0 * M_PI * (k + 0.5) / cfg.n_z_theta));

    for (const ImplicationCandidate& cand : candidates) {
        if (std::abs(cand.p.center() - q.center()) > cfg.center_tol)
            throw HypothesisViolation("check_implication: candidate '" + cand.label +
                                      "' has p(0) != q(0)");
        ImplicationCandidateResult res;
        res.label = cand.label;

        const std::optional<HarmonicSeries> psi_series = psi.apply_to_series(cand.p);
        if (psi_series && cfg.eta_series) {
            const auto pad_equal = [](const HarmonicSeries& u, const HarmonicSeries& v) {
                const int n = std::max(u.degree(), v.degree());
                for (int k = 0; k <= n; ++k) {
                    const Complex ua = k <= u.degree() ? u.a(k) : Complex(0.0);
                    const Complex va = k <= v.degree() ? v.a(k) : Complex(0.0);
                    const Complex ub = k <= u.degree() ? u.b(k) : Complex(0.0);
                    const Complex vb = k <= v.degree() ? v.b(k) : Complex(0.0);
                    if (ua != va || ub != vb)
                        return false;
                }
                return true;
            };
            res.premise_equality = pad_equal(*psi_series, *cfg.eta_series);
        }

        const HarmonicSeries dp = apply_D(cand.p);
        const HarmonicSeries d2p = apply_Dn(cand.p, 2, Operator::D);
        res.premise_holds = true;
        for (const Complex& z : zs) {
            const Complex value =
                psi_series ? evaluate(*psi_series, EvalPoint(z))
                           : psi(evaluate(cand.p, EvalPoint(z)),
                                 evaluate(dp, EvalPoint(z)),
                                 evaluate(d2p, EvalPoint(z)), z);
            if (!omega.contains(value, BoundaryPolicy::as_outside)) {
                res.premise_holds = false;
                res.premise_witness = value;
                break;
            }
        }

        if (res.premise_holds) {
            res.conclusion = check_subordination(
                HarmonicFunction::from_series(cand.p, cand.label), q.map(), q_image,
                cfg.subordination);
            res.contradiction = res.conclusion->relation == Relation::none;
        }
        report.any_contradiction |= res.contradiction;
        report.candidates.push_back(std::move(res));
    }
    return report;
}

RhoScanReport rho_limit_scan(const PsiSpec& psi, const BoundaryMapQ& q,
                             const DomainSpec& omega, std::span<const double> rhos,
                             const AdmissibilityScanConfig& cfg) {
    if (rhos.empty())
        throw Error("rho_limit_scan: need at least one rho");
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (!(rhos[i] > 0.0) || !(rhos[i] < 1.0))
            throw Error("rho_limit_scan: rho values must lie in (0, 1)");
        if (i > 0 && !(rhos[i] > rhos[i - 1]))
            throw Error("rho_limit_scan: rho values must be strictly increasing");
    }

    RhoScanReport out;
    out.limit_report = scan_admissibility(psi, q, omega, cfg);
    out.all_clear = !out.limit_report.found_violation();
    for (double rho : rhos) {
        RhoScanEntry entry;
        entry.rho = rho;
        entry.report = scan_admissibility(psi, q.radial_scale(rho), omega, cfg);
        out.all_clear = out.all_clear && !entry.report.found_violation();
        out.entries.push_back(std::move(entry));
    }
    out.margins_approach_limit = true;
    for (std::size_t i = 1; i < out.entries.size(); ++i) {
        const double prev =
            std::abs(out.entries[i - 1].report.margin - out.limit_report.margin);
        const double cur =
            std::abs(out.entries[i].report.margin - out.limit_report.margin);
        if (!(cur < prev))
            out.margins_approach_limit = false;
    }
    return out;
}

EtaFormReport check_eta_form(const PsiSpec& psi, const HarmonicSeries& p,
                             const HarmonicFunction& eta, const DomainSpec& eta_image,
                             const BoundaryMapQ& q, const ImplicationConfig& cfg) {
    const Complex at_center = psi(Complex(1.0), Complex(0.0), Complex(0.0),
                                  Complex(0.0));
    if (std::abs(at_center - Complex(1.0)) > 1e-9)
        throw NormalizationViolation("check_eta_form: psi(1,0,0;0) != 1");
    if (!univalence_probe(eta).passed())
        throw HypothesisViolation("check_eta_form: eta failed the univalence probe");

    EtaFormReport out;
    const std::optional<HarmonicSeries> psi_series = psi.apply_to_series(p);
    if (psi_series) {
        out.premise = check_subordination(
            HarmonicFunction::from_series(*psi_series, "psi(p)"), eta, eta_image,
            cfg.subordination, /*assume_univalent=*/true);
    } else {
        const HarmonicSeries dp = apply_D(p);
        const HarmonicSeries d2p = apply_Dn(p, 2, Operator::D);
        out.premise = check_subordination_values(
            [&](Complex z) {
                return psi(evaluate(p, EvalPoint(z)), evaluate(dp, EvalPoint(z)),
                           evaluate(d2p, EvalPoint(z)), z);
            },
            eta, eta_image, cfg.subordination, /*assume_univalent=*/true);
    }
    out.conclusion =
        check_subordination(HarmonicFunction::from_series(p, "p"), q.map(),
                            q.image_domain(), cfg.subordination);
    return out;
}

} // namespace harmsub
