#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "harmsub/admissibility.hpp"
#include "harmsub/figures.hpp"
#include "harmsub/report.hpp"

using namespace harmsub;

namespace {

BoundaryMapQ ellipse_bq(double M1 = 0.8, double M2 = 0.4) {
    return BoundaryMapQ(affine_ellipse_map(M1, M2), {}, 1e-3,
                        DomainSpec{Ellipse{Complex(1.0), M1 + M2, M1 - M2}});
}

AdmissibilityScanConfig small_cfg() {
    AdmissibilityScanConfig cfg;
    cfg.n_zeta = 64;
    cfg.n_m = 16;
    cfg.n_tx = 8;
    cfg.n_ty = 8;
    return cfg;
}

} // namespace

TEST_CASE("psi evaluation and series application") {
    const PsiSpec rs = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    CHECK(rs(Complex(1.0), Complex(2.0), Complex(99.0), Complex(0.0)) ==
          Complex(3.0));
    CHECK_FALSE(rs.depends_on_t());
    CHECK_FALSE(rs.depends_on_z());

    const HarmonicSeries q({Complex(1.0), Complex(0.8)}, {Complex(0.0), Complex(0.4)});
    const auto series = rs.apply_to_series(q);
    REQUIRE(series.has_value());
    CHECK(series->a(0) == Complex(1.0));
    CHECK(series->a(1) == Complex(1.6));
    CHECK(series->b(1) == Complex(0.0));

    const PsiSpec cust = PsiSpec::custom(
        [](Complex r, Complex, Complex, Complex z) { return r + z; }, "r+z",
        false, true);
    CHECK_FALSE(cust.apply_to_series(q).has_value());
    CHECK(cust.depends_on_z());
}

TEST_CASE("cone lower bound: the two variants differ by exactly one") {
    const Complex dq(0.8, -0.4), d2q(0.5, 0.7);
    for (double m : {1.0, 2.0, 17.0}) {
        const double lemma = cone_lower_bound(m, dq, d2q, ConeVariant::lemma_form);
        const double defn = cone_lower_bound(m, dq, d2q, ConeVariant::definition_form);
        CHECK(lemma - defn == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(lemma == doctest::Approx(m * (d2q / dq).real()).epsilon(1e-15));
    }
}

TEST_CASE("scan: the r+s bound against the ellipse") {
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    AdmissibilityScanConfig cfg;
    cfg.n_zeta = 128;
    cfg.n_m = 32;
    const ScanReport r = scan_admissibility(psi, ellipse_bq(),
                                            DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}},
                                            cfg);
    CHECK_FALSE(r.found_violation());
    CHECK(r.samples_tested == 128 * 32);
    CHECK(r.samples_skipped == 0);
    // clearance beyond the inscribed disk: exactly M1 + M2 at m = 1
    CHECK(r.margin == doctest::Approx(1.2).epsilon(1e-9));

    // per-m minimum of |psi - 1| is (m+1) M1 - (m-1) M2, tight where the
    // two rotating terms anti-align; the m = 1 entry is 2 M1.
    REQUIRE(r.per_m_min_center_distance.size() == r.m_grid.size());
    for (std::size_t j = 0; j < r.m_grid.size(); ++j) {
        const double m = r.m_grid[j];
        const double predicted = (m + 1.0) * 0.8 - (m - 1.0) * 0.4;
        CHECK(r.per_m_min_center_distance[j] ==
              doctest::Approx(predicted).epsilon(1e-6));
        CHECK(r.per_m_min_center_distance[j] >= 1.2 - 1e-9);
    }
    CHECK(r.m_grid.front() == 1.0);
    CHECK(r.per_m_min_center_distance.front() ==
          doctest::Approx(1.6).epsilon(1e-9));
}

TEST_CASE("scan: violation witness is deterministic and lexicographically "
          "first") {
    // psi pinned to the center lands inside Omega at every sample, so the
    // first tested tuple must be reported.
    const PsiSpec psi = PsiSpec::affine(0.0, 0.0, 0.0, Complex(1.0));
    const ScanReport r = scan_admissibility(psi, ellipse_bq(),
                                            DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}},
                                            small_cfg());
    REQUIRE(r.found_violation());
    CHECK(r.witness->theta == 0.0);
    CHECK(r.witness->m == 1.0);
    CHECK(r.witness->psi_value == Complex(1.0));
    CHECK_FALSE(r.witness->boundary_contact);
}

TEST_CASE("scan: identical verdicts with and without worker threads") {
    const PsiSpec psi = PsiSpec::custom(
        [](Complex r, Complex s, Complex, Complex) {
            // violation pocket away from the first samples
            return (std::arg(r - 1.0) > 2.0 && s.real() < 0.0) ? Complex(1.0)
                                                               : Complex(9.0);
        },
        "pocket", false, false);
    AdmissibilityScanConfig cfg = small_cfg();
    cfg.n_zeta = 256;

    setenv("HARMSUB_THREADS", "1", 1);
    const ScanReport serial = scan_admissibility(
        psi, ellipse_bq(), DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}}, cfg);
    setenv("HARMSUB_THREADS", "7", 1);
    const ScanReport parallel = scan_admissibility(
        psi, ellipse_bq(), DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}}, cfg);
    unsetenv("HARMSUB_THREADS");

    REQUIRE(serial.found_violation());
    REQUIRE(parallel.found_violation());
    CHECK(serial.witness->theta == parallel.witness->theta);
    CHECK(serial.witness->m == parallel.witness->m);
    CHECK(serial.witness->psi_value == parallel.witness->psi_value);
}

TEST_CASE("scan: sharp boundary contact is flagged, not hidden") {
    // Against Omega = disk(1, 2 M1) the m = 1 samples of r+s sit exactly on
    // the target circle.
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    const ScanReport r = scan_admissibility(
        psi, ellipse_bq(), DomainSpec{Disk{Complex(1.0), 1.6}}, small_cfg());
    REQUIRE(r.found_violation());
    CHECK(r.witness->boundary_contact);
    CHECK(std::abs(std::abs(r.witness->psi_value - Complex(1.0)) - 1.6) < 1e-12);
}

TEST_CASE("scan: t-cone respects the configured variant and skips zero s") {
    // gamma != 0 engages the t grid; count bookkeeping must stay exact.
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 1.0, 0.0);
    AdmissibilityScanConfig cfg = small_cfg();
    cfg.variant = ConeVariant::definition_form;
    const ScanReport r = scan_admissibility(psi, ellipse_bq(),
                                            DomainSpec{Disk{Complex(1.0), 0.05}}, cfg);
    CHECK(r.variant == ConeVariant::definition_form);
    CHECK_FALSE(r.found_violation());
    CHECK(r.samples_tested ==
          static_cast<long>(cfg.n_zeta) * cfg.n_m * cfg.n_tx * cfg.n_ty);
}

TEST_CASE("scan: samples with vanishing Dq are skipped and counted") {
    // q = z + conj(z^2)/2 is sense-preserving inside (J = 1 - |z|^2) and
    // Dq(zeta) = zeta - conj(zeta^2) vanishes exactly at the cube roots of
    // unity; a 48-angle grid hits all three.
    const BoundaryMapQ q(HarmonicFunction::from_series(
        HarmonicSeries({Complex(0.0), Complex(1.0)},
                       {Complex(0.0), Complex(0.0), Complex(0.5)}),
        "z+conj(z^2)/2"));
    AdmissibilityScanConfig cfg = small_cfg();
    cfg.n_zeta = 48;
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    const ScanReport r = scan_admissibility(psi, q,
                                            DomainSpec{Disk{Complex(10.0), 0.1}},
                                            cfg);
    CHECK(r.samples_skipped == 3L * cfg.n_m);
    CHECK(r.samples_tested == (48L - 3L) * cfg.n_m);
    CHECK_FALSE(r.found_violation());
}

TEST_CASE("degenerate boundary: a constant map flags every sample") {
    const BoundaryMapQ q(HarmonicFunction::from_series(
        HarmonicSeries({Complex(1.0)}, {Complex(0.0)}), "const"));
    CHECK_THROWS_AS(q.boundary_samples(32), DegenerateBoundary);
}

TEST_CASE("scan config validation") {
    AdmissibilityScanConfig bad;
    bad.m_max = 0.5;
    CHECK_THROWS_AS(scan_admissibility(PsiSpec::affine(1, 1, 0, 0), ellipse_bq(),
                                       DomainSpec{Disk{Complex(1.0), 1.0}}, bad),
                    Error);
}

TEST_CASE("check_implication: premise equality and control rejection") {
    const HarmonicSeries q({Complex(1.0), Complex(0.8)}, {Complex(0.0), Complex(0.4)});
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    ImplicationConfig cfg;
    cfg.eta_series = HarmonicSeries::analytic({Complex(1.0), Complex(1.6)});

    std::vector<ImplicationCandidate> cands;
    cands.push_back({"q", q});
    cands.push_back({"wide", HarmonicSeries::analytic({Complex(1.0), Complex(1.3)})});
    cands.push_back({"constant", HarmonicSeries({Complex(1.0)}, {Complex(0.0)})});

    const ImplicationReport r = check_implication(
        psi, ellipse_bq(), DomainSpec{Disk{Complex(1.0), 1.6}}, cands, cfg);
    CHECK_FALSE(r.any_contradiction);

    CHECK(r.candidates[0].premise_holds);
    CHECK(r.candidates[0].premise_equality);
    REQUIRE(r.candidates[0].conclusion.has_value());
    CHECK(r.candidates[0].conclusion->relation == Relation::strong);

    // |1 + 2.6 z - 1| reaches 2.34 > 1.6 on the premise grid
    CHECK_FALSE(r.candidates[1].premise_holds);
    CHECK(r.candidates[1].premise_witness.has_value());

    // psi(1, 0, 0; z) = 1 sits inside Omega; constants subordinate trivially
    CHECK(r.candidates[2].premise_holds);
    CHECK(r.candidates[2].conclusion->relation == Relation::strong);
}

TEST_CASE("check_implication rejects center mismatches") {
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    std::vector<ImplicationCandidate> cands;
    cands.push_back({"bad", HarmonicSeries::analytic({Complex(2.0), Complex(0.1)})});
    CHECK_THROWS_AS(check_implication(psi, ellipse_bq(),
                                      DomainSpec{Disk{Complex(1.0), 1.6}}, cands, {}),
                    HypothesisViolation);
}

TEST_CASE("rho limit scan: margins approach the limit margin") {
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    AdmissibilityScanConfig cfg;
    cfg.n_zeta = 128;
    cfg.n_m = 16;
    const std::vector<double> rhos{0.9, 0.99, 0.999};
    const RhoScanReport r = rho_limit_scan(psi, ellipse_bq(),
                                           DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}},
                                           rhos, cfg);
    CHECK(r.all_clear);
    CHECK(r.margins_approach_limit);
    REQUIRE(r.entries.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        // clearance margin scales as 1.6 rho - 0.4
        CHECK(r.entries[i].report.margin ==
              doctest::Approx(1.6 * rhos[i] - 0.4).epsilon(1e-6));
        CHECK(r.entries[i].report.samples_skipped == 0);
        // scaled maps are regular on the closed disk: every angle sampled
        CHECK(r.entries[i].report.samples_tested ==
              static_cast<long>(cfg.n_zeta) * cfg.n_m);
    }
}

TEST_CASE("rho limit scan: the half-plane map needs no exclusions once scaled") {
    const BoundaryMapQ hp = builtin_map("halfplane");
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    AdmissibilityScanConfig cfg;
    cfg.n_zeta = 64;
    cfg.n_m = 8;
    const std::vector<double> rhos{0.5};
    const RhoScanReport r = rho_limit_scan(psi, hp, DomainSpec{HalfPlane{-0.5}},
                                           rhos, cfg);
    REQUIRE(r.entries.size() == 1);
    // q(rho z) is regular on the closed disk, so the formerly excluded
    // theta = 0 node is scanned; there the pulled-in boundary value
    // q(0.5) + m Dq(0.5) = 4 + 2m lands inside the half plane, a genuine
    // counterexample to this psi being admissible for q_rho.
    REQUIRE(r.entries[0].report.found_violation());
    CHECK(r.entries[0].report.witness->theta == 0.0);
    CHECK(r.entries[0].report.witness->m == 1.0);
    // the unscaled run keeps its exclusion arc and stays clear
    CHECK_FALSE(r.limit_report.found_violation());
    CHECK(r.limit_report.samples_tested <
          static_cast<long>(cfg.n_zeta) * cfg.n_m);
}

TEST_CASE("rho limit scan input validation") {
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    const std::vector<double> bad{0.9, 0.5};
    CHECK_THROWS_AS(rho_limit_scan(psi, ellipse_bq(),
                                   DomainSpec{Disk{Complex(1.0), 1.0}}, bad, {}),
                    Error);
}

TEST_CASE("check_eta_form: identity psi and normalization guard") {
    const BoundaryMapQ q = ellipse_bq();
    const HarmonicSeries p = radial_scale(*q.map().series(), 0.5);
    const DomainSpec dom{Ellipse{Complex(1.0), 1.2, 0.4}};

    const EtaFormReport r = check_eta_form(PsiSpec::affine(1.0, 0.0, 0.0, 0.0), p,
                                           q.map(), dom, q);
    CHECK(r.premise.relation == Relation::strong);
    CHECK(r.conclusion.relation == Relation::strong);

    CHECK_THROWS_AS(check_eta_form(PsiSpec::affine(1.0, 0.0, 0.0, Complex(1.0)), p,
                                   q.map(), dom, q),
                    NormalizationViolation);
}

TEST_CASE("check_eta_form matches check_implication on the r+s setup") {
    const BoundaryMapQ q = ellipse_bq();
    const DomainSpec dom{Ellipse{Complex(1.0), 1.2, 0.4}};
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    const double rho = 0.9 * 0.4 / 1.6;
    const HarmonicSeries p = radial_scale(*q.map().series(), rho);

    const EtaFormReport ef = check_eta_form(psi, p, q.map(), dom, q);
    std::vector<ImplicationCandidate> cands;
    cands.push_back({"p", p});
    const ImplicationReport imp = check_implication(psi, q, dom, cands, {});

    CHECK((ef.premise.relation != Relation::none) ==
          imp.candidates[0].premise_holds);
    CHECK(ef.conclusion.relation == Relation::strong);
    CHECK(imp.candidates[0].conclusion->relation == Relation::strong);
}

TEST_CASE("reports serialize deterministically without timestamps") {
    const PsiSpec psi = PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    AdmissibilityScanConfig cfg = small_cfg();
    const ScanReport a = scan_admissibility(
        psi, ellipse_bq(), DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}}, cfg);
    const ScanReport b = scan_admissibility(
        psi, ellipse_bq(), DomainSpec{Ellipse{Complex(1.0), 1.2, 0.4}}, cfg);
    ReportOptions opt;
    opt.include_timestamp = false;
    CHECK(render_report(a, opt) == render_report(b, opt));
}
