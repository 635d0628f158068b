#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "harmsub/figures.hpp"
#include "harmsub/report.hpp"
#include "harmsub/subordination.hpp"

using namespace harmsub;

namespace {

HarmonicFunction ellipse_fn(double M1 = 0.8, double M2 = 0.4) {
    return affine_ellipse_map(M1, M2);
}

DomainSpec ellipse_dom(double M1 = 0.8, double M2 = 0.4) {
    return DomainSpec{Ellipse{Complex(1.0), M1 + M2, M1 - M2}};
}

} // namespace

TEST_CASE("univalence probe verdicts") {
    CHECK(univalence_probe(ellipse_fn()).passed());

    const HarmonicFunction zbar = HarmonicFunction::from_series(
        HarmonicSeries({Complex(0.0)}, {Complex(0.0), Complex(1.0)}), "conj z");
    const UnivalenceReport r1 = univalence_probe(zbar);
    CHECK(r1.result == UnivalenceReport::Result::jacobian_violation);
    CHECK(r1.witness.has_value());

    const HarmonicFunction z2 = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(0.0), Complex(0.0), Complex(1.0)}),
        "z^2");
    const UnivalenceReport r2 = univalence_probe(z2);
    CHECK(r2.result == UnivalenceReport::Result::collision);
    REQUIRE(r2.colliding_pair.has_value());
    CHECK(std::abs(r2.colliding_pair->first + r2.colliding_pair->second) < 1e-12);
}

TEST_CASE("check_subordination: restriction, escape, constant") {
    const HarmonicFunction q = ellipse_fn();
    const DomainSpec dom = ellipse_dom();

    const HarmonicFunction restricted = HarmonicFunction::from_series(
        radial_scale(*q.series(), 0.5), "q(z/2)");
    CHECK(check_subordination(restricted, q, dom).relation == Relation::strong);

    const HarmonicFunction wide = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.0), Complex(2.4)}), "1+2.4z");
    const SubordinationVerdict none = check_subordination(wide, q, dom);
    CHECK(none.relation == Relation::none);
    REQUIRE(none.witness.has_value());
    // outermost-first scanning: the witness sits near f(0.99) = 3.376
    CHECK(none.witness->real() > 2.2);
    CHECK(std::abs(*none.witness - Complex(3.4)) < 0.1);

    const HarmonicFunction constant = HarmonicFunction::from_series(
        HarmonicSeries({Complex(1.0)}, {Complex(0.0)}), "1");
    CHECK(check_subordination(constant, q, dom).relation == Relation::strong);
}

TEST_CASE("check_subordination: weak when centers differ") {
    const HarmonicFunction q = ellipse_fn();
    const HarmonicFunction shifted = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.1), Complex(0.05)}), "shifted");
    CHECK(check_subordination(shifted, q, ellipse_dom()).relation == Relation::weak);
}

TEST_CASE("check_subordination: hypothesis violation for folding targets") {
    const HarmonicFunction z2 = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(0.0), Complex(0.0), Complex(1.0)}),
        "z^2");
    const HarmonicFunction f = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(0.0), Complex(0.1)}), "f");
    CHECK_THROWS_AS(
        check_subordination(f, z2, DomainSpec{Disk{Complex(0.0), 1.0}}),
        HypothesisViolation);
}

TEST_CASE("strong subordination holds for explicit compositions at any "
          "resolution") {
    // p = q(w(z)) with w(z) = 0.3 z + 0.1 z^2: w(0) = 0, |w| < 1, and
    // Re w' >= 0.1 > 0 on the disk, so w is univalent there.
    const HarmonicFunction q = ellipse_fn();
    const auto w = [](Complex z) { return z * (0.3 + 0.1 * z); };
    const auto p_val = [&](Complex z) { return q.value(w(z)); };
    for (int n : {64, 128, 256}) {
        SubResolution res;
        res.n_angles = n;
        res.n_radii = n / 16;
        const SubordinationVerdict v =
            check_subordination_values(p_val, q, ellipse_dom(), res);
        CHECK(v.relation == Relation::strong);
    }
}

TEST_CASE("jack probe on the documented crossing pair") {
    // p(D) is the disk of radius 1.6 about 1; the ellipse's inscribed disk
    // has radius 0.4, so the first contact happens at r0 = 0.25 against the
    // co-vertex 1 + 0.4i. The exact contact ratio is
    // Dp(z0)/Dq(zeta0) = (M1-M2)/(M1+M2) = 1/3.
    const HarmonicFunction p = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.0), Complex(1.6)}), "1+1.6z");
    const BoundaryMapQ q(ellipse_fn(), {}, 1e-3, ellipse_dom());
    const auto w = jack_probe(p, q);
    REQUIRE(w.has_value());
    CHECK(std::abs(w->r0 - 0.25) < 5e-4);
    CHECK(std::abs(std::abs(w->z0) - 0.25) < 5e-4);
    CHECK(std::abs(w->lhs_ratio - Complex(1.0 / 3.0)) < 1e-3);
    CHECK(std::abs(w->lhs_ratio.imag()) < 1e-3);
    CHECK(std::abs(w->curvature_gap - 2.0 / 3.0) < 5e-3);
    CHECK(std::abs(std::abs(w->zeta0) - 1.0) < 1e-12);
}

TEST_CASE("jack probe: witness stability under doubled resolution") {
    const HarmonicFunction p = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.0), Complex(1.6)}), "1+1.6z");
    const BoundaryMapQ q(ellipse_fn(), {}, 1e-3, ellipse_dom());
    JackResolution coarse;
    JackResolution fine;
    fine.n_theta *= 2;
    fine.n_boundary *= 2;
    fine.r_tol *= 0.5;
    const auto a = jack_probe(p, q, coarse);
    const auto b = jack_probe(p, q, fine);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(std::abs(a->m - b->m) < 1e-3);
    CHECK(std::abs(a->curvature_gap - b->curvature_gap) < 1e-2);
}

TEST_CASE("jack probe: subordinate and equality cases") {
    const BoundaryMapQ q(ellipse_fn(), {}, 1e-3, ellipse_dom());
    const HarmonicFunction inside = HarmonicFunction::from_series(
        radial_scale(*q.map().series(), 0.5), "q(z/2)");
    CHECK_FALSE(jack_probe(inside, q).has_value());

    const HarmonicSeries one_plus_z = HarmonicSeries::analytic(
        {Complex(1.0), Complex(1.0)});
    const BoundaryMapQ q_eq(HarmonicFunction::from_series(one_plus_z, "1+z"));
    const HarmonicFunction p_eq = HarmonicFunction::from_series(one_plus_z, "1+z");
    CHECK_THROWS_AS(jack_probe(p_eq, q_eq), NoCrossing);
}

TEST_CASE("jack probe rejects bad hypotheses") {
    const BoundaryMapQ q(ellipse_fn(), {}, 1e-3, ellipse_dom());
    const HarmonicFunction constant = HarmonicFunction::from_series(
        HarmonicSeries({Complex(1.0)}, {Complex(0.0)}), "1");
    CHECK_THROWS_AS(jack_probe(constant, q), HypothesisViolation);

    const HarmonicFunction off_center = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(2.0), Complex(1.0)}), "2+z");
    CHECK_THROWS_AS(jack_probe(off_center, q), HypothesisViolation);

    const BoundaryMapQ folding(
        HarmonicFunction::from_series(
            HarmonicSeries::analytic(
                {Complex(1.0), Complex(0.0), Complex(1.0)}),
            "1+z^2"),
        {}, 1e-3, DomainSpec{Disk{Complex(1.0), 1.0}});
    const HarmonicFunction p = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.0), Complex(2.0)}), "1+2z");
    CHECK_THROWS_AS(jack_probe(p, folding), HypothesisViolation);
}

TEST_CASE("analytic contact probe: monomials are exact") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Complex> a(static_cast<std::size_t>(n) + 1, Complex(0.0));
        a.back() = Complex(0.7, 0.2);
        const AnalyticContact c =
            analytic_jack_probe(HarmonicSeries::analytic(a), 0.55);
        CHECK(c.m == doctest::Approx(n));
        CHECK(c.curvature == doctest::Approx(n));
    }
}

TEST_CASE("analytic contact probe: frozen second-degree value") {
    // f = z + z^2/2 at r0 = 0.9: positive coefficients put the maximizer at
    // theta = 0, where z f'/f = (1+z)/(1+z/2) = 1.9/1.45.
    const AnalyticContact c = analytic_jack_probe(
        HarmonicSeries::analytic({Complex(0.0), Complex(1.0), Complex(0.5)}), 0.9);
    CHECK(c.m == doctest::Approx(1.9 / 1.45).epsilon(1e-9));
    CHECK(c.curvature == doctest::Approx(1.0 + 0.9 / 1.9).epsilon(1e-9));
    CHECK(c.curvature >= c.m);
    CHECK(c.im_residual < 1e-10);
}

TEST_CASE("analytic contact probe: quartic perturbation") {
    const AnalyticContact c = analytic_jack_probe(
        HarmonicSeries::analytic(
            {Complex(0.0), Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.3)}),
        0.8);
    CHECK(c.m >= 1.0);
    CHECK(c.im_residual < 1e-8);
    CHECK(c.curvature >= c.m - 1e-10);
}

TEST_CASE("analytic contact probe: contact bounds on random vanishing series") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> a{Complex(0.0)};
        for (int n = 1; n <= 8; ++n)
            a.emplace_back(u(rng), u(rng));
        if (std::abs(a[1]) < 0.1)
            a[1] += Complex(0.5, 0.0);
        const AnalyticContact c =
            analytic_jack_probe(HarmonicSeries::analytic(a), 0.9);
        CHECK(c.m >= 1.0 - 1e-6);
        CHECK(c.curvature >= c.m - 1e-4);
        CHECK(c.im_residual < 1e-8);
    }
}

TEST_CASE("verdicts agree with a brute-force replay of the sample grid") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    const HarmonicFunction q = ellipse_fn();
    const DomainSpec dom = ellipse_dom();
    SubResolution res;
    res.n_radii = 6;
    res.n_angles = 32;
    for (int trial = 0; trial < 40; ++trial) {
        // random centered candidates, some escaping, some contained
        const HarmonicSeries f({Complex(1.0), Complex(u(rng), u(rng))},
                               {Complex(0.0), Complex(u(rng), u(rng))});
        const SubordinationVerdict v = check_subordination(
            HarmonicFunction::from_series(f, "f"), q, dom, res,
            /*assume_univalent=*/true);
        bool all_inside = true;
        for (int i = 1; i <= res.n_radii && all_inside; ++i)
            for (int k = 0; k < res.n_angles; ++k) {
                const Complex z =
                    std::polar(res.r_max * i / res.n_radii,
                               2.0 * M_PI * k / res.n_angles);
                if (!dom.contains(evaluate(f, EvalPoint(z)))) {
                    all_inside = false;
                    break;
                }
            }
        if (v.relation == Relation::none) {
            CHECK_FALSE(all_inside);
            CHECK(v.witness.has_value());
            CHECK_FALSE(dom.contains(*v.witness));
        } else {
            CHECK(all_inside);
            CHECK(v.relation == Relation::strong); // centers match here
        }
    }
}

TEST_CASE("probe reports render to the common document format") {
    ReportOptions opt;
    opt.include_timestamp = false;
    const UnivalenceReport ur = univalence_probe(ellipse_fn());
    CHECK(render_report(ur, opt).find("sense_preserving_univalent_likely") !=
          std::string::npos);

    const HarmonicFunction p = HarmonicFunction::from_series(
        HarmonicSeries::analytic({Complex(1.0), Complex(1.6)}), "1+1.6z");
    const BoundaryMapQ q(ellipse_fn(), {}, 1e-3, ellipse_dom());
    const auto w = jack_probe(p, q);
    REQUIRE(w.has_value());
    const std::string doc = render_report(*w, opt);
    CHECK(doc.find("\"kind\": \"jack_witness\"") != std::string::npos);
    CHECK(doc.find("\"schema_version\": 1") != std::string::npos);
    CHECK(render_report(*w, opt) == doc);
}

TEST_CASE("analytic contact probe rejections") {
    CHECK_THROWS_AS(analytic_jack_probe(
                        HarmonicSeries({Complex(0.0), Complex(1.0)},
                                       {Complex(0.0), Complex(0.5)}),
                        0.5),
                    Error);
    CHECK_THROWS_AS(
        analytic_jack_probe(HarmonicSeries::analytic({Complex(1.0)}), 0.5),
        FlatModulus);
    CHECK_THROWS_AS(
        analytic_jack_probe(HarmonicSeries::analytic({Complex(0.0)}), 0.5), Error);
    CHECK_THROWS_AS(analytic_jack_probe(
                        HarmonicSeries::analytic({Complex(0.0), Complex(1.0)}), 1.5),
                    Error);
}
