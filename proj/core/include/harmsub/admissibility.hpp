#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "harmsub/boundary_map.hpp"
#include "harmsub/subordination.hpp"

namespace harmsub {

/// psi(r, s, t; z). The affine family alpha*r + beta*s + gamma*t + delta
/// covers every bundled scenario; custom maps carry explicit dependence
/// flags so the scanner can collapse grids it does not need.
class PsiSpec {
public:
    struct Affine {
        Complex alpha, beta, gamma, delta;
    };

    static PsiSpec affine(Complex alpha, Complex beta, Complex gamma, Complex delta);
    static PsiSpec custom(std::function<Complex(Complex, Complex, Complex, Complex)> eval,
                          std::string label, bool depends_on_t = true,
                          bool depends_on_z = true);

    Complex operator()(Complex r, Complex s, Complex t, Complex z) const;

    bool depends_on_t() const { return depends_on_t_; }
    bool depends_on_z() const { return depends_on_z_; }
    const std::optional<Affine>& affine_coeffs() const { return affine_; }
    const std::string& label() const { return label_; }

    /// For affine psi on a series p: alpha p + beta Dp + gamma D^2 p + delta,
    /// itself a harmonic series. Empty for custom psi.
    std::optional<HarmonicSeries> apply_to_series(const HarmonicSeries& p) const;

private:
    PsiSpec() = default;
    std::optional<Affine> affine_;
    std::function<Complex(Complex, Complex, Complex, Complex)> eval_;
    bool depends_on_t_ = true;
    bool depends_on_z_ = true;
    std::string label_;
};

/// Which lower bound carves the t-cone, in s-relative coordinates t = s(x+iy):
///   lemma_form:      x >= m Re(D^2 q/Dq)(zeta)
///   definition_form: x >= m Re(D^2 q/Dq)(zeta) - 1
enum class ConeVariant { lemma_form, definition_form };

double cone_lower_bound(double m, Complex dq, Complex d2q, ConeVariant variant);

struct AdmissibilityScanConfig {
    int n_zeta = 512;
    double m_max = 100.0; // geometric grid from 1 to m_max
    int n_m = 64;
    double t_x_max = 10.0; // cone depth beyond the bound, s-relative
    double t_y_max = 10.0;
    int n_tx = 32;
    int n_ty = 32;
    int n_z_r = 3; // z-slot disk sampling (custom psi only)
    int n_z_theta = 8;
    double z_r_max = 0.9;
    ConeVariant variant = ConeVariant::lemma_form;

    void validate() const {
        if (!(m_max >= 1.0))
            throw Error("scan config: m_max must be >= 1");
        if (n_zeta < 2 || n_m < 2 || n_tx < 2 || n_ty < 2 || n_z_r < 2 ||
            n_z_theta < 2)
            throw Error("scan config: grid counts too small");
    }
};

struct ScanWitness {
    double theta = 0.0;
    Complex zeta{};
    double m = 1.0;
    Complex t{};
    Complex z{};
    Complex psi_value{};
    /// The value sits within kGeomTol of the target boundary; flagged as a
    /// potential violation by the conservative membership collapse.
    bool boundary_contact = false;
};

struct ScanReport {
    enum class Verdict { no_violation_found, violation };
    Verdict verdict = Verdict::no_violation_found;
    std::optional<ScanWitness> witness; // present iff verdict == violation
    long samples_tested = 0;
    long samples_skipped = 0; // |s| below eps_div: the t-cone is undefined
    /// min over samples of |psi - q(0)| - dist(q(0), boundary of Omega):
    /// clearance beyond the largest Omega-inscribed disk centered at the
    /// subordination center. Nonnegative whenever no violation was found.
    double margin = 0.0;
    Complex margin_arg{};                      // psi value attaining the margin
    std::vector<double> per_m_min_center_distance; // min |psi - q(0)| per m index
    std::vector<double> m_grid;
    ConeVariant variant = ConeVariant::lemma_form;
    AdmissibilityScanConfig config;

    bool found_violation() const { return verdict == Verdict::violation; }
};

/// Falsification scan of the admissibility condition "psi(r,s,t;z) stays
/// out of Omega on the boundary-contact set": r = q(zeta), s = m Dq(zeta),
/// t on the constrained cone, zeta over the non-excluded circle, m on a
/// geometric grid from 1. NO_VIOLATION_FOUND is a resolution-stamped
/// verdict, never a proof. Deterministic: with several violations the
/// witness has the lexicographically smallest (zeta, m, t, z) index; the
/// parallel schedule (capped by HARMSUB_THREADS) reduces to the same one.
ScanReport scan_admissibility(const PsiSpec& psi, const BoundaryMapQ& q,
                              const DomainSpec& omega,
                              const AdmissibilityScanConfig& cfg = {});

struct ImplicationCandidate {
    std::string label;
    HarmonicSeries p;
};

struct ImplicationCandidateResult {
    std::string label;
    bool premise_holds = false;
    std::optional<Complex> premise_witness; // psi value outside Omega
    /// Affine psi on a series premise equals the supplied generator series
    /// coefficient-for-coefficient (exact, no tolerance).
    bool premise_equality = false;
    std::optional<SubordinationVerdict> conclusion; // evaluated when premise holds
    bool contradiction = false; // premise true but conclusion none
};

struct ImplicationReport {
    std::vector<ImplicationCandidateResult> candidates;
    bool any_contradiction = false;
};

struct ImplicationConfig {
    SubResolution subordination = {};
    int n_z_r = 12;
    int n_z_theta = 64;
    double z_r_max = 0.9;
    double center_tol = 1e-9;
    /// Exact-equality reference: the series eta with Omega = eta-image.
    std::optional<HarmonicSeries> eta_series;
};

/// For each candidate p: premise = "psi(p, Dp, D^2 p; z) lies in Omega at
/// every z-sample", conclusion = check_subordination(p, q). A candidate
/// with true premise and failed conclusion is flagged as a contradiction
/// (a bug or an inadmissible psi).
ImplicationReport check_implication(const PsiSpec& psi, const BoundaryMapQ& q,
                                    const DomainSpec& omega,
                                    std::span<const ImplicationCandidate> candidates,
                                    const ImplicationConfig& cfg = {});

struct RhoScanEntry {
    double rho = 1.0;
    ScanReport report;
};

struct RhoScanReport {
    std::vector<RhoScanEntry> entries; // one per requested rho, ascending
    ScanReport limit_report;           // the rho = 1 scan, for the margin trend
    bool all_clear = false;
    /// |margin(rho) - margin(1)| strictly decreasing along the rho list.
    bool margins_approach_limit = false;
};

/// Scans against q_rho(z) = q(rho z) for each rho (ascending in (0,1));
/// E(q_rho) is empty, so no exclusion arcs apply. Omega stays fixed.
RhoScanReport rho_limit_scan(const PsiSpec& psi, const BoundaryMapQ& q,
                             const DomainSpec& omega, std::span<const double> rhos,
                             const AdmissibilityScanConfig& cfg = {});

struct EtaFormReport {
    SubordinationVerdict premise;   // psi(p, Dp, D^2p; .) vs eta
    SubordinationVerdict conclusion; // p vs q
};

/// Subordination-form premise: requires psi(1,0,0;0) = 1 (within tol) and
/// eta to pass the univalence probe; checks psi(p,Dp,D^2p;.) against
/// eta's image, then p against q's image.
EtaFormReport check_eta_form(const PsiSpec& psi, const HarmonicSeries& p,
                             const HarmonicFunction& eta, const DomainSpec& eta_image,
                             const BoundaryMapQ& q, const ImplicationConfig& cfg = {});

} // namespace harmsub
