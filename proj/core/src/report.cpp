#include "harmsub/report.hpp"

#include <chrono>
#include <ctime>
#include <json.hpp>

namespace harmsub {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string finish(json doc, const std::string& kind, const ReportOptions& opt) {
    doc["schema_version"] = kReportSchemaVersion;
    doc["kind"] = kind;
    if (opt.include_timestamp)
        doc["timestamp"] = iso_timestamp();
    return doc.dump(opt.indent) + "\n";
}

const char* variant_name(ConeVariant v) {
    return v == ConeVariant::lemma_form ? "lemma" : "definition";
}

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::strong: return "strong";
    case Relation::weak: return "weak";
    case Relation::none: return "none";
    }
    return "none";
}

json scan_json(const ScanReport& r) {
    json doc;
    doc["verdict"] = r.found_violation() ? "VIOLATION" : "NO_VIOLATION_FOUND";
    doc["samples_tested"] = r.samples_tested;
    doc["samples_skipped"] = r.samples_skipped;
    doc["variant"] = variant_name(r.variant);
    doc["config"] = {{"n_zeta", r.config.n_zeta},
                     {"m_max", r.config.m_max},
                     {"n_m", r.config.n_m},
                     {"t_grid", {r.config.t_x_max, r.config.t_y_max,
                                 r.config.n_tx, r.config.n_ty}},
                     {"z_grid", {r.config.n_z_r, r.config.n_z_theta,
                                 r.config.z_r_max}}};
    if (r.witness) {
        doc["witness"] = {{"theta", r.witness->theta},
                          {"zeta", complex_json(r.witness->zeta)},
                          {"m", r.witness->m},
                          {"t", complex_json(r.witness->t)},
                          {"z", complex_json(r.witness->z)},
                          {"psi_value", complex_json(r.witness->psi_value)},
                          {"boundary_contact", r.witness->boundary_contact}};
    } else {
        doc["witness"] = nullptr;
        doc["margin"] = r.margin;
        doc["margin_arg"] = complex_json(r.margin_arg);
    }
    return doc;
}

json verdict_json(const SubordinationVerdict& v) {
    json doc;
    doc["relation"] = relation_name(v.relation);
    doc["witness"] = v.witness ? complex_json(*v.witness) : json(nullptr);
    doc["resolution"] = {{"n_radii", v.resolution.n_radii},
                         {"n_angles", v.resolution.n_angles},
                         {"r_max", v.resolution.r_max}};
    return doc;
}

} // namespace

std::string render_report(const ScanReport& r, const ReportOptions& opt) {
    return finish(scan_json(r), "admissibility_scan", opt);
}

std::string render_report(const IdentityReport& r, const ReportOptions& opt) {
    json doc;
    doc["verdict"] = r.pass ? "PASS" : "FAIL";
    doc["what"] = r.what;
    doc["max_residual"] = r.max_residual;
    doc["witness_point"] = complex_json(r.witness_point);
    doc["witness_detail"] = r.witness_detail;
    doc["config"] = {{"samples_used", r.samples_used},
                     {"samples_skipped", r.samples_skipped},
                     {"tol", r.tol}};
    return finish(std::move(doc), "identity_check", opt);
}

std::string render_report(const SubordinationVerdict& v, const ReportOptions& opt) {
    return finish(verdict_json(v), "subordination", opt);
}

std::string render_report(const UnivalenceReport& r, const ReportOptions& opt) {
    json doc;
    switch (r.result) {
    case UnivalenceReport::Result::likely_univalent:
        doc["verdict"] = "sense_preserving_univalent_likely";
        break;
    case UnivalenceReport::Result::jacobian_violation:
        doc["verdict"] = "jacobian_violation";
        doc["witness"] = complex_json(*r.witness);
        break;
    case UnivalenceReport::Result::collision:
        doc["verdict"] = "collision";
        doc["witness_pair"] = {complex_json(r.colliding_pair->first),
                               complex_json(r.colliding_pair->second)};
        break;
    }
    return finish(std::move(doc), "univalence_probe", opt);
}

std::string render_report(const JackWitness& w, const ReportOptions& opt) {
    json doc;
    doc["r0"] = w.r0;
    doc["z0"] = complex_json(w.z0);
    doc["zeta0"] = complex_json(w.zeta0);
    doc["m"] = w.m;
    doc["lhs_ratio"] = complex_json(w.lhs_ratio);
    doc["im_ratio"] = w.lhs_ratio.imag();
    doc["curvature_gap"] = w.curvature_gap;
    return finish(std::move(doc), "jack_witness", opt);
}

std::string render_report(const ImplicationReport& r, const ReportOptions& opt) {
    json doc;
    doc["any_contradiction"] = r.any_contradiction;
    json arr = json::array();
    for (const auto& c : r.candidates) {
        json e;
        e["label"] = c.label;
        e["premise_holds"] = c.premise_holds;
        e["premise_equality"] = c.premise_equality;
        e["premise_witness"] =
            c.premise_witness ? complex_json(*c.premise_witness) : json(nullptr);
        e["conclusion"] = c.conclusion ? verdict_json(*c.conclusion) : json(nullptr);
        e["contradiction"] = c.contradiction;
        arr.push_back(std::move(e));
    }
    doc["candidates"] = std::move(arr);
    return finish(std::move(doc), "implication", opt);
}

std::string render_report(const RhoScanReport& r, const ReportOptions& opt) {
    json doc;
    doc["all_clear"] = r.all_clear;
    doc["margins_approach_limit"] = r.margins_approach_limit;
    doc["limit"] = scan_json(r.limit_report);
    json arr = json::array();
    for (const auto& e : r.entries)
        arr.push_back({{"rho", e.rho}, {"report", scan_json(e.report)}});
    doc["entries"] = std::move(arr);
    return finish(std::move(doc), "rho_limit_scan", opt);
}

std::string render_report(const ExampleReport& r, const ReportOptions& opt) {
    json doc;
    doc["id"] = r.id;
    doc["verdict"] = r.pass ? "PASS" : "FAIL";
    doc["scan_margin"] = r.scan_margin;
    json arr = json::array();
    for (const auto& c : r.checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = std::move(arr);
    return finish(std::move(doc), "example", opt);
}

std::string render_no_witness(const std::string& kind, const ReportOptions& opt) {
    json doc;
    doc["verdict"] = "no_witness";
    return finish(std::move(doc), kind, opt);
}

} // namespace harmsub
