#pragma once

#include <iosfwd>
#include <string>

#include "harmsub/admissibility.hpp"
#include "harmsub/examples.hpp"
#include "harmsub/identities.hpp"

namespace harmsub {

/// Canonical report document: every renderer wraps its payload as
///   {"schema_version": 1, "kind": ..., ...payload..., "timestamp"?: ...}
/// With timestamps suppressed, identical inputs produce byte-identical text.
inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
    bool include_timestamp = true;
    int indent = 2; // < 0 for compact
};

std::string render_report(const ScanReport& r, const ReportOptions& opt = {});
std::string render_report(const IdentityReport& r, const ReportOptions& opt = {});
std::string render_report(const SubordinationVerdict& v, const ReportOptions& opt = {});
std::string render_report(const UnivalenceReport& r, const ReportOptions& opt = {});
std::string render_report(const JackWitness& w, const ReportOptions& opt = {});
std::string render_report(const ImplicationReport& r, const ReportOptions& opt = {});
std::string render_report(const RhoScanReport& r, const ReportOptions& opt = {});
std::string render_report(const ExampleReport& r, const ReportOptions& opt = {});

/// "no witness" document for probes that found nothing.
std::string render_no_witness(const std::string& kind, const ReportOptions& opt = {});

} // namespace harmsub
