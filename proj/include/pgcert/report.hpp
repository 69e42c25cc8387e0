#pragma once

// Serialization of certification reports. The JSON schema is documented in
// docs/report-schema.md; keys are emitted in a fixed order so two runs on the
// same input differ only inside "timings_ms".

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pgcert/certify.hpp"

namespace pgcert {

inline constexpr const char* kReportSchema = "pgcert-report/1";

enum class ReportFormat { json, text };

std::string emit_report(const CertReport& r, ReportFormat format);

/// JSON report with the "timings_ms" object removed, for comparisons.
std::string strip_timings(const std::string& json_report);

/// One .pcp file seen by an audit.
struct AuditEntry {
  std::string file;  // name relative to the audited directory
  std::string group_id;
  std::optional<CertReport> report;  // absent when the file failed to load
  std::string error;                 // parse or consistency failure
  bool inconsistent = false;
  std::optional<std::string> expected_route;  // from manifest.tsv, if listed
  bool route_matches() const;
};

struct AuditResult {
  std::vector<AuditEntry> entries;  // sorted by group_id, then file name
  std::vector<std::string> unlisted_manifest_ids;  // manifest rows without a file

  std::size_t count(Outcome o) const;
  std::size_t theorem_violations() const { return count(Outcome::theorem_violation); }
  std::size_t load_failures() const;
  std::size_t route_mismatches() const;
};

/// Reads "<id>\t<ROUTE>[\t...]" rows; '#' lines are comments. Missing file gives no rows.
std::vector<std::pair<std::string, std::string>> read_manifest(const std::filesystem::path& path);

/// Certifies every *.pcp file under `dir` (not recursive) and checks routes
/// against `dir/manifest.tsv` when it exists.
AuditResult audit_directory(const std::filesystem::path& dir, Exec exec = Exec::parallel);

std::string emit_audit(const AuditResult& a, ReportFormat format);

}  // namespace pgcert
