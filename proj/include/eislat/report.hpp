#pragma once

// Verification records and suite reports, with a text form (one check per
// line) and a JSON form that round-trips.

#include <cstddef>
#include <string>
#include <vector>

namespace eislat {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct VerificationRecord {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string anchor;  // the statement being checked, quoted briefly

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

// pass iff expected == actual.
VerificationRecord make_record(std::string id, std::string description, std::string expected, std::string actual,
                               std::string anchor = "");
// Informational: always passes; expected is left empty.
VerificationRecord note(std::string id, std::string description, std::string actual, std::string anchor = "");

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

struct ReportConfig {
  std::size_t enumeration_cap = 0;
  std::size_t closure_cap = 0;
  unsigned threads = 1;

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct Report {
  std::string suite;
  std::string version = kToolVersion;
  ReportConfig config;
  std::vector<VerificationRecord> checks;
  double wall_time_seconds = 0;

  bool pass() const;
  void add(VerificationRecord r) { checks.push_back(std::move(r)); }
  void add(const std::vector<VerificationRecord>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { Text, Json };

// Timing is written only when with_timing is set, so two runs of one suite
// give byte-identical output by default.
std::string emit_report(const Report& r, ReportFormat format, bool with_timing = false);
Report parse_report(const std::string& json);

}  // namespace eislat
