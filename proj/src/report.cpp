#include "eislat/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace eislat {

using nlohmann::json;

VerificationRecord make_record(std::string id, std::string description, std::string expected, std::string actual,
                               std::string anchor) {
  VerificationRecord r{std::move(id), std::move(description), std::move(expected), std::move(actual), false,
                       std::move(anchor)};
  r.pass = r.expected == r.actual;
  return r;
}

VerificationRecord note(std::string id, std::string description, std::string actual, std::string anchor) {
  return {std::move(id), std::move(description), "", std::move(actual), true, std::move(anchor)};
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationRecord& c) { return c.pass; });
}

namespace {

json to_json(const Report& r, bool with_timing) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"status", c.pass ? "pass" : "fail"},
                      {"anchor", c.anchor}});
  json j = {{"schema", kReportSchema},
            {"suite", r.suite},
            {"version", r.version},
            {"config",
             {{"enumeration_cap", r.config.enumeration_cap},
              {"closure_cap", r.config.closure_cap},
              {"threads", r.config.threads}}},
            {"checks", checks},
            {"status", r.pass() ? "pass" : "fail"}};
  if (with_timing) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format, bool with_timing) {
  if (format == ReportFormat::Json) return to_json(r, with_timing).dump(2) + "\n";
  std::ostringstream out;
  out << "suite " << r.suite << " (version " << r.version << ")\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description;
    if (c.expected.empty())
      out << " = " << c.actual;
    else if (c.pass)
      out << " = " << c.actual;
    else
      out << ": expected " << c.expected << ", got " << c.actual;
    if (!c.pass && !c.anchor.empty()) out << " [" << c.anchor << "]";
    out << "\n";
  }
  std::size_t failed = static_cast<std::size_t>(
      std::count_if(r.checks.begin(), r.checks.end(), [](const VerificationRecord& c) { return !c.pass; }));
  out << (r.pass() ? "PASS" : "FAIL") << " " << r.checks.size() - failed << "/" << r.checks.size() << " checks";
  if (with_timing) out << " in " << r.wall_time_seconds << " s";
  out << "\n";
  return out.str();
}

Report parse_report(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != kReportSchema) throw std::runtime_error("parse_report: unknown schema");
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.config.enumeration_cap = j.at("config").at("enumeration_cap").get<std::size_t>();
  r.config.closure_cap = j.at("config").at("closure_cap").get<std::size_t>();
  r.config.threads = j.at("config").at("threads").get<unsigned>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("id").get<std::string>(), c.at("description").get<std::string>(),
                        c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                        c.at("status").get<std::string>() == "pass", c.at("anchor").get<std::string>()});
  if (j.contains("wall_time_seconds")) r.wall_time_seconds = j["wall_time_seconds"].get<double>();
  return r;
}

}  // namespace eislat
