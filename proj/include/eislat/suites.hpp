#pragma once

// Named verification suites, shared by the command-line tool and the tests.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eislat/field.hpp"
#include "eislat/report.hpp"

namespace eislat {

struct SuiteOptions {
  ReportConfig config{1'000'000, 200'000, 1};
  // Replaces the built-in ternary Golay generator wherever it is used.
  std::optional<FMatrix> golay;
  // Progress messages; never part of the report.
  std::function<void(const std::string&)> progress;
};

const std::vector<std::string>& suite_names();  // including "all"
// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

std::vector<VerificationRecord> codes_checks(const SuiteOptions& options = {});
std::vector<VerificationRecord> y555_checks(const SuiteOptions& options = {});

}  // namespace eislat
