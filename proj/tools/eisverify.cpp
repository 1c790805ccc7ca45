// eisverify: runs the named verification suites and prints a report.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
// or configuration error.

#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "eislat/codes.hpp"
#include "eislat/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Eisenstein lattice facts"};
  app.set_version_flag("--version", std::string(eislat::kToolVersion));

  std::string suite;
  bool json = false, timing = false, corrupt_golay = false;
  int verbosity = 0;
  eislat::SuiteOptions options;
  app.add_option("suite", suite, "Suite to run")->required()->check(CLI::IsMember(eislat::suite_names()));
  app.add_flag("--json", json, "Write the structured report instead of text");
  app.add_flag("--timing", timing, "Include wall time in the report");
  app.add_option("--enumeration-cap", options.config.enumeration_cap, "Maximum vectors per enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--closure-cap", options.config.closure_cap, "Maximum group order in closures")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", options.config.threads, "Worker threads for the spin scan; 0 means all cores")
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbosity, "Progress on stderr (repeat for more)");
  // Failure-path check: flips one entry of the ternary Golay generator.
  app.add_flag("--corrupt-golay", corrupt_golay)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (options.config.threads == 0) options.config.threads = std::max(1u, std::thread::hardware_concurrency());
  if (corrupt_golay) {
    eislat::FMatrix g = eislat::golay_generator();
    g.m(0, 7) = static_cast<eislat::FElem>((g.m(0, 7) + 1) % 3);
    options.golay = g;
  }
  if (verbosity > 0) options.progress = [](const std::string& msg) { std::cerr << "[eisverify] " << msg << "\n"; };

  eislat::Report report;
  try {
    report = eislat::run_suite(suite, options);
  } catch (const std::invalid_argument& e) {
    std::cerr << "eisverify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "eisverify: suite " << suite << " aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << eislat::emit_report(report, json ? eislat::ReportFormat::Json : eislat::ReportFormat::Text, timing);
  if (verbosity > 0) std::cerr << "[eisverify] done in " << report.wall_time_seconds << " s\n";
  return report.pass() ? 0 : 1;
}
