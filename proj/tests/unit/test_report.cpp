#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "eislat/codes.hpp"
#include "eislat/suites.hpp"

using namespace eislat;

TEST_CASE("structured round trip") {
  Report r;
  r.suite = "demo";
  r.config = {10, 20, 3};
  r.add(make_record("a.one", "first", "1", "1", "an anchor"));
  r.add(make_record("a.two", "second", "2", "3", "another anchor"));
  r.add(note("a.three", "informational", "x"));
  CHECK(!r.pass());
  Report back = parse_report(emit_report(r, ReportFormat::Json));
  CHECK(back == r);
  r.wall_time_seconds = 1.5;
  CHECK(parse_report(emit_report(r, ReportFormat::Json, true)) == r);
}

TEST_CASE("empty suite passes") {
  Report r;
  r.suite = "empty";
  CHECK(r.pass());
  std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("PASS 0/0") != std::string::npos);
  CHECK(parse_report(emit_report(r, ReportFormat::Json)).checks.empty());
}

TEST_CASE("text output names failing anchors") {
  Report r;
  r.add(make_record("x", "d", "1", "2", "quoted claim"));
  r.add(make_record("y", "d", "1", "1", "passing claim"));
  std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("FAIL x") != std::string::npos);
  CHECK(text.find("[quoted claim]") != std::string::npos);
  CHECK(text.find("passing claim") == std::string::npos);
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  Report codes = run_suite("codes");
  CHECK(codes.pass());
  CHECK(emit_report(codes, ReportFormat::Json) == emit_report(run_suite("codes"), ReportFormat::Json));

  SuiteOptions bad;
  FMatrix g = golay_generator();
  g.m(2, 9) = static_cast<FElem>((g.m(2, 9) + 2) % 3);
  bad.golay = g;
  Report broken = run_suite("codes", bad);
  CHECK(!broken.pass());
  bool named = false;
  for (const auto& c : broken.checks) named = named || (c.id == "codes.golay.defining" && !c.pass);
  CHECK(named);
}

TEST_CASE("command-line exit codes") {
  auto run = [](const std::string& args) {
    int status = std::system((std::string(EISVERIFY_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(run("codes") == 0);
  CHECK(run("codes --json") == 0);
  CHECK(run("codes --corrupt-golay") == 1);
  CHECK(run("all --corrupt-golay") == 1);
  CHECK(run("bogus") == 2);
  CHECK(run("") == 2);
  CHECK(run("codes --threads nope") == 2);
  CHECK(run("--help") == 0);
}
