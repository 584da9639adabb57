#include <doctest.h>

#include "bolkit/suites.hpp"

using namespace bolkit;

TEST_CASE("suite registry") {
  const auto& ids = suite_ids();
  for (const char* id : {"algebra-core", "bol-families", "loops-global", "obstructions", "nonbol", "theorem-main"})
    CHECK(has_suite(id));
  CHECK(ids.back() == "theorem-main");
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}), LookupError);
}

TEST_CASE("fast suites pass") {
  SuiteConfig cfg;
  cfg.samples = 40;
  for (const char* id : {"algebra-core", "obstructions", "nonbol"}) {
    const auto reports = run_suite(id, cfg);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) {
      CAPTURE(r.context);
      CAPTURE(r.check);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("identical seeds give identical report bodies") {
  SuiteConfig a;
  a.seed = 17;
  a.samples = 30;
  const std::string first = to_jsonl(run_suite("nonbol", a));
  CHECK(first == to_jsonl(run_suite("nonbol", a)));
  SuiteConfig b = a;
  b.seed = 18;
  CHECK(first != to_jsonl(run_suite("nonbol", b)));
}

TEST_CASE("tolerance override reaches the reports") {
  SuiteConfig cfg;
  cfg.samples = 10;
  cfg.tol = 1e-3;
  for (const auto& r : verify_target("scheerer", cfg)) CHECK(r.tolerance == 1e-3);
}

TEST_CASE("verify targets") {
  SuiteConfig cfg;
  cfg.samples = 10;
  CHECK(all_pass(verify_target("B1", cfg)));
  CHECK(all_pass(verify_target("m_6.2", cfg)));
  CHECK(all_pass(verify_target("h_sec7_f", cfg)));
  CHECK_FALSE(verify_target("L0", cfg).empty());
  CHECK_THROWS_AS(verify_target("nothing", cfg), LookupError);
}

TEST_CASE("report JSON round trip and text form") {
  VerificationReport r;
  r.context = "ctx";
  r.check = "chk";
  r.samples = 3;
  r.seed = 9;
  r.max_residual = 1.5e-12;
  r.tolerance = 1e-9;
  r.pass = true;
  r.tag = "topic";
  r.detail = "d";
  const auto back = report_from_json(to_json(r));
  CHECK(back.context == r.context);
  CHECK(back.seed == r.seed);
  CHECK(back.max_residual == r.max_residual);
  CHECK(back.pass);
  CHECK(to_json(r).at("paper_section") == "topic");
  CHECK(to_text(r).find("chk") != std::string::npos);
  const std::string lines = to_jsonl({r, r});
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
}

TEST_CASE("random streams are independent of each other") {
  Rng a(1, stream_id("x")), b(1, stream_id("y")), c(1, stream_id("x"));
  const double va = a.uniform(0, 1), vb = b.uniform(0, 1), vc = c.uniform(0, 1);
  CHECK(va == vc);
  CHECK(va != vb);
  CHECK(stream_id("x") != stream_id("y"));
}
