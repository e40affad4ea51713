#include <algorithm>

#include "doctest.h"
#include "maxwelter/errors.hpp"
#include "maxwelter/verify.hpp"

using namespace maxwelter;

TEST_CASE("enumerate") {
  auto two = enumerate({2, 2, 2});
  CHECK(two == std::vector<Position>{Position{0, 1}, Position{0, 2}, Position{1, 2}});
  CHECK(enumerate({3, 3, 3}).size() == 4);
  CHECK(enumerate({5, 5, 16}).size() == 6188);
  CHECK(enumerate({1, 3, 5}).size() == 6 + 15 + 20);

  auto all = enumerate({2, 4, 9});
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

  CHECK_THROWS_AS(enumerate({3, 3, 1}), PreconditionError);
  CHECK_THROWS_AS(enumerate({0, 2, 5}), PreconditionError);
  CHECK_THROWS_AS(enumerate({4, 2, 9}), PreconditionError);
}

TEST_CASE("theorem suites pass on a small space") {
  GrundyOracle oracle;
  SuiteOptions opt;
  opt.jobs = 2;
  for (auto id : {"thm2.1", "thm3.1", "cor3.2", "prop4", "thm5.1", "thm6.2", "thm7.1", "thm7.2",
                  "thm7.4", "welter-mating"}) {
    auto r = run_suite(id, {2, 4, 9}, opt, oracle);
    INFO(id);
    CHECK(r.passed());
    CHECK(r.positions_checked > 0);
    CHECK(r.positions_checked + r.skipped == enumerate({2, 4, 9}).size());
  }
}

TEST_CASE("suites count out-of-hypothesis positions as skipped") {
  GrundyOracle oracle;
  auto r = run_suite("cor3.2", {2, 3, 6}, {}, oracle);
  // Every k = 2 position is skipped, plus k = 3 ones the corollary is silent on.
  CHECK(r.skipped >= enumerate({2, 2, 6}).size());
  auto all = run_suite("thm7.4", {1, 3, 6}, {}, oracle);
  CHECK(all.skipped == 0);
}

TEST_CASE("thm6.1 suite treats the space as prefixes") {
  GrundyOracle oracle;
  SuiteOptions opt;
  opt.top_gap_max = 2;
  opt.shift_horizon = 10;
  auto r = run_suite("thm6.1", {1, 2, 4}, opt, oracle);
  CHECK(r.passed());
  CHECK(r.positions_checked == enumerate({1, 2, 4}).size());
}

TEST_CASE("thm5.2 suite reports the lengthened-prefix counterexamples") {
  GrundyOracle oracle;
  auto r = run_suite("thm5.2", {4, 4, 8}, {}, oracle);
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& c : r.counterexamples) {
    if (c.position == Position{3, 4, 6, 8} && c.actual.find("b=(0,1)") != std::string::npos) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("reports are deterministic across worker counts and seeds are honoured") {
  GrundyOracle a;
  GrundyOracle b;
  SuiteOptions one;
  one.jobs = 1;
  SuiteOptions four;
  four.jobs = 4;
  auto ra = run_suite("thm5.2", {3, 5, 12}, one, a);
  auto rb = run_suite("thm5.2", {3, 5, 12}, four, b);
  CHECK(ra.counterexamples == rb.counterexamples);
  CHECK(ra.positions_checked == rb.positions_checked);
  CHECK(ra.skipped == rb.skipped);
}

TEST_CASE("format_report") {
  GrundyOracle oracle;
  SuiteOptions opt;
  auto r = run_suite("thm2.1", {2, 3, 6}, opt, oracle);
  auto text = format_report(r);
  CHECK(text.rfind("suite=thm2.1 k=2..3 max_square=6 seed=0x5EED", 0) == 0);
  CHECK(text.find("counterexamples=0") != std::string::npos);
  CHECK(text.find("status=pass") != std::string::npos);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("thm9.9", {2, 2, 4}), std::invalid_argument);
  CHECK(is_exploratory_suite("explore-misere-reduce"));
  CHECK_FALSE(is_exploratory_suite("thm2.1"));
}
