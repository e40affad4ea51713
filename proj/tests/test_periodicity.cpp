#include "doctest.h"
#include "maxwelter/errors.hpp"
#include "maxwelter/periodicity.hpp"
#include "naive_oracle.hpp"

using namespace maxwelter;

TEST_CASE("detect_period on hand-made sequences") {
  std::vector<GrundyValue> alternating;
  for (int i = 0; i <= 20; ++i) alternating.push_back(i % 2);
  auto r = detect_period(alternating);
  CHECK(r.period == 2);
  CHECK(r.preperiod_start == 0);
  CHECK(r.horizon == 20);
  CHECK(r.verified_at_horizon);

  std::vector<GrundyValue> with_transient{9, 7, 5, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3};
  r = detect_period(with_transient);
  CHECK(r.period == 3);
  CHECK(r.preperiod_start == 3);
  CHECK(r.verified_at_horizon);

  std::vector<GrundyValue> additive{4, 4, 5, 6, 7, 8, 9, 10};
  r = detect_period(additive, 1);
  CHECK(r.period == 1);
  CHECK(r.preperiod_start == 1);
  CHECK(r.additive_step == 1);
}

TEST_CASE("short horizons are never verified") {
  // Period 4 seen for under three full periods.
  std::vector<GrundyValue> seq{0, 1, 2, 3, 0, 1, 2, 3, 0, 1};
  auto r = detect_period(seq);
  CHECK_FALSE(r.verified_at_horizon);
  CHECK(r.period == 4);
  CHECK(r.preperiod_start == 0);

  std::vector<GrundyValue> distinct{0, 1, 2, 3, 4};
  r = detect_period(distinct);
  CHECK_FALSE(r.verified_at_horizon);
}

TEST_CASE("reported periods reproduce the sequence") {
  std::vector<std::vector<GrundyValue>> cases = {
      {1, 2, 2, 3, 4, 2, 2, 3, 3, 2, 2, 3, 3, 2, 2, 3, 3},
      {5, 5, 5, 5, 5},
      {0, 3, 1, 4, 1, 5, 9, 2, 6},
      {7}};
  for (const auto& seq : cases) {
    auto r = detect_period(seq);
    for (std::size_t n = r.preperiod_start; n + r.period <= r.horizon; ++n) {
      CHECK(seq[n + r.period] == seq[n]);
    }
  }
}

TEST_CASE("find_additive_shift examples") {
  GrundyOracle oracle;
  auto s = find_additive_shift(Position{0}, 1, 50, oracle);
  CHECK(s.shift == 1);
  CHECK(s.report.verified_at_horizon);

  s = find_additive_shift(Position{1}, 2, 50, oracle);
  CHECK(s.shift == 1);
  CHECK(oracle.grundy(Position{1, 3}) == 2);
  CHECK(s.report.verified_at_horizon);

  s = find_additive_shift(Position{0, 1}, 2, 50, oracle);
  CHECK(s.shift == 2);
  CHECK(s.shift <= 2);
  CHECK(s.report.verified_at_horizon);
  CHECK(s.report.period == 1);
  CHECK(s.report.additive_step == 1);

  CHECK_THROWS_AS(find_additive_shift(Position{0, 5}, 3, 10, oracle), PreconditionError);
}

TEST_CASE("translation invariance") {
  GrundyOracle oracle;
  CHECK(check_translation_invariance(Position{2, 3, 6}, oracle) == true);
  CHECK_FALSE(check_translation_invariance(Position{1, 2, 3}, oracle).has_value());
  CHECK_FALSE(check_translation_invariance(Position{0, 2, 5}, oracle).has_value());
  CHECK_THROWS_AS(check_translation_invariance(Position{2, 3}, oracle), PreconditionError);
  naive::Oracle ref;
  CHECK(ref.value({2, 3, 6}) == ref.value({3, 4, 7}));
}

TEST_CASE("translation scans") {
  GrundyOracle oracle;
  // Frozen from the naive reference sequence.
  auto r = scan_translation_period(Position{0, 2, 5}, 100, oracle);
  CHECK(r.period == 1);
  CHECK(r.preperiod_start == 14);
  CHECK(r.verified_at_horizon);

  r = scan_translation_period(Position{0, 1, 4}, 100, oracle);
  CHECK(r.period == 1);
  CHECK(r.preperiod_start == 1);

  CHECK_THROWS_AS(scan_translation_period(Position{0, 2, 4, 6}, 10, oracle), PreconditionError);
  CHECK_THROWS_AS(scan_translation_period(Position{0, 2, 3}, 10, oracle), PreconditionError);
}

TEST_CASE("arithmetic progression scans") {
  GrundyOracle oracle;
  auto r = scan_arithmetic_progression(0, 1, 1, 100, oracle);
  CHECK(r.period == 2);
  CHECK(r.preperiod_start == 0);
  CHECK(r.verified_at_horizon);
  CHECK(format_progression_scan(0, 1, 1, r) ==
        "kind=conj6.2 a=0 m=1 k=1 horizon=100 n0=0 period=2 verified=true");

  r = scan_arithmetic_progression(0, 2, 1, 100, oracle);
  CHECK(r.period == 4);
  CHECK(r.preperiod_start == 5);

  r = scan_arithmetic_progression(1, 1, 2, 100, oracle, 2);
  CHECK(r.period == 2);

  CHECK(arithmetic_position(1, 3, 2) == Position{1, 4, 7});
  CHECK_THROWS_AS(scan_arithmetic_progression(0, 0, 1, 10, oracle), PreconditionError);
  CHECK_THROWS_AS(scan_arithmetic_progression(0, 1, 0, 10, oracle), PreconditionError);
}

TEST_CASE("translated sequences do not depend on worker count") {
  GrundyOracle a;
  GrundyOracle b;
  CHECK(translated_sequence(Position{0, 3, 7}, 40, a, 1) ==
        translated_sequence(Position{0, 3, 7}, 40, b, 4));
}
