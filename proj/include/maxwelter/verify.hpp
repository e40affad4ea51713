#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxwelter/grundy.hpp"
#include "maxwelter/position.hpp"

namespace maxwelter {

/// Every strictly increasing k-subset of {0..max_square}, for k in
/// [k_min, k_max].
struct PositionSpace {
  std::size_t k_min = 1;
  std::size_t k_max = 1;
  Square max_square = 0;

  std::string to_string() const;
};

/// Ascending k, then lexicographic order. Throws PreconditionError when the
/// space is empty (k_min = 0, k_min > k_max, or max_square < k_max - 1).
std::vector<Position> enumerate(const PositionSpace& space);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Worker threads; 0 means one per logical CPU.
  std::size_t jobs = 0;
  /// Per-position cap on checked (i, prefix) pairs in the thm5.2 suite.
  std::size_t prefix_sample_cap = 200;
  /// thm6.1: the space enumerates prefixes; the top coin is placed at
  /// max(prefix) + g for g in 1..top_gap_max.
  Square top_gap_max = 4;
  std::size_t shift_horizon = 50;
};

struct Counterexample {
  Position position;
  std::string expected;
  std::string actual;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct SuiteReport {
  std::string suite_id;
  PositionSpace space;
  std::uint64_t seed = kDefaultSeed;
  std::size_t positions_checked = 0;
  /// Positions outside the suite's hypotheses.
  std::size_t skipped = 0;
  /// Sorted.
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Suite ids accepted by run_suite. The last one is exploratory: it
/// measures whether the normal-play reductions also keep misere values,
/// which nothing claims.
const std::vector<std::string_view>& suite_ids();
bool is_exploratory_suite(std::string_view id);

/// Checks the suite's predicate on every position of the space and collects
/// every counterexample. Throws std::invalid_argument for unknown ids.
SuiteReport run_suite(std::string_view suite_id, const PositionSpace& space,
                      const SuiteOptions& options = {},
                      GrundyOracle& oracle = shared_oracle());

/// Header line `suite=... counterexamples=N ...` followed by one
/// `counterexample ...` line per failure.
std::string format_report(const SuiteReport& report);

}  // namespace maxwelter
