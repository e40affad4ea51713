#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "maxwelter/position.hpp"

namespace maxwelter {

using GrundyValue = std::uint64_t;

enum class Outcome { P, N };

std::string_view to_string(Outcome o);

/// Smallest nonnegative integer not present in `values`. Order and
/// repetitions do not matter.
GrundyValue mex(std::span<const GrundyValue> values);

/// Brute-force Sprague-Grundy evaluator for both rulesets and conventions.
///
/// Values are memoized per (ruleset, convention, position). Positions whose
/// squares all lie below 128 are keyed by a 128-bit occupancy mask and
/// searched with bit operations; everything else falls back to the square
/// sequence. The search runs on an explicit stack, so long move chains do
/// not touch the call stack.
///
/// Thread-safe: concurrent callers share the memo. Two threads may evaluate
/// the same node, but both store the same value.
class GrundyOracle {
 public:
  static constexpr std::size_t kDefaultMemoBudget = 10'000'000;

  explicit GrundyOracle(std::size_t memo_budget = kDefaultMemoBudget);
  ~GrundyOracle();

  GrundyOracle(const GrundyOracle&) = delete;
  GrundyOracle& operator=(const GrundyOracle&) = delete;

  /// Normal play: terminal -> 0. Misere play: terminal -> 1. Otherwise the
  /// mex of the successors under the same convention. Throws
  /// ResourceLimitError when the memo budget would be exceeded.
  GrundyValue grundy(const Position& p, Ruleset r = Ruleset::MaxWelter,
                     Convention c = Convention::Normal);

  Outcome outcome(const Position& p, Ruleset r = Ruleset::MaxWelter,
                  Convention c = Convention::Normal);

  /// Legal moves into value-0 successors, in legal_moves order. Empty for
  /// P-positions. Throws PreconditionError on terminal positions.
  std::vector<Move> optimal_moves(const Position& p, Ruleset r = Ruleset::MaxWelter,
                                  Convention c = Convention::Normal);

  std::size_t memo_size() const noexcept;
  std::size_t memo_budget() const noexcept { return budget_; }
  void clear();

 private:
  struct Memo;
  std::unique_ptr<Memo> memo_;
  std::size_t budget_;
};

/// Process-wide oracle used by the convenience overloads below.
GrundyOracle& shared_oracle();

GrundyValue grundy(const Position& p, Ruleset r = Ruleset::MaxWelter,
                   Convention c = Convention::Normal);
Outcome outcome(const Position& p, Ruleset r = Ruleset::MaxWelter,
                Convention c = Convention::Normal);
std::vector<Move> optimal_moves(const Position& p, Ruleset r = Ruleset::MaxWelter,
                                Convention c = Convention::Normal);

}  // namespace maxwelter
