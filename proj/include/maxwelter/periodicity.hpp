#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxwelter/grundy.hpp"
#include "maxwelter/position.hpp"

namespace maxwelter {

/// A (possibly additive) period observed on a finite sequence s_0..s_horizon.
///
/// When verified_at_horizon is set, s_{n+period} = s_n + additive_step for
/// every n in [preperiod_start, horizon - period].
struct PeriodReport {
  std::size_t preperiod_start = 0;
  std::size_t period = 1;
  GrundyValue additive_step = 0;
  std::size_t horizon = 0;
  bool verified_at_horizon = false;
  std::optional<std::size_t> counterexample;
};

/// Full periods that must fit in [n0, horizon] before a period counts as
/// verified.
inline constexpr std::size_t kMinObservedPeriods = 3;

/// Smallest period p for which the sequence tail [n0(p), horizon] satisfies
/// s_{n+p} = s_n + additive_step and spans at least `min_periods` periods,
/// with n0(p) as small as the data allows. If no period meets the evidence
/// threshold, the report carries the smallest period that repeats at least
/// once (or the trivial period `horizon`) and verified_at_horizon = false.
PeriodReport detect_period(std::span<const GrundyValue> sequence, GrundyValue additive_step = 0,
                           std::size_t min_periods = kMinObservedPeriods);

struct AdditiveShift {
  /// Smallest n >= 1 with G(prefix, top + n) = top.
  Square shift = 0;
  /// Indexed by t in G(prefix, top + t): preperiod_start = shift, period 1,
  /// additive_step 1, horizon = shift + the requested horizon.
  PeriodReport report;
};

/// Finds the shift after which moving the top coin right raises the value by
/// exactly one per square, and checks that law for `horizon` further
/// squares. Throws TheoremViolation if no shift n <= top exists.
AdditiveShift find_additive_shift(const Position& prefix, Square top, std::size_t horizon,
                                  GrundyOracle& oracle = shared_oracle());

/// k >= 3, a_k > a_{k-1}+1 and some i <= k-2 with a_i >= k-2 and
/// a_i + 1 = a_{i+1}.
bool translation_hypothesis(const Position& p);

/// Whether shifting every coin right by one keeps the value. Nothing when
/// the hypothesis fails. Requires k >= 3.
std::optional<bool> check_translation_invariance(const Position& p,
                                                 GrundyOracle& oracle = shared_oracle());

/// s_i = G(p translated by i) for 0 <= i <= horizon.
std::vector<GrundyValue> translated_sequence(const Position& p, std::size_t horizon,
                                             GrundyOracle& oracle = shared_oracle(),
                                             std::size_t jobs = 1);

/// k >= 3, a_k > a_{k-1}+1 and two consecutive gaps differ somewhere below
/// the top.
bool unequal_gap_hypothesis(const Position& p);

/// Period of the translated sequence of p. Throws PreconditionError when
/// unequal_gap_hypothesis fails.
PeriodReport scan_translation_period(const Position& p, std::size_t horizon,
                                     GrundyOracle& oracle = shared_oracle(),
                                     std::size_t jobs = 1);

/// (a, a+m, ..., a+km): k+1 coins at spacing m.
Position arithmetic_position(Square a, Square m, std::size_t k);

/// Period of the translated sequence of arithmetic_position(a, m, k).
/// Requires m >= 1 and k >= 1.
PeriodReport scan_arithmetic_progression(Square a, Square m, std::size_t k, std::size_t horizon,
                                         GrundyOracle& oracle = shared_oracle(),
                                         std::size_t jobs = 1);

std::string format_translation_scan(const Position& p, const PeriodReport& r);
std::string format_progression_scan(Square a, Square m, std::size_t k, const PeriodReport& r);
std::string format_additive_shift(const Position& prefix, Square top, std::size_t horizon,
                                  const AdditiveShift& s);

}  // namespace maxwelter
