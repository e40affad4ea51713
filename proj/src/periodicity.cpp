#include "maxwelter/periodicity.hpp"

#include <string>

#include "maxwelter/errors.hpp"
#include "parallel.hpp"

namespace maxwelter {

namespace {

Position with_top(const Position& prefix, Square top) {
  std::vector<Square> squares(prefix.squares().begin(), prefix.squares().end());
  squares.push_back(top);
  return Position(std::move(squares));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

PeriodReport detect_period(std::span<const GrundyValue> seq, GrundyValue step,
                           std::size_t min_periods) {
  PeriodReport out;
  out.additive_step = step;
  if (seq.empty()) return out;
  const std::size_t horizon = seq.size() - 1;
  out.horizon = horizon;

  // Smallest n0 such that the law holds on [n0, horizon - p].
  auto tail_start = [&](std::size_t p) {
    std::size_t n = horizon - p + 1;
    while (n > 0 && seq[n - 1 + p] == seq[n - 1] + step) --n;
    return n;
  };

  std::optional<PeriodReport> repeating;
  for (std::size_t p = 1; p <= horizon; ++p) {
    const std::size_t n0 = tail_start(p);
    const std::size_t span = horizon - n0 + 1;
    if (span >= min_periods * p) {
      out.period = p;
      out.preperiod_start = n0;
      out.verified_at_horizon = true;
      return out;
    }
    if (!repeating && span >= 2 * p) {
      repeating = out;
      repeating->period = p;
      repeating->preperiod_start = n0;
    }
  }
  if (repeating) return *repeating;
  out.period = std::max<std::size_t>(horizon, 1);
  out.preperiod_start = horizon == 0 ? 0 : tail_start(out.period);
  return out;
}

AdditiveShift find_additive_shift(const Position& prefix, Square top, std::size_t horizon,
                                  GrundyOracle& oracle) {
  if (prefix.max() >= top) {
    throw PreconditionError("top coin " + std::to_string(top) + " must lie above prefix " +
                            prefix.to_string());
  }
  AdditiveShift out;
  for (Square n = 1; n <= top; ++n) {
    if (oracle.grundy(with_top(prefix, top + n)) == top) {
      out.shift = n;
      break;
    }
  }
  if (out.shift == 0) {
    throw TheoremViolation("no shift n <= " + std::to_string(top) + " gives value " +
                           std::to_string(top) + " for prefix " + prefix.to_string());
  }
  auto& r = out.report;
  r.preperiod_start = out.shift;
  r.period = 1;
  r.additive_step = 1;
  r.horizon = out.shift + horizon;
  r.verified_at_horizon = true;
  for (std::size_t i = 0; i <= horizon; ++i) {
    if (oracle.grundy(with_top(prefix, top + out.shift + i)) != top + i) {
      r.verified_at_horizon = false;
      r.counterexample = out.shift + i;
      break;
    }
  }
  return out;
}

bool translation_hypothesis(const Position& p) {
  const std::size_t k = p.size();
  if (k < 3 || p.max() <= p[k - 2] + 1) return false;
  for (std::size_t i = 1; i <= k - 2; ++i) {
    const Square a = p[i - 1];
    if (a >= k - 2 && a + 1 == p[i]) return true;
  }
  return false;
}

std::optional<bool> check_translation_invariance(const Position& p, GrundyOracle& oracle) {
  if (p.size() < 3) throw PreconditionError("translation invariance needs at least 3 coins");
  if (!translation_hypothesis(p)) return std::nullopt;
  return oracle.grundy(p.translated(1)) == oracle.grundy(p);
}

std::vector<GrundyValue> translated_sequence(const Position& p, std::size_t horizon,
                                             GrundyOracle& oracle, std::size_t jobs) {
  std::vector<GrundyValue> out(horizon + 1);
  detail::parallel_for(out.size(), jobs, [&](std::size_t i) {
    out[i] = oracle.grundy(p.translated(i));
  });
  return out;
}

bool unequal_gap_hypothesis(const Position& p) {
  const std::size_t k = p.size();
  if (k < 3 || p.max() <= p[k - 2] + 1) return false;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    if (p[i + 1] - p[i] != p[i + 2] - p[i + 1]) return true;
  }
  return false;
}

PeriodReport scan_translation_period(const Position& p, std::size_t horizon,
                                     GrundyOracle& oracle, std::size_t jobs) {
  if (!unequal_gap_hypothesis(p)) {
    throw PreconditionError("translation scan of " + p.to_string() +
                            " needs k >= 3, a_k > a_{k-1}+1 and two unequal consecutive gaps");
  }
  auto seq = translated_sequence(p, horizon, oracle, jobs);
  return detect_period(seq);
}

Position arithmetic_position(Square a, Square m, std::size_t k) {
  std::vector<Square> squares;
  for (std::size_t i = 0; i <= k; ++i) squares.push_back(a + i * m);
  return Position(std::move(squares));
}

PeriodReport scan_arithmetic_progression(Square a, Square m, std::size_t k, std::size_t horizon,
                                         GrundyOracle& oracle, std::size_t jobs) {
  if (m < 1) throw PreconditionError("progression spacing m must be at least 1");
  if (k < 1) throw PreconditionError("progression needs k >= 1 (two or more coins)");
  auto seq = translated_sequence(arithmetic_position(a, m, k), horizon, oracle, jobs);
  return detect_period(seq);
}

std::string format_translation_scan(const Position& p, const PeriodReport& r) {
  return "kind=conj6.1 squares=" + p.to_string() + " horizon=" + std::to_string(r.horizon) +
         " n0=" + std::to_string(r.preperiod_start) + " period=" + std::to_string(r.period) +
         " verified=" + bool_text(r.verified_at_horizon);
}

std::string format_progression_scan(Square a, Square m, std::size_t k, const PeriodReport& r) {
  return "kind=conj6.2 a=" + std::to_string(a) + " m=" + std::to_string(m) +
         " k=" + std::to_string(k) + " horizon=" + std::to_string(r.horizon) +
         " n0=" + std::to_string(r.preperiod_start) + " period=" + std::to_string(r.period) +
         " verified=" + bool_text(r.verified_at_horizon);
}

std::string format_additive_shift(const Position& prefix, Square top, std::size_t horizon,
                                  const AdditiveShift& s) {
  std::string out = "kind=thm6.1 prefix=" + prefix.to_string() + " a_k=" + std::to_string(top) +
                    " n=" + std::to_string(s.shift) + " horizon=" + std::to_string(horizon) +
                    " verified=" + bool_text(s.report.verified_at_horizon);
  if (s.report.counterexample) out += " counterexample=" + std::to_string(*s.report.counterexample);
  return out;
}

}  // namespace maxwelter
