#include "maxwelter/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "maxwelter/closed_form.hpp"
#include "maxwelter/errors.hpp"
#include "maxwelter/periodicity.hpp"
#include "maxwelter/reduce.hpp"
#include "maxwelter/welter_fn.hpp"
#include "parallel.hpp"

namespace maxwelter {

namespace {

enum class Verdict { Checked, Skipped };

struct PositionResult {
  Verdict verdict = Verdict::Skipped;
  std::vector<Counterexample> failures;
};

std::string value_text(const char* label, GrundyValue v) {
  return std::string(label) + "=" + std::to_string(v);
}

std::string flag_text(const char* label, bool b) {
  return std::string(label) + "=" + (b ? "true" : "false");
}

std::string squares_text(std::span<const Square> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// rank-th r-subset of {0..n-1} in lexicographic order.
std::vector<Square> unrank_subset(std::uint64_t n, std::uint64_t r, std::uint64_t rank) {
  std::vector<Square> out;
  Square next = 0;
  while (out.size() < r) {
    std::uint64_t with_next = binomial(n - next - 1, r - out.size() - 1);
    if (rank < with_next) {
      out.push_back(next);
    } else {
      rank -= with_next;
    }
    ++next;
  }
  return out;
}

// Binary predicate suite: closed form versus an oracle fact.
template <class Closed, class Fact>
PositionResult compare(const Position& p, std::size_t min_k, const char* closed_label,
                       Closed closed, const char* fact_label, Fact fact) {
  PositionResult r;
  if (p.size() < min_k) return r;
  r.verdict = Verdict::Checked;
  const bool c = closed(p);
  const bool f = fact(p);
  if (c != f) r.failures.push_back({p, flag_text(fact_label, f), flag_text(closed_label, c)});
  return r;
}

struct PrefixGroup {
  std::size_t i;
  std::uint64_t j;
  std::uint64_t count;
};

PositionResult check_prefix_replacement(const Position& p, const SuiteOptions& opt,
                                        GrundyOracle& oracle) {
  PositionResult r;
  if (p.size() < 3) return r;
  std::vector<PrefixGroup> groups;
  std::uint64_t total = 0;
  for (std::size_t i : adjacent_pair_indices(p)) {
    const Square ai = p[i - 1];
    if (ai > 60) throw PreconditionError("thm5.2 suite supports squares up to 60");
    for (std::uint64_t j = (i - 1) % 2; j < ai; j += 2) {
      std::uint64_t count = binomial(ai, j);
      groups.push_back({i, j, count});
      total += count;
    }
  }
  if (groups.empty()) return r;
  r.verdict = Verdict::Checked;

  std::vector<std::uint64_t> picks;
  if (total <= opt.prefix_sample_cap) {
    picks.resize(total);
    for (std::uint64_t x = 0; x < total; ++x) picks[x] = x;
  } else {
    std::mt19937_64 rng(opt.seed ^ std::hash<Position>{}(p));
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    std::unordered_set<std::uint64_t> chosen;
    while (chosen.size() < opt.prefix_sample_cap) chosen.insert(dist(rng));
    picks.assign(chosen.begin(), chosen.end());
    std::sort(picks.begin(), picks.end());
  }

  const GrundyValue g = oracle.grundy(p);
  for (std::uint64_t pick : picks) {
    auto group = groups.begin();
    while (pick >= group->count) {
      pick -= group->count;
      ++group;
    }
    auto prefix = unrank_subset(p[group->i - 1], group->j, pick);
    Position q = replace_prefix(p, group->i, prefix);
    const GrundyValue gq = oracle.grundy(q);
    if (gq != g) {
      r.failures.push_back({p, value_text("G", g),
                            "G" + squares_text(q.squares()) + "=" + std::to_string(gq) +
                                " i=" + std::to_string(group->i) + " b=" + squares_text(prefix)});
    }
  }
  return r;
}

PositionResult check_additive_shift(const Position& prefix, const SuiteOptions& opt,
                                    GrundyOracle& oracle) {
  PositionResult r;
  r.verdict = Verdict::Checked;
  for (Square gap = 1; gap <= opt.top_gap_max; ++gap) {
    const Square top = prefix.max() + gap;
    std::vector<Square> squares(prefix.squares().begin(), prefix.squares().end());
    squares.push_back(top);
    Position whole(std::move(squares));
    try {
      auto s = find_additive_shift(prefix, top, opt.shift_horizon, oracle);
      if (s.shift > top) {
        r.failures.push_back({whole, "n<=" + std::to_string(top), value_text("n", s.shift)});
      } else if (!s.report.verified_at_horizon) {
        const std::size_t t = *s.report.counterexample;
        r.failures.push_back(
            {whole, value_text("G(top+t)", top + (t - s.shift)),
             "law broken at t=" + std::to_string(t) + " with n=" + std::to_string(s.shift)});
      }
    } catch (const TheoremViolation&) {
      r.failures.push_back({whole, "some n<=" + std::to_string(top), "none found"});
    }
  }
  return r;
}

PositionResult check_swap(const Position& p, GrundyOracle& oracle) {
  PositionResult r;
  r.verdict = Verdict::Checked;
  const GrundyValue normal = oracle.grundy(p, Ruleset::MaxWelter, Convention::Normal);
  const GrundyValue misere = oracle.grundy(p, Ruleset::MaxWelter, Convention::Misere);
  bool ok = true;
  if ((normal == 0) != (misere == 1)) ok = false;
  if ((normal == 1) != (misere == 0)) ok = false;
  if (normal >= 2 && normal != misere) ok = false;
  if (!ok) {
    GrundyValue want = normal == 0 ? 1 : normal == 1 ? 0 : normal;
    r.failures.push_back({p, value_text("G-", want), value_text("G-", misere)});
  }
  return r;
}

PositionResult check_welter(const Position& p, GrundyOracle& oracle) {
  PositionResult r;
  r.verdict = Verdict::Checked;
  const GrundyValue oracle_value = oracle.grundy(p, Ruleset::Welter, Convention::Normal);
  const GrundyValue mated = welter_value(p);
  if (mated != oracle_value) {
    r.failures.push_back({p, value_text("G", oracle_value), value_text("mating", mated)});
  }
  if (p.size() == 2) {
    const GrundyValue formula = pair_value(p[0], p[1]);
    if (formula != oracle_value) {
      r.failures.push_back({p, value_text("G", oracle_value), value_text("pair", formula)});
    }
  }
  return r;
}

PositionResult check_misere_reductions(const Position& p, GrundyOracle& oracle) {
  PositionResult r;
  if (p.size() < 3) return r;
  const auto misere = [&](const Position& q) {
    return oracle.grundy(q, Ruleset::MaxWelter, Convention::Misere);
  };
  std::vector<std::pair<std::string, Position>> images;
  if (auto dropped = drop_small_coin(p)) images.emplace_back("drop", *dropped);
  for (std::size_t i : adjacent_pair_indices(p)) {
    if (i % 2 == 1 && i > 1) images.emplace_back("prefix i=" + std::to_string(i),
                                                 replace_prefix(p, i, {}));
  }
  if (images.empty()) return r;
  r.verdict = Verdict::Checked;
  const GrundyValue g = misere(p);
  for (auto& [how, q] : images) {
    const GrundyValue gq = misere(q);
    if (gq != g) {
      r.failures.push_back({p, value_text("G-", g),
                            how + " G-" + squares_text(q.squares()) + "=" + std::to_string(gq)});
    }
  }
  return r;
}

PositionResult run_one(std::string_view id, const Position& p, const SuiteOptions& opt,
                       GrundyOracle& oracle) {
  auto normal = [&](const Position& q) { return oracle.grundy(q); };
  auto misere = [&](const Position& q) {
    return oracle.grundy(q, Ruleset::MaxWelter, Convention::Misere);
  };

  if (id == "thm2.1") {
    return compare(p, 2, "closed", is_p_position_normal, "G==0",
                   [&](const Position& q) { return normal(q) == 0; });
  }
  if (id == "thm3.1") {
    return compare(p, 2, "closed", has_value_one_normal, "G==1",
                   [&](const Position& q) { return normal(q) == 1; });
  }
  if (id == "thm7.1") {
    return compare(p, 2, "closed", is_p_position_misere, "G-==0",
                   [&](const Position& q) { return misere(q) == 0; });
  }
  if (id == "thm7.2") {
    return compare(p, 2, "closed", has_value_one_misere, "G-==1",
                   [&](const Position& q) { return misere(q) == 1; });
  }
  if (id == "cor3.2") {
    PositionResult r;
    if (p.size() < 3) return r;
    auto v = corollary_value(p);
    if (!v) return r;
    r.verdict = Verdict::Checked;
    const GrundyValue g = normal(p);
    if (*v != g) r.failures.push_back({p, value_text("G", g), value_text("corollary", *v)});
    return r;
  }
  if (id == "prop4") {
    PositionResult r;
    if (p.size() < 3) return r;
    r.verdict = Verdict::Checked;
    const GrundyValue g = normal(p);
    if (!check_value_two_gap(p, g)) {
      r.failures.push_back(
          {p, "gap=2", value_text("G", g) + " gap=" + std::to_string(p.max() - p[p.size() - 2])});
    }
    return r;
  }
  if (id == "thm5.1") {
    PositionResult r;
    if (p.size() < 3) return r;
    auto q = drop_small_coin(p);
    if (!q) return r;
    r.verdict = Verdict::Checked;
    const GrundyValue g = normal(p);
    const GrundyValue gq = normal(*q);
    if (g != gq) {
      r.failures.push_back(
          {p, value_text("G", g), "G" + squares_text(q->squares()) + "=" + std::to_string(gq)});
    }
    return r;
  }
  if (id == "thm5.2") return check_prefix_replacement(p, opt, oracle);
  if (id == "thm6.1") return check_additive_shift(p, opt, oracle);
  if (id == "thm6.2") {
    PositionResult r;
    if (p.size() < 3) return r;
    auto ok = check_translation_invariance(p, oracle);
    if (!ok) return r;
    r.verdict = Verdict::Checked;
    if (!*ok) {
      r.failures.push_back({p, value_text("G", normal(p)),
                            value_text("G(shifted)", normal(p.translated(1)))});
    }
    return r;
  }
  if (id == "thm7.4") return check_swap(p, oracle);
  if (id == "welter-mating") return check_welter(p, oracle);
  if (id == "explore-misere-reduce") return check_misere_reductions(p, oracle);
  throw std::invalid_argument("unknown suite id '" + std::string(id) + "'");
}

}  // namespace

std::string PositionSpace::to_string() const {
  return "k=" + std::to_string(k_min) + ".." + std::to_string(k_max) +
         " max_square=" + std::to_string(max_square);
}

std::vector<Position> enumerate(const PositionSpace& space) {
  if (space.k_min == 0 || space.k_min > space.k_max || space.max_square + 1 < space.k_max) {
    throw PreconditionError("empty position space " + space.to_string());
  }
  std::vector<Position> out;
  const Square n = space.max_square + 1;
  for (std::size_t k = space.k_min; k <= space.k_max; ++k) {
    std::vector<Square> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      out.emplace_back(combo);
      // Advance to the next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t x = i; x < k; ++x) combo[x] = combo[x - 1] + 1;
    }
  }
  return out;
}

const std::vector<std::string_view>& suite_ids() {
  static const std::vector<std::string_view> ids = {
      "thm2.1", "thm3.1", "cor3.2", "prop4",  "thm5.1", "thm5.2",        "thm6.1",
      "thm6.2", "thm7.1", "thm7.2", "thm7.4", "welter-mating", "explore-misere-reduce"};
  return ids;
}

bool is_exploratory_suite(std::string_view id) { return id == "explore-misere-reduce"; }

SuiteReport run_suite(std::string_view suite_id, const PositionSpace& space,
                      const SuiteOptions& options, GrundyOracle& oracle) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), suite_id) == ids.end()) {
    throw std::invalid_argument("unknown suite id '" + std::string(suite_id) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto positions = enumerate(space);
  std::vector<PositionResult> results(positions.size());
  detail::parallel_for(positions.size(), options.jobs, [&](std::size_t i) {
    results[i] = run_one(suite_id, positions[i], options, oracle);
  });

  SuiteReport report;
  report.suite_id = std::string(suite_id);
  report.space = space;
  report.seed = options.seed;
  for (auto& r : results) {
    if (r.verdict == Verdict::Skipped) {
      ++report.skipped;
      continue;
    }
    ++report.positions_checked;
    for (auto& f : r.failures) report.counterexamples.push_back(std::move(f));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::string format_report(const SuiteReport& r) {
  char seed[32];
  std::snprintf(seed, sizeof seed, "0x%llX", static_cast<unsigned long long>(r.seed));
  std::string out = "suite=" + r.suite_id + " " + r.space.to_string() + " seed=" + seed +
                    " positions_checked=" + std::to_string(r.positions_checked) +
                    " skipped=" + std::to_string(r.skipped) +
                    " counterexamples=" + std::to_string(r.counterexamples.size()) +
                    " elapsed_ms=" + std::to_string(r.elapsed.count()) +
                    " status=" + (r.passed() ? "pass" : "fail") + "\n";
  for (const auto& c : r.counterexamples) {
    out += "counterexample squares=" + c.position.to_string() + " expected=" + c.expected +
           " actual=" + c.actual + "\n";
  }
  return out;
}

}  // namespace maxwelter
