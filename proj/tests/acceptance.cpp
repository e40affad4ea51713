// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "maxwelter/cli.hpp"
#include "maxwelter/grundy.hpp"
#include "maxwelter/periodicity.hpp"
#include "maxwelter/service.hpp"
#include "maxwelter/verify.hpp"

using namespace maxwelter;

namespace {

struct Criterion {
  std::string name;
  bool passed = true;
  std::string detail;
};

std::vector<Criterion> results;

void record(Criterion c) {
  std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " :: " << c.detail << std::endl;
  results.push_back(std::move(c));
}

SuiteReport suite(const char* id, PositionSpace space, GrundyOracle& oracle, std::size_t jobs = 0) {
  SuiteOptions opt;
  opt.seed = kDefaultSeed;
  opt.jobs = jobs;
  return run_suite(id, space, opt, oracle);
}

std::string summary(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite_id << " checked=" << r.positions_checked << " skipped=" << r.skipped
    << " counterexamples=" << r.counterexamples.size() << " elapsed_ms=" << r.elapsed.count();
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    s << " first=(" << c.position.to_string() << " expected " << c.expected << ", got "
      << c.actual << ")";
  }
  return s.str();
}

void suites_criterion(const std::string& name, std::vector<SuiteReport> reports,
                      std::chrono::milliseconds budget = std::chrono::milliseconds::max()) {
  Criterion c{name, true, ""};
  std::chrono::milliseconds total{0};
  for (const auto& r : reports) {
    c.passed = c.passed && r.passed();
    total += r.elapsed;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += summary(r);
  }
  if (budget != std::chrono::milliseconds::max()) {
    c.detail += "; total_ms=" + std::to_string(total.count()) +
                " budget_ms=" + std::to_string(budget.count());
    c.passed = c.passed && total < budget;
  }
  record(std::move(c));
}

std::string run_cli_capture(std::vector<std::string> args, int& status) {
  args.insert(args.begin(), "maxwelter");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void conjecture_scans() {
  GrundyOracle oracle;
  Criterion c{"conjecture scans (6.2 m=1 k=1 period 2 verified; m in 1..3, k in 1..2 well-formed)",
              true, ""};
  int status = 0;
  const std::string forced = run_cli_capture(
      {"scan", "--conjecture", "6.2", "--a", "0", "--m", "1", "--k", "1", "--horizon", "100"},
      status);
  const std::regex record_shape(
      R"(kind=conj6\.2 a=\d+ m=\d+ k=\d+ horizon=100 n0=\d+ period=\d+ verified=(true|false)\n)");
  c.passed = status == 0 && std::regex_match(forced, record_shape) &&
             forced.find(" period=2 verified=true") != std::string::npos;
  c.detail = "forced: " + forced.substr(0, forced.size() - 1);
  for (Square m = 1; m <= 3; ++m) {
    for (std::size_t k = 1; k <= 2; ++k) {
      auto r = scan_arithmetic_progression(0, m, k, 100, oracle);
      const std::string line = format_progression_scan(0, m, k, r) + "\n";
      c.passed = c.passed && std::regex_match(line, record_shape);
      c.detail += "; " + line.substr(0, line.size() - 1);
    }
  }
  record(std::move(c));
}

void engine_playouts() {
  GrundyOracle& oracle = shared_oracle();
  std::vector<Position> n_positions;
  for (const auto& p : enumerate({1, 4, 12})) {
    if (oracle.grundy(p) != 0) n_positions.push_back(p);
  }
  std::mt19937_64 rng(kDefaultSeed);
  service::GameService svc;
  int engine_wins = 0;
  constexpr int kGames = 100;
  for (int game = 0; game < kGames; ++game) {
    const Position& start =
        n_positions[std::uniform_int_distribution<std::size_t>(0, n_positions.size() - 1)(rng)];
    service::CreateGameRequest req{
        std::vector<std::int64_t>(start.squares().begin(), start.squares().end()),
        Ruleset::MaxWelter, Convention::Normal, false};
    auto id = svc.create_game(req).first;
    service::GameState s = svc.engine_move(id).state;
    while (!s.terminal) {
      auto pick = std::uniform_int_distribution<std::size_t>(0, s.legal_targets.size() - 1)(rng);
      s = svc.human_move(id, s.legal_targets[pick]);
      if (s.terminal) break;
      s = svc.engine_move(id).state;
    }
    if (s.winner == service::Player::Engine) ++engine_wins;
  }
  record({"engine playouts (100 fixed-seed games from N-positions, engine first, normal)",
          engine_wins == kGames,
          "engine_wins=" + std::to_string(engine_wins) + "/" + std::to_string(kGames)});
}

}  // namespace

int main() {
  using std::chrono::milliseconds;
  {
    GrundyOracle oracle;
    suites_criterion("thm2.1 P-positions, k 2..5, squares 0..16, single-threaded < 30 s",
                     {suite("thm2.1", {2, 5, 16}, oracle, 1)}, milliseconds(30'000));
  }
  {
    GrundyOracle oracle;
    suites_criterion("thm3.1 value-1 positions, k 2..5, squares 0..16",
                     {suite("thm3.1", {2, 5, 16}, oracle)});
  }
  {
    GrundyOracle oracle;
    suites_criterion("cor3.2 exact values + value-2 gap property, k 3..5, squares 0..16",
                     {suite("cor3.2", {3, 5, 16}, oracle), suite("prop4", {3, 5, 16}, oracle)});
  }
  {
    GrundyOracle oracle;
    suites_criterion(
        "reductions (drop_small_coin, replace_prefix cap 200 seed 0x5EED), k 3..5, squares 0..14",
        {suite("thm5.1", {3, 5, 14}, oracle), suite("thm5.2", {3, 5, 14}, oracle)});
  }
  {
    GrundyOracle oracle;
    // Space enumerates prefixes of 1..3 coins; the suite adds a top coin at
    // max(prefix) + g for g = 1..4 and checks 50 further squares.
    suites_criterion("thm6.1 additive shift n <= a_k and law for i <= 50",
                     {suite("thm6.1", {1, 3, 8}, oracle)});
  }
  {
    GrundyOracle oracle;
    suites_criterion("thm6.2 translation invariance, k 3..4, squares 0..12",
                     {suite("thm6.2", {3, 4, 12}, oracle)});
  }
  {
    GrundyOracle oracle;
    suites_criterion("misere classifiers + swap, k 2..5, squares 0..14",
                     {suite("thm7.1", {2, 5, 14}, oracle), suite("thm7.2", {2, 5, 14}, oracle),
                      suite("thm7.4", {2, 5, 14}, oracle)});
  }
  {
    GrundyOracle oracle;
    suites_criterion("Welter mating = Welter oracle (and (a^b)-1 for k=2), k 2..4, squares 0..12, < 60 s",
                     {suite("welter-mating", {2, 4, 12}, oracle)}, milliseconds(60'000));
  }
  conjecture_scans();
  engine_playouts();

  std::size_t failed = 0;
  for (const auto& c : results) failed += !c.passed;
  std::cout << "acceptance: " << results.size() - failed << "/" << results.size() << " passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
