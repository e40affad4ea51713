#include "maxwelter/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maxwelter/closed_form.hpp"
#include "maxwelter/errors.hpp"
#include "maxwelter/grundy.hpp"
#include "maxwelter/periodicity.hpp"
#include "maxwelter/reduce.hpp"
#include "maxwelter/service.hpp"
#include "maxwelter/verify.hpp"
#include "maxwelter/welter_fn.hpp"

namespace maxwelter {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Position read_squares(const std::string& text, std::ostream& err) {
  auto parsed = parse_position(text);
  if (parsed.reordered) {
    err << "warning: squares were not ascending; using " << parsed.position.to_string() << "\n";
  }
  return parsed.position;
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto k = std::stoul(text);
      return {k, k};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--k expects A..B or a single count, got '" + text + "'");
  }
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--seed expects a decimal or 0x-prefixed integer, got '" + text + "'");
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open --out file '" + path + "'");
  file << text;
}

std::string_view rule_name(const Position& p) {
  if (p.size() < 2) return "neither";
  if (is_p_position_normal(p)) return "thm2.1";
  switch (value_one_case(p)) {
    case ValueOneCase::SingleGap:
      return "thm3.1a";
    case ValueOneCase::AdjacentOdd:
      return "thm3.1b";
    case ValueOneCase::None:
      break;
  }
  return "neither";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-Welter game engine and theorem checker"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string squares;
  std::string ruleset = "max-welter";
  std::string convention = "normal";
  std::size_t memo_budget = GrundyOracle::kDefaultMemoBudget;
  app.add_option("--memo-budget", memo_budget, "Maximum Grundy memo entries")
      ->capture_default_str();

  auto* grundy_cmd = app.add_subcommand("grundy", "Print the Grundy value of a position");
  grundy_cmd->add_option("squares", squares, "Comma-separated squares, e.g. 1,2,5")->required();
  grundy_cmd->add_option("--ruleset", ruleset, "max-welter or welter")->capture_default_str();
  grundy_cmd->add_option("--convention", convention, "normal or misere")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Oracle value and matching closed form");
  classify_cmd->add_option("squares", squares)->required();

  auto* strategy_cmd = app.add_subcommand("strategy", "Winning move for normal Max-Welter");
  strategy_cmd->add_option("squares", squares)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply value-preserving reductions");
  reduce_cmd->add_option("squares", squares)->required();

  auto* welter_cmd = app.add_subcommand("welter", "Welter function by the Mating Method");
  welter_cmd->add_option("squares", squares)->required();

  std::string suite;
  std::string k_range;
  Square max_square = 0;
  std::string out_path;
  std::string seed_text = "0x5EED";
  std::size_t jobs = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a theorem suite");
  verify_cmd->add_option("--suite", suite, "Suite id")->required();
  verify_cmd->add_option("--k", k_range, "Coin-count range A..B")->required();
  verify_cmd->add_option("--max-square", max_square, "Largest square")->required();
  verify_cmd->add_option("--out", out_path, "Also write the report here");
  verify_cmd->add_option("--seed", seed_text, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = all CPUs)");

  std::string conjecture;
  Square a = 0;
  Square m = 1;
  std::size_t k = 1;
  std::size_t horizon = 100;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a translated Grundy sequence for a period");
  scan_cmd->add_option("--conjecture", conjecture, "6.1 or 6.2")->required();
  scan_cmd->add_option("--squares,squares", squares, "Position for 6.1");
  scan_cmd->add_option("--a", a, "First square for 6.2")->capture_default_str();
  scan_cmd->add_option("--m", m, "Spacing for 6.2")->capture_default_str();
  scan_cmd->add_option("--k", k, "Coins minus one for 6.2")->capture_default_str();
  scan_cmd->add_option("--horizon", horizon, "Last translation index")->capture_default_str();
  scan_cmd->add_option("--out", out_path, "Also write the record here");
  scan_cmd->add_option("--jobs", jobs, "Worker threads (0 = all CPUs)");

  service::ServerOptions server;
  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON API (and optional static UI)");
  serve_cmd->add_option("--port", server.port)->capture_default_str();
  serve_cmd->add_option("--host", server.host)->capture_default_str();
  serve_cmd->add_option("--static-dir", server.static_dir, "Directory with the built UI");
  serve_cmd->add_option("--session-cap", server.session_cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    GrundyOracle oracle(memo_budget);

    if (*grundy_cmd) {
      Position p = read_squares(squares, err);
      out << oracle.grundy(p, parse_ruleset(ruleset), parse_convention(convention)) << "\n";
      return kExitOk;
    }

    if (*classify_cmd) {
      Position p = read_squares(squares, err);
      const GrundyValue g = oracle.grundy(p);
      out << "grundy=" << g << " outcome=" << (g == 0 ? "P" : "N") << " rule=" << rule_name(p)
          << "\n";
      return kExitOk;
    }

    if (*strategy_cmd) {
      Position p = read_squares(squares, err);
      if (is_terminal(p)) {
        out << "terminal: no moves\n";
        return kExitOk;
      }
      if (oracle.grundy(p) == 0) {
        out << "outcome=P no winning move\n";
        return kExitOk;
      }
      const Move mv = p.size() >= 2 ? winning_move_closed_form(p) : Move{p.max(), 0};
      out << "move=" << mv.from << "->" << mv.to
          << " result=" << apply_move(p, mv).to_string() << "\n";
      return kExitOk;
    }

    if (*reduce_cmd) {
      Position p = read_squares(squares, err);
      out << "canonical=" << canonicalize(p).to_string() << "\n";
      if (p.size() >= 3) {
        auto dropped = drop_small_coin(p);
        out << "drop_small_coin=" << (dropped ? dropped->to_string() : "n/a") << "\n";
      }
      return kExitOk;
    }

    if (*welter_cmd) {
      Position p = read_squares(squares, err);
      auto result = mate(p);
      out << "pairs=";
      for (std::size_t i = 0; i < result.pairs.size(); ++i) {
        if (i) out << ',';
        out << '(' << result.pairs[i].first << ',' << result.pairs[i].second << ')';
      }
      out << " spinster=";
      if (result.spinster) {
        out << *result.spinster;
      } else {
        out << "none";
      }
      out << " value=" << result.value << "\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      auto [k_min, k_max] = parse_k_range(k_range);
      SuiteOptions options;
      options.seed = parse_seed(seed_text);
      options.jobs = jobs;
      auto report = run_suite(suite, PositionSpace{k_min, k_max, max_square}, options, oracle);
      const std::string text = format_report(report);
      out << text;
      write_out(out_path, text);
      if (is_exploratory_suite(suite)) return kExitOk;
      return report.passed() ? kExitOk : kExitCounterexample;
    }

    if (*scan_cmd) {
      std::string record;
      if (conjecture == "6.1") {
        if (squares.empty()) throw UsageError("scan --conjecture 6.1 needs --squares");
        Position p = read_squares(squares, err);
        record = format_translation_scan(p, scan_translation_period(p, horizon, oracle, jobs));
      } else if (conjecture == "6.2") {
        record = format_progression_scan(
            a, m, k, scan_arithmetic_progression(a, m, k, horizon, oracle, jobs));
      } else {
        throw UsageError("--conjecture must be 6.1 or 6.2");
      }
      out << record << "\n";
      write_out(out_path, record + "\n");
      return kExitOk;
    }

    if (*serve_cmd) {
      out << "serving on " << server.host << ":" << server.port << "\n" << std::flush;
      if (!service::serve(server)) {
        err << "error: cannot listen on " << server.host << ":" << server.port << "\n";
        return kExitRuntime;
      }
      return kExitOk;
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxwelter
