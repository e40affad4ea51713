#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "maxwelter/grundy.hpp"
#include "maxwelter/position.hpp"

namespace httplib {
class Server;
}

namespace maxwelter::service {

/// Error carrying the HTTP status it maps to.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

enum class Player { Human, Engine };

struct GameState {
  Position position;
  Player to_move = Player::Human;
  bool terminal = false;
  /// Empty squares the largest coin can move to.
  std::vector<Square> legal_targets;
  std::optional<Player> winner;
};

struct GameSession {
  std::string id;
  Position initial;
  Position position;
  Ruleset ruleset = Ruleset::MaxWelter;
  Convention convention = Convention::Normal;
  Player to_move = Player::Human;
  std::vector<Move> history;
};

struct CreateGameRequest {
  std::vector<std::int64_t> squares;
  Ruleset ruleset = Ruleset::MaxWelter;
  Convention convention = Convention::Normal;
  bool human_plays_first = true;
};

struct Annotation {
  GrundyValue grundy = 0;
  Outcome outcome = Outcome::P;
};

struct EngineMoveResult {
  Move move;
  GameState state;
  std::optional<Annotation> annotation;
};

struct ClosedFormSummary {
  std::optional<bool> p_match;
  std::optional<bool> value1_match;
  std::optional<GrundyValue> corollary_value;
};

struct Analysis {
  GrundyValue grundy = 0;
  Outcome outcome = Outcome::P;
  std::vector<Square> winning_targets;
  std::vector<Move> winning_moves;
  ClosedFormSummary closed_form;
  std::optional<Position> canonical_form;
};

/// Position from client-supplied integers: sorted, duplicates and negatives
/// rejected with status 400.
Position position_from_request(const std::vector<std::int64_t>& squares);

/// Engine policy. In an N-position it plays a winning move (the closed-form
/// construction for normal Max-Welter with two or more coins, otherwise the
/// first oracle-optimal move). In a P-position it stalls with the legal move
/// of largest target.
Move choose_engine_move(const Position& p, Ruleset r, Convention c,
                        GrundyOracle& oracle = shared_oracle());

Analysis analyze(const Position& p, Ruleset r, Convention c,
                 GrundyOracle& oracle = shared_oracle());

/// In-memory game sessions with LRU eviction. Sessions are locked
/// individually; different sessions proceed in parallel.
class GameService {
 public:
  static constexpr std::size_t kDefaultSessionCap = 1024;

  explicit GameService(std::size_t session_cap = kDefaultSessionCap,
                       GrundyOracle& oracle = shared_oracle());

  std::pair<std::string, GameState> create_game(const CreateGameRequest& request);
  GameState state(const std::string& id);
  /// `from` defaults to the largest coin; only the Welter ruleset may name
  /// another coin.
  GameState human_move(const std::string& id, Square target,
                       std::optional<Square> from = std::nullopt);
  EngineMoveResult engine_move(const std::string& id, bool annotate = false);
  GameSession snapshot(const std::string& id);

  std::size_t session_count();
  GrundyOracle& oracle() noexcept { return oracle_; }

 private:
  struct Entry {
    explicit Entry(GameSession s) : session(std::move(s)) {}
    std::mutex mu;
    GameSession session;
  };
  struct Slot {
    std::shared_ptr<Entry> entry;
    std::list<std::string>::iterator lru;
  };

  std::shared_ptr<Entry> find(const std::string& id);
  GameState state_of(const GameSession& s) const;
  std::string fresh_id();

  std::size_t cap_;
  GrundyOracle& oracle_;
  std::mutex mu_;
  std::unordered_map<std::string, Slot> sessions_;
  std::list<std::string> lru_;
  std::mt19937_64 rng_;
};

nlohmann::json to_json(const GameState& s);
nlohmann::json to_json(const Analysis& a);

/// Registers the /api routes on `server`.
void install_routes(httplib::Server& server, GameService& service);

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string static_dir;
  std::size_t session_cap = GameService::kDefaultSessionCap;
};

/// Blocks serving requests until the server stops. Returns false when the
/// port cannot be bound.
bool serve(const ServerOptions& options);

}  // namespace maxwelter::service
