#include "maxwelter/service.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

#include "httplib.h"
#include "maxwelter/closed_form.hpp"
#include "maxwelter/errors.hpp"
#include "maxwelter/reduce.hpp"

namespace maxwelter::service {

using nlohmann::json;

namespace {

Player other(Player p) { return p == Player::Human ? Player::Engine : Player::Human; }

std::string_view player_name(Player p) { return p == Player::Human ? "human" : "engine"; }

std::vector<Square> targets_of(const Position& p) { return empty_squares_below(p, p.max()); }

json move_json(const Move& m) { return {{"from", m.from}, {"to", m.to}}; }

}  // namespace

Position position_from_request(const std::vector<std::int64_t>& squares) {
  std::vector<Square> out;
  out.reserve(squares.size());
  for (auto s : squares) {
    if (s < 0) throw ServiceError(400, "negative square " + std::to_string(s));
    out.push_back(static_cast<Square>(s));
  }
  try {
    return Position(std::move(out));
  } catch (const InvalidPosition& e) {
    throw ServiceError(400, e.what());
  }
}

Move choose_engine_move(const Position& p, Ruleset r, Convention c, GrundyOracle& oracle) {
  if (is_terminal(p, r)) throw PreconditionError("no move from terminal " + p.to_string());
  if (oracle.grundy(p, r, c) != 0) {
    if (r == Ruleset::MaxWelter && c == Convention::Normal && p.size() >= 2) {
      return winning_move_closed_form(p);
    }
    return oracle.optimal_moves(p, r, c).front();
  }
  auto moves = legal_moves(p, r);
  return *std::max_element(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    return std::tie(a.to, a.from) < std::tie(b.to, b.from);
  });
}

Analysis analyze(const Position& p, Ruleset r, Convention c, GrundyOracle& oracle) {
  Analysis a;
  a.grundy = oracle.grundy(p, r, c);
  a.outcome = a.grundy == 0 ? Outcome::P : Outcome::N;
  if (!is_terminal(p, r)) a.winning_moves = oracle.optimal_moves(p, r, c);
  for (const Move& m : a.winning_moves) {
    if (m.from == p.max()) a.winning_targets.push_back(m.to);
  }
  if (r == Ruleset::MaxWelter && p.size() >= 2) {
    if (c == Convention::Normal) {
      a.closed_form.p_match = is_p_position_normal(p);
      a.closed_form.value1_match = has_value_one_normal(p);
      if (p.size() >= 3) a.closed_form.corollary_value = corollary_value(p);
    } else {
      a.closed_form.p_match = is_p_position_misere(p);
      a.closed_form.value1_match = has_value_one_misere(p);
    }
  }
  if (r == Ruleset::MaxWelter && c == Convention::Normal) a.canonical_form = canonicalize(p);
  return a;
}

GameService::GameService(std::size_t session_cap, GrundyOracle& oracle)
    : cap_(std::max<std::size_t>(session_cap, 1)), oracle_(oracle), rng_(std::random_device{}()) {}

std::string GameService::fresh_id() {
  char buf[17];
  std::string id;
  do {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    id = buf;
  } while (sessions_.count(id));
  return id;
}

std::pair<std::string, GameState> GameService::create_game(const CreateGameRequest& request) {
  Position start = position_from_request(request.squares);
  GameSession session{.id = {},
                      .initial = start,
                      .position = start,
                      .ruleset = request.ruleset,
                      .convention = request.convention,
                      .to_move = request.human_plays_first ? Player::Human : Player::Engine,
                      .history = {}};
  std::lock_guard lock(mu_);
  while (sessions_.size() >= cap_) {
    sessions_.erase(lru_.back());
    lru_.pop_back();
  }
  session.id = fresh_id();
  lru_.push_front(session.id);
  auto entry = std::make_shared<Entry>(session);
  sessions_.emplace(session.id, Slot{entry, lru_.begin()});
  return {session.id, state_of(session)};
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown game '" + id + "'");
  lru_.splice(lru_.begin(), lru_, it->second.lru);
  return it->second.entry;
}

GameState GameService::state_of(const GameSession& s) const {
  GameState out{.position = s.position, .to_move = s.to_move};
  out.terminal = is_terminal(s.position, s.ruleset);
  if (out.terminal) {
    // Normal play: whoever is stuck loses. Misere: whoever is stuck wins.
    out.winner = s.convention == Convention::Normal ? other(s.to_move) : s.to_move;
  } else {
    out.legal_targets = targets_of(s.position);
  }
  return out;
}

GameState GameService::state(const std::string& id) {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  return state_of(entry->session);
}

GameSession GameService::snapshot(const std::string& id) {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  return entry->session;
}

GameState GameService::human_move(const std::string& id, Square target, std::optional<Square> from) {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  GameSession& s = entry->session;
  if (is_terminal(s.position, s.ruleset)) throw ServiceError(409, "game is over");
  if (s.to_move != Player::Human) throw ServiceError(409, "it is the engine's turn");
  const Move m{from.value_or(s.position.max()), target};
  try {
    s.position = apply_move(s.position, m, s.ruleset);
  } catch (const IllegalMove& e) {
    throw ServiceError(422, e.what());
  }
  s.history.push_back(m);
  s.to_move = Player::Engine;
  return state_of(s);
}

EngineMoveResult GameService::engine_move(const std::string& id, bool annotate) {
  auto entry = find(id);
  std::lock_guard lock(entry->mu);
  GameSession& s = entry->session;
  if (is_terminal(s.position, s.ruleset)) throw ServiceError(409, "game is over");
  if (s.to_move != Player::Engine) throw ServiceError(409, "it is the human's turn");
  std::optional<Annotation> note;
  if (annotate) {
    const GrundyValue g = oracle_.grundy(s.position, s.ruleset, s.convention);
    note = Annotation{g, g == 0 ? Outcome::P : Outcome::N};
  }
  const Move m = choose_engine_move(s.position, s.ruleset, s.convention, oracle_);
  s.position = apply_move(s.position, m, s.ruleset);
  s.history.push_back(m);
  s.to_move = Player::Human;
  return {m, state_of(s), note};
}

std::size_t GameService::session_count() {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

json to_json(const GameState& s) {
  json j;
  j["squares"] = std::vector<Square>(s.position.squares().begin(), s.position.squares().end());
  j["to_move"] = player_name(s.to_move);
  j["terminal"] = s.terminal;
  j["legal_targets"] = s.legal_targets;
  j["winner"] = s.winner ? json(player_name(*s.winner)) : json(nullptr);
  return j;
}

json to_json(const Analysis& a) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json moves = json::array();
  for (const Move& m : a.winning_moves) moves.push_back(move_json(m));
  json j;
  j["grundy"] = a.grundy;
  j["outcome"] = to_string(a.outcome);
  j["winning_targets"] = a.winning_targets;
  j["winning_moves"] = moves;
  j["closed_form"] = {{"p_match", opt(a.closed_form.p_match)},
                      {"value1_match", opt(a.closed_form.value1_match)},
                      {"corollary_value", opt(a.closed_form.corollary_value)}};
  j["canonical_form"] =
      a.canonical_form
          ? json(std::vector<Square>(a.canonical_form->squares().begin(),
                                     a.canonical_form->squares().end()))
          : json(nullptr);
  return j;
}

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    send_json(res, e.status(), {{"error", e.what()}});
  } catch (const json::exception& e) {
    send_json(res, 400, {{"error", std::string("malformed request: ") + e.what()}});
  } catch (const InvalidPosition& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const std::invalid_argument& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const ResourceLimitError& e) {
    send_json(res, 503, {{"error", e.what()}});
  } catch (const std::exception& e) {
    send_json(res, 500, {{"error", e.what()}});
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json body = json::parse(req.body);
  if (!body.is_object()) throw ServiceError(400, "request body must be a JSON object");
  return body;
}

bool query_flag(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return false;
  auto v = req.get_param_value(name);
  return v == "true" || v == "1";
}

}  // namespace

void install_routes(httplib::Server& server, GameService& service) {
  server.Post("/api/games", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      json body = parse_body(req);
      if (!body.contains("squares") || !body["squares"].is_array()) {
        throw ServiceError(400, "'squares' must be an array of integers");
      }
      CreateGameRequest create;
      for (const auto& s : body["squares"]) {
        if (!s.is_number_integer()) throw ServiceError(400, "squares must be integers");
        create.squares.push_back(s.get<std::int64_t>());
      }
      if (body.contains("ruleset")) create.ruleset = parse_ruleset(body["ruleset"].get<std::string>());
      if (body.contains("convention")) {
        create.convention = parse_convention(body["convention"].get<std::string>());
      }
      if (body.contains("human_plays_first")) {
        create.human_plays_first = body["human_plays_first"].get<bool>();
      }
      auto [id, state] = service.create_game(create);
      send_json(res, 200, {{"id", id}, {"state", to_json(state)}});
    });
  });

  server.Get(R"(/api/games/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, {{"state", to_json(service.state(req.matches[1]))}}); });
  });

  server.Post(R"(/api/games/([^/]+)/moves)",
              [&service](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  json body = parse_body(req);
                  if (!body.contains("target") || !body["target"].is_number_integer()) {
                    throw ServiceError(400, "'target' must be an integer");
                  }
                  auto target = body["target"].get<std::int64_t>();
                  if (target < 0) throw ServiceError(422, "negative target square");
                  std::optional<Square> from;
                  if (body.contains("from")) {
                    auto f = body["from"].get<std::int64_t>();
                    if (f < 0) throw ServiceError(422, "negative source square");
                    from = static_cast<Square>(f);
                  }
                  auto state = service.human_move(req.matches[1], static_cast<Square>(target), from);
                  send_json(res, 200, {{"state", to_json(state)}});
                });
              });

  server.Post(R"(/api/games/([^/]+)/engine-move)",
              [&service](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  auto result = service.engine_move(req.matches[1], query_flag(req, "annotate"));
                  json body = {{"move", move_json(result.move)}, {"state", to_json(result.state)}};
                  if (result.annotation) {
                    body["annotation"] = {{"grundy", result.annotation->grundy},
                                          {"outcome", to_string(result.annotation->outcome)}};
                  }
                  send_json(res, 200, body);
                });
              });

  server.Get("/api/analyze", [&service](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("squares")) throw ServiceError(400, "missing 'squares' parameter");
      Position p = parse_position(req.get_param_value("squares")).position;
      Ruleset r = req.has_param("ruleset") ? parse_ruleset(req.get_param_value("ruleset"))
                                           : Ruleset::MaxWelter;
      Convention c = req.has_param("convention")
                         ? parse_convention(req.get_param_value("convention"))
                         : Convention::Normal;
      send_json(res, 200, to_json(analyze(p, r, c, service.oracle())));
    });
  });
}

bool serve(const ServerOptions& options) {
  GameService service(options.session_cap);
  httplib::Server server;
  install_routes(server, service);
  if (!options.static_dir.empty() && !server.set_mount_point("/", options.static_dir)) {
    throw std::invalid_argument("static directory '" + options.static_dir + "' does not exist");
  }
  return server.listen(options.host, options.port);
}

}  // namespace maxwelter::service
