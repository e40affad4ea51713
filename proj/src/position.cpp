#include "maxwelter/position.hpp"

#include <algorithm>
#include <charconv>

#include "maxwelter/errors.hpp"

namespace maxwelter {

Position::Position(std::vector<Square> squares) : squares_(std::move(squares)) {
  if (squares_.empty()) throw InvalidPosition("a position needs at least one coin");
  std::sort(squares_.begin(), squares_.end());
  auto dup = std::adjacent_find(squares_.begin(), squares_.end());
  if (dup != squares_.end()) {
    throw InvalidPosition("square " + std::to_string(*dup) + " holds more than one coin");
  }
}

Position::Position(std::initializer_list<Square> squares)
    : Position(std::vector<Square>(squares)) {}

bool Position::contains(Square s) const noexcept {
  return std::binary_search(squares_.begin(), squares_.end(), s);
}

Position Position::translated(Square offset) const {
  std::vector<Square> out(squares_);
  for (auto& s : out) s += offset;
  return Position(std::move(out));
}

std::string Position::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(squares_[i]);
  }
  return out;
}

ParsedPosition parse_position(std::string_view text) {
  std::vector<Square> squares;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (item.empty()) throw InvalidPosition("empty entry in square list '" + std::string(text) + "'");
    if (item.front() == '-') throw InvalidPosition("negative square '" + std::string(item) + "'");
    Square value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidPosition("not a square index: '" + std::string(item) + "'");
    }
    squares.push_back(value);
    start = comma + 1;
  }
  bool reordered = !std::is_sorted(squares.begin(), squares.end());
  return {Position(std::move(squares)), reordered};
}

std::vector<Square> empty_squares_below(const Position& p, Square s) {
  std::vector<Square> out;
  auto coins = p.squares();
  std::size_t next = 0;
  for (Square j = 0; j < s; ++j) {
    while (next < coins.size() && coins[next] < j) ++next;
    if (next < coins.size() && coins[next] == j) continue;
    out.push_back(j);
  }
  return out;
}

std::vector<Move> legal_moves(const Position& p, Ruleset r) {
  std::vector<Move> out;
  if (r == Ruleset::MaxWelter) {
    for (Square to : empty_squares_below(p, p.max())) out.push_back({p.max(), to});
    return out;
  }
  for (Square from : p.squares()) {
    for (Square to : empty_squares_below(p, from)) out.push_back({from, to});
  }
  return out;
}

Position apply_move(const Position& p, Move m) {
  if (!p.contains(m.from)) {
    throw IllegalMove("no coin on square " + std::to_string(m.from));
  }
  if (p.contains(m.to)) {
    throw IllegalMove("square " + std::to_string(m.to) + " is occupied");
  }
  if (m.to >= m.from) {
    throw IllegalMove("coins only move left: " + std::to_string(m.from) + " -> " +
                      std::to_string(m.to));
  }
  std::vector<Square> out(p.squares().begin(), p.squares().end());
  *std::find(out.begin(), out.end(), m.from) = m.to;
  return Position(std::move(out));
}

Position apply_move(const Position& p, Move m, Ruleset r) {
  if (r == Ruleset::MaxWelter && m.from != p.max()) {
    throw IllegalMove("Max-Welter only moves the coin on the largest square (" +
                      std::to_string(p.max()) + ")");
  }
  return apply_move(p, m);
}

bool is_terminal(const Position& p, Ruleset) {
  return p.max() + 1 == p.size();
}

std::string_view to_string(Ruleset r) {
  return r == Ruleset::MaxWelter ? "max-welter" : "welter";
}

std::string_view to_string(Convention c) {
  return c == Convention::Normal ? "normal" : "misere";
}

Ruleset parse_ruleset(std::string_view text) {
  if (text == "max-welter" || text == "maxwelter") return Ruleset::MaxWelter;
  if (text == "welter") return Ruleset::Welter;
  throw std::invalid_argument("unknown ruleset '" + std::string(text) +
                              "' (expected max-welter or welter)");
}

Convention parse_convention(std::string_view text) {
  if (text == "normal") return Convention::Normal;
  if (text == "misere") return Convention::Misere;
  throw std::invalid_argument("unknown convention '" + std::string(text) +
                              "' (expected normal or misere)");
}

}  // namespace maxwelter

std::size_t std::hash<maxwelter::Position>::operator()(
    const maxwelter::Position& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto s : p.squares()) {
    h ^= std::hash<maxwelter::Square>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
