#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxwelter {

/// Square label on the semi-infinite strip.
using Square = std::uint64_t;

struct Move {
  Square from = 0;
  Square to = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

enum class Ruleset { MaxWelter, Welter };
enum class Convention { Normal, Misere };

/// Occupied squares in strictly increasing order; never empty.
class Position {
 public:
  /// Sorts the input. Throws InvalidPosition on an empty list or a repeated square.
  explicit Position(std::vector<Square> squares);
  Position(std::initializer_list<Square> squares);

  std::span<const Square> squares() const noexcept { return squares_; }
  std::size_t size() const noexcept { return squares_.size(); }
  Square operator[](std::size_t i) const noexcept { return squares_[i]; }
  Square max() const noexcept { return squares_.back(); }
  Square min() const noexcept { return squares_.front(); }
  bool contains(Square s) const noexcept;

  /// Every coin shifted right by `offset` squares.
  Position translated(Square offset) const;

  /// Comma-separated ascending form, e.g. "2,5,6,8,10".
  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<Square> squares_;
};

struct ParsedPosition {
  Position position;
  /// True when the input was not already ascending.
  bool reordered = false;
};

/// Parses "a,b,c". Whitespace around entries is ignored; negatives, empty
/// entries and duplicates raise InvalidPosition.
ParsedPosition parse_position(std::string_view text);

/// All empty squares j with j < s, ascending.
std::vector<Square> empty_squares_below(const Position& p, Square s);

std::vector<Move> legal_moves(const Position& p, Ruleset r);

/// Moves the coin on `m.from` to `m.to`. Throws IllegalMove when `from` is
/// empty, `to` is occupied, or `to >= from`.
Position apply_move(const Position& p, Move m);

/// As above, and additionally rejects moves the ruleset forbids.
Position apply_move(const Position& p, Move m, Ruleset r);

/// True exactly for the packed prefix (0,1,...,k-1), under either ruleset.
bool is_terminal(const Position& p, Ruleset r = Ruleset::MaxWelter);

std::string_view to_string(Ruleset r);
std::string_view to_string(Convention c);
Ruleset parse_ruleset(std::string_view text);
Convention parse_convention(std::string_view text);

}  // namespace maxwelter

template <>
struct std::hash<maxwelter::Position> {
  std::size_t operator()(const maxwelter::Position& p) const noexcept;
};
