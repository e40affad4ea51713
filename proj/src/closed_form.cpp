#include "maxwelter/closed_form.hpp"

#include <string>

#include "maxwelter/errors.hpp"

namespace maxwelter {

namespace {

void require_coins(const Position& p, std::size_t k, const char* what) {
  if (p.size() < k) {
    throw PreconditionError(std::string(what) + " needs at least " + std::to_string(k) +
                            " coins, got " + std::to_string(p.size()));
  }
}

// Top two coins adjacent and a_{k-1}+k has the requested parity.
bool adjacent_top_with_parity(const Position& p, bool even) {
  const std::size_t k = p.size();
  const Square second = p[k - 2];
  if (p.max() != second + 1) return false;
  return ((second + k) % 2 == 0) == even;
}

}  // namespace

bool is_p_position_normal(const Position& p) {
  require_coins(p, 2, "is_p_position_normal");
  return adjacent_top_with_parity(p, true);
}

ValueOneCase value_one_case(const Position& p) {
  require_coins(p, 2, "value_one_case");
  // k coins in 0..k with a_1 = 0 and a_k = k leave exactly one gap in 1..k-1.
  if (p.min() == 0 && p.max() == p.size()) return ValueOneCase::SingleGap;
  if (adjacent_top_with_parity(p, false)) return ValueOneCase::AdjacentOdd;
  return ValueOneCase::None;
}

bool has_value_one_normal(const Position& p) {
  return value_one_case(p) != ValueOneCase::None;
}

bool is_excluded_form(const Position& p) {
  require_coins(p, 3, "is_excluded_form");
  const std::size_t k = p.size();
  // a_{k-1} = k-2 forces the first k-1 coins onto 0..k-2.
  return p[k - 2] == k - 2 && p.max() >= k;
}

std::optional<GrundyValue> corollary_value(const Position& p) {
  require_coins(p, 3, "corollary_value");
  if (is_excluded_form(p)) return std::nullopt;
  const std::size_t k = p.size();
  const Square top = p.max();
  const Square second = p[k - 2];
  if (p[k - 3] + 1 == second && second + 2 <= top) return top - second;
  return std::nullopt;
}

bool check_value_two_gap(const Position& p, GrundyValue g) {
  require_coins(p, 3, "check_value_two_gap");
  if (is_excluded_form(p) || g != 2) return true;
  return p.max() - p[p.size() - 2] == 2;
}

ValueClass classify_value(const Position& p) {
  if (p.size() >= 2) {
    if (is_p_position_normal(p)) return {ValueKind::Zero, 0};
    if (has_value_one_normal(p)) return {ValueKind::One, 1};
  }
  if (p.size() >= 3) {
    if (auto v = corollary_value(p)) return {ValueKind::AtLeastTwo, *v};
  }
  if (p.size() >= 2) return {ValueKind::AtLeastTwo, std::nullopt};
  // A single coin is a Nim heap.
  GrundyValue v = p.max();
  if (v == 0) return {ValueKind::Zero, 0};
  if (v == 1) return {ValueKind::One, 1};
  return {ValueKind::AtLeastTwo, v};
}

Move winning_move_closed_form(const Position& p) {
  require_coins(p, 2, "winning_move_closed_form");
  if (is_terminal(p)) throw PreconditionError("position " + p.to_string() + " is terminal");
  if (is_p_position_normal(p)) {
    throw PreconditionError("position " + p.to_string() + " is a P-position");
  }
  const std::size_t k = p.size();
  const Square top = p.max();
  const Square second = p[k - 2];

  if (top > second + 1 && (second + k) % 2 == 0) return {top, second + 1};

  // From here a_{k-1}+k is odd. With k = 2 there is no a_{k-2}: the square
  // below a_{k-1} is free whenever it exists.
  const bool below_second_free = k == 2 ? second >= 1 : p[k - 3] + 1 < second;
  if (below_second_free) return {top, second - 1};

  // a_{k-2} = a_{k-1}-1: land on the smallest empty square under a_{k-2}.
  const Square third = p[k - 3];
  for (Square j : empty_squares_below(p, third)) return {top, j};
  throw PreconditionError("no winning move found for " + p.to_string());
}

bool is_p_position_misere(const Position& p) {
  require_coins(p, 2, "is_p_position_misere");
  return has_value_one_normal(p);
}

bool has_value_one_misere(const Position& p) {
  require_coins(p, 2, "has_value_one_misere");
  return adjacent_top_with_parity(p, true);
}

}  // namespace maxwelter
