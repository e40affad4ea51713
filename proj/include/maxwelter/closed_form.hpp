#pragma once

#include <optional>

#include "maxwelter/grundy.hpp"
#include "maxwelter/position.hpp"

// Closed-form classifiers for normal and misere Max-Welter. None of these
// consult the Grundy oracle. Coin indices in comments are 1-based, so for
// a position (a_1, ..., a_k) the top two coins are a_{k-1} and a_k.

namespace maxwelter {

enum class ValueKind { Zero, One, AtLeastTwo };

struct ValueClass {
  ValueKind kind = ValueKind::AtLeastTwo;
  /// Set when a closed form pins the exact value.
  std::optional<GrundyValue> exact;
};

/// Which value-1 family a position falls into, if any.
enum class ValueOneCase {
  None,
  /// (0,1,...,l,l+2,...,k): the squares 0..k with one gap strictly inside.
  SingleGap,
  /// Top two coins adjacent with a_{k-1}+k odd.
  AdjacentOdd,
};

/// a_k = a_{k-1}+1 and a_{k-1}+k even. Requires k >= 2.
bool is_p_position_normal(const Position& p);

ValueOneCase value_one_case(const Position& p);

/// Value 1 under normal play. Requires k >= 2.
bool has_value_one_normal(const Position& p);

/// (0,1,...,k-2,k+i) for some i >= 0: the family carved out of both the
/// top-gap corollary and the value-2 gap property. Requires k >= 3.
bool is_excluded_form(const Position& p);

/// a_k - a_{k-1} when a_{k-2}+1 = a_{k-1} <= a_k-2 and p is not of the
/// excluded form; nothing otherwise. Requires k >= 3.
std::optional<GrundyValue> corollary_value(const Position& p);

/// Whether "value 2 implies a_k - a_{k-1} = 2" holds at p, given p's
/// normal-play value g. Requires k >= 3.
bool check_value_two_gap(const Position& p, GrundyValue g);

/// Combines the classifiers above without search.
ValueClass classify_value(const Position& p);

/// A move into a P-position, built from the case analysis rather than by
/// search. Requires k >= 2 and a non-terminal N-position.
Move winning_move_closed_form(const Position& p);

/// Misere P-positions: exactly the normal-play value-1 positions.
bool is_p_position_misere(const Position& p);

/// Misere value 1: exactly the normal-play P-positions (terminal included).
bool has_value_one_misere(const Position& p);

}  // namespace maxwelter
