#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "maxwelter/grundy.hpp"
#include "maxwelter/position.hpp"

namespace maxwelter {

struct MatingResult {
  std::vector<std::pair<Square, Square>> pairs;
  std::optional<Square> spinster;
  GrundyValue value = 0;
};

/// Carry-free binary addition.
constexpr GrundyValue nim_add(GrundyValue a, GrundyValue b) noexcept { return a ^ b; }

/// [a|b] = (a xor b) - 1. Throws PreconditionError when a == b.
GrundyValue pair_value(Square a, Square b);

/// Mating Method: repeatedly mate the two remaining squares that agree on
/// the most low-order bits (lexicographically first pair on ties); an odd
/// square left over is the spinster.
MatingResult mate(const Position& p);

/// Same, but `choose(n)` picks which of the n equally good pairs to mate.
/// Candidates are listed in lexicographic order of their indices.
MatingResult mate(const Position& p, const std::function<std::size_t(std::size_t)>& choose);

/// Welter function (Grundy value of classical Welter's game).
GrundyValue welter_value(const Position& p);

}  // namespace maxwelter
