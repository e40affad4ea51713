#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxwelter/position.hpp"

// Value-preserving simplifications for normal-play Max-Welter. Misere
// values are not claimed to survive these rewrites.

namespace maxwelter {

/// When a_1 <= k-1 the lowest coin can never move; drop it and shift the
/// rest down by one. Requires k >= 3.
std::optional<Position> drop_small_coin(const Position& p);

/// 1-based indices i with a_i >= i and a_i + 1 = a_{i+1}, ascending.
std::vector<std::size_t> adjacent_pair_indices(const Position& p);

/// Replaces a_1..a_{i-1} with `prefix`, giving (b_1..b_j, a_i, ..., a_k).
/// Requires k >= 3, 1 <= i <= k-1, a_i >= i, a_i + 1 = a_{i+1}, `prefix`
/// strictly increasing below a_i, j < a_i and j + i - 1 even. Throws
/// PreconditionError naming the first failed condition.
Position replace_prefix(const Position& p, std::size_t i, std::span<const Square> prefix);

/// Applies drop_small_coin and empty-prefix replacement at the largest
/// admissible odd i until neither changes the position.
Position canonicalize(const Position& p);

}  // namespace maxwelter
