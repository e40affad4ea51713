#include "maxwelter/welter_fn.hpp"

#include <bit>

#include "maxwelter/errors.hpp"

namespace maxwelter {

GrundyValue pair_value(Square a, Square b) {
  if (a == b) throw PreconditionError("cannot mate a square with itself");
  return nim_add(a, b) - 1;
}

MatingResult mate(const Position& p, const std::function<std::size_t(std::size_t)>& choose) {
  std::vector<Square> left(p.squares().begin(), p.squares().end());
  MatingResult out;
  std::vector<std::pair<std::size_t, std::size_t>> best;
  while (left.size() >= 2) {
    // Trailing zeros of a xor b = exponent of the largest power of two
    // modulo which a and b agree.
    int best_match = -1;
    best.clear();
    for (std::size_t x = 0; x < left.size(); ++x) {
      for (std::size_t y = x + 1; y < left.size(); ++y) {
        int match = std::countr_zero(left[x] ^ left[y]);
        if (match > best_match) {
          best_match = match;
          best.clear();
        }
        if (match == best_match) best.emplace_back(x, y);
      }
    }
    auto [x, y] = best[best.size() == 1 ? 0 : choose(best.size()) % best.size()];
    out.pairs.emplace_back(left[x], left[y]);
    out.value ^= pair_value(left[x], left[y]);
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(y));
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(x));
  }
  if (!left.empty()) {
    out.spinster = left.front();
    out.value ^= left.front();
  }
  return out;
}

MatingResult mate(const Position& p) {
  return mate(p, [](std::size_t) { return std::size_t{0}; });
}

GrundyValue welter_value(const Position& p) { return mate(p).value; }

}  // namespace maxwelter
