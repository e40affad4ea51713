#include "maxwelter/reduce.hpp"

#include <algorithm>
#include <string>

#include "maxwelter/errors.hpp"

namespace maxwelter {

std::optional<Position> drop_small_coin(const Position& p) {
  const std::size_t k = p.size();
  if (k < 3) throw PreconditionError("drop_small_coin needs at least 3 coins");
  if (p.min() > k - 1) return std::nullopt;
  std::vector<Square> out;
  out.reserve(k - 1);
  for (std::size_t i = 1; i < k; ++i) out.push_back(p[i] - 1);
  return Position(std::move(out));
}

std::vector<std::size_t> adjacent_pair_indices(const Position& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const Square a = p[i - 1];
    if (a >= i && a + 1 == p[i]) out.push_back(i);
  }
  return out;
}

Position replace_prefix(const Position& p, std::size_t i, std::span<const Square> prefix) {
  const std::size_t k = p.size();
  auto fail = [&](const std::string& why) {
    throw PreconditionError("replace_prefix(" + p.to_string() + ", i=" + std::to_string(i) +
                            "): " + why);
  };
  if (k < 3) fail("needs at least 3 coins");
  if (i < 1 || i > k - 1) fail("i must lie in 1..k-1");
  const Square ai = p[i - 1];
  if (ai < i) fail("a_i >= i does not hold");
  if (ai + 1 != p[i]) fail("a_i + 1 = a_{i+1} does not hold");
  const std::size_t j = prefix.size();
  if (j >= ai) fail("prefix length j must be below a_i");
  if ((j + i - 1) % 2 != 0) fail("j + i - 1 must be even");
  if (!std::is_sorted(prefix.begin(), prefix.end()) ||
      std::adjacent_find(prefix.begin(), prefix.end()) != prefix.end()) {
    fail("prefix must be strictly increasing");
  }
  if (j > 0 && prefix.back() >= ai) fail("prefix squares must lie below a_i");

  std::vector<Square> out(prefix.begin(), prefix.end());
  out.insert(out.end(), p.squares().begin() + static_cast<std::ptrdiff_t>(i - 1),
             p.squares().end());
  return Position(std::move(out));
}

Position canonicalize(const Position& p) {
  Position cur = p;
  while (cur.size() >= 3) {
    if (auto smaller = drop_small_coin(cur)) {
      cur = std::move(*smaller);
      continue;
    }
    std::size_t best = 0;
    for (std::size_t i : adjacent_pair_indices(cur)) {
      if (i % 2 == 1) best = i;
    }
    if (best <= 1) break;
    cur = replace_prefix(cur, best, {});
  }
  return cur;
}

}  // namespace maxwelter
