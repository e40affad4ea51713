#pragma once

// Reference Grundy evaluator for tests. Deliberately shares no code with
// the library: plain recursion over std::vector positions, std::set for the
// successor values, and its own move generator.

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace naive {

using Squares = std::vector<std::uint64_t>;

struct Oracle {
  bool welter = false;
  bool misere = false;
  std::map<Squares, std::uint64_t> memo;

  std::vector<Squares> successors(const Squares& p) const {
    std::vector<Squares> out;
    std::set<std::uint64_t> occupied(p.begin(), p.end());
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (!welter && c + 1 != p.size()) continue;
      for (std::uint64_t j = 0; j < p[c]; ++j) {
        if (occupied.count(j)) continue;
        Squares q = p;
        q[c] = j;
        std::set<std::uint64_t> sorted(q.begin(), q.end());
        out.emplace_back(sorted.begin(), sorted.end());
      }
    }
    return out;
  }

  std::uint64_t value(const Squares& p) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    auto succ = successors(p);
    std::uint64_t v;
    if (succ.empty()) {
      v = misere ? 1 : 0;
    } else {
      std::set<std::uint64_t> seen;
      for (const auto& q : succ) seen.insert(value(q));
      v = 0;
      while (seen.count(v)) ++v;
    }
    memo[p] = v;
    return v;
  }
};

}  // namespace naive
