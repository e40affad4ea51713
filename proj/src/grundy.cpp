#include "maxwelter/grundy.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "maxwelter/errors.hpp"

namespace maxwelter {

namespace {

using Mask = unsigned __int128;
constexpr Square kPackedLimit = 128;

constexpr Mask bit(Square s) { return Mask{1} << s; }

unsigned mode_of(Ruleset r, Convention c) {
  return (r == Ruleset::Welter ? 2u : 0u) | (c == Convention::Misere ? 1u : 0u);
}

int highest_bit(Mask m) {
  auto hi = static_cast<std::uint64_t>(m >> 64);
  if (hi) return 127 - std::countl_zero(hi);
  return 63 - std::countl_zero(static_cast<std::uint64_t>(m));
}

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    auto lo = static_cast<std::uint64_t>(m);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL + (lo >> 29));
    h ^= h >> 32;
    return static_cast<std::size_t>(h * 0xd6e8feb86659fd93ULL);
  }
};

struct SquaresHash {
  std::size_t operator()(const std::vector<Square>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto s : v) h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Occupancy-mask search state.
struct PackedTraits {
  using State = Mask;

  static bool terminal(Mask m) { return (m & (m + 1)) == 0; }

  template <class Fn>
  static void for_each_successor(Mask m, Ruleset r, Fn&& fn) {
    auto move_coin = [&](int from) {
      Mask without = m & ~bit(from);
      for (int j = 0; j < from; ++j) {
        if (!(m & bit(j))) fn(without | bit(j));
      }
    };
    if (r == Ruleset::MaxWelter) {
      move_coin(highest_bit(m));
      return;
    }
    for (int from = 0; from < 128; ++from) {
      if (m & bit(from)) move_coin(from);
    }
  }
};

// Sorted-sequence search state for squares beyond the mask width.
struct SequenceTraits {
  using State = std::vector<Square>;

  static bool terminal(const State& s) { return s.back() + 1 == s.size(); }

  template <class Fn>
  static void for_each_successor(const State& s, Ruleset r, Fn&& fn) {
    auto move_coin = [&](std::size_t idx) {
      State rest(s);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
      std::size_t next = 0;
      for (Square j = 0; j < s[idx]; ++j) {
        while (next < rest.size() && rest[next] < j) ++next;
        if (next < rest.size() && rest[next] == j) continue;
        State succ(rest);
        succ.insert(succ.begin() + static_cast<std::ptrdiff_t>(next), j);
        fn(std::move(succ));
      }
    };
    if (r == Ruleset::MaxWelter) {
      move_coin(s.size() - 1);
      return;
    }
    for (std::size_t i = 0; i < s.size(); ++i) move_coin(i);
  }
};

constexpr std::size_t kShards = 64;

}  // namespace

std::string_view to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

GrundyValue mex(std::span<const GrundyValue> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (auto v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  GrundyValue m = 0;
  while (seen[m]) ++m;
  return m;
}

struct GrundyOracle::Memo {
  template <class Key, class Hash>
  struct Table {
    struct Shard {
      mutable std::shared_mutex mu;
      std::unordered_map<Key, GrundyValue, Hash> map;
    };
    std::array<Shard, kShards> shards;

    Shard& shard_for(const Key& k) { return shards[Hash{}(k) % kShards]; }

    std::optional<GrundyValue> find(const Key& k) {
      auto& sh = shard_for(k);
      std::shared_lock lock(sh.mu);
      auto it = sh.map.find(k);
      if (it == sh.map.end()) return std::nullopt;
      return it->second;
    }

    bool insert(const Key& k, GrundyValue v) {
      auto& sh = shard_for(k);
      std::unique_lock lock(sh.mu);
      return sh.map.emplace(k, v).second;
    }

    void clear() {
      for (auto& sh : shards) {
        std::unique_lock lock(sh.mu);
        sh.map.clear();
      }
    }
  };

  std::array<Table<Mask, MaskHash>, 4> packed;
  std::array<Table<std::vector<Square>, SquaresHash>, 4> general;
  std::atomic<std::size_t> size{0};
};

GrundyOracle::GrundyOracle(std::size_t memo_budget)
    : memo_(std::make_unique<Memo>()), budget_(memo_budget) {}

GrundyOracle::~GrundyOracle() = default;

std::size_t GrundyOracle::memo_size() const noexcept { return memo_->size.load(); }

void GrundyOracle::clear() {
  for (auto& t : memo_->packed) t.clear();
  for (auto& t : memo_->general) t.clear();
  memo_->size = 0;
}

namespace {

template <class Traits, class Table>
GrundyValue solve(typename Traits::State root, Ruleset r, Convention c, Table& table,
                  std::atomic<std::size_t>& size, std::size_t budget) {
  using State = typename Traits::State;
  if (auto v = table.find(root)) return *v;

  const GrundyValue terminal_value = c == Convention::Misere ? 1 : 0;
  auto store = [&](const State& s, GrundyValue v) {
    if (size.load(std::memory_order_relaxed) >= budget) {
      throw ResourceLimitError("Grundy memo budget of " + std::to_string(budget) +
                               " entries exhausted");
    }
    if (table.insert(s, v)) size.fetch_add(1, std::memory_order_relaxed);
  };

  std::vector<State> stack{root};
  std::vector<GrundyValue> values;
  std::vector<State> missing;
  while (!stack.empty()) {
    State s = stack.back();
    if (table.find(s)) {
      stack.pop_back();
      continue;
    }
    if (Traits::terminal(s)) {
      store(s, terminal_value);
      stack.pop_back();
      continue;
    }
    values.clear();
    missing.clear();
    Traits::for_each_successor(s, r, [&](State t) {
      if (auto v = table.find(t)) {
        values.push_back(*v);
      } else {
        missing.push_back(std::move(t));
      }
    });
    if (!missing.empty()) {
      for (auto& t : missing) stack.push_back(std::move(t));
      continue;
    }
    store(s, mex(values));
    stack.pop_back();
  }
  return *table.find(root);
}

}  // namespace

GrundyValue GrundyOracle::grundy(const Position& p, Ruleset r, Convention c) {
  const unsigned mode = mode_of(r, c);
  if (p.max() < kPackedLimit) {
    Mask m = 0;
    for (auto s : p.squares()) m |= bit(s);
    return solve<PackedTraits>(m, r, c, memo_->packed[mode], memo_->size, budget_);
  }
  std::vector<Square> seq(p.squares().begin(), p.squares().end());
  return solve<SequenceTraits>(std::move(seq), r, c, memo_->general[mode], memo_->size,
                               budget_);
}

Outcome GrundyOracle::outcome(const Position& p, Ruleset r, Convention c) {
  return grundy(p, r, c) == 0 ? Outcome::P : Outcome::N;
}

std::vector<Move> GrundyOracle::optimal_moves(const Position& p, Ruleset r, Convention c) {
  if (is_terminal(p, r)) {
    throw PreconditionError("position " + p.to_string() + " is terminal");
  }
  std::vector<Move> out;
  for (const Move& m : legal_moves(p, r)) {
    if (grundy(apply_move(p, m), r, c) == 0) out.push_back(m);
  }
  return out;
}

GrundyOracle& shared_oracle() {
  static GrundyOracle oracle;
  return oracle;
}

GrundyValue grundy(const Position& p, Ruleset r, Convention c) {
  return shared_oracle().grundy(p, r, c);
}

Outcome outcome(const Position& p, Ruleset r, Convention c) {
  return shared_oracle().outcome(p, r, c);
}

std::vector<Move> optimal_moves(const Position& p, Ruleset r, Convention c) {
  return shared_oracle().optimal_moves(p, r, c);
}

}  // namespace maxwelter
