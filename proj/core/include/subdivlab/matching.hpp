#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subdivlab {

// Maximum bipartite matching (Hopcroft–Karp). Slots are the left side;
// each slot lists the right ids it may take. Right ids are arbitrary
// 32-bit values and are compressed internally.
class BipartiteMatcher {
 public:
  static constexpr std::int64_t unmatched = -1;

  // Size of a maximum matching; match_of() is valid afterwards.
  std::size_t solve(std::span<const std::vector<std::uint32_t>> slots);

  // Right id assigned to slot i, or `unmatched`.
  std::int64_t match_of(std::size_t slot) const { return slot_match_[slot]; }

 private:
  bool bfs();
  bool dfs(std::size_t slot);

  std::vector<std::vector<std::uint32_t>> adj_;  // compressed right ids
  std::vector<std::uint32_t> right_ids_;
  std::vector<std::int64_t> slot_to_;
  std::vector<std::int64_t> right_to_;
  std::vector<std::int64_t> slot_match_;
  std::vector<std::int32_t> layer_;
};

// True iff the slots admit a system of distinct representatives.
bool has_distinct_representatives(std::span<const std::vector<std::uint32_t>> slots);

}  // namespace subdivlab
