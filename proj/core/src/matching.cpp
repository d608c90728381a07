#include "subdivlab/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace subdivlab {

std::size_t BipartiteMatcher::solve(std::span<const std::vector<std::uint32_t>> slots) {
  right_ids_.clear();
  for (const auto& s : slots) right_ids_.insert(right_ids_.end(), s.begin(), s.end());
  std::sort(right_ids_.begin(), right_ids_.end());
  right_ids_.erase(std::unique(right_ids_.begin(), right_ids_.end()), right_ids_.end());

  adj_.assign(slots.size(), {});
  for (std::size_t i = 0; i < slots.size(); ++i) {
    adj_[i].reserve(slots[i].size());
    for (std::uint32_t r : slots[i]) {
      auto it = std::lower_bound(right_ids_.begin(), right_ids_.end(), r);
      adj_[i].push_back(static_cast<std::uint32_t>(it - right_ids_.begin()));
    }
  }

  slot_to_.assign(slots.size(), unmatched);
  right_to_.assign(right_ids_.size(), unmatched);
  layer_.assign(slots.size(), 0);

  std::size_t size = 0;
  // Greedy warm start.
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::uint32_t r : adj_[i]) {
      if (right_to_[r] == unmatched) {
        right_to_[r] = static_cast<std::int64_t>(i);
        slot_to_[i] = r;
        ++size;
        break;
      }
    }
  }
  while (bfs()) {
    for (std::size_t i = 0; i < adj_.size(); ++i)
      if (slot_to_[i] == unmatched && dfs(i)) ++size;
  }

  slot_match_.assign(slots.size(), unmatched);
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slot_to_[i] != unmatched) slot_match_[i] = right_ids_[static_cast<std::size_t>(slot_to_[i])];
  return size;
}

bool BipartiteMatcher::bfs() {
  constexpr std::int32_t inf = std::numeric_limits<std::int32_t>::max();
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if (slot_to_[i] == unmatched) {
      layer_[i] = 0;
      q.push(i);
    } else {
      layer_[i] = inf;
    }
  }
  bool found_free = false;
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    for (std::uint32_t r : adj_[i]) {
      std::int64_t owner = right_to_[r];
      if (owner == unmatched) {
        found_free = true;
      } else if (layer_[static_cast<std::size_t>(owner)] == inf) {
        layer_[static_cast<std::size_t>(owner)] = layer_[i] + 1;
        q.push(static_cast<std::size_t>(owner));
      }
    }
  }
  return found_free;
}

bool BipartiteMatcher::dfs(std::size_t slot) {
  for (std::uint32_t r : adj_[slot]) {
    std::int64_t owner = right_to_[r];
    if (owner == unmatched ||
        (layer_[static_cast<std::size_t>(owner)] == layer_[slot] + 1 &&
         dfs(static_cast<std::size_t>(owner)))) {
      slot_to_[slot] = r;
      right_to_[r] = static_cast<std::int64_t>(slot);
      return true;
    }
  }
  layer_[slot] = std::numeric_limits<std::int32_t>::max();
  return false;
}

bool has_distinct_representatives(std::span<const std::vector<std::uint32_t>> slots) {
  for (const auto& s : slots)
    if (s.empty()) return false;
  BipartiteMatcher m;
  return m.solve(slots) == slots.size();
}

}  // namespace subdivlab
