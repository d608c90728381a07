#include "subdivlab/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subdivlab/errors.hpp"
#include "subdivlab/matching.hpp"

namespace subdivlab {

SubdividedPattern::SubdividedPattern(std::vector<std::uint32_t> parts, std::uint64_t capacity)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("a pattern needs at least one part");
  part_offset_.push_back(0);
  for (std::uint32_t s : parts_) {
    if (s == 0) throw InputError("pattern part sizes must be positive");
    if (right_size_ > capacity / s)
      throw CapacityError("pattern right side exceeds capacity " + std::to_string(capacity));
    right_size_ *= s;
    part_offset_.push_back(part_offset_.back() + s);
  }
}

std::size_t SubdividedPattern::part_of(Vertex left) const {
  auto it = std::upper_bound(part_offset_.begin(), part_offset_.end(), std::size_t{left});
  return static_cast<std::size_t>(it - part_offset_.begin()) - 1;
}

std::vector<std::uint32_t> SubdividedPattern::tuple_of(Vertex right) const {
  std::vector<std::uint32_t> tuple(parts_.size());
  std::size_t rest = right;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    tuple[i] = static_cast<std::uint32_t>(rest % parts_[i]);
    rest /= parts_[i];
  }
  return tuple;
}

Vertex SubdividedPattern::right_index(std::span<const std::uint32_t> tuple) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) index = index * parts_[i] + tuple[i];
  return static_cast<Vertex>(index);
}

Bigraph pattern_instantiate(const SubdividedPattern& pattern) {
  std::vector<Edge> edges;
  edges.reserve(pattern.right_size() * pattern.part_count());
  for (Vertex r = 0; r < pattern.right_size(); ++r) {
    auto tuple = pattern.tuple_of(r);
    for (std::size_t i = 0; i < tuple.size(); ++i) edges.emplace_back(pattern.left_index(i, tuple[i]), r);
  }
  return Bigraph(pattern.left_size(), pattern.right_size(), std::move(edges));
}

namespace {

enum class Mode { find, count };

// Backtracking over placements of pattern-left vertices. Each pattern-right
// vertex (a tuple) keeps the set of host-right vertices adjacent to the
// images of its placed members; a node survives only if these sets admit
// distinct representatives.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Bigraph& host, const SubdividedPattern& pattern, const SearchOptions& options,
                  Mode mode)
      : host_(host), pattern_(pattern), budget_(options.node_budget), mode_(mode) {
    const std::size_t nl = pattern.left_size();
    const std::size_t nr = pattern.right_size();
    tuple_members_.resize(nr);
    tuples_of_.resize(nl);
    for (Vertex r = 0; r < nr; ++r) {
      auto tuple = pattern.tuple_of(r);
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        Vertex l = pattern.left_index(i, tuple[i]);
        tuple_members_[r].push_back(l);
        tuples_of_[l].push_back(r);
      }
    }
    placed_.assign(nl, unplaced);
    placed_count_.assign(nr, 0);
    cand_.assign(nr, {});
    host_used_.assign(host.left_count(), 0);
    build_order();
  }

  std::optional<Embedding> find() {
    if (!fits()) return std::nullopt;
    if (search(0)) return result_;
    return std::nullopt;
  }

  std::uint64_t count() {
    if (!fits()) return 0;
    search(0);
    return count_;
  }

 private:
  static constexpr std::int64_t unplaced = -1;

  bool fits() const {
    return host_.left_count() >= pattern_.left_size() && host_.right_count() >= pattern_.right_size();
  }

  // Descending pattern degree; among equals, prefer vertices sharing more
  // tuples with those already ordered, then lower index.
  void build_order() {
    const std::size_t nl = pattern_.left_size();
    std::vector<char> chosen(nl, 0);
    std::vector<std::size_t> shared(nl, 0);
    for (std::size_t step = 0; step < nl; ++step) {
      std::int64_t best = -1;
      for (Vertex l = 0; l < nl; ++l) {
        if (chosen[l]) continue;
        if (best < 0) {
          best = l;
          continue;
        }
        auto b = static_cast<Vertex>(best);
        auto dl = pattern_.left_degree(pattern_.part_of(l));
        auto db = pattern_.left_degree(pattern_.part_of(b));
        if (dl != db ? dl > db : shared[l] > shared[b]) best = l;
      }
      auto pick = static_cast<Vertex>(best);
      chosen[pick] = 1;
      order_.push_back(pick);
      std::vector<char> seen(nl, 0);
      for (Vertex r : tuples_of_[pick])
        for (Vertex other : tuple_members_[r])
          if (!chosen[other] && !seen[other]) {
            seen[other] = 1;
            ++shared[other];
          }
    }
  }

  void tick() {
    if (++nodes_ > budget_)
      throw BudgetError("embedding search exceeded node budget of " + std::to_string(budget_));
  }

  // All tuples that currently have at least one placed member.
  bool representatives_exist() {
    active_.clear();
    for (Vertex r = 0; r < cand_.size(); ++r)
      if (placed_count_[r] > 0) active_.push_back(cand_[r]);
    return matcher_.solve(active_) == active_.size();
  }

  std::vector<Vertex> candidates_for(Vertex l) const {
    // Pick the most constrained active tuple of l; the image of l must be
    // adjacent to one of its candidate right vertices.
    const std::vector<Vertex>* tightest = nullptr;
    for (Vertex r : tuples_of_[l])
      if (placed_count_[r] > 0 && (!tightest || cand_[r].size() < tightest->size())) tightest = &cand_[r];
    std::vector<Vertex> out;
    if (!tightest) {
      out.resize(host_.left_count());
      std::iota(out.begin(), out.end(), Vertex{0});
      return out;
    }
    for (Vertex w : *tightest) {
      auto nb = host_.right_neighbors(w);
      out.insert(out.end(), nb.begin(), nb.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Lower bound on the image of l from the in-part ordering used to break
  // the symmetry of permuting a part (find mode only).
  std::int64_t symmetry_floor(Vertex l) const {
    if (mode_ != Mode::find) return -1;
    std::size_t part = pattern_.part_of(l);
    std::int64_t floor = -1;
    for (std::uint32_t j = 0; j < pattern_.parts()[part]; ++j) {
      Vertex other = pattern_.left_index(part, j);
      if (other < l && placed_[other] != unplaced) floor = std::max(floor, placed_[other]);
    }
    return floor;
  }

  bool place(Vertex l, Vertex x, std::vector<std::vector<Vertex>>& saved) {
    placed_[l] = x;
    host_used_[x] = 1;
    auto nb = host_.left_neighbors(x);
    bool ok = true;
    saved.clear();
    for (Vertex r : tuples_of_[l]) {
      saved.push_back(std::move(cand_[r]));
      if (placed_count_[r] == 0) {
        cand_[r].assign(nb.begin(), nb.end());
      } else {
        cand_[r].clear();
        std::set_intersection(saved.back().begin(), saved.back().end(), nb.begin(), nb.end(),
                              std::back_inserter(cand_[r]));
      }
      ++placed_count_[r];
      if (cand_[r].empty()) ok = false;
    }
    return ok;
  }

  void unplace(Vertex l, Vertex x, std::vector<std::vector<Vertex>>& saved) {
    std::size_t k = 0;
    for (Vertex r : tuples_of_[l]) {
      --placed_count_[r];
      cand_[r] = std::move(saved[k++]);
    }
    host_used_[x] = 0;
    placed_[l] = unplaced;
  }

  // Remaining vertices form one part i and every other part has a single
  // vertex: all tuples then share one candidate set C, and completing is a
  // bipartite matching between free host-left vertices and C.
  bool try_matching_completion(std::size_t depth) {
    if (mode_ != Mode::find) return false;
    std::size_t part = pattern_.part_of(order_[depth]);
    for (std::size_t d = depth; d < order_.size(); ++d)
      if (pattern_.part_of(order_[d]) != part) return false;
    for (std::size_t i = 0; i < pattern_.part_count(); ++i)
      if (i != part && pattern_.parts()[i] != 1) return false;
    if (depth != order_.size() - pattern_.parts()[part]) return false;
    return true;
  }

  bool complete_by_matching(std::size_t depth) {
    tick();
    const std::size_t part = pattern_.part_of(order_[depth]);
    const std::uint32_t need = pattern_.parts()[part];
    std::vector<Vertex> shared;
    if (pattern_.part_count() == 1) {
      shared.resize(host_.right_count());
      std::iota(shared.begin(), shared.end(), Vertex{0});
    } else {
      shared = cand_[0];  // every tuple has the same candidates here
    }
    const std::size_t min_degree = pattern_.left_degree(part);
    std::vector<Vertex> xs;
    std::vector<std::vector<Vertex>> slots;
    for (Vertex x = 0; x < host_.left_count(); ++x) {
      if (host_used_[x] || host_.left_neighbors(x).size() < min_degree) continue;
      auto nb = host_.left_neighbors(x);
      std::vector<Vertex> opts;
      std::set_intersection(nb.begin(), nb.end(), shared.begin(), shared.end(), std::back_inserter(opts));
      if (opts.empty()) continue;
      xs.push_back(x);
      slots.push_back(std::move(opts));
    }
    if (xs.size() < need) return false;
    if (matcher_.solve(slots) < need) return false;
    std::vector<std::pair<Vertex, Vertex>> chosen;  // (host-left, host-right)
    for (std::size_t i = 0; i < xs.size() && chosen.size() < need; ++i)
      if (matcher_.match_of(i) != BipartiteMatcher::unmatched)
        chosen.emplace_back(xs[i], static_cast<Vertex>(matcher_.match_of(i)));
    result_.left_map.assign(pattern_.left_size(), 0);
    result_.right_map.assign(pattern_.right_size(), 0);
    for (Vertex l = 0; l < pattern_.left_size(); ++l)
      if (placed_[l] != unplaced) result_.left_map[l] = static_cast<Vertex>(placed_[l]);
    for (std::uint32_t j = 0; j < need; ++j) {
      Vertex l = pattern_.left_index(part, j);
      result_.left_map[l] = chosen[j].first;
      // Exactly one tuple contains l.
      result_.right_map[tuples_of_[l].front()] = chosen[j].second;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return leaf();
    if (try_matching_completion(depth)) return complete_by_matching(depth);
    const Vertex l = order_[depth];
    const std::size_t min_degree = pattern_.left_degree(pattern_.part_of(l));
    const std::int64_t floor = symmetry_floor(l);
    std::vector<std::vector<Vertex>> saved;
    for (Vertex x : candidates_for(l)) {
      if (host_used_[x] || static_cast<std::int64_t>(x) <= floor) continue;
      if (host_.left_neighbors(x).size() < min_degree) continue;
      tick();
      bool ok = place(l, x, saved);
      if (ok && mode_ == Mode::find) ok = representatives_exist();
      if (ok && search(depth + 1)) {
        unplace(l, x, saved);
        return true;
      }
      unplace(l, x, saved);
    }
    return false;
  }

  bool leaf() {
    if (mode_ == Mode::find) {
      // representatives_exist() ran at the last placement; reuse its matching.
      if (!representatives_exist()) return false;
      result_.left_map.resize(pattern_.left_size());
      for (Vertex l = 0; l < pattern_.left_size(); ++l) result_.left_map[l] = static_cast<Vertex>(placed_[l]);
      result_.right_map.resize(pattern_.right_size());
      for (Vertex r = 0; r < pattern_.right_size(); ++r)
        result_.right_map[r] = static_cast<Vertex>(matcher_.match_of(r));
      return true;
    }
    std::vector<char> used(host_.right_count(), 0);
    count_ += count_assignments(0, used);
    return false;
  }

  std::uint64_t count_assignments(Vertex r, std::vector<char>& used) {
    if (r == cand_.size()) return 1;
    std::uint64_t total = 0;
    for (Vertex w : cand_[r]) {
      if (used[w]) continue;
      tick();
      used[w] = 1;
      total += count_assignments(r + 1, used);
      used[w] = 0;
    }
    return total;
  }

  const Bigraph& host_;
  const SubdividedPattern& pattern_;
  std::uint64_t budget_;
  Mode mode_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;

  std::vector<std::vector<Vertex>> tuple_members_;
  std::vector<std::vector<Vertex>> tuples_of_;
  std::vector<Vertex> order_;
  std::vector<std::int64_t> placed_;
  std::vector<std::size_t> placed_count_;
  std::vector<std::vector<Vertex>> cand_;
  std::vector<char> host_used_;
  std::vector<std::vector<Vertex>> active_;
  BipartiteMatcher matcher_;
  Embedding result_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Bigraph& host, const SubdividedPattern& pattern,
                                        const SearchOptions& options) {
  EmbeddingSearch search(host, pattern, options, Mode::find);
  return search.find();
}

std::uint64_t count_embeddings(const Bigraph& host, const SubdividedPattern& pattern,
                               const SearchOptions& options) {
  EmbeddingSearch search(host, pattern, options, Mode::count);
  return search.count();
}

bool is_valid_embedding(const Bigraph& host, const SubdividedPattern& pattern, const Embedding& e) {
  if (e.left_map.size() != pattern.left_size() || e.right_map.size() != pattern.right_size()) return false;
  auto injective_in_range = [](std::vector<Vertex> m, std::size_t universe) {
    for (Vertex x : m)
      if (x >= universe) return false;
    std::sort(m.begin(), m.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end();
  };
  if (!injective_in_range(e.left_map, host.left_count())) return false;
  if (!injective_in_range(e.right_map, host.right_count())) return false;
  for (Vertex r = 0; r < pattern.right_size(); ++r) {
    auto tuple = pattern.tuple_of(r);
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (!host.has_edge(e.left_map[pattern.left_index(i, tuple[i])], e.right_map[r])) return false;
  }
  return true;
}

namespace {

bool biclique_from(const Bigraph& host, std::uint32_t need, std::uint32_t t, Vertex start,
                   const std::vector<Vertex>& common) {
  if (need == 0) return true;
  for (Vertex u = start; u < host.left_count(); ++u) {
    auto nb = host.left_neighbors(u);
    if (nb.size() < t) continue;
    std::vector<Vertex> next;
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
    if (next.size() >= t && biclique_from(host, need - 1, t, u + 1, next)) return true;
  }
  return false;
}

}  // namespace

bool contains_biclique(const Bigraph& host, std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0) throw InputError("contains_biclique needs s, t >= 1");
  std::vector<Vertex> all(host.right_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  return biclique_from(host, s, t, 0, all);
}

}  // namespace subdivlab
