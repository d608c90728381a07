#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subdivlab/bigraph.hpp"

namespace subdivlab {

inline constexpr std::uint64_t default_pattern_capacity = std::uint64_t{1} << 22;
inline constexpr std::uint64_t default_node_budget = 10'000'000;

// Subdivision of the complete r-partite r-uniform hypergraph with parts of
// sizes s_1..s_r. Left vertices are (i, j) with j < s_i, enumerated part by
// part; right vertices are tuples (j_1..j_r) in lexicographic order, and
// (j_1..j_r) is adjacent to exactly the left vertices (i, j_i).
// Parts [s, t] give K_{s,t}'; [s, ..., s] gives (K_s^r)'.
class SubdividedPattern {
 public:
  explicit SubdividedPattern(std::vector<std::uint32_t> parts,
                             std::uint64_t capacity = default_pattern_capacity);

  static SubdividedPattern complete_bipartite(std::uint32_t s, std::uint32_t t) {
    return SubdividedPattern({s, t});
  }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::size_t left_size() const { return part_offset_.back(); }
  std::size_t right_size() const { return right_size_; }

  Vertex left_index(std::size_t part, std::uint32_t j) const {
    return static_cast<Vertex>(part_offset_[part] + j);
  }
  std::size_t part_of(Vertex left) const;

  // Every right vertex containing pattern-left (part, *) has this degree.
  std::size_t left_degree(std::size_t part) const { return right_size_ / parts_[part]; }

  std::vector<std::uint32_t> tuple_of(Vertex right) const;
  Vertex right_index(std::span<const std::uint32_t> tuple) const;

  friend bool operator==(const SubdividedPattern&, const SubdividedPattern&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::vector<std::size_t> part_offset_;
  std::size_t right_size_ = 1;
};

Bigraph pattern_instantiate(const SubdividedPattern& pattern);

// Sided copy of a pattern: pattern-left into host-left, pattern-right into
// host-right, both injective, edges preserved.
struct Embedding {
  std::vector<Vertex> left_map;
  std::vector<Vertex> right_map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct SearchOptions {
  std::uint64_t node_budget = default_node_budget;
};

// Complete search: nullopt means no copy exists. Throws BudgetError when the
// node budget runs out before a verdict.
std::optional<Embedding> find_embedding(const Bigraph& host, const SubdividedPattern& pattern,
                                        const SearchOptions& options = {});

// Number of distinct (left_map, right_map) pairs. Exhaustive; meant for
// small hosts. Throws BudgetError.
std::uint64_t count_embeddings(const Bigraph& host, const SubdividedPattern& pattern,
                               const SearchOptions& options = {});

// Independent check of injectivity and edge preservation.
bool is_valid_embedding(const Bigraph& host, const SubdividedPattern& pattern,
                        const Embedding& embedding);

// True iff some s left vertices have at least t common right neighbours.
bool contains_biclique(const Bigraph& host, std::uint32_t s, std::uint32_t t);

}  // namespace subdivlab
