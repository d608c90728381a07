#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subdivlab/rational.hpp"

namespace subdivlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Side { left, right };

// Sided bipartite graph G = (U ⊔ V, E). Immutable after construction;
// adjacency lists on both sides are sorted and duplicate-free.
class Bigraph {
 public:
  Bigraph() = default;

  // Edges are (left, right) pairs in any order. Throws InputError on an
  // out-of-range endpoint or a repeated edge.
  Bigraph(std::size_t left_count, std::size_t right_count, std::vector<Edge> edges);

  static Bigraph complete(std::size_t left_count, std::size_t right_count);
  static Bigraph empty(std::size_t left_count, std::size_t right_count) {
    return Bigraph(left_count, right_count, {});
  }

  std::size_t left_count() const { return left_.size(); }
  std::size_t right_count() const { return right_.size(); }
  std::size_t size(Side side) const { return side == Side::left ? left_count() : right_count(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> left_neighbors(Vertex u) const { return left_.at(u); }
  std::span<const Vertex> right_neighbors(Vertex v) const { return right_.at(v); }
  std::span<const Vertex> neighbors(Side side, Vertex x) const {
    return side == Side::left ? left_neighbors(x) : right_neighbors(x);
  }

  std::size_t degree(Side side, Vertex x) const { return neighbors(side, x).size(); }
  std::size_t max_degree(Side side) const;

  bool has_edge(Vertex u, Vertex v) const;

  // Lexicographically sorted edge list.
  std::vector<Edge> edges() const;

  // Vertex i of the result is left_subset[i] (resp. right_subset[i]).
  Bigraph induced_subgraph(std::span<const Vertex> left_subset,
                           std::span<const Vertex> right_subset) const;

  // Same graph with the roles of the two sides exchanged.
  Bigraph transposed() const;

  friend bool operator==(const Bigraph&, const Bigraph&) = default;

 private:
  std::vector<std::vector<Vertex>> left_;
  std::vector<std::vector<Vertex>> right_;
  std::size_t edge_count_ = 0;
};

// Right vertices adjacent to every member of `subset` (left vertices).
std::vector<Vertex> common_neighborhood(const Bigraph& g, std::span<const Vertex> subset);

enum class WeightClass { zero, light, heavy };
const char* to_string(WeightClass c);

// Weight of a left pair is the size of its common neighborhood. Light
// pairs have weight in [1, C(s+t,2)), heavy pairs at least C(s+t,2).
struct PairWeightReport {
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t weight = 0;
  WeightClass weight_class = WeightClass::zero;
  std::uint64_t threshold = 0;
};

PairWeightReport pair_weight(const Bigraph& g, Vertex u, Vertex v, int s, int t);

struct TotalWeightReport {
  std::uint64_t total = 0;      // sum of weights over unordered left pairs
  Rational jensen_lower;        // e^2 / (4n)
  bool jensen_applicable = false;  // e >= 2n
  bool jensen_holds = true;        // total >= jensen_lower (checked when applicable)
};

TotalWeightReport total_weight(const Bigraph& g);

struct LightEdgeReport {
  std::uint64_t total = 0;
  bool hypothesis_met = false;  // total >= 8 (s+t+1)^2 n
  std::uint64_t light_count = 0;
  Rational required;            // total / (4 (s+t+1)^3)
  bool count_meets_required = false;
};

LightEdgeReport light_edge_claim_check(const Bigraph& g, int s, int t);

// Left vertices x outside u_list that admit distinct right vertices
// v_1..v_s with v_i adjacent to both u_i and x.
std::vector<Vertex> nprime_neighborhood(const Bigraph& g, std::span<const Vertex> u_list);

// The k vertices of largest degree on `side`, ties broken by ascending
// index. With a restriction, only its members are ranked.
std::vector<Vertex> top_k_by_degree(const Bigraph& g, Side side, std::size_t k,
                                    std::optional<std::span<const Vertex>> restricted_to = std::nullopt);

}  // namespace subdivlab
