#include <algorithm>
#include <map>
#include <set>

#include "subdivlab/distances.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/rng.hpp"

namespace subdivlab {

namespace {

UnorderedPair unordered(std::uint32_t a, std::uint32_t b) { return a < b ? UnorderedPair{a, b} : UnorderedPair{b, a}; }

class Extraction {
 public:
  Extraction(const LiftedSystem& sys, const Embedding& emb, std::uint32_t p, std::uint32_t s,
             Orientation orientation)
      : sys_(sys), emb_(emb), p_(p), s_(s), orientation_(orientation), in_a_(sys.points.size(), 0) {}

  WitnessTrace run() {
    const std::uint64_t t = std::uint64_t{2 * s_ + p_} * (2 * s_ + p_) + 1;
    const SubdividedPattern pattern({s_, static_cast<std::uint32_t>(t)});
    if (emb_.left_map.size() != pattern.left_size() || emb_.right_map.size() != pattern.right_size())
      throw InputError("embedding does not match the pattern [s, (2s+p)^2+1]");

    trace_.p = p_;
    trace_.s = s_;
    trace_.orientation = orientation_;
    trace_.q = q_formula(p_, s_);

    std::vector<Vertex> u(s_);
    for (std::uint32_t j = 0; j < s_; ++j) u[j] = emb_.left_map[pattern.left_index(0, j)];
    std::set<std::uint32_t> s_points;
    for (Vertex x : u) {
      const OrderedPair pr = left_pair(x);
      s_points.insert(pr.a);
      s_points.insert(pr.b);
    }
    trace_.s_points.assign(s_points.begin(), s_points.end());
    if (s_points.size() > p_) throw StructuralError("the S vertices already carry more than p points");
    for (auto k : s_points) add_point(k);

    // Greedy T': each kept vertex brings a point outside the earlier ones and S.
    std::vector<std::uint32_t> kept;  // pattern indices into part 1
    std::set<std::uint32_t> covered = s_points;
    for (std::uint32_t i = 0; i < t; ++i) {
      const OrderedPair pr = left_pair(emb_.left_map[pattern.left_index(1, i)]);
      if (covered.count(pr.a) && covered.count(pr.b)) continue;
      kept.push_back(i);
      trace_.t_prime.push_back(pr);
      covered.insert(pr.a);
      covered.insert(pr.b);
    }
    if (kept.size() <= p_)
      throw StructuralError("only " + std::to_string(kept.size()) + " T vertices qualify for T'; need more than p");

    bool stopped = false;
    for (std::size_t r = 0; r < kept.size() && !stopped; ++r) {
      WitnessRound round;
      round.index = r;
      const Vertex v = emb_.left_map[pattern.left_index(1, kept[r])];
      for (std::uint32_t j = 0; j < s_ && !stopped; ++j) {
        const std::uint32_t tuple[2] = {j, kept[r]};
        const Vertex w = emb_.right_map[pattern.right_index(tuple)];
        for (Vertex end : {u[j], v}) {
          if (!process_edge(end, w, round)) {
            stopped = true;
            round.complete = false;
            break;
          }
        }
      }
      if (round.complete && round.labeled <= 2 * static_cast<std::size_t>(s_) - 2 && round.added > round.labeled) {
        round.claim_holds = false;
        trace_.claim_violated = true;
      }
      if (round.added == 2 * s_) ++trace_.x;
      if (round.added == 2 * s_ + 1) ++trace_.y;
      if (round.added == 2 * s_ + 2) ++trace_.z;
      if (round.added > 2 * s_ + 2) trace_.tally_bound_holds = false;
      trace_.labeled_total += round.labeled;
      trace_.rounds.push_back(std::move(round));
    }
    if (trace_.x + trace_.y + trace_.z > p_ / (2 * s_)) trace_.tally_bound_holds = false;

    if (a_size_ + 1 == p_) {
      for (std::uint32_t k = 0; k < in_a_.size(); ++k)
        if (!in_a_[k]) {
          add_point(k);
          trace_.padded = true;
          break;
        }
    }
    if (a_size_ != p_)
      throw StructuralError("procedure ended with " + std::to_string(a_size_) + " points, expected " +
                            std::to_string(p_));
    for (std::uint32_t k = 0; k < in_a_.size(); ++k)
      if (in_a_[k]) trace_.A.push_back(k);

    for (const auto& round : trace_.rounds)
      for (const auto& ev : round.labels)
        if (squared_distance(sys_.points[ev.pair.lo], sys_.points[ev.pair.hi]) !=
            squared_distance(sys_.points[ev.label.lo], sys_.points[ev.label.hi]))
          trace_.labels_consistent = false;
    trace_.distinct_count = distinct_distance_count(sys_.points, trace_.A);
    const std::size_t pairs = static_cast<std::size_t>(p_) * (p_ - 1) / 2;
    trace_.count_bound_holds = trace_.labeled_total <= pairs && trace_.distinct_count <= pairs - trace_.labeled_total;
    return trace_;
  }

 private:
  // Pair carried by a host vertex on the pattern's left (resp. right) side.
  OrderedPair left_pair(Vertex x) const {
    return orientation_ == Orientation::quadrics_left ? sys_.quadrics.at(x) : sys_.lifted.at(x);
  }
  OrderedPair right_pair(Vertex x) const {
    return orientation_ == Orientation::quadrics_left ? sys_.lifted.at(x) : sys_.quadrics.at(x);
  }

  void add_point(std::uint32_t k) {
    if (!in_a_[k]) {
      in_a_[k] = 1;
      ++a_size_;
    }
  }

  // False when adding the edge's points would push |A| past p.
  bool process_edge(Vertex left_end, Vertex w, WitnessRound& round) {
    const OrderedPair lp = left_pair(left_end);
    const OrderedPair rp = right_pair(w);
    const OrderedPair point = orientation_ == Orientation::quadrics_left ? rp : lp;   // v_{a,b}
    const OrderedPair quadric = orientation_ == Orientation::quadrics_left ? lp : rp; // Q_{c,d}
    const std::uint32_t a = point.a, b = point.b, c = quadric.a, d = quadric.b;

    std::set<std::uint32_t> fresh;
    for (auto k : {a, b, c, d})
      if (!in_a_[k]) fresh.insert(k);
    if (a_size_ + fresh.size() > p_) return false;
    for (auto k : fresh) add_point(k);
    round.added += fresh.size();

    if (a == c || b == d) throw StructuralError("lifted incidence with a = c or b = d");
    const UnorderedPair ac = unordered(a, c);
    const UnorderedPair bd = unordered(b, d);
    if (ac == bd) return true;
    auto label_ac = labels_.find(ac);
    auto label_bd = labels_.find(bd);
    if (label_ac == labels_.end() && label_bd == labels_.end()) {
      assign(ac, bd, round);
    } else if (label_ac == labels_.end() && label_bd->second != ac) {
      assign(ac, label_bd->second, round);
    } else if (label_bd == labels_.end() && label_ac != labels_.end() && label_ac->second != bd) {
      assign(bd, label_ac->second, round);
    }
    return true;
  }

  void assign(UnorderedPair pair, UnorderedPair label, WitnessRound& round) {
    labels_.emplace(pair, label);
    round.labels.push_back({pair, label});
    ++round.labeled;
  }

  const LiftedSystem& sys_;
  const Embedding& emb_;
  std::uint32_t p_, s_;
  Orientation orientation_;
  std::vector<char> in_a_;
  std::size_t a_size_ = 0;
  std::map<UnorderedPair, UnorderedPair> labels_;
  WitnessTrace trace_;
};

}  // namespace

WitnessTrace extract_witness(const LiftedSystem& sys, const Embedding& embedding, std::uint32_t p,
                             std::uint32_t s, Orientation orientation) {
  if (s < 1 || p < 1) throw InputError("extract_witness needs p, s >= 1");
  if (p > sys.points.size()) throw InputError("p exceeds the number of points");
  const Bigraph host = orientation == Orientation::quadrics_left ? sys.graph : sys.graph.transposed();
  const std::uint64_t t = std::uint64_t{2 * s + p} * (2 * s + p) + 1;
  const SubdividedPattern pattern({s, static_cast<std::uint32_t>(t)});
  if (!is_valid_embedding(host, pattern, embedding)) throw InputError("embedding is not a valid copy in the lifted graph");
  return Extraction(sys, embedding, p, s, orientation).run();
}

std::optional<Violation> find_violation(const PointSet& points, std::uint32_t p, std::uint32_t s,
                                        std::uint64_t seed, const ViolationOptions& options) {
  if (s < 1 || p < 1) throw InputError("find_violation needs p, s >= 1");
  if (p > points.size()) throw InputError("p exceeds the number of points");
  require_distinct_points(points);
  const std::uint64_t t = std::uint64_t{2 * s + p} * (2 * s + p) + 1;
  const SubdividedPattern pattern({s, static_cast<std::uint32_t>(t)});
  const std::int64_t q = q_formula(p, s);
  bool budget_hit = false;
  for (std::uint64_t k = 0; k < options.attempts; ++k) {
    const LiftedSystem sys = lift(points, derive_seed(seed, k));
    for (Orientation o : {Orientation::quadrics_left, Orientation::points_left}) {
      const Bigraph host = o == Orientation::quadrics_left ? sys.graph : sys.graph.transposed();
      std::optional<Embedding> emb;
      try {
        emb = find_embedding(host, pattern, options.search);
      } catch (const BudgetError&) {
        budget_hit = true;
        continue;
      }
      if (!emb) continue;
      WitnessTrace trace;
      try {
        trace = Extraction(sys, *emb, p, s, o).run();
      } catch (const StructuralError&) {
        continue;
      }
      if (static_cast<std::int64_t>(trace.distinct_count) < q)
        return Violation{trace.A, trace.distinct_count, q, k, std::move(trace)};
    }
  }
  if (budget_hit) throw BudgetError("embedding search ran out of budget before finding a violation");
  return std::nullopt;
}

}  // namespace subdivlab
