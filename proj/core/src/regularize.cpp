#include "subdivlab/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subdivlab/errors.hpp"

namespace subdivlab {

namespace {

BigInt big(std::uint64_t x) { return BigInt(std::to_string(x), 10); }

// floor(size / 16^{s/(2s-1)}), i.e. the largest k with k^{2s-1} 16^s <= size^{2s-1}.
std::size_t shrink_left_phase1(std::size_t size, int s) {
  const auto e = static_cast<std::uint64_t>(2 * s - 1);
  BigInt bound = ipow(big(size), e) / ipow(BigInt(16), static_cast<std::uint64_t>(s));
  return iroot_floor(bound, e).get_ui();
}

// floor((15/16)^{s/(2s-1)} size).
std::size_t shrink_left_carve(std::size_t size, int s) {
  const auto e = static_cast<std::uint64_t>(2 * s - 1);
  const auto su = static_cast<std::uint64_t>(s);
  BigInt bound = ipow(BigInt(15), su) * ipow(big(size), e) / ipow(BigInt(16), su);
  return iroot_floor(bound, e).get_ui();
}

// floor(size^{1-1/s}).
std::size_t shrink_left_phase2(std::size_t size, int s) {
  return iroot_floor(ipow(big(size), static_cast<std::uint64_t>(s - 1)), static_cast<unsigned long>(s)).get_ui();
}

double alpha(int s) { return static_cast<double>(s) / (2.0 * s - 1.0); }

std::size_t incident_edges(const Bigraph& g, Side side, const std::vector<Vertex>& set) {
  std::size_t total = 0;
  for (Vertex x : set) total += g.degree(side, x);
  return total;
}

std::vector<Vertex> all_of(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Vertex> complement(std::size_t n, const std::vector<Vertex>& sorted_subset) {
  std::vector<Vertex> out;
  std::size_t k = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (k < sorted_subset.size() && sorted_subset[k] == x) {
      ++k;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex x : local) out.push_back(outer[x]);
  return out;
}

// |V| >= |U|^{2-1/s} exactly: |V|^s >= |U|^{2s-1}.
bool density_exponent_holds(std::size_t right, std::size_t left, int s) {
  return ipow(big(right), static_cast<std::uint64_t>(s)) >= ipow(big(left), static_cast<std::uint64_t>(2 * s - 1));
}

}  // namespace

const char* to_string(Termination t) {
  return t == Termination::half_rule ? "half-rule" : "iteration-cap";
}

std::size_t iteration_cap(int s) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(s) * std::log(static_cast<double>(s))));
}

double construction_constant(int s) {
  const double a = alpha(s);
  const double cap = static_cast<double>(iteration_cap(s));
  const double retention = std::pow(15.0 / 16.0, a) / std::pow(2.0, cap + 1.0);
  const double regularity = 1.0 / (30.0 * std::pow(16.0 / 15.0, a) * std::pow(2.0, cap));
  return std::min(retention, regularity);
}

AchievedConstants achieved_constants(const Bigraph& sub, int s, const Rational& delta,
                                     std::size_t source_left_count) {
  AchievedConstants c;
  const std::size_t u = sub.left_count();
  const std::size_t v = sub.right_count();
  const std::size_t e = sub.edge_count();
  c.c_I = density_exponent_holds(v, u, s);
  if (v > 0) {
    c.c_II = Rational(big(e)) / (delta * Rational(big(v)));
    c.c_II.canonicalize();
  }
  const std::size_t dv = sub.max_degree(Side::right);
  if (dv > 0 && v > 0) {
    Rational r(big(e), big(v) * big(dv));
    r.canonicalize();
    c.c_III = r;
  }
  const std::size_t du = sub.max_degree(Side::left);
  const double k = static_cast<double>(u) * std::pow(static_cast<double>(du), 1.0 - 1.0 / s);
  if (k > 0) {
    const double d = to_double(delta);
    const double target = static_cast<double>(e);
    auto f = [&](double x) { return x * std::pow(d, x) * k; };
    double lo = 0.0, hi = 1.0;
    while (f(hi) <= target && hi < 1e12) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (f(mid) <= target ? lo : hi) = mid;
    }
    c.c_IV = lo;
  }
  if (source_left_count > 1 && u >= 1)
    c.c_size = std::log(static_cast<double>(u)) / std::log(static_cast<double>(source_left_count));
  return c;
}

ReductionResult reduce(const Bigraph& g, int s, const Rational& delta) {
  if (s < 2) throw InputError("reduce needs s >= 2");
  if (delta < 1) throw InputError("reduce needs delta >= 1");
  if (g.left_count() == 0 || g.right_count() == 0) throw InputError("reduce needs nonempty sides");
  if (!density_exponent_holds(g.right_count(), g.left_count(), s))
    throw InputError("reduce needs |V| >= |U|^{2-1/s}");
  if (Rational(big(g.edge_count())) < delta * Rational(big(g.right_count())))
    throw InputError("reduce needs |E| >= delta |V|");

  ReductionResult result;
  ReductionTrace& trace = result.trace;
  const double a = alpha(s);

  // Phase 1: keep the top 1/16 of the right side while it carries half the edges.
  std::vector<Vertex> U = all_of(g.left_count());
  std::vector<Vertex> V = all_of(g.right_count());
  Bigraph cur = g;
  std::vector<Vertex> next_right_local;
  for (std::size_t i = 0;; ++i) {
    Phase1Round round{i, cur.left_count(), cur.right_count(), cur.edge_count(), 0, 0, std::nullopt};
    const std::size_t kv = cur.right_count() / 16;
    if (kv == 0) throw DegenerateInputError("phase 1: floor(|V_i|/16) is zero at round " + std::to_string(i));
    next_right_local = sorted(top_k_by_degree(cur, Side::right, kv));
    round.next_right = kv;
    round.adjacent_edges = incident_edges(cur, Side::right, next_right_local);
    if (2 * round.adjacent_edges < cur.edge_count()) {
      trace.phase1_rounds.push_back(round);
      trace.ell = i;
      break;
    }
    const std::size_t ku = shrink_left_phase1(cur.left_count(), s);
    if (ku == 0) throw DegenerateInputError("phase 1: |U_{i+1}| floors to zero at round " + std::to_string(i));
    Bigraph into_top = cur.induced_subgraph(all_of(cur.left_count()), next_right_local);
    std::vector<Vertex> next_left_local = sorted(top_k_by_degree(into_top, Side::left, ku));
    Bigraph next = cur.induced_subgraph(next_left_local, next_right_local);
    round.achieved_ratio = static_cast<double>(next.edge_count()) * std::pow(16.0, a) /
                           static_cast<double>(cur.edge_count());
    trace.phase1_rounds.push_back(round);
    U = compose(U, next_left_local);
    V = compose(V, next_right_local);
    cur = std::move(next);
  }

  // Carve Ṽ = V_ell \ V_{ell+1} and the left vertices sending most edges into it.
  std::vector<Vertex> vtilde_local = complement(cur.right_count(), next_right_local);
  if (vtilde_local.empty()) throw DegenerateInputError("carve: Ṽ is empty");
  const std::size_t kc = shrink_left_carve(cur.left_count(), s);
  if (kc == 0) throw DegenerateInputError("carve: |U'| floors to zero");
  Bigraph into_vtilde = cur.induced_subgraph(all_of(cur.left_count()), vtilde_local);
  std::vector<Vertex> uprime_local = sorted(top_k_by_degree(into_vtilde, Side::left, kc));
  Bigraph gprime = cur.induced_subgraph(uprime_local, vtilde_local);
  trace.carve = {cur.edge_count(), next_right_local.size(), vtilde_local.size(), gprime.left_count(),
                 gprime.edge_count()};
  const std::vector<Vertex> vtilde = compose(V, vtilde_local);
  std::vector<Vertex> uprime = compose(U, uprime_local);

  {
    // Δ_{G'}(Ṽ) |Ṽ| <= 30 (16/15)^{s/(2s-1)} |E'|, compared exactly as
    // (Δ|Ṽ|)^{2s-1} 15^s <= (30|E'|)^{2s-1} 16^s.
    const std::size_t dv = gprime.max_degree(Side::right);
    const auto e = static_cast<std::uint64_t>(2 * s - 1);
    const auto su = static_cast<std::uint64_t>(s);
    BigInt lhs = ipow(big(dv) * big(vtilde.size()), e) * ipow(BigInt(15), su);
    BigInt rhs = ipow(BigInt(30) * big(gprime.edge_count()), e) * ipow(BigInt(16), su);
    trace.degree_bound = {lhs <= rhs, static_cast<double>(dv),
                          30.0 * std::pow(16.0 / 15.0, a) * static_cast<double>(gprime.edge_count()) /
                              static_cast<double>(vtilde.size())};
  }

  // Phase 2: keep the top |U'_i|^{1-1/s} left vertices while they carry half the edges.
  trace.iteration_cap = iteration_cap(s);
  Bigraph cur2 = gprime;
  std::vector<Vertex> U2 = uprime;
  trace.phase2_rounds.push_back({0, cur2.left_count(), cur2.edge_count()});
  bool halted = false;
  Bigraph tilde;
  std::vector<Vertex> utilde;
  for (std::size_t i = 0; i < trace.iteration_cap; ++i) {
    const std::size_t k = shrink_left_phase2(cur2.left_count(), s);
    std::vector<Vertex> top = sorted(top_k_by_degree(cur2, Side::left, k));
    const std::size_t adjacent = incident_edges(cur2, Side::left, top);
    if (2 * adjacent < cur2.edge_count()) {
      std::vector<Vertex> rest = complement(cur2.left_count(), top);
      tilde = cur2.induced_subgraph(rest, all_of(cur2.right_count()));
      utilde = compose(U2, rest);
      trace.termination = Termination::half_rule;
      // Δ(Ũ) <= 2|Ẽ| / |Ũ|^{1-1/s}  <=>  Δ^s |Ũ|^{s-1} <= (2|Ẽ|)^s.
      const std::size_t du = tilde.max_degree(Side::left);
      const auto su = static_cast<std::uint64_t>(s);
      BigInt lhs = ipow(big(du), su) * ipow(big(tilde.left_count()), su - 1);
      BigInt rhs = ipow(BigInt(2) * big(tilde.edge_count()), su);
      trace.left_degree_bound =
          BoundCheck{lhs <= rhs, static_cast<double>(du),
                     2.0 * static_cast<double>(tilde.edge_count()) /
                         std::pow(static_cast<double>(tilde.left_count()), 1.0 - 1.0 / s)};
      halted = true;
      break;
    }
    cur2 = cur2.induced_subgraph(top, all_of(cur2.right_count()));
    U2 = compose(U2, top);
    trace.phase2_rounds.push_back({i + 1, cur2.left_count(), cur2.edge_count()});
  }
  if (!halted) {
    tilde = cur2;
    utilde = U2;
    trace.termination = Termination::iteration_cap;
    // |Ũ| <= |Ṽ|^{1/s}  <=>  |Ũ|^s <= |Ṽ|.
    BigInt lhs = ipow(big(tilde.left_count()), static_cast<std::uint64_t>(s));
    trace.left_size_bound =
        BoundCheck{lhs <= big(tilde.right_count()), static_cast<double>(tilde.left_count()),
                   std::pow(static_cast<double>(tilde.right_count()), 1.0 / s)};
  }
  if (tilde.left_count() == 0) throw DegenerateInputError("phase 2 produced an empty Ũ");

  // ell <= log2(|U_0|)/3  <=>  8^ell <= |U_0|.
  trace.ell_bound = {ipow(BigInt(8), trace.ell) <= big(g.left_count()), static_cast<double>(trace.ell),
                     std::log2(static_cast<double>(g.left_count())) / 3.0};

  ReductionCertificate& cert = result.cert;
  cert.subgraph = std::move(tilde);
  cert.left_vertices = std::move(utilde);
  cert.right_vertices = vtilde;
  cert.source_left_count = g.left_count();
  cert.s = s;
  cert.delta = delta;
  cert.achieved = achieved_constants(cert.subgraph, s, delta, g.left_count());
  return result;
}

ConditionReport verify_conditions(const ReductionCertificate& cert, std::optional<double> c_s) {
  ConditionReport r;
  r.c_s = c_s.value_or(construction_constant(cert.s));
  r.recomputed = achieved_constants(cert.subgraph, cert.s, cert.delta, cert.source_left_count);
  r.integrity = r.recomputed == cert.achieved &&
                cert.left_vertices.size() == cert.subgraph.left_count() &&
                cert.right_vertices.size() == cert.subgraph.right_count();
  const Rational cs_exact(r.c_s);
  r.condition_I = r.recomputed.c_I;
  r.condition_II = r.recomputed.c_II >= cs_exact;
  r.condition_III = !r.recomputed.c_III || *r.recomputed.c_III >= cs_exact;
  r.condition_IV = !r.recomputed.c_IV || *r.recomputed.c_IV >= r.c_s;
  return r;
}

}  // namespace subdivlab
