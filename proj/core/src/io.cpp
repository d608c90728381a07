#include "subdivlab/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "subdivlab/errors.hpp"

namespace nlohmann {

void adl_serializer<subdivlab::Rational>::to_json(json& j, const subdivlab::Rational& q) {
  j = subdivlab::to_string(q);
}

void adl_serializer<subdivlab::Rational>::from_json(const json& j, subdivlab::Rational& q) {
  if (j.is_string()) {
    q = subdivlab::parse_rational(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = subdivlab::parse_rational(j.dump());
  } else {
    throw subdivlab::InputError("expected a rational string, got " + j.dump());
  }
}

void adl_serializer<subdivlab::RLine>::to_json(json& j, const subdivlab::RLine& l) {
  j = json::array({l.a(), l.b(), l.c()});
}

subdivlab::RLine adl_serializer<subdivlab::RLine>::from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw subdivlab::InputError("line must be [a, b, c]");
  return {j[0].get<subdivlab::Rational>(), j[1].get<subdivlab::Rational>(), j[2].get<subdivlab::Rational>()};
}

void adl_serializer<subdivlab::CLine>::to_json(json& j, const subdivlab::CLine& l) {
  j = json::array({l.a(), l.b(), l.c()});
}

subdivlab::CLine adl_serializer<subdivlab::CLine>::from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw subdivlab::InputError("complex line must be [a, b, c]");
  return {j[0].get<subdivlab::Complex>(), j[1].get<subdivlab::Complex>(), j[2].get<subdivlab::Complex>()};
}

}  // namespace nlohmann

namespace subdivlab {

void throw_input_error(const std::string& message) { throw InputError(message); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

void to_json(Json& j, const Bigraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = {{"left", g.left_count()}, {"right", g.right_count()}, {"edges", edges}};
}

void from_json(const Json& j, Bigraph& g) {
  auto left = field<std::size_t>(j, "left");
  auto right = field<std::size_t>(j, "right");
  auto edges = field<std::vector<std::pair<Vertex, Vertex>>>(j, "edges");
  g = Bigraph(left, right, std::move(edges));
}

void to_json(Json& j, const SubdividedPattern& p) { j = {{"parts", p.parts()}}; }

void from_json(const Json& j, SubdividedPattern& p) {
  p = SubdividedPattern(field<std::vector<std::uint32_t>>(j, "parts"));
}

void to_json(Json& j, const Embedding& e) { j = {{"left_map", e.left_map}, {"right_map", e.right_map}}; }

void from_json(const Json& j, Embedding& e) {
  e.left_map = field<std::vector<Vertex>>(j, "left_map");
  e.right_map = field<std::vector<Vertex>>(j, "right_map");
}

void to_json(Json& j, const RPoint& p) { j = Json::array({p.x, p.y}); }

void from_json(const Json& j, RPoint& p) {
  if (!j.is_array() || j.size() != 2) throw InputError("point must be [x, y]");
  p.x = j[0].get<Rational>();
  p.y = j[1].get<Rational>();
}

void to_json(Json& j, const Complex& c) { j = {{"re", c.re}, {"im", c.im}}; }

void from_json(const Json& j, Complex& c) {
  if (j.is_object()) {
    c.re = field<Rational>(j, "re");
    c.im = j.contains("im") ? field<Rational>(j, "im") : Rational(0);
  } else {
    c.re = j.get<Rational>();
    c.im = 0;
  }
}

void to_json(Json& j, const CPoint& p) { j = Json::array({p.z, p.w}); }

void from_json(const Json& j, CPoint& p) {
  if (!j.is_array() || j.size() != 2) throw InputError("complex point must be [z, w]");
  p.z = j[0].get<Complex>();
  p.w = j[1].get<Complex>();
}

void to_json(Json& j, const RealConfig& c) { j = {{"points", c.points}, {"lines", c.lines}}; }

void from_json(const Json& j, RealConfig& c) {
  c.points = field<std::vector<RPoint>>(j, "points");
  c.lines = j.contains("lines") ? field<std::vector<RLine>>(j, "lines") : std::vector<RLine>{};
}

void to_json(Json& j, const ComplexConfig& c) { j = {{"points", c.points}, {"lines", c.lines}}; }

void from_json(const Json& j, ComplexConfig& c) {
  c.points = field<std::vector<CPoint>>(j, "points");
  c.lines = j.contains("lines") ? field<std::vector<CLine>>(j, "lines") : std::vector<CLine>{};
}

bool is_complex_config(const Json& j) {
  for (const char* key : {"points", "lines"}) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array()) continue;
    for (const auto& item : j[key])
      if (item.is_array())
        for (const auto& v : item)
          if (v.is_object()) return true;
  }
  return false;
}

void to_json(Json& j, const GridWitness& w) { j = {{"L1", w.L1}, {"L2", w.L2}, {"points", w.points}}; }

void from_json(const Json& j, GridWitness& w) {
  w.L1 = field<std::vector<std::size_t>>(j, "L1");
  w.L2 = field<std::vector<std::size_t>>(j, "L2");
  w.points = field<std::vector<std::vector<std::size_t>>>(j, "points");
}

void to_json(Json& j, const TriangleWitness& w) { j = {{"lines", w.lines}, {"points", w.points}}; }

void from_json(const Json& j, TriangleWitness& w) {
  w.lines = field<std::array<std::size_t, 3>>(j, "lines");
  w.points = field<std::array<std::size_t, 3>>(j, "points");
}

void to_json(Json& j, const Phase1Round& r) {
  j = {{"index", r.index},
       {"left", r.left},
       {"right", r.right},
       {"edges", r.edges},
       {"next_right", r.next_right},
       {"adjacent_edges", r.adjacent_edges},
       {"achieved_ratio", optional_json(r.achieved_ratio)}};
}

void from_json(const Json& j, Phase1Round& r) {
  r.index = field<std::size_t>(j, "index");
  r.left = field<std::size_t>(j, "left");
  r.right = field<std::size_t>(j, "right");
  r.edges = field<std::size_t>(j, "edges");
  r.next_right = field<std::size_t>(j, "next_right");
  r.adjacent_edges = field<std::size_t>(j, "adjacent_edges");
  r.achieved_ratio = optional_field<double>(j, "achieved_ratio");
}

void to_json(Json& j, const CarveRecord& r) {
  j = {{"ell_edges", r.ell_edges},
       {"ell_next_right", r.ell_next_right},
       {"right", r.right},
       {"left", r.left},
       {"edges", r.edges}};
}

void from_json(const Json& j, CarveRecord& r) {
  r.ell_edges = field<std::size_t>(j, "ell_edges");
  r.ell_next_right = field<std::size_t>(j, "ell_next_right");
  r.right = field<std::size_t>(j, "right");
  r.left = field<std::size_t>(j, "left");
  r.edges = field<std::size_t>(j, "edges");
}

void to_json(Json& j, const Phase2Round& r) { j = {{"index", r.index}, {"left", r.left}, {"edges", r.edges}}; }

void from_json(const Json& j, Phase2Round& r) {
  r.index = field<std::size_t>(j, "index");
  r.left = field<std::size_t>(j, "left");
  r.edges = field<std::size_t>(j, "edges");
}

void to_json(Json& j, const BoundCheck& b) { j = {{"holds", b.holds}, {"lhs", b.lhs}, {"rhs", b.rhs}}; }

void from_json(const Json& j, BoundCheck& b) {
  b.holds = field<bool>(j, "holds");
  b.lhs = field<double>(j, "lhs");
  b.rhs = field<double>(j, "rhs");
}

void to_json(Json& j, const ReductionTrace& t) {
  j = {{"phase1_rounds", t.phase1_rounds},
       {"ell", t.ell},
       {"carve", t.carve},
       {"phase2_rounds", t.phase2_rounds},
       {"iteration_cap", t.iteration_cap},
       {"termination", to_string(t.termination)},
       {"ell_bound", t.ell_bound},
       {"degree_bound", t.degree_bound},
       {"left_degree_bound", optional_json(t.left_degree_bound)},
       {"left_size_bound", optional_json(t.left_size_bound)}};
}

void from_json(const Json& j, ReductionTrace& t) {
  t.phase1_rounds = field<std::vector<Phase1Round>>(j, "phase1_rounds");
  t.ell = field<std::size_t>(j, "ell");
  t.carve = field<CarveRecord>(j, "carve");
  t.phase2_rounds = field<std::vector<Phase2Round>>(j, "phase2_rounds");
  t.iteration_cap = field<std::size_t>(j, "iteration_cap");
  const auto term = field<std::string>(j, "termination");
  if (term == "half-rule")
    t.termination = Termination::half_rule;
  else if (term == "iteration-cap")
    t.termination = Termination::iteration_cap;
  else
    throw InputError("unknown termination '" + term + "'");
  t.ell_bound = field<BoundCheck>(j, "ell_bound");
  t.degree_bound = field<BoundCheck>(j, "degree_bound");
  t.left_degree_bound = optional_field<BoundCheck>(j, "left_degree_bound");
  t.left_size_bound = optional_field<BoundCheck>(j, "left_size_bound");
}

void to_json(Json& j, const AchievedConstants& c) {
  j = {{"c_I", c.c_I},
       {"c_II", c.c_II},
       {"c_III", optional_json(c.c_III)},
       {"c_IV", optional_json(c.c_IV)},
       {"c_size", optional_json(c.c_size)}};
}

void from_json(const Json& j, AchievedConstants& c) {
  c.c_I = field<bool>(j, "c_I");
  c.c_II = field<Rational>(j, "c_II");
  c.c_III = optional_field<Rational>(j, "c_III");
  c.c_IV = optional_field<double>(j, "c_IV");
  c.c_size = optional_field<double>(j, "c_size");
}

void to_json(Json& j, const ReductionCertificate& c) {
  j = {{"subgraph", c.subgraph},
       {"left_vertices", c.left_vertices},
       {"right_vertices", c.right_vertices},
       {"source_left_count", c.source_left_count},
       {"s", c.s},
       {"delta", c.delta},
       {"achieved", c.achieved}};
}

void from_json(const Json& j, ReductionCertificate& c) {
  c.subgraph = field<Bigraph>(j, "subgraph");
  c.left_vertices = field<std::vector<Vertex>>(j, "left_vertices");
  c.right_vertices = field<std::vector<Vertex>>(j, "right_vertices");
  c.source_left_count = field<std::size_t>(j, "source_left_count");
  c.s = field<int>(j, "s");
  c.delta = field<Rational>(j, "delta");
  c.achieved = field<AchievedConstants>(j, "achieved");
}

void to_json(Json& j, const ConditionReport& r) {
  j = {{"c_s", r.c_s},
       {"condition_I", r.condition_I},
       {"condition_II", r.condition_II},
       {"condition_III", r.condition_III},
       {"condition_IV", r.condition_IV},
       {"integrity", r.integrity},
       {"all_pass", r.all_pass()}};
}

void to_json(Json& j, const ConstructionReport& r) {
  j = {{"m", r.m},
       {"n", r.n},
       {"s", r.s},
       {"t", r.t},
       {"epsilon", r.epsilon},
       {"p", r.p},
       {"edges_before", r.edges_before},
       {"copies_found", r.copies_found},
       {"deleted_left", r.deleted_left},
       {"edges_after", r.edges_after},
       {"seed", r.seed},
       {"certified", r.certified},
       {"in_regime", r.in_regime},
       {"expected_copies_bound", r.expected_copies_bound},
       {"embeddings_before", optional_json(r.embeddings_before)}};
}

void from_json(const Json& j, ConstructionReport& r) {
  r.m = field<std::uint64_t>(j, "m");
  r.n = field<std::uint64_t>(j, "n");
  r.s = field<std::uint32_t>(j, "s");
  r.t = field<std::uint32_t>(j, "t");
  r.epsilon = field<Rational>(j, "epsilon");
  r.p = field<Rational>(j, "p");
  r.edges_before = field<std::uint64_t>(j, "edges_before");
  r.copies_found = field<std::uint64_t>(j, "copies_found");
  r.deleted_left = field<std::uint64_t>(j, "deleted_left");
  r.edges_after = field<std::uint64_t>(j, "edges_after");
  r.seed = field<std::uint64_t>(j, "seed");
  r.certified = field<bool>(j, "certified");
  r.in_regime = field<bool>(j, "in_regime");
  r.expected_copies_bound = field<double>(j, "expected_copies_bound");
  r.embeddings_before = optional_field<std::uint64_t>(j, "embeddings_before");
}

void to_json(Json& j, const KstCertificate& c) {
  j = {{"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}, {"holds", c.holds}};
}

void to_json(Json& j, const ExtremalResult& r) {
  j = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"edges", r.best_edges}};
}

void to_json(Json& j, const DistanceClass& c) {
  j = {{"squared_distance", c.squared_distance}, {"ordered_pair_count", c.ordered_pair_count}};
}

void from_json(const Json& j, DistanceClass& c) {
  c.squared_distance = field<Rational>(j, "squared_distance");
  c.ordered_pair_count = field<std::uint64_t>(j, "ordered_pair_count");
}

void to_json(Json& j, const EnergyReport& r) { j = {{"classes", r.classes}, {"energy", r.energy}}; }

void from_json(const Json& j, EnergyReport& r) {
  r.classes = field<std::vector<DistanceClass>>(j, "classes");
  r.energy = field<std::uint64_t>(j, "energy");
}

void to_json(Json& j, const OrderedPair& p) { j = Json::array({p.a, p.b}); }

void from_json(const Json& j, OrderedPair& p) {
  auto v = j.get<std::array<std::uint32_t, 2>>();
  p = {v[0], v[1]};
}

void to_json(Json& j, const UnorderedPair& p) { j = Json::array({p.lo, p.hi}); }

void from_json(const Json& j, UnorderedPair& p) {
  auto v = j.get<std::array<std::uint32_t, 2>>();
  p = {v[0], v[1]};
}

void to_json(Json& j, const LabelEvent& e) { j = {{"pair", e.pair}, {"label", e.label}}; }

void from_json(const Json& j, LabelEvent& e) {
  e.pair = field<UnorderedPair>(j, "pair");
  e.label = field<UnorderedPair>(j, "label");
}

void to_json(Json& j, const WitnessRound& r) {
  j = {{"i", r.index},          {"p_i", r.added},  {"ell_i", r.labeled}, {"complete", r.complete},
       {"claim_holds", r.claim_holds}, {"labels", r.labels}};
}

void from_json(const Json& j, WitnessRound& r) {
  r.index = field<std::size_t>(j, "i");
  r.added = field<std::size_t>(j, "p_i");
  r.labeled = field<std::size_t>(j, "ell_i");
  r.complete = field<bool>(j, "complete");
  r.claim_holds = field<bool>(j, "claim_holds");
  r.labels = field<std::vector<LabelEvent>>(j, "labels");
}

void to_json(Json& j, const WitnessTrace& t) {
  j = {{"p", t.p},
       {"s", t.s},
       {"orientation", to_string(t.orientation)},
       {"S_points", t.s_points},
       {"Tprime", t.t_prime},
       {"rounds", t.rounds},
       {"A", t.A},
       {"padded", t.padded},
       {"x", t.x},
       {"y", t.y},
       {"z", t.z},
       {"labeled_total", t.labeled_total},
       {"distinct_count", t.distinct_count},
       {"q", t.q},
       {"claim_violated", t.claim_violated},
       {"tally_bound_holds", t.tally_bound_holds},
       {"labels_consistent", t.labels_consistent},
       {"count_bound_holds", t.count_bound_holds}};
}

void from_json(const Json& j, WitnessTrace& t) {
  t.p = field<std::uint32_t>(j, "p");
  t.s = field<std::uint32_t>(j, "s");
  const auto o = field<std::string>(j, "orientation");
  if (o == "quadrics-left")
    t.orientation = Orientation::quadrics_left;
  else if (o == "points-left")
    t.orientation = Orientation::points_left;
  else
    throw InputError("unknown orientation '" + o + "'");
  t.s_points = field<std::vector<std::uint32_t>>(j, "S_points");
  t.t_prime = field<std::vector<OrderedPair>>(j, "Tprime");
  t.rounds = field<std::vector<WitnessRound>>(j, "rounds");
  t.A = field<std::vector<std::uint32_t>>(j, "A");
  t.padded = field<bool>(j, "padded");
  t.x = field<std::size_t>(j, "x");
  t.y = field<std::size_t>(j, "y");
  t.z = field<std::size_t>(j, "z");
  t.labeled_total = field<std::size_t>(j, "labeled_total");
  t.distinct_count = field<std::size_t>(j, "distinct_count");
  t.q = field<std::int64_t>(j, "q");
  t.claim_violated = field<bool>(j, "claim_violated");
  t.tally_bound_holds = field<bool>(j, "tally_bound_holds");
  t.labels_consistent = field<bool>(j, "labels_consistent");
  t.count_bound_holds = field<bool>(j, "count_bound_holds");
}

Json violation_to_json(const Violation& v, const PointSet& points) {
  Json pts = Json::array();
  for (auto k : v.A) pts.push_back(points.at(k));
  return {{"A", v.A}, {"A_points", pts}, {"distinct", v.distinct}, {"q", v.q}, {"attempt", v.attempt},
          {"trace", v.trace}};
}

Violation violation_from_json(const Json& j) {
  Violation v;
  v.A = field<std::vector<std::uint32_t>>(j, "A");
  v.distinct = field<std::size_t>(j, "distinct");
  v.q = field<std::int64_t>(j, "q");
  v.attempt = field<std::uint64_t>(j, "attempt");
  v.trace = field<WitnessTrace>(j, "trace");
  return v;
}

PointSet point_set_from_json(const Json& j) {
  PointSet points = field<PointSet>(j, "points");
  require_distinct_points(points);
  return points;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  write_csv_row(out, scan_csv_header);
  for (const auto& r : rows)
    write_csv_row(out, {std::to_string(r.m), std::to_string(r.n), std::to_string(r.s), std::to_string(r.t),
                        to_string(r.exponent), std::to_string(r.trial), std::to_string(r.seed), to_string(r.p),
                        std::to_string(r.edges_before), std::to_string(r.copies), std::to_string(r.edges_after),
                        to_string(r.ratio)});
}

}  // namespace subdivlab
