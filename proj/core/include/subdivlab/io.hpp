#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subdivlab/bigraph.hpp"
#include "subdivlab/construct.hpp"
#include "subdivlab/distances.hpp"
#include "subdivlab/geometry.hpp"
#include "subdivlab/incidence.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/rational.hpp"
#include "subdivlab/regularize.hpp"

// Rationals travel as "num/den" strings (integers as "num"); JSON integers
// are also accepted on input.
namespace nlohmann {
template <>
struct adl_serializer<subdivlab::Rational> {
  static void to_json(json& j, const subdivlab::Rational& q);
  static void from_json(const json& j, subdivlab::Rational& q);
};
template <>
struct adl_serializer<subdivlab::RLine> {
  static void to_json(json& j, const subdivlab::RLine& l);
  static subdivlab::RLine from_json(const json& j);
};
template <>
struct adl_serializer<subdivlab::CLine> {
  static void to_json(json& j, const subdivlab::CLine& l);
  static subdivlab::CLine from_json(const json& j);
};
}  // namespace nlohmann

namespace subdivlab {

using Json = nlohmann::json;

// Parses text, turning parse failures into InputError.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

[[noreturn]] void throw_input_error(const std::string& message);

// Converts type errors from nlohmann into InputError.
template <typename T>
T json_as(const Json& j) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw_input_error(e.what());
  }
}

void to_json(Json& j, const Bigraph& g);
void from_json(const Json& j, Bigraph& g);
void to_json(Json& j, const SubdividedPattern& p);
void from_json(const Json& j, SubdividedPattern& p);
void to_json(Json& j, const Embedding& e);
void from_json(const Json& j, Embedding& e);

void to_json(Json& j, const RPoint& p);
void from_json(const Json& j, RPoint& p);
void to_json(Json& j, const Complex& c);
void from_json(const Json& j, Complex& c);
void to_json(Json& j, const CPoint& p);
void from_json(const Json& j, CPoint& p);
void to_json(Json& j, const RealConfig& c);
void from_json(const Json& j, RealConfig& c);
void to_json(Json& j, const ComplexConfig& c);
void from_json(const Json& j, ComplexConfig& c);
// True when any coordinate in the config is a {"re", "im"} object.
bool is_complex_config(const Json& j);

void to_json(Json& j, const GridWitness& w);
void from_json(const Json& j, GridWitness& w);
void to_json(Json& j, const TriangleWitness& w);
void from_json(const Json& j, TriangleWitness& w);

void to_json(Json& j, const Phase1Round& r);
void from_json(const Json& j, Phase1Round& r);
void to_json(Json& j, const CarveRecord& r);
void from_json(const Json& j, CarveRecord& r);
void to_json(Json& j, const Phase2Round& r);
void from_json(const Json& j, Phase2Round& r);
void to_json(Json& j, const BoundCheck& b);
void from_json(const Json& j, BoundCheck& b);
void to_json(Json& j, const ReductionTrace& t);
void from_json(const Json& j, ReductionTrace& t);
void to_json(Json& j, const AchievedConstants& c);
void from_json(const Json& j, AchievedConstants& c);
void to_json(Json& j, const ReductionCertificate& c);
void from_json(const Json& j, ReductionCertificate& c);
void to_json(Json& j, const ConditionReport& r);

void to_json(Json& j, const ConstructionReport& r);
void from_json(const Json& j, ConstructionReport& r);
void to_json(Json& j, const KstCertificate& c);
void to_json(Json& j, const ExtremalResult& r);

void to_json(Json& j, const DistanceClass& c);
void from_json(const Json& j, DistanceClass& c);
void to_json(Json& j, const EnergyReport& r);
void from_json(const Json& j, EnergyReport& r);
void to_json(Json& j, const OrderedPair& p);
void from_json(const Json& j, OrderedPair& p);
void to_json(Json& j, const UnorderedPair& p);
void from_json(const Json& j, UnorderedPair& p);
void to_json(Json& j, const LabelEvent& e);
void from_json(const Json& j, LabelEvent& e);
void to_json(Json& j, const WitnessRound& r);
void from_json(const Json& j, WitnessRound& r);
void to_json(Json& j, const WitnessTrace& t);
void from_json(const Json& j, WitnessTrace& t);

// {"A", "A_points", "distinct", "q", "attempt", "trace"}; A_points is
// informational and ignored on input.
Json violation_to_json(const Violation& v, const PointSet& points);
Violation violation_from_json(const Json& j);

// Point sets use the configuration layout with only "points"; repeated
// points are rejected.
PointSet point_set_from_json(const Json& j);

// RFC 4180 field quoting.
std::string csv_field(std::string_view value);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

inline const std::vector<std::string> scan_csv_header = {
    "m", "n", "s", "t", "exponent", "trial", "seed", "p", "edges_before", "copies", "edges_after", "ratio"};
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace subdivlab
