#include <gtest/gtest.h>

#include <sstream>

#include "subdivlab/errors.hpp"
#include "subdivlab/io.hpp"

using namespace subdivlab;

namespace {

template <typename T>
T round_trip(const T& value) {
  return json_as<T>(parse_json(Json(value).dump()));
}

}  // namespace

TEST(Json, RationalsAsStrings) {
  EXPECT_EQ(Json(Rational(3, 4)).get<std::string>(), "3/4");
  EXPECT_EQ(Json(Rational(-5)).get<std::string>(), "-5");
  EXPECT_EQ(json_as<Rational>(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(json_as<Rational>(Json(7)), Rational(7));
  EXPECT_THROW(json_as<Rational>(Json("1/0")), InputError);
  EXPECT_THROW(json_as<Rational>(Json("abc")), InputError);
  EXPECT_THROW(json_as<Rational>(Json(1.5)), InputError);
}

TEST(Json, ParseErrorsAreInputErrors) {
  EXPECT_THROW(parse_json("{\"left\": "), InputError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), InputError);
  EXPECT_THROW(json_as<Bigraph>(parse_json(R"({"left": 1, "right": 1, "edges": [[0, 5]]})")), InputError);
  EXPECT_THROW(json_as<Bigraph>(parse_json(R"({"left": 1})")), InputError);
}

TEST(Json, GraphAndPatternRoundTrip) {
  const Bigraph g(3, 4, {{0, 1}, {2, 3}, {1, 0}});
  EXPECT_EQ(round_trip(g), g);
  const SubdividedPattern p({1, 2, 3});
  SubdividedPattern back({1});
  from_json(parse_json(Json(p).dump()), back);
  EXPECT_EQ(back, p);
  const Embedding e{{0, 2}, {1, 3, 4}};
  EXPECT_EQ(round_trip(e), e);
}

TEST(Json, GeometryRoundTrip) {
  RealConfig rc{{{Rational(1, 2), Rational(-3)}}, {RLine(Rational(2), Rational(4), Rational(1))}};
  EXPECT_EQ(round_trip(rc), rc);
  EXPECT_FALSE(is_complex_config(Json(rc)));
  ComplexConfig cc{{{Complex(Rational(1), Rational(2)), Complex(Rational(0))}},
                   {CLine(Complex(Rational(1)), Complex(Rational(0), Rational(1)), Complex(Rational(3)))}};
  const Json j(cc);
  EXPECT_TRUE(is_complex_config(j));
  EXPECT_EQ(round_trip(cc), cc);
  const GridWitness w{{0, 1}, {2, 3}, {{0, 1}, {2, 3}}};
  EXPECT_EQ(round_trip(w), w);
  const TriangleWitness t{{0, 1, 2}, {3, 4, 5}};
  EXPECT_EQ(round_trip(t), t);
}

TEST(Json, ReductionRoundTrip) {
  const auto r = reduce(Bigraph::complete(16, 64), 2, Rational(1));
  const auto cert = round_trip(r.cert);
  EXPECT_EQ(cert.subgraph, r.cert.subgraph);
  EXPECT_EQ(cert.left_vertices, r.cert.left_vertices);
  EXPECT_EQ(cert.achieved, r.cert.achieved);
  EXPECT_TRUE(verify_conditions(cert).all_pass());
  const auto trace = round_trip(r.trace);
  EXPECT_EQ(Json(trace), Json(r.trace));
  EXPECT_EQ(Json(r.trace)["termination"], "half-rule");
}

TEST(Json, ConstructionAndDistancesRoundTrip) {
  const auto c = random_lower_bound_graph(8, 8, 1, 2, Rational(1), 5);
  EXPECT_EQ(round_trip(c.report), c.report);
  const PointSet pts{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  const auto e = energy(pts);
  EXPECT_EQ(round_trip(e), e);
  EXPECT_EQ(point_set_from_json(parse_json(R"({"points": [["0","0"], ["1/2", 3]]})")).size(), 2u);
  EXPECT_THROW(point_set_from_json(parse_json(R"({"points": [["0","0"], ["0", 0]]})")), InputError);
}

TEST(Json, ViolationRoundTrip) {
  PointSet g;
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 6; ++y) g.push_back({Rational(x), Rational(y)});
  const auto v = find_violation(g, 8, 1, 7);
  ASSERT_TRUE(v);
  const Json j = violation_to_json(*v, g);
  EXPECT_EQ(j["A_points"].size(), 8u);
  EXPECT_EQ(j["trace"]["orientation"].get<std::string>(), to_string(v->trace.orientation));
  const auto back = violation_from_json(parse_json(j.dump()));
  EXPECT_EQ(back.A, v->A);
  EXPECT_EQ(back.trace, v->trace);
}

TEST(Csv, QuotingAndRows) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::ostringstream os;
  write_csv_row(os, {"1", "x,y"});
  EXPECT_EQ(os.str(), "1,\"x,y\"\r\n");
}

TEST(Csv, ScanTable) {
  const auto rows = threshold_scan(2, 4, Rational(6, 5), {16}, 2, 1);
  std::ostringstream os;
  write_scan_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,n,s,t,exponent,trial,seed,p,edges_before,copies,edges_after,ratio\r");
  int count = 0;
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 2);
}
