#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "subdivlab/construct.hpp"
#include "subdivlab/distances.hpp"
#include "subdivlab/errors.hpp"
#include "subdivlab/incidence.hpp"
#include "subdivlab/io.hpp"
#include "subdivlab/patterns.hpp"
#include "subdivlab/regularize.hpp"

namespace subdivlab::cli {

namespace {

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

int exit_code_for(const std::string& kind) {
  if (kind == "input") return exit_input;
  if (kind == "budget") return exit_budget;
  return exit_other;
}

// "3", "1,2,5" or "1..10".
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  auto to_int = [&](const std::string& piece) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
      throw InputError("malformed integer list '" + text + "'");
    }
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = to_int(text.substr(0, dots));
    const auto hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw InputError("empty range '" + text + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string piece; std::getline(ss, piece, ',');) out.push_back(to_int(piece));
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::string rational_cell(const Rational& q) { return to_string(q); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subdivision-pattern search, regularization, constructions and incidence experiments",
               "subdivlab"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t budget = default_node_budget;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the artifact here instead of stdout");
    sub->add_option("--budget", budget, "Node budget for embedding searches")->capture_default_str();
  };

  std::function<void()> action;

  // detect
  std::string host_path;
  std::vector<std::uint32_t> parts;
  auto* detect = app.add_subcommand("detect", "Search a sided subdivided pattern in a host bigraph");
  detect->add_option("--host", host_path, "Host bigraph JSON")->required();
  detect->add_option("--parts", parts, "Pattern part sizes, e.g. 2,3")->required()->delimiter(',');
  add_common(detect);
  detect->callback([&] {
    action = [&] {
      const Bigraph host = json_as<Bigraph>(read_json_file(host_path));
      const SubdividedPattern pattern(parts);
      const auto emb = find_embedding(host, pattern, {budget});
      Json j = {{"pattern", pattern}, {"found", emb.has_value()}, {"embedding", nullptr}};
      if (emb) j["embedding"] = *emb;
      emit(dump(j), out_path, out);
    };
  });

  // regularize
  std::string input_path;
  int s_value = 2;
  std::string delta_text = "1";
  auto* regularize = app.add_subcommand("regularize", "Reduce an unbalanced bigraph to a near-biregular subgraph");
  regularize->add_option("--input", input_path, "Bigraph JSON")->required();
  regularize->add_option("--s", s_value, "Parameter s >= 2")->capture_default_str();
  regularize->add_option("--delta", delta_text, "Average right degree lower bound (rational)")->capture_default_str();
  add_common(regularize);
  regularize->callback([&] {
    action = [&] {
      const Bigraph g = json_as<Bigraph>(read_json_file(input_path));
      const ReductionResult r = reduce(g, s_value, parse_rational(delta_text));
      const ConditionReport conditions = verify_conditions(r.cert);
      emit(dump({{"trace", r.trace}, {"certificate", r.cert}, {"conditions", conditions}}), out_path, out);
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Random deletion constructions and extremal certificates");
  construct->require_subcommand(1);
  std::uint32_t s_param = 2, t_param = 3;
  std::string exponent_text, epsilon_text = "1", m_text;
  std::uint64_t trials = 20, seed = 42, m_value = 0, n_value = 0;

  auto* scan = construct->add_subcommand("scan", "Threshold scan over m; CSV output");
  scan->add_option("--s", s_param)->required();
  scan->add_option("--t", t_param)->required();
  scan->add_option("--exp", exponent_text, "Exponent of n = floor(m^exp) (rational)")->required();
  scan->add_option("--m", m_text, "Comma-separated m values")->required();
  scan->add_option("--trials", trials)->capture_default_str();
  scan->add_option("--seed", seed)->capture_default_str();
  scan->add_option("--epsilon", epsilon_text)->capture_default_str();
  add_common(scan);
  scan->callback([&] {
    action = [&] {
      std::vector<std::uint64_t> ms;
      for (auto v : parse_int_list(m_text)) {
        if (v < 1) throw InputError("m values must be positive");
        ms.push_back(static_cast<std::uint64_t>(v));
      }
      const auto rows = threshold_scan(s_param, t_param, parse_rational(exponent_text), ms, trials, seed,
                                       parse_rational(epsilon_text), {budget});
      std::ostringstream csv;
      write_scan_csv(csv, rows);
      emit(csv.str(), out_path, out);
    };
  });

  auto* sample = construct->add_subcommand("sample", "One deletion construction; JSON report and graph");
  sample->add_option("--m", m_value)->required();
  sample->add_option("--n", n_value)->required();
  sample->add_option("--s", s_param)->required();
  sample->add_option("--t", t_param)->required();
  sample->add_option("--epsilon", epsilon_text)->capture_default_str();
  sample->add_option("--seed", seed)->capture_default_str();
  add_common(sample);
  sample->callback([&] {
    action = [&] {
      ConstructionOptions options;
      options.search.node_budget = budget;
      const auto c = random_lower_bound_graph(m_value, n_value, s_param, t_param, parse_rational(epsilon_text),
                                              seed, options);
      emit(dump({{"report", c.report}, {"graph", c.graph}}), out_path, out);
    };
  });

  auto* kst = construct->add_subcommand("kst", "Double-counting certificate for K_{s,t}-freeness");
  kst->add_option("--input", input_path, "Bigraph JSON")->required();
  kst->add_option("--s", s_param)->required();
  kst->add_option("--t", t_param)->required();
  add_common(kst);
  kst->callback([&] {
    action = [&] {
      const Bigraph g = json_as<Bigraph>(read_json_file(input_path));
      emit(dump(Json(kst_certificate(g, s_param, t_param))), out_path, out);
    };
  });

  auto* extremal = construct->add_subcommand("extremal", "Exact extremal number for tiny m x n");
  extremal->add_option("--m", m_value)->required();
  extremal->add_option("--n", n_value)->required();
  extremal->add_option("--parts", parts, "Pattern part sizes")->required()->delimiter(',');
  add_common(extremal);
  extremal->callback([&] {
    action = [&] {
      const auto r = brute_extremal(m_value, n_value, SubdividedPattern(parts), budget);
      emit(dump(Json(r)), out_path, out);
    };
  });

  // incidence
  auto* incidence = app.add_subcommand("incidence", "Point-line incidence tools");
  incidence->require_subcommand(1);
  std::uint32_t grid_s = 2;
  auto* grid = incidence->add_subcommand("grid", "Detect an s-by-s grid");
  grid->add_option("--input", input_path, "Configuration JSON")->required();
  grid->add_option("--s", grid_s)->capture_default_str();
  add_common(grid);
  grid->callback([&] {
    action = [&] {
      const Json cfg = read_json_file(input_path);
      std::optional<GridWitness> w;
      if (is_complex_config(cfg))
        w = detect_grid(json_as<ComplexConfig>(cfg), grid_s, {budget});
      else
        w = detect_grid(json_as<RealConfig>(cfg), grid_s, {budget});
      Json j = {{"s", grid_s}, {"found", w.has_value()}, {"witness", nullptr}};
      if (w) j["witness"] = *w;
      emit(dump(j), out_path, out);
    };
  });

  auto* triangle = incidence->add_subcommand("triangle", "Detect a triangle configuration");
  triangle->add_option("--input", input_path, "Configuration JSON")->required();
  add_common(triangle);
  triangle->callback([&] {
    action = [&] {
      const auto w = detect_triangle(json_as<RealConfig>(read_json_file(input_path)));
      Json j = {{"found", w.has_value()}, {"witness", nullptr}};
      if (w) j["witness"] = *w;
      emit(dump(j), out_path, out);
    };
  });

  std::string s_list = "2";
  bool with_distance = false;
  auto* exponents = incidence->add_subcommand("exponents", "Grid and distance exponent table (CSV)");
  exponents->add_option("--s", s_list, "s value, list 1,2,3 or range 1..10")->capture_default_str();
  exponents->add_flag("--with-distance", with_distance, "Append energy and distinct-distance exponents");
  add_common(exponents);
  exponents->callback([&] {
    action = [&] {
      std::ostringstream csv;
      std::vector<std::string> header = {"s", "m_exponent", "n_exponent", "total_exponent"};
      if (with_distance) {
        header.push_back("energy_exponent");
        header.push_back("distance_exponent");
      }
      write_csv_row(csv, header);
      for (auto s : parse_int_list(s_list)) {
        const auto [a, b] = grid2flat_exponents(s);
        std::vector<std::string> row = {std::to_string(s), rational_cell(a), rational_cell(b),
                                        rational_cell(grid_total_exponent(s))};
        if (with_distance) {
          row.push_back(rational_cell(energy_exponent(s)));
          row.push_back(rational_cell(distinct_distance_exponent(s)));
        }
        write_csv_row(csv, row);
      }
      emit(csv.str(), out_path, out);
    };
  });

  // distances
  auto* distances = app.add_subcommand("distances", "Distinct-distance tools");
  distances->require_subcommand(1);
  std::uint32_t p_value = 8, ds_value = 1;
  std::int64_t q_value = 0;
  std::uint64_t attempts = ViolationOptions{}.attempts, subset_budget = default_subset_budget;

  auto* energy_cmd = distances->add_subcommand("energy", "Distance classes and energy");
  energy_cmd->add_option("--input", input_path, "Point-set JSON")->required();
  add_common(energy_cmd);
  energy_cmd->callback([&] {
    action = [&] {
      const PointSet pts = point_set_from_json(read_json_file(input_path));
      require_distinct_points(pts);
      Json j = energy(pts);
      j["distinct"] = distinct_distance_count(pts);
      emit(dump(j), out_path, out);
    };
  });

  auto* check = distances->add_subcommand("check", "Check the (p, q) local distance condition");
  check->add_option("--input", input_path, "Point-set JSON")->required();
  check->add_option("--p", p_value)->required();
  check->add_option("--q", q_value)->required();
  check->add_option("--subset-budget", subset_budget)->capture_default_str();
  add_common(check);
  check->callback([&] {
    action = [&] {
      const PointSet pts = point_set_from_json(read_json_file(input_path));
      const auto r = check_local_condition(pts, p_value, q_value, subset_budget);
      Json j = {{"p", p_value}, {"q", q_value}, {"holds", r.holds}, {"violating_subset", nullptr}};
      if (r.violating_subset) j["violating_subset"] = *r.violating_subset;
      emit(dump(j), out_path, out);
    };
  });

  auto* violate = distances->add_subcommand("violate", "Extract p points with few distinct distances");
  violate->add_option("--input", input_path, "Point-set JSON")->required();
  violate->add_option("--p", p_value)->required();
  violate->add_option("--s", ds_value)->capture_default_str();
  violate->add_option("--seed", seed)->capture_default_str();
  violate->add_option("--attempts", attempts, "Random partitions to try")->capture_default_str();
  add_common(violate);
  violate->callback([&] {
    action = [&] {
      const PointSet pts = point_set_from_json(read_json_file(input_path));
      ViolationOptions options;
      options.search.node_budget = budget;
      options.attempts = attempts;
      const auto v = find_violation(pts, p_value, ds_value, seed, options);
      Json j = {{"found", v.has_value()}, {"seed", seed}, {"witness", nullptr}};
      if (v) j["witness"] = violation_to_json(*v, pts);
      emit(dump(j), out_path, out);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "input", e.what());
    return exit_input;
  }

  try {
    if (action) action();
    return exit_ok;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return exit_other;
  }
}

}  // namespace subdivlab::cli
