// bellkit command-line front end.
//
// Subcommands: singlet-scan, nogo, realizability, simulate, bell-check,
// vn-demo. Ouput goes to --output (default: stdout). Exit codes: 0 success,
// 2 usage or validation error, 1 internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellkit/contextual.hpp"
#include "bellkit/io.hpp"
#include "bellkit/nogo.hpp"
#include "bellkit/numfmt.hpp"
#include "bellkit/probspace.hpp"
#include "bellkit/quantum.hpp"
#include "bellkit/realizability.hpp"

namespace {

using bellkit::sig12;
using nlohmann::json;

struct OutputOptions {
  std::string path;  // empty = stdout
};

void emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file: " + out.path);
  }
  f << text;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw bellkit::InvalidProblem("cannot read file: " + path);
  }
  json j;
  f >> j;
  return j;
}

double to_radians(double angle, bool degrees) {
  return degrees ? angle * M_PI / 180.0 : angle;
}

std::string singlet_scan_csv(int grid) {
  std::ostringstream os;
  os << "delta,correlation,closed_form,abs_diff\n";
  for (int k = 0; k < grid; ++k) {
    const double delta = 2.0 * M_PI * k / grid;
    const double e = bellkit::singlet_correlation(0.0, delta);
    const double closed = -std::cos(delta);
    os << sig12(delta) << ',' << sig12(e) << ',' << sig12(closed) << ','
       << sig12(std::abs(e - closed)) << '\n';
  }
  return os.str();
}

json singlet_scan_json(int grid) {
  json rows = json::array();
  for (int k = 0; k < grid; ++k) {
    const double delta = 2.0 * M_PI * k / grid;
    const double e = bellkit::singlet_correlation(0.0, delta);
    const double closed = -std::cos(delta);
    rows.push_back({{"delta", bellkit::round_sig12(delta)},
                    {"correlation", bellkit::round_sig12(e)},
                    {"closed_form", bellkit::round_sig12(closed)},
                    {"abs_diff", bellkit::round_sig12(std::abs(e - closed))}});
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell inequalities, singlet correlations, and joint-"
               "distribution feasibility"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("-o,--output", out.path, "Write output here (default: stdout)")
      ->capture_default_str();
  bool degrees = false;
  app.add_flag("--deg", degrees, "Interpret angle flags as degrees");

  // singlet-scan
  auto* scan_cmd = app.add_subcommand(
      "singlet-scan", "Tabulate E(0, delta) against the closed form");
  int grid = 100;
  scan_cmd->add_option("--grid", grid, "Number of grid points")
      ->check(CLI::PositiveNumber);
  std::string scan_format = "csv";
  scan_cmd->add_option("--format", scan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // nogo
  auto* nogo_cmd = app.add_subcommand(
      "nogo", "Theorem-4 pipeline for one angle triple, or a grid scan");
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  nogo_cmd->add_option("--t1", t1, "theta1 (radians)");
  nogo_cmd->add_option("--t2", t2, "theta2 (radians)");
  nogo_cmd->add_option("--t3", t3, "theta3 (radians)");
  int nogo_scan = 0;
  nogo_cmd->add_option("--scan", nogo_scan,
                       "Emit a CSV verdict table on an NxN (theta2, theta3) "
                       "grid instead of one triple");

  // realizability
  auto* real_cmd = app.add_subcommand(
      "realizability", "Decide joint-distribution feasibility for a problem "
                       "file");
  std::string problem_path;
  real_cmd->add_option("--file", problem_path, "problem.json path")
      ->required();

  // simulate
  auto* sim_cmd =
      app.add_subcommand("simulate", "Sample one measurement context");
  std::string mode = "singlet";
  sim_cmd->add_option("--mode", mode, "singlet or lhv")
      ->check(CLI::IsMember({"singlet", "lhv"}));
  double sim_t1 = 0.0, sim_t2 = 0.0;
  sim_cmd->add_option("--t1", sim_t1, "theta (radians)");
  sim_cmd->add_option("--t2", sim_t2, "theta' (radians)");
  std::int64_t samples = 1000;
  sim_cmd->add_option("--n", samples, "sample count")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed = 0;
  sim_cmd->add_option("--seed", seed, "RNG seed");

  // bell-check
  auto* check_cmd = app.add_subcommand(
      "bell-check", "Bell report for a user-supplied finite model");
  std::string model_path;
  check_cmd->add_option("--file", model_path, "model.json path")->required();

  // vn-demo
  app.add_subcommand("vn-demo", "Additivity counterexample report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (scan_cmd->parsed()) {
      if (scan_format == "json") {
        emit(out, render_json(singlet_scan_json(grid)));
      } else {
        emit(out, singlet_scan_csv(grid));
      }
    } else if (nogo_cmd->parsed()) {
      if (nogo_scan > 0) {
        emit(out, bellkit::scan_to_csv(bellkit::angle_scan(nogo_scan)));
      } else {
        const auto verdict = bellkit::theorem4_pipeline(
            to_radians(t1, degrees), to_radians(t2, degrees),
            to_radians(t3, degrees));
        emit(out, render_json(bellkit::to_json(verdict)));
      }
    } else if (real_cmd->parsed()) {
      const auto problem = bellkit::parse_problem(read_json_file(problem_path));
      const auto outcome = bellkit::decide(problem);
      emit(out, render_json(bellkit::to_json(outcome, problem)));
    } else if (sim_cmd->parsed()) {
      bellkit::Context context;
      context.id = mode;
      context.theta = to_radians(sim_t1, degrees);
      context.theta_prime = to_radians(sim_t2, degrees);
      context.sample_count = samples;
      context.seed = seed;
      const auto report = mode == "lhv" ? bellkit::sample_lhv_run(context)
                                        : bellkit::sample_singlet_run(context);
      emit(out, bellkit::run_reports_to_csv({report}));
    } else if (check_cmd->parsed()) {
      const auto model = bellkit::parse_model(read_json_file(model_path));
      const char* names[3] = {"a", "b", "c"};
      for (const char* name : names) {
        if (!model.variables.count(name)) {
          throw bellkit::InvalidProblem(
              std::string("model: missing variable '") + name + "'");
        }
      }
      const auto report = bellkit::bell_functional(
          model.space, model.variables.at("a"), model.variables.at("b"),
          model.variables.at("c"));
      emit(out, render_json(bellkit::to_json(report)));
    } else {  // vn-demo
      emit(out,
           render_json(bellkit::to_json(bellkit::vn_additivity_counterexample())));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
