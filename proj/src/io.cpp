#include "bellkit/io.hpp"

#include <utility>

#include "bellkit/numfmt.hpp"

namespace bellkit {

using nlohmann::json;

namespace {

json sig12_array(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(round_sig12(v));
  return arr;
}

}  // namespace

FiniteModel parse_model(const json& j) {
  if (!j.contains("weights") || !j["weights"].is_array()) {
    throw InvalidProblem("model: missing 'weights' array");
  }
  std::vector<double> weights = j["weights"].get<std::vector<double>>();
  FiniteProbabilitySpace space(std::move(weights));

  std::map<std::string, SignVariable> variables;
  if (j.contains("variables")) {
    if (!j["variables"].is_object()) {
      throw InvalidProblem("model: 'variables' must be an object");
    }
    for (const auto& [name, arr] : j["variables"].items()) {
      std::vector<int> values = arr.get<std::vector<int>>();
      if (values.size() != space.atom_count()) {
        throw DimensionMismatch("model: variable '" + name + "' has " +
                                std::to_string(values.size()) +
                                " values, expected " +
                                std::to_string(space.atom_count()));
      }
      variables.emplace(name, SignVariable(std::move(values)));
    }
  }
  return FiniteModel{std::move(space), std::move(variables)};
}

RealizabilityProblem parse_problem(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InvalidProblem("problem: missing integer 'n'");
  }
  const int n = j["n"].get<int>();
  std::vector<PairConstraint> pairs;
  if (j.contains("pairs")) {
    for (const auto& row : j["pairs"]) {
      if (!row.is_array() || row.size() != 3) {
        throw InvalidProblem("problem: each pair must be [i, j, c]");
      }
      pairs.push_back(
          {row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
    }
  }
  std::vector<MeanConstraint> means;
  if (j.contains("means")) {
    for (const auto& row : j["means"]) {
      if (!row.is_array() || row.size() != 2) {
        throw InvalidProblem("problem: each mean must be [i, m]");
      }
      means.push_back({row[0].get<int>(), row[1].get<double>()});
    }
  }
  return RealizabilityProblem(n, std::move(pairs), std::move(means));
}

json to_json(const BellReport& report) {
  return json{{"lhs", round_sig12(report.lhs)},
              {"rhs", round_sig12(report.rhs)},
              {"delta", round_sig12(report.delta)},
              {"holds", report.holds},
              {"margin", round_sig12(report.margin)}};
}

json to_json(const FeasibilityOutcome& outcome,
             const RealizabilityProblem& problem) {
  json j;
  j["verdict"] =
      outcome.verdict == Verdict::Feasible ? "Feasible" : "Infeasible";
  j["slack"] = round_sig12(outcome.slack);
  if (outcome.witness) {
    j["witness"] = sig12_array(*outcome.witness);
  }
  if (outcome.certificate) {
    const auto& cert = *outcome.certificate;
    json jc;
    jc["constant"] = round_sig12(cert.constant);
    json jp = json::array();
    for (std::size_t k = 0; k < problem.pairs().size(); ++k) {
      jp.push_back(json::array({problem.pairs()[k].i, problem.pairs()[k].j,
                                round_sig12(cert.pair_coeffs[k])}));
    }
    jc["pair_coeffs"] = std::move(jp);
    json jm = json::array();
    for (std::size_t k = 0; k < problem.means().size(); ++k) {
      jm.push_back(json::array(
          {problem.means()[k].i, round_sig12(cert.mean_coeffs[k])}));
    }
    jc["mean_coeffs"] = std::move(jm);
    jc["value_on_target"] = round_sig12(cert.evaluate_target(problem));
    j["certificate"] = std::move(jc);
  }
  return j;
}

json to_json(const NoGoVerdict& verdict) {
  RealizabilityProblem problem(3, {{0, 1, verdict.c12},
                                   {2, 1, verdict.c32},
                                   {0, 2, verdict.c13}});
  return json{
      {"angles", sig12_array({verdict.angles[0], verdict.angles[1],
                              verdict.angles[2]})},
      {"classical_targets",
       {{"c12", round_sig12(verdict.c12)},
        {"c32", round_sig12(verdict.c32)},
        {"c13", round_sig12(verdict.c13)}}},
      {"quantum_report", to_json(verdict.quantum_report)},
      {"classical_outcome", to_json(verdict.classical_outcome, problem)},
      {"conclusion", verdict.conclusion == Conclusion::NoClassicalModel
                         ? "NoClassicalModel"
                         : "ClassicalModelExists"}};
}

json to_json(const AdditivityReport& report) {
  return json{{"operator_sum_spectrum",
               sig12_array(report.operator_sum_spectrum)},
              {"eigenvalue_sums", sig12_array(report.eigenvalue_sums)},
              {"disjoint", report.disjoint}};
}

json to_json(const RunReport& report) {
  return json{{"context_id", report.context_id},
              {"theta", round_sig12(report.theta)},
              {"theta_prime", round_sig12(report.theta_prime)},
              {"counts",
               {{"n_pp", report.counts[0]},
                {"n_pm", report.counts[1]},
                {"n_mp", report.counts[2]},
                {"n_mm", report.counts[3]}}},
              {"empirical_correlation",
               round_sig12(report.empirical_correlation)},
              {"standard_error", round_sig12(report.standard_error)}};
}

json to_json(const CrossContextReport& report) {
  return json{{"lhs", round_sig12(report.lhs)},
              {"rhs", round_sig12(report.rhs)},
              {"combined_standard_error",
               round_sig12(report.combined_standard_error)},
              {"exceeded", report.exceeded},
              {"caveat", report.caveat}};
}

}  // namespace bellkit
