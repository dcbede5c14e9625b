#ifndef BELLKIT_IO_HPP_
#define BELLKIT_IO_HPP_

#include <map>
#include <string>

#include <json.hpp>

#include "bellkit/contextual.hpp"
#include "bellkit/nogo.hpp"
#include "bellkit/probspace.hpp"
#include "bellkit/realizability.hpp"

namespace bellkit {

// model.json: { "weights": [..], "variables": { name: [±1, ..], .. } }
struct FiniteModel {
  FiniteProbabilitySpace space;
  std::map<std::string, SignVariable> variables;
};

FiniteModel parse_model(const nlohmann::json& j);

// problem.json: { "n": 3, "pairs": [[i, j, c], ..], "means": [[i, m], ..] }
RealizabilityProblem parse_problem(const nlohmann::json& j);

nlohmann::json to_json(const BellReport& report);
nlohmann::json to_json(const FeasibilityOutcome& outcome,
                       const RealizabilityProblem& problem);
nlohmann::json to_json(const NoGoVerdict& verdict);
nlohmann::json to_json(const AdditivityReport& report);
nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const CrossContextReport& report);

}  // namespace bellkit

#endif  // BELLKIT_IO_HPP_
