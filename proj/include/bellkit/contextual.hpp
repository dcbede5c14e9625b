#ifndef BELLKIT_CONTEXTUAL_HPP_
#define BELLKIT_CONTEXTUAL_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

// One run of measurements: a complete complex of physical conditions.
// Each context owns its angle pair, sample budget, and RNG stream.
struct Context {
  std::string id;
  double theta = 0.0;
  double theta_prime = 0.0;
  std::int64_t sample_count = 0;
  std::uint64_t seed = 0;
};

struct RunReport {
  std::string context_id;
  double theta = 0.0;
  double theta_prime = 0.0;
  // Outcome counts: (+,+), (+,-), (-,+), (-,-).
  std::array<std::int64_t, 4> counts{};
  double empirical_correlation = 0.0;
  double standard_error = 0.0;  // sqrt((1 - r^2) / N)
};

// Draws outcome pairs from the singlet joint law at delta = theta - theta':
//   P(++) = P(--) = (1 - cos delta) / 4
//   P(+-) = P(-+) = (1 + cos delta) / 4
// Deterministic in the context seed.
RunReport sample_singlet_run(const Context& context);

// Single-space hidden-variable control: lambda uniform on [0, 2pi),
//   a = sign cos(theta - lambda),  b = -sign cos(theta' - lambda).
// Population correlation -1 + 2 delta / pi for delta in [0, pi], extended
// evenly and 2pi-periodically.
RunReport sample_lhv_run(const Context& context);

// Population value of the LHV control model at angle difference delta.
double lhv_correlation(double delta);

struct CrossContextReport {
  double lhs = 0.0;  // |r1 - r2|
  double rhs = 0.0;  // 1 + r3 (anti-correlation form)
  double combined_standard_error = 0.0;
  bool exceeded = false;  // lhs > rhs + 3 * combined SE
  std::string caveat;
};

// Bell expression across three contexts shaped (t1,t2), (t3,t2), (t1,t3).
// Angle bookkeeping is validated against the report metadata; throws
// AngleMismatch when the three runs do not share angles consistently.
CrossContextReport cross_context_bell(const RunReport& report1,
                                      const RunReport& report2,
                                      const RunReport& report3);

struct SensitivityRow {
  RunReport report;
  double jitter_theta = 0.0;
  double jitter_theta_prime = 0.0;
};

struct SensitivityTable {
  std::vector<SensitivityRow> rows;
  // Spread of empirical correlations across contexts; absent for a single
  // context.
  std::optional<double> between_context_stddev;
  double pooled_standard_error = 0.0;
};

// Repeats "the same" singlet experiment n_contexts times with angles
// jittered by independent uniform offsets in [-perturbation, +perturbation],
// quantifying when identical macroscopic settings are not the same context.
SensitivityTable context_sensitivity_demo(std::array<double, 2> base_angles,
                                          double perturbation, int n_contexts,
                                          std::int64_t samples_per_context,
                                          std::uint64_t seed);

// CSV: context_id, theta, theta_prime, n_pp, n_pm, n_mp, n_mm,
//      correlation, stderr.
std::string run_reports_to_csv(const std::vector<RunReport>& reports);

}  // namespace bellkit

#endif  // BELLKIT_CONTEXTUAL_HPP_
