#include "bellkit/contextual.hpp"

#include <cmath>
#include <sstream>

#include "bellkit/numfmt.hpp"
#include "bellkit/rng.hpp"

namespace bellkit {

namespace {

void validate(const Context& context) {
  if (context.sample_count < 1) {
    throw InvalidContext("context '" + context.id +
                         "' needs sample_count >= 1");
  }
  if (!std::isfinite(context.theta) || !std::isfinite(context.theta_prime)) {
    throw InvalidContext("context '" + context.id + "' has non-finite angle");
  }
}

RunReport finalize(const Context& context,
                   const std::array<std::int64_t, 4>& counts) {
  RunReport report;
  report.context_id = context.id;
  report.theta = context.theta;
  report.theta_prime = context.theta_prime;
  report.counts = counts;
  const auto n = static_cast<double>(context.sample_count);
  // Integer numerator first; the ratio is computed exactly once.
  const std::int64_t agree = counts[0] + counts[3];
  const std::int64_t disagree = counts[1] + counts[2];
  report.empirical_correlation = static_cast<double>(agree - disagree) / n;
  const double r = report.empirical_correlation;
  report.standard_error = std::sqrt(std::max(0.0, 1.0 - r * r) / n);
  return report;
}

int sign_of_cos(double x) { return std::cos(x) >= 0.0 ? +1 : -1; }

}  // namespace

RunReport sample_singlet_run(const Context& context) {
  validate(context);
  const double delta = context.theta - context.theta_prime;
  const double c = std::cos(delta);
  // Cell boundaries of the joint law, in the order ++, +-, -+, --.
  const double p_pp = (1.0 - c) / 4.0;
  const double p_pm = (1.0 + c) / 4.0;
  const double b1 = p_pp;
  const double b2 = p_pp + p_pm;
  const double b3 = p_pp + p_pm + p_pm;

  CounterRng rng(context.seed);
  std::array<std::int64_t, 4> counts{};
  for (std::int64_t k = 0; k < context.sample_count; ++k) {
    const double u = rng.next_double();
    if (u < b1) {
      ++counts[0];
    } else if (u < b2) {
      ++counts[1];
    } else if (u < b3) {
      ++counts[2];
    } else {
      ++counts[3];
    }
  }
  return finalize(context, counts);
}

RunReport sample_lhv_run(const Context& context) {
  validate(context);
  CounterRng rng(context.seed);
  std::array<std::int64_t, 4> counts{};
  for (std::int64_t k = 0; k < context.sample_count; ++k) {
    const double lambda = rng.next_double() * 2.0 * M_PI;
    const int a = sign_of_cos(context.theta - lambda);
    const int b = -sign_of_cos(context.theta_prime - lambda);
    const int cell = (a > 0 ? 0 : 2) + (b > 0 ? 0 : 1);
    ++counts[cell];
  }
  return finalize(context, counts);
}

double lhv_correlation(double delta) {
  double d = std::fmod(std::abs(delta), 2.0 * M_PI);
  if (d > M_PI) d = 2.0 * M_PI - d;
  return -1.0 + 2.0 * d / M_PI;
}

CrossContextReport cross_context_bell(const RunReport& report1,
                                      const RunReport& report2,
                                      const RunReport& report3) {
  // Required shape: (t1, t2), (t3, t2), (t1, t3).
  constexpr double tol = 1e-12;
  const double t1 = report1.theta;
  const double t2 = report1.theta_prime;
  const double t3 = report2.theta;
  if (std::abs(report2.theta_prime - t2) > tol) {
    throw AngleMismatch("second context must share theta' with the first");
  }
  if (std::abs(report3.theta - t1) > tol ||
      std::abs(report3.theta_prime - t3) > tol) {
    throw AngleMismatch("third context must pair theta1 with theta3");
  }

  CrossContextReport out;
  out.lhs = std::abs(report1.empirical_correlation -
                     report2.empirical_correlation);
  out.rhs = 1.0 + report3.empirical_correlation;
  out.combined_standard_error = std::sqrt(
      report1.standard_error * report1.standard_error +
      report2.standard_error * report2.standard_error +
      report3.standard_error * report3.standard_error);
  out.exceeded = out.lhs > out.rhs + 3.0 * out.combined_standard_error;
  out.caveat =
      "Exceedance refutes the assumption that all three runs are described "
      "by a single probability space with shared random variables; it does "
      "not by itself establish nonlocality or preclude objective "
      "properties.";
  return out;
}

SensitivityTable context_sensitivity_demo(std::array<double, 2> base_angles,
                                          double perturbation, int n_contexts,
                                          std::int64_t samples_per_context,
                                          std::uint64_t seed) {
  if (perturbation < 0.0) {
    throw InvalidContext("perturbation must be >= 0");
  }
  if (n_contexts < 1) {
    throw InvalidContext("need at least one context");
  }
  SensitivityTable table;
  table.rows.reserve(n_contexts);

  CounterRng jitter_rng(CounterRng::derive_stream(seed, 0));
  double sum = 0.0, sum_sq = 0.0, pooled_var = 0.0;
  for (int k = 0; k < n_contexts; ++k) {
    SensitivityRow row;
    row.jitter_theta = (2.0 * jitter_rng.next_double() - 1.0) * perturbation;
    row.jitter_theta_prime =
        (2.0 * jitter_rng.next_double() - 1.0) * perturbation;
    Context context;
    context.id = "C" + std::to_string(k + 1);
    context.theta = base_angles[0] + row.jitter_theta;
    context.theta_prime = base_angles[1] + row.jitter_theta_prime;
    context.sample_count = samples_per_context;
    context.seed = CounterRng::derive_stream(seed, static_cast<std::uint64_t>(k) + 1);
    row.report = sample_singlet_run(context);
    sum += row.report.empirical_correlation;
    sum_sq += row.report.empirical_correlation *
              row.report.empirical_correlation;
    pooled_var += row.report.standard_error * row.report.standard_error;
    table.rows.push_back(std::move(row));
  }
  table.pooled_standard_error = std::sqrt(pooled_var / n_contexts);
  if (n_contexts > 1) {
    const double mean = sum / n_contexts;
    const double var =
        std::max(0.0, (sum_sq - n_contexts * mean * mean) / (n_contexts - 1));
    table.between_context_stddev = std::sqrt(var);
  }
  return table;
}

std::string run_reports_to_csv(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << "context_id,theta,theta_prime,n_pp,n_pm,n_mp,n_mm,correlation,"
        "stderr\n";
  for (const auto& r : reports) {
    os << r.context_id << ',' << sig12(r.theta) << ',' << sig12(r.theta_prime)
       << ',' << r.counts[0] << ',' << r.counts[1] << ',' << r.counts[2]
       << ',' << r.counts[3] << ',' << sig12(r.empirical_correlation) << ','
       << sig12(r.standard_error) << '\n';
  }
  return os.str();
}

}  // namespace bellkit
