#include "bellkit/probspace.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "bellkit/rng.hpp"

namespace bellkit {

namespace {

constexpr double kConstructionTol = 1e-9;
constexpr double kAssertTol = 1e-12;

void require_same_size(std::size_t atoms, std::size_t values,
                       const char* what) {
  if (atoms != values) {
    throw DimensionMismatch(std::string(what) + ": variable has " +
                            std::to_string(values) + " values but space has " +
                            std::to_string(atoms) + " atoms");
  }
}

}  // namespace

FiniteProbabilitySpace::FiniteProbabilitySpace(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw WeightsNotNormalized("a probability space needs at least one atom");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (w < 0.0) {
      throw NegativeWeight("negative weight " + std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kConstructionTol) {
    throw WeightsNotNormalized("weights sum to " + std::to_string(sum) +
                               ", expected 1");
  }
  // Remove the residual rounding so downstream invariants hold at 1e-12.
  for (double& w : weights_) w /= sum;
}

SignVariable::SignVariable(std::vector<int> values)
    : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 1 && v != -1) {
      throw IdentityViolated("sign variable value " + std::to_string(v) +
                             " is not +1 or -1");
    }
  }
}

RandomVariable SignVariable::as_random_variable() const {
  std::vector<double> v(values_.begin(), values_.end());
  return RandomVariable(std::move(v));
}

FiniteProbabilitySpace make_space(std::vector<double> weights) {
  return FiniteProbabilitySpace(std::move(weights));
}

double expectation(const FiniteProbabilitySpace& space,
                   const RandomVariable& x) {
  require_same_size(space.atom_count(), x.values.size(), "expectation");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    acc += space.weight(i) * x.values[i];
  }
  return acc;
}

double covariation(const FiniteProbabilitySpace& space,
                   const RandomVariable& u, const RandomVariable& v) {
  require_same_size(space.atom_count(), u.values.size(), "covariation");
  require_same_size(space.atom_count(), v.values.size(), "covariation");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    acc += space.weight(i) * u.values[i] * v.values[i];
  }
  return acc;
}

double covariation(const FiniteProbabilitySpace& space, const SignVariable& u,
                   const SignVariable& v) {
  require_same_size(space.atom_count(), u.size(), "covariation");
  require_same_size(space.atom_count(), v.size(), "covariation");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc += space.weight(i) * (u[i] * v[i]);
  }
  return acc;
}

BellReport bell_functional(const FiniteProbabilitySpace& space,
                           const SignVariable& a, const SignVariable& b,
                           const SignVariable& c) {
  BellReport report;
  const double ab = covariation(space, a, b);
  const double cb = covariation(space, c, b);
  const double ac = covariation(space, a, c);
  report.delta = ab - cb;
  report.lhs = std::abs(report.delta);
  report.rhs = 1.0 - ac;
  report.margin = report.rhs - report.lhs;
  report.holds = report.lhs <= report.rhs + kAssertTol;
  return report;
}

BellProofTrace bell_proof_trace(const FiniteProbabilitySpace& space,
                                const RandomVariable& a,
                                const RandomVariable& b,
                                const RandomVariable& c) {
  require_same_size(space.atom_count(), a.values.size(), "bell_proof_trace");
  require_same_size(space.atom_count(), b.values.size(), "bell_proof_trace");
  require_same_size(space.atom_count(), c.values.size(), "bell_proof_trace");

  BellProofTrace trace;

  // Step: the pivotal identity a(w)^2 = 1. The proof multiplies the
  // integrand by a^2; anything else invalidates every later step.
  for (const RandomVariable* var : {&a, &b, &c}) {
    for (double v : var->values) {
      if (v * v != 1.0) {
        throw IdentityViolated("proof requires values in {+1,-1}, got " +
                               std::to_string(v));
      }
    }
  }
  trace.integrand_identity_check = true;

  // Step: delta = <a,b> - <c,b> by linearity of the integral.
  trace.delta = covariation(space, a, b) - covariation(space, c, b);
  trace.abs_delta = std::abs(trace.delta);

  // Step: |delta| = |int (1 - a c) a b dP| <= int (1 - a c) dP.
  double majorant = 0.0;
  for (std::size_t i = 0; i < space.atom_count(); ++i) {
    majorant += space.weight(i) * (1.0 - a.values[i] * c.values[i]);
  }
  trace.majorant = majorant;
  trace.rhs = 1.0 - covariation(space, a, c);

  trace.chain_holds = trace.abs_delta <= trace.majorant + kAssertTol &&
                      std::abs(trace.majorant - trace.rhs) <= kAssertTol;
  return trace;
}

std::vector<std::pair<std::string, double>> BellProofTrace::as_rows() const {
  return {
      {"delta", delta},
      {"integrand_identity_check", integrand_identity_check ? 1.0 : 0.0},
      {"abs_delta", abs_delta},
      {"majorant", majorant},
      {"rhs", rhs},
      {"chain_holds", chain_holds ? 1.0 : 0.0},
  };
}

SignModel random_sign_model(std::uint64_t seed, std::size_t atom_count) {
  if (atom_count < 1) {
    throw InvalidProblem("atom_count must be >= 1");
  }
  CounterRng rng(seed);

  std::vector<double> weights(atom_count);
  double sum = 0.0;
  for (double& w : weights) {
    // Exponential(1) draws; normalizing makes the vector Dirichlet(1,...,1).
    w = -std::log1p(-rng.next_double());
    sum += w;
  }
  for (double& w : weights) w /= sum;
  // Exact normalization: absorb the last rounding into the largest weight.
  double resid = 1.0;
  for (double w : weights) resid -= w;
  std::size_t largest = 0;
  for (std::size_t i = 1; i < atom_count; ++i) {
    if (weights[i] > weights[largest]) largest = i;
  }
  weights[largest] += resid;

  auto draw_signs = [&rng, atom_count]() {
    std::vector<int> v(atom_count);
    for (int& s : v) s = rng.next_sign();
    return SignVariable(std::move(v));
  };

  SignVariable a = draw_signs();
  SignVariable b = draw_signs();
  SignVariable c = draw_signs();
  return SignModel{FiniteProbabilitySpace(std::move(weights)),
                   {std::move(a), std::move(b), std::move(c)}};
}

}  // namespace bellkit
