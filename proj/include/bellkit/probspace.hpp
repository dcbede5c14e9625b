#ifndef BELLKIT_PROBSPACE_HPP_
#define BELLKIT_PROBSPACE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

// Finite probability space: atoms with nonnegative weights summing to 1.
// The sigma-algebra is implicitly the full power set, so every function on
// the atoms is measurable and every integral is an exact finite sum.
class FiniteProbabilitySpace {
 public:
  // Validates and adopts the weights. Weights must be nonnegative and sum
  // to 1 within 1e-9; there is no silent renormalization beyond removing
  // that constructed-in rounding (the stored sum is made exactly 1).
  explicit FiniteProbabilitySpace(std::vector<double> weights);

  std::size_t atom_count() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t atom) const { return weights_[atom]; }

 private:
  std::vector<double> weights_;
};

// Real-valued function on the atoms of a space.
struct RandomVariable {
  std::vector<double> values;

  RandomVariable() = default;
  explicit RandomVariable(std::vector<double> v) : values(std::move(v)) {}
};

// ±1-valued random variable. Values are validated exactly (no tolerance):
// the Bell proof rests on the identity value^2 = 1.
class SignVariable {
 public:
  explicit SignVariable(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t atom) const { return values_[atom]; }

  RandomVariable as_random_variable() const;

 private:
  std::vector<int> values_;
};

struct BellReport {
  double lhs = 0.0;     // |<a,b> - <c,b>|
  double rhs = 0.0;     // 1 - <a,c>
  double delta = 0.0;   // <a,b> - <c,b>
  bool holds = false;   // lhs <= rhs + 1e-12
  double margin = 0.0;  // rhs - lhs
};

// Named intermediate values of the Bell-inequality proof, one field per
// step, in proof order.
struct BellProofTrace {
  double delta = 0.0;                   // <a,b> - <c,b> by linearity
  bool integrand_identity_check = false;  // a(w)^2 = 1 on every atom
  double abs_delta = 0.0;
  double majorant = 0.0;  // integral of [1 - a c] dP
  double rhs = 0.0;       // 1 - <a,c>; equals majorant by linearity
  bool chain_holds = false;  // |delta| <= majorant and majorant == rhs

  std::vector<std::pair<std::string, double>> as_rows() const;
};

FiniteProbabilitySpace make_space(std::vector<double> weights);

double expectation(const FiniteProbabilitySpace& space,
                   const RandomVariable& x);

// Raw mixed moment <u,v> = sum_i w_i u_i v_i. Deliberately NOT
// mean-centered.
double covariation(const FiniteProbabilitySpace& space,
                   const RandomVariable& u, const RandomVariable& v);
double covariation(const FiniteProbabilitySpace& space, const SignVariable& u,
                   const SignVariable& v);

BellReport bell_functional(const FiniteProbabilitySpace& space,
                           const SignVariable& a, const SignVariable& b,
                           const SignVariable& c);

// Replays the proof step by step on raw RandomVariables so a broken input
// (a value whose square is not 1) is caught at the exact step the proof
// needs it. Throws IdentityViolated in that case.
BellProofTrace bell_proof_trace(const FiniteProbabilitySpace& space,
                                const RandomVariable& a,
                                const RandomVariable& b,
                                const RandomVariable& c);

struct SignModel {
  FiniteProbabilitySpace space;
  std::array<SignVariable, 3> variables;
};

// Deterministic in seed: weights from normalized exponential draws
// (symmetric Dirichlet(1)), sign values independent fair coins.
SignModel random_sign_model(std::uint64_t seed, std::size_t atom_count);

}  // namespace bellkit

#endif  // BELLKIT_PROBSPACE_HPP_
