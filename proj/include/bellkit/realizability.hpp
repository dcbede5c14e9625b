#ifndef BELLKIT_REALIZABILITY_HPP_
#define BELLKIT_REALIZABILITY_HPP_

#include <optional>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

struct PairConstraint {
  int i = 0;
  int j = 0;
  double target = 0.0;  // prescribed <x_i, x_j>, in [-1, 1]
};

struct MeanConstraint {
  int i = 0;
  double target = 0.0;  // prescribed <x_i>, in [-1, 1]
};

// Prescribed pairwise correlations (and optionally means) among n
// ±1-valued variables. The question: does one joint distribution on
// {±1}^n reproduce them all?
class RealizabilityProblem {
 public:
  RealizabilityProblem(int variable_count, std::vector<PairConstraint> pairs,
                       std::vector<MeanConstraint> means = {});

  int variable_count() const { return n_; }
  const std::vector<PairConstraint>& pairs() const { return pairs_; }
  const std::vector<MeanConstraint>& means() const { return means_; }
  std::size_t assignment_count() const { return std::size_t{1} << n_; }

 private:
  int n_;
  std::vector<PairConstraint> pairs_;
  std::vector<MeanConstraint> means_;
};

// Value of variable `var` under deterministic assignment `k` in [0, 2^n).
// Bit 0 of k is variable 0; a zero bit means +1.
inline int assignment_sign(std::size_t k, int var) {
  return ((k >> var) & 1u) ? -1 : +1;
}

enum class Verdict { Feasible, Infeasible };

// A linear functional over (1, pair targets, mean targets) that is
// nonnegative on every deterministic assignment but negative on the
// prescribed targets — a proof that no joint distribution exists.
struct Certificate {
  double constant = 0.0;
  std::vector<double> pair_coeffs;  // aligned with problem.pairs()
  std::vector<double> mean_coeffs;  // aligned with problem.means()

  double evaluate_assignment(const RealizabilityProblem& problem,
                             std::size_t assignment) const;
  double evaluate_target(const RealizabilityProblem& problem) const;
};

struct FeasibilityOutcome {
  Verdict verdict = Verdict::Infeasible;
  // Joint weights over {±1}^n indexed by assignment_sign ordering;
  // present iff Feasible.
  std::optional<std::vector<double>> witness;
  // Present iff Infeasible; normalized to unit max-norm.
  std::optional<Certificate> certificate;
  double slack = 0.0;  // distance to feasibility; 0 when feasible
};

// Phase-I simplex (Bland's rule) over the 2^n-atom joint simplex.
// Feasible: returns a witness distribution. Infeasible: returns the
// Farkas certificate read off the phase-I dual.
FeasibilityOutcome decide(const RealizabilityProblem& problem);

// Exact facet test for the pure-pairwise three-variable case: realizable
// iff the correlation vector lies in the tetrahedron spanned by the four
// deterministic correlation patterns.
bool triple_closed_form(double c12, double c13, double c23);

// Independent verification path: exact rational vertex enumeration over
// all basis subsets (Bareiss elimination on integers, no floating
// tolerance anywhere). n <= 3 only.
FeasibilityOutcome brute_force_oracle(const RealizabilityProblem& problem);

}  // namespace bellkit

#endif  // BELLKIT_REALIZABILITY_HPP_
