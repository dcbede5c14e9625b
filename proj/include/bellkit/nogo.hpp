#ifndef BELLKIT_NOGO_HPP_
#define BELLKIT_NOGO_HPP_

#include <array>
#include <string>
#include <vector>

#include "bellkit/probspace.hpp"
#include "bellkit/quantum.hpp"
#include "bellkit/realizability.hpp"

namespace bellkit {

// Bookkeeping for a classical->quantum correspondence: which classical
// variable is paired with which observable, and which probability space
// with which density operator. The only computable requirement is that
// the pairing is a function (no classical variable mapped twice).
struct CorrespondenceRecord {
  std::vector<std::pair<std::string, std::string>> variable_pairs;
  std::vector<std::pair<std::string, std::string>> statistical_pairs;

  // True iff no classical reference appears with two different images.
  bool is_function() const;
};

// Range-of-values check: the distinct values of x equal spectrum(a) as
// sets, matched within 1e-9.
bool check_range_postulate(const RandomVariable& x, const ComplexMatrix& a);

// Anti-correlation check: x = -x' on every atom of positive weight.
bool check_anticorrelation(const FiniteProbabilitySpace& space,
                           const SignVariable& x, const SignVariable& x_prime);

// The additivity counterexample: eigenvalues of sigma_x + sigma_z are
// ±sqrt(2), while sums of individual eigenvalues are {-2, 0, +2}.
struct AdditivityReport {
  std::vector<double> operator_sum_spectrum;
  std::vector<double> eigenvalue_sums;
  bool disjoint = false;
};

AdditivityReport vn_additivity_counterexample();

enum class Conclusion { ClassicalModelExists, NoClassicalModel };

struct NoGoVerdict {
  std::array<double, 3> angles{};
  // Classical targets after the anti-correlation rewrite: c_ij = -E'(ti,tj)
  // for the pairs (1,2), (3,2), (1,3).
  double c12 = 0.0, c32 = 0.0, c13 = 0.0;
  BellReport quantum_report;
  FeasibilityOutcome classical_outcome;
  Conclusion conclusion = Conclusion::ClassicalModelExists;
};

// Quantum targets -> anti-correlation rewrite -> joint-distribution
// feasibility -> verdict.
NoGoVerdict theorem4_pipeline(double theta1, double theta2, double theta3);

struct ScanRow {
  double theta2 = 0.0;
  double theta3 = 0.0;
  double quantum_lhs = 0.0;
  double quantum_rhs = 0.0;
  double margin = 0.0;  // quantum lhs - rhs; > 0 means violation
  Verdict verdict = Verdict::Feasible;
};

// theta1 pinned at 0 (targets depend on angle differences only);
// (theta2, theta3) on a uniform grid over [0, 2pi)^2, row-major order.
std::vector<ScanRow> angle_scan(int grid_size);

// CSV: theta2, theta3, quantum_lhs, quantum_rhs, margin, verdict.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace bellkit

#endif  // BELLKIT_NOGO_HPP_
