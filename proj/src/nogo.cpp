#include "bellkit/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bellkit/numfmt.hpp"

namespace bellkit {

bool CorrespondenceRecord::is_function() const {
  auto functional = [](const std::vector<std::pair<std::string, std::string>>&
                           pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[i].first == pairs[j].first &&
            pairs[i].second != pairs[j].second) {
          return false;
        }
      }
    }
    return true;
  };
  return functional(variable_pairs) && functional(statistical_pairs);
}

bool check_range_postulate(const RandomVariable& x, const ComplexMatrix& a) {
  constexpr double tol = 1e-9;
  const std::vector<double> spec = spectrum(a);  // throws NotHermitian

  // Distinct values of x, collapsed at the matching tolerance.
  std::vector<double> values = x.values;
  std::sort(values.begin(), values.end());
  std::vector<double> distinct;
  for (double v : values) {
    if (distinct.empty() || v - distinct.back() > tol) distinct.push_back(v);
  }
  std::vector<double> eigen;
  for (double e : spec) {
    if (eigen.empty() || e - eigen.back() > tol) eigen.push_back(e);
  }
  if (distinct.size() != eigen.size()) return false;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (std::abs(distinct[i] - eigen[i]) > tol) return false;
  }
  return true;
}

bool check_anticorrelation(const FiniteProbabilitySpace& space,
                           const SignVariable& x,
                           const SignVariable& x_prime) {
  if (x.size() != space.atom_count() || x_prime.size() != space.atom_count()) {
    throw DimensionMismatch("check_anticorrelation: size mismatch");
  }
  for (std::size_t i = 0; i < space.atom_count(); ++i) {
    if (space.weight(i) > 0.0 && x[i] != -x_prime[i]) return false;
  }
  return true;
}

AdditivityReport vn_additivity_counterexample() {
  AdditivityReport report;
  report.operator_sum_spectrum =
      spectrum(pauli(PauliAxis::X) + pauli(PauliAxis::Z));
  report.eigenvalue_sums = {-2.0, 0.0, 2.0};  // ±1 ± 1
  report.disjoint = true;
  for (double ev : report.operator_sum_spectrum) {
    for (double s : report.eigenvalue_sums) {
      if (std::abs(ev - s) <= 1e-9) report.disjoint = false;
    }
  }
  return report;
}

NoGoVerdict theorem4_pipeline(double theta1, double theta2, double theta3) {
  NoGoVerdict v;
  v.angles = {theta1, theta2, theta3};

  // Quantum targets for the primed (second-particle) variables.
  const double e12 = singlet_correlation(theta1, theta2);
  const double e32 = singlet_correlation(theta3, theta2);
  const double e13 = singlet_correlation(theta1, theta3);

  // Anti-correlation rewrite: xi' = -xi, so the unprimed classical targets
  // flip sign. The joint-feasibility question is posed over three unprimed
  // variables indexed (theta1, theta2, theta3) = (0, 1, 2).
  v.c12 = std::clamp(-e12, -1.0, 1.0);
  v.c32 = std::clamp(-e32, -1.0, 1.0);
  v.c13 = std::clamp(-e13, -1.0, 1.0);

  RealizabilityProblem problem(
      3, {{0, 1, v.c12}, {2, 1, v.c32}, {0, 2, v.c13}});
  v.classical_outcome = decide(problem);
  v.quantum_report = quantum_bell_expression(theta1, theta2, theta3);
  v.conclusion = v.classical_outcome.verdict == Verdict::Infeasible
                     ? Conclusion::NoClassicalModel
                     : Conclusion::ClassicalModelExists;
  return v;
}

std::vector<ScanRow> angle_scan(int grid_size) {
  if (grid_size < 2) {
    throw InvalidProblem("angle_scan needs grid_size >= 2");
  }
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_size) * grid_size);
  const double step = 2.0 * M_PI / grid_size;
  for (int i2 = 0; i2 < grid_size; ++i2) {
    for (int i3 = 0; i3 < grid_size; ++i3) {
      const double t2 = i2 * step;
      const double t3 = i3 * step;
      const NoGoVerdict v = theorem4_pipeline(0.0, t2, t3);
      ScanRow row;
      row.theta2 = t2;
      row.theta3 = t3;
      row.quantum_lhs = v.quantum_report.lhs;
      row.quantum_rhs = v.quantum_report.rhs;
      row.margin = v.quantum_report.lhs - v.quantum_report.rhs;
      row.verdict = v.classical_outcome.verdict;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "theta2,theta3,quantum_lhs,quantum_rhs,margin,verdict\n";
  for (const auto& row : rows) {
    os << sig12(row.theta2) << ',' << sig12(row.theta3) << ','
       << sig12(row.quantum_lhs) << ',' << sig12(row.quantum_rhs) << ','
       << sig12(row.margin) << ','
       << (row.verdict == Verdict::Feasible ? "Feasible" : "Infeasible")
       << '\n';
  }
  return os.str();
}

}  // namespace bellkit
