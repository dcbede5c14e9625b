#include "bellkit/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace bellkit {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// One row of the constraint system  A p = b  over the 2^n joint weights:
// kind 0 = normalization (b = 1), kind 1 = pair, kind 2 = mean.
struct Row {
  int kind;
  int i = 0, j = 0;
  double rhs = 0.0;
};

std::vector<Row> build_rows(const RealizabilityProblem& p) {
  std::vector<Row> rows;
  rows.push_back({0, 0, 0, 1.0});
  for (const auto& pc : p.pairs()) rows.push_back({1, pc.i, pc.j, pc.target});
  for (const auto& mc : p.means()) rows.push_back({2, mc.i, 0, mc.target});
  return rows;
}

double coeff(const Row& row, std::size_t assignment) {
  switch (row.kind) {
    case 0:
      return 1.0;
    case 1:
      return assignment_sign(assignment, row.i) *
             assignment_sign(assignment, row.j);
    default:
      return assignment_sign(assignment, row.i);
  }
}

Certificate pack_certificate(const RealizabilityProblem& problem,
                             const std::vector<double>& y) {
  Certificate cert;
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  std::size_t r = 0;
  cert.constant = y[r++] / scale;
  cert.pair_coeffs.reserve(problem.pairs().size());
  for (std::size_t k = 0; k < problem.pairs().size(); ++k) {
    cert.pair_coeffs.push_back(y[r++] / scale);
  }
  cert.mean_coeffs.reserve(problem.means().size());
  for (std::size_t k = 0; k < problem.means().size(); ++k) {
    cert.mean_coeffs.push_back(y[r++] / scale);
  }
  return cert;
}

}  // namespace

RealizabilityProblem::RealizabilityProblem(int variable_count,
                                           std::vector<PairConstraint> pairs,
                                           std::vector<MeanConstraint> means)
    : n_(variable_count), pairs_(std::move(pairs)), means_(std::move(means)) {
  if (n_ < 2 || n_ > 4) {
    throw InvalidProblem("variable_count must be in [2, 4], got " +
                         std::to_string(n_));
  }
  std::vector<std::pair<int, int>> seen;
  for (const auto& pc : pairs_) {
    if (pc.i < 0 || pc.i >= n_ || pc.j < 0 || pc.j >= n_ || pc.i == pc.j) {
      throw InvalidProblem("pair constraint indices out of range");
    }
    if (std::abs(pc.target) > 1.0) {
      throw InvalidProblem("pair correlation outside [-1, 1]");
    }
    auto key = std::minmax(pc.i, pc.j);
    if (std::find(seen.begin(), seen.end(),
                  std::pair<int, int>(key.first, key.second)) != seen.end()) {
      throw InvalidProblem("duplicate pair constraint");
    }
    seen.emplace_back(key.first, key.second);
  }
  std::vector<int> seen_means;
  for (const auto& mc : means_) {
    if (mc.i < 0 || mc.i >= n_) {
      throw InvalidProblem("mean constraint index out of range");
    }
    if (std::abs(mc.target) > 1.0) {
      throw InvalidProblem("mean outside [-1, 1]");
    }
    if (std::find(seen_means.begin(), seen_means.end(), mc.i) !=
        seen_means.end()) {
      throw InvalidProblem("duplicate mean constraint");
    }
    seen_means.push_back(mc.i);
  }
}

double Certificate::evaluate_assignment(const RealizabilityProblem& problem,
                                        std::size_t assignment) const {
  double acc = constant;
  for (std::size_t k = 0; k < problem.pairs().size(); ++k) {
    const auto& pc = problem.pairs()[k];
    acc += pair_coeffs[k] * assignment_sign(assignment, pc.i) *
           assignment_sign(assignment, pc.j);
  }
  for (std::size_t k = 0; k < problem.means().size(); ++k) {
    acc += mean_coeffs[k] * assignment_sign(assignment, problem.means()[k].i);
  }
  return acc;
}

double Certificate::evaluate_target(const RealizabilityProblem& problem) const {
  double acc = constant;
  for (std::size_t k = 0; k < problem.pairs().size(); ++k) {
    acc += pair_coeffs[k] * problem.pairs()[k].target;
  }
  for (std::size_t k = 0; k < problem.means().size(); ++k) {
    acc += mean_coeffs[k] * problem.means()[k].target;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// decide(): phase-I simplex with Bland's rule.
// ---------------------------------------------------------------------------

FeasibilityOutcome decide(const RealizabilityProblem& problem) {
  const auto rows = build_rows(problem);
  const std::size_t m = rows.size();
  const std::size_t n_cols = problem.assignment_count();

  // Tableau columns: n_cols structural + m artificial + rhs.
  std::vector<int> flip(m, 1);
  std::vector<std::vector<double>> t(m, std::vector<double>(n_cols + m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    flip[r] = rows[r].rhs < 0.0 ? -1 : 1;
    for (std::size_t k = 0; k < n_cols; ++k) {
      t[r][k] = flip[r] * coeff(rows[r], k);
    }
    t[r][n_cols + r] = 1.0;
    t[r][n_cols + m] = flip[r] * rows[r].rhs;
  }

  // Phase-I objective: minimize the artificial total. Reduced-cost row
  // starts at c_j - sum_r a_rj (basis = artificials, c_B = 1).
  std::vector<double> obj(n_cols + m, 0.0);
  for (std::size_t k = 0; k < n_cols; ++k) {
    for (std::size_t r = 0; r < m; ++r) obj[k] -= t[r][k];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n_cols + r;

  const std::size_t rhs_col = n_cols + m;
  for (;;) {
    // Bland: smallest-index structural column with negative reduced cost.
    // Artificial columns never re-enter.
    std::size_t enter = n_cols;
    for (std::size_t k = 0; k < n_cols; ++k) {
      if (obj[k] < -kPivotTol) {
        enter = k;
        break;
      }
    }
    if (enter == n_cols) break;  // optimal

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] > kPivotTol) {
        const double ratio = t[r][rhs_col] / t[r][enter];
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol &&
             (leave == m || basis[r] < basis[leave]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) break;  // unbounded cannot happen on the simplex

    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = t[r][enter];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k <= rhs_col; ++k) t[r][k] -= f * t[leave][k];
    }
    const double f = obj[enter];
    for (std::size_t k = 0; k < rhs_col; ++k) obj[k] -= f * t[leave][k];
    basis[leave] = enter;
  }

  double infeas = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= n_cols) infeas += t[r][rhs_col];
  }

  FeasibilityOutcome out;
  if (infeas <= kFeasTol) {
    out.verdict = Verdict::Feasible;
    out.slack = 0.0;
    std::vector<double> witness(n_cols, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n_cols) witness[basis[r]] = std::max(0.0, t[r][rhs_col]);
    }
    double sum = 0.0;
    for (double w : witness) sum += w;
    if (sum > 0.0) {
      for (double& w : witness) w /= sum;
    }
    out.witness = std::move(witness);
  } else {
    out.verdict = Verdict::Infeasible;
    out.slack = infeas;
    // Simplex multipliers y_r = 1 - (reduced cost of artificial r). The
    // Farkas direction for the original row orientation is -y_r * flip_r.
    std::vector<double> y(m);
    for (std::size_t r = 0; r < m; ++r) {
      y[r] = -(1.0 - obj[n_cols + r]) * flip[r];
    }
    out.certificate = pack_certificate(problem, y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// triple_closed_form(): tetrahedron facets.
// ---------------------------------------------------------------------------

bool triple_closed_form(double c12, double c13, double c23) {
  constexpr double tol = 1e-12;
  return 1.0 + c12 + c13 + c23 >= -tol && 1.0 + c12 - c13 - c23 >= -tol &&
         1.0 - c12 + c13 - c23 >= -tol && 1.0 - c12 - c13 + c23 >= -tol;
}

// ---------------------------------------------------------------------------
// brute_force_oracle(): exact rational vertex enumeration.
// ---------------------------------------------------------------------------

namespace {

// Exact integer encoding of one scaled row: the double rhs is written as
// mantissa * 2^-shift, then the whole row is multiplied by 2^shift so
// every entry is an integer.
struct ExactRow {
  std::vector<BigInt> a;  // length 2^n; entries ±2^shift
  BigInt b;
  int shift = 0;  // row scale exponent, for certificate un-scaling
};

ExactRow exact_row(const Row& row, std::size_t n_cols) {
  ExactRow er;
  int exp = 0;
  const double mant = std::frexp(row.rhs, &exp);
  // rhs = M * 2^(exp - 53) with M a 53-bit integer, exactly.
  const auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
  int shift = 53 - exp;
  BigInt b = mant_int;
  if (shift < 0) {
    b <<= -shift;
    shift = 0;
  }
  er.shift = shift;
  er.b = b;
  BigInt unit = BigInt(1) << shift;
  er.a.resize(n_cols);
  for (std::size_t k = 0; k < n_cols; ++k) {
    er.a[k] = coeff(row, k) > 0 ? unit : -unit;
  }
  return er;
}

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// Determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Cramer solve of a square exact system; returns false when singular.
bool cramer_solve(const std::vector<std::vector<BigInt>>& m,
                  const std::vector<BigInt>& rhs, std::vector<BigRat>& x) {
  const std::size_t n = m.size();
  const BigInt det = bareiss_det(m);
  if (det == 0) return false;
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto mi = m;
    for (std::size_t r = 0; r < n; ++r) mi[r][i] = rhs[r];
    x[i] = BigRat(bareiss_det(mi), det);
  }
  return true;
}

// Enumerate size-k subsets of [0, n) in lexicographic order.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (s[i] + (k - i) < n) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

FeasibilityOutcome brute_force_oracle(const RealizabilityProblem& problem) {
  if (problem.variable_count() > 3) {
    throw TooLarge("brute_force_oracle handles at most 3 variables");
  }
  const auto rows = build_rows(problem);
  const std::size_t m = rows.size();
  const std::size_t n_cols = problem.assignment_count();

  std::vector<ExactRow> exact;
  exact.reserve(m);
  for (const auto& row : rows) exact.push_back(exact_row(row, n_cols));

  // Greedy exact row reduction: find a maximal independent row set and
  // detect inconsistency. Each working row carries its expansion in the
  // original rows ("history") so an inconsistent combination is itself a
  // Farkas certificate.
  struct Reduced {
    std::vector<BigRat> a;
    BigRat b;
    std::vector<BigRat> history;  // coefficients over original scaled rows
  };
  std::vector<Reduced> reduced;          // independent rows, echelon form
  std::vector<std::size_t> pivot_cols;   // pivot column of each reduced row
  std::vector<std::size_t> independent;  // original indices of kept rows

  FeasibilityOutcome out;
  for (std::size_t r = 0; r < m; ++r) {
    Reduced work;
    work.a.assign(exact[r].a.begin(), exact[r].a.end());
    work.b = BigRat(exact[r].b);
    work.history.assign(m, BigRat(0));
    work.history[r] = 1;
    for (std::size_t q = 0; q < reduced.size(); ++q) {
      const BigRat f = work.a[pivot_cols[q]] / reduced[q].a[pivot_cols[q]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < n_cols; ++k) work.a[k] -= f * reduced[q].a[k];
      work.b -= f * reduced[q].b;
      for (std::size_t k = 0; k < m; ++k) {
        work.history[k] -= f * reduced[q].history[k];
      }
    }
    std::size_t piv = n_cols;
    for (std::size_t k = 0; k < n_cols; ++k) {
      if (work.a[k] != 0) {
        piv = k;
        break;
      }
    }
    if (piv == n_cols) {
      if (work.b != 0) {
        // 0 = nonzero: the history row is an exact Farkas certificate.
        std::vector<double> y(m);
        const int dir = work.b > 0 ? -1 : 1;
        for (std::size_t k = 0; k < m; ++k) {
          BigRat v = dir * work.history[k] * (BigInt(1) << exact[k].shift);
          y[k] = v.convert_to<double>();
        }
        out.verdict = Verdict::Infeasible;
        out.certificate = pack_certificate(problem, y);
        out.slack = std::abs(BigRat(work.b).convert_to<double>());
        return out;
      }
      continue;  // dependent, consistent
    }
    pivot_cols.push_back(piv);
    independent.push_back(r);
    reduced.push_back(std::move(work));
  }

  const std::size_t rank = independent.size();

  // Primal vertices: every basic solution of the full-row-rank subsystem.
  std::vector<std::size_t> cols(rank);
  for (std::size_t i = 0; i < rank; ++i) cols[i] = i;
  do {
    std::vector<std::vector<BigInt>> mat(rank, std::vector<BigInt>(rank));
    std::vector<BigInt> rhs(rank);
    for (std::size_t r = 0; r < rank; ++r) {
      const auto& er = exact[independent[r]];
      for (std::size_t c = 0; c < rank; ++c) mat[r][c] = er.a[cols[c]];
      rhs[r] = er.b;
    }
    std::vector<BigRat> x;
    if (!cramer_solve(mat, rhs, x)) continue;
    bool nonneg = true;
    for (const auto& xi : x) {
      if (xi < 0) {
        nonneg = false;
        break;
      }
    }
    if (!nonneg) continue;
    std::vector<double> witness(n_cols, 0.0);
    for (std::size_t c = 0; c < rank; ++c) {
      witness[cols[c]] = x[c].convert_to<double>();
    }
    out.verdict = Verdict::Feasible;
    out.witness = std::move(witness);
    out.slack = 0.0;
    return out;
  } while (next_subset(cols, n_cols));

  // Infeasible: enumerate vertices of the dual polyhedron
  //   { y : A^T y >= 0 on every assignment column, b^T y = -1 }
  // over the independent rows. A vertex exists (the polyhedron is
  // nonempty by Farkas and pointed by full row rank), and each vertex
  // has the equality plus rank-1 independent tight inequalities.
  out.verdict = Verdict::Infeasible;
  if (rank >= 1) {
    std::vector<std::size_t> tight(rank - 1);
    for (std::size_t i = 0; i + 1 < rank; ++i) tight[i] = i;
    bool more = true;
    while (more) {
      std::vector<std::vector<BigInt>> mat(rank, std::vector<BigInt>(rank));
      std::vector<BigInt> rhs(rank, 0);
      for (std::size_t t = 0; t + 1 < rank; ++t) {
        for (std::size_t r = 0; r < rank; ++r) {
          mat[t][r] = exact[independent[r]].a[tight[t]];
        }
      }
      for (std::size_t r = 0; r < rank; ++r) {
        mat[rank - 1][r] = exact[independent[r]].b;
      }
      rhs[rank - 1] = -1;
      std::vector<BigRat> y;
      if (cramer_solve(mat, rhs, y)) {
        bool ok = true;
        for (std::size_t k = 0; k < n_cols && ok; ++k) {
          BigRat dot = 0;
          for (std::size_t r = 0; r < rank; ++r) {
            dot += y[r] * exact[independent[r]].a[k];
          }
          if (dot < 0) ok = false;
        }
        if (ok) {
          std::vector<double> yfull(m, 0.0);
          for (std::size_t r = 0; r < rank; ++r) {
            BigRat v =
                y[r] * (BigInt(1) << exact[independent[r]].shift);
            yfull[independent[r]] = v.convert_to<double>();
          }
          out.certificate = pack_certificate(problem, yfull);
          break;
        }
      }
      more = rank > 1 ? next_subset(tight, n_cols) : false;
    }
  }
  if (!out.certificate) {
    // Unreachable if the theory above holds; fail loudly rather than
    // return a half-formed outcome.
    throw InvalidProblem("oracle failed to produce a Farkas certificate");
  }
  // Slack for the oracle: certificate violation depth on the target.
  out.slack = -out.certificate->evaluate_target(problem);
  return out;
}

}  // namespace bellkit
