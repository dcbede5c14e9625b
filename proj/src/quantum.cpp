#include "bellkit/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace bellkit {

namespace {

constexpr double kConstructionTol = 1e-10;
constexpr double kAssertTol = 1e-12;

using Scalar = std::complex<double>;

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      m(c, r) = std::conj((*this)(r, c));
    }
  }
  return m;
}

Scalar ComplexMatrix::trace() const {
  Scalar acc = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    acc += (*this)(i, i);
  }
  return acc;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
        return false;
      }
    }
  }
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      m = std::max(m, std::abs((*this)(r, c) - other(r, c)));
    }
  }
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product: " + std::to_string(a.cols()) +
                            " columns vs " + std::to_string(b.rows()) +
                            " rows");
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar ark = a(r, k);
      if (ark == Scalar(0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        m(r, c) += ark * b(k, c);
      }
    }
  }
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum: shape mismatch");
  }
  ComplexMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = a(r, c) + b(r, c);
    }
  }
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix difference: shape mismatch");
  }
  ComplexMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = a(r, c) - b(r, c);
    }
  }
  return m;
}

ComplexMatrix operator*(Scalar s, const ComplexMatrix& a) {
  ComplexMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = s * a(r, c);
    }
  }
  return m;
}

ComplexMatrix pauli(PauliAxis which) {
  ComplexMatrix m(2, 2);
  if (which == PauliAxis::X) {
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
  } else {
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
  }
  return m;
}

SpinObservable::SpinObservable(double theta)
    : theta_(std::fmod(std::fmod(theta, 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI)),
      matrix_(2, 2) {
  matrix_ = Scalar(std::cos(theta)) * pauli(PauliAxis::Z) +
            Scalar(std::sin(theta)) * pauli(PauliAxis::X);
  // Invariants: Hermitian, involutory, spectrum {+1,-1}.
  if (!matrix_.is_hermitian(kAssertTol)) {
    throw NotHermitian("sigma(theta) failed hermiticity");
  }
  if ((matrix_ * matrix_).max_abs_diff(ComplexMatrix::identity(2)) >
      kAssertTol) {
    throw IdentityViolated("sigma(theta)^2 != I");
  }
}

SpinObservable sigma_theta(double theta) { return SpinObservable(theta); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Scalar s = a(ar, ac);
      if (s == Scalar(0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          m(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return m;
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw DimensionMismatch("density operator must be square");
  }
  if (!matrix_.is_hermitian(kConstructionTol)) {
    throw NotHermitian("density operator must be Hermitian");
  }
  if (std::abs(matrix_.trace() - Scalar(1.0)) > kConstructionTol) {
    throw InvalidProblem("density operator must have unit trace");
  }
  for (double ev : spectrum(matrix_)) {
    if (ev < -kConstructionTol) {
      throw InvalidProblem("density operator has negative eigenvalue " +
                           std::to_string(ev));
    }
  }
}

DensityOperator singlet_density() {
  // psi = (|+-> - |-+>)/sqrt2 in the lexicographic sigma_z product basis.
  const double r = 1.0 / std::sqrt(2.0);
  const Scalar psi[4] = {0.0, r, -r, 0.0};
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = psi[i] * std::conj(psi[j]);
    }
  }
  return DensityOperator(std::move(m));
}

double trace_average(const DensityOperator& rho, const ComplexMatrix& a) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw DimensionMismatch("trace_average: operator dimension " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs state dimension " +
                            std::to_string(rho.dim()));
  }
  const Scalar t = (rho.matrix() * a).trace();
  if (std::abs(t.imag()) > 1e-10) {
    throw NonRealAverage("Tr(rho A) has imaginary part " +
                         std::to_string(t.imag()));
  }
  return t.real();
}

double singlet_correlation(double theta1, double theta2) {
  const ComplexMatrix eye2 = ComplexMatrix::identity(2);
  const ComplexMatrix a = tensor(sigma_theta(theta1).matrix(), eye2);
  const ComplexMatrix b = tensor(eye2, sigma_theta(theta2).matrix());
  return trace_average(singlet_density(), a * b);
}

namespace {

std::vector<double> spectrum_2x2(const ComplexMatrix& a) {
  // Hermitian 2x2: eigenvalues from trace and determinant.
  const double tr = a.trace().real();
  const double det =
      (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) acc += std::norm(a(r, c));
    }
  }
  return std::sqrt(acc);
}

// One cyclic sweep of two-sided unitary rotations. Each (p,q) rotation is
// built from the exact eigenvectors of the 2x2 pivot block, which zeroes
// that off-diagonal entry.
ComplexMatrix jacobi_sweep(ComplexMatrix a) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Scalar g = a(p, q);
      if (std::abs(g) < 1e-300) continue;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double half_gap = (app - aqq) / 2.0;
      const double disc = std::hypot(half_gap, std::abs(g));
      // Eigenvalue of the pivot block closer to app.
      const double lam =
          (app + aqq) / 2.0 + (half_gap >= 0.0 ? disc : -disc);
      // Eigenvector (g, lam - app), orthonormalized.
      const Scalar v0 = g;
      const double v1 = lam - app;
      const double norm = std::sqrt(std::norm(v0) + v1 * v1);
      Scalar up, uq;
      if (norm < 1e-300) {
        up = 1.0;
        uq = 0.0;
      } else {
        up = v0 / norm;
        uq = v1 / norm;
      }
      ComplexMatrix u = ComplexMatrix::identity(n);
      u(p, p) = up;
      u(q, p) = uq;
      u(p, q) = -std::conj(uq);
      u(q, q) = std::conj(up);
      a = u.adjoint() * a * u;
    }
  }
  return a;
}

}  // namespace

std::vector<double> spectrum(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw NotHermitian("spectrum: matrix not square");
  }
  if (!a.is_hermitian(kConstructionTol)) {
    throw NotHermitian("spectrum: matrix not Hermitian within 1e-10");
  }
  if (a.rows() > 4) {
    throw TooLarge("spectrum supports dimension <= 4");
  }
  if (a.rows() == 1) return {a(0, 0).real()};
  if (a.rows() == 2) return spectrum_2x2(a);

  ComplexMatrix work = a;
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm(work) < 1e-14) break;
    work = jacobi_sweep(std::move(work));
  }
  std::vector<double> evs(work.rows());
  for (std::size_t i = 0; i < work.rows(); ++i) evs[i] = work(i, i).real();
  std::sort(evs.begin(), evs.end());
  return evs;
}

BellReport quantum_bell_expression(double theta1, double theta2,
                                   double theta3) {
  BellReport report;
  const double e12 = singlet_correlation(theta1, theta2);
  const double e32 = singlet_correlation(theta3, theta2);
  const double e13 = singlet_correlation(theta1, theta3);
  report.delta = e12 - e32;
  report.lhs = std::abs(report.delta);
  report.rhs = 1.0 + e13;
  report.margin = report.rhs - report.lhs;
  report.holds = report.lhs <= report.rhs + kAssertTol;
  return report;
}

}  // namespace bellkit
