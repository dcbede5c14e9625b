#ifndef BELLKIT_QUANTUM_HPP_
#define BELLKIT_QUANTUM_HPP_

#include <complex>
#include <vector>

#include "bellkit/errors.hpp"
#include "bellkit/probspace.hpp"

namespace bellkit {

// Dense complex matrix, row-major. Sized for the 2- and 4-dimensional
// state spaces this library works in; no attempt at general linear algebra.
class ComplexMatrix {
 public:
  using Scalar = std::complex<double>;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  Scalar trace() const;
  bool is_hermitian(double tol) const;
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(std::complex<double> s, const ComplexMatrix& a);

enum class PauliAxis { X, Z };

ComplexMatrix pauli(PauliAxis which);

// sigma(theta) = cos(theta) sigma_z + sin(theta) sigma_x. Hermitian,
// involutory, spectrum {+1, -1}.
class SpinObservable {
 public:
  explicit SpinObservable(double theta);

  double theta() const { return theta_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  double theta_;
  ComplexMatrix matrix_;
};

SpinObservable sigma_theta(double theta);

// Kronecker product; entry (i,j) of `a` scales a full copy of `b`.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

// rho_psi = |psi><psi| with psi = (0, 1/sqrt2, -1/sqrt2, 0) in the basis
// {|++>, |+->, |-+>, |-->} ordered by sigma_z eigenvalue.
DensityOperator singlet_density();

// Real part of Tr(rho A); throws NonRealAverage if the imaginary part
// exceeds 1e-10 (signals non-Hermitian input).
double trace_average(const DensityOperator& rho, const ComplexMatrix& a);

// Tr rho_psi (sigma(t1) x I)(I x sigma(t2)), computed by explicit 4x4
// trace algebra. Equals -cos(t1 - t2); tests hold both routes together.
double singlet_correlation(double theta1, double theta2);

// Real eigenvalues in ascending order. Closed form for 2x2; cyclic Jacobi
// sweeps for 3x3 and 4x4. Throws NotHermitian beyond 1e-10 asymmetry.
std::vector<double> spectrum(const ComplexMatrix& a);

// The quantum side of the Bell expression:
//   lhs = |E(t1,t2) - E(t3,t2)|,  rhs = 1 + E(t1,t3)
// with E = singlet_correlation. holds may be false; that is the point.
BellReport quantum_bell_expression(double theta1, double theta2,
                                   double theta3);

}  // namespace bellkit

#endif  // BELLKIT_QUANTUM_HPP_
