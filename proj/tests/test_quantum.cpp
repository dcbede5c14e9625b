#include <cmath>
#include <doctest.h>

#include "bellkit/quantum.hpp"
#include "bellkit/rng.hpp"

using namespace bellkit;

namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace

TEST_CASE("pauli matrices") {
  const auto sx = pauli(PauliAxis::X);
  const auto sz = pauli(PauliAxis::Z);
  CHECK(sx(0, 1) == std::complex<double>(1.0));
  CHECK(sx(1, 0) == std::complex<double>(1.0));
  CHECK(sx(0, 0) == std::complex<double>(0.0));
  CHECK(sz(0, 0) == std::complex<double>(1.0));
  CHECK(sz(1, 1) == std::complex<double>(-1.0));
  CHECK((sx * sx).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("sigma_theta") {
  CHECK(sigma_theta(0.0).matrix().max_abs_diff(pauli(PauliAxis::Z)) <= 1e-15);
  CHECK(sigma_theta(M_PI / 2).matrix().max_abs_diff(pauli(PauliAxis::X)) <=
        1e-15);
  const auto diag = spectrum(sigma_theta(M_PI / 4).matrix());
  CHECK(diag[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(diag[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sigma_theta invariants on a grid") {
  const auto eye = ComplexMatrix::identity(2);
  for (int k = 0; k < 1000; ++k) {
    const double theta = 2.0 * M_PI * k / 1000.0;
    const auto s = sigma_theta(theta);
    CHECK(s.matrix().is_hermitian(1e-12));
    CHECK((s.matrix() * s.matrix()).max_abs_diff(eye) <= 1e-12);
    const auto evs = spectrum(s.matrix());
    CHECK(std::abs(evs[0] + 1.0) <= 1e-12);
    CHECK(std::abs(evs[1] - 1.0) <= 1e-12);
  }
}

TEST_CASE("tensor product") {
  const auto eye2 = ComplexMatrix::identity(2);
  CHECK(tensor(eye2, eye2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

  const auto zi = tensor(pauli(PauliAxis::Z), eye2);
  const double diag[4] = {1.0, 1.0, -1.0, -1.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(zi(i, i) == std::complex<double>(diag[i]));
  }

  // Trace multiplicativity on random Hermitian 2x2 inputs.
  CounterRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix a(2, 2), b(2, 2);
    auto fill = [&rng](ComplexMatrix& m) {
      m(0, 0) = 2.0 * rng.next_double() - 1.0;
      m(1, 1) = 2.0 * rng.next_double() - 1.0;
      const std::complex<double> off(2.0 * rng.next_double() - 1.0,
                                     2.0 * rng.next_double() - 1.0);
      m(0, 1) = off;
      m(1, 0) = std::conj(off);
    };
    fill(a);
    fill(b);
    const auto t = tensor(a, b).trace();
    const auto expected = a.trace() * b.trace();
    CHECK(std::abs(t - expected) <= 1e-12);
  }
}

TEST_CASE("singlet density") {
  const auto rho = singlet_density();
  CHECK(std::abs(rho.matrix().trace() - std::complex<double>(1.0)) <= 1e-12);
  CHECK((rho.matrix() * rho.matrix()).max_abs_diff(rho.matrix()) <= 1e-12);
  CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho.matrix()(1, 2).real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(rho.matrix()(0, 0) == std::complex<double>(0.0));
}

TEST_CASE("trace_average") {
  ComplexMatrix mixed(2, 2);
  mixed(0, 0) = 0.5;
  mixed(1, 1) = 0.5;
  CHECK(trace_average(DensityOperator(mixed), pauli(PauliAxis::Z)) ==
        doctest::Approx(0.0));

  ComplexMatrix plus(2, 2);
  plus(0, 0) = 1.0;
  CHECK(trace_average(DensityOperator(plus), pauli(PauliAxis::Z)) ==
        doctest::Approx(1.0));

  CHECK(trace_average(singlet_density(),
                      tensor(pauli(PauliAxis::Z), ComplexMatrix::identity(2)))
        == doctest::Approx(0.0));

  CHECK_THROWS_AS(trace_average(singlet_density(), pauli(PauliAxis::Z)),
                  DimensionMismatch);

  // Non-Hermitian operator surfaces as a non-real average.
  ComplexMatrix skew(2, 2);
  skew(0, 1) = std::complex<double>(0.0, 1.0);
  skew(1, 0) = std::complex<double>(0.0, 1.0);
  ComplexMatrix up(2, 2);
  up(0, 0) = 0.7;
  up(1, 1) = 0.3;
  up(0, 1) = 0.2;
  up(1, 0) = 0.2;
  CHECK_THROWS_AS(trace_average(DensityOperator(up), skew), NonRealAverage);
}

TEST_CASE("singlet_correlation examples") {
  CHECK(singlet_correlation(0.3, 0.3) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(singlet_correlation(0.0, M_PI / 2)) <= 1e-12);
  CHECK(singlet_correlation(0.0, M_PI / 3) ==
        doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("singlet_correlation equals -cos on a grid") {
  for (int k = 0; k < 1000; ++k) {
    const double t1 = 2.0 * M_PI * (k % 40) / 40.0;
    const double t2 = 2.0 * M_PI * (k / 40) / 25.0;
    CHECK(std::abs(singlet_correlation(t1, t2) + std::cos(t1 - t2)) <= 1e-12);
  }
}

TEST_CASE("marginal unbiasedness and commutation") {
  const auto rho = singlet_density();
  const auto eye2 = ComplexMatrix::identity(2);
  for (int k = 0; k < 100; ++k) {
    const double theta = 2.0 * M_PI * k / 100.0;
    const auto s = sigma_theta(theta).matrix();
    CHECK(std::abs(trace_average(rho, tensor(s, eye2))) <= 1e-12);
    CHECK(std::abs(trace_average(rho, tensor(eye2, s))) <= 1e-12);
    const auto other = sigma_theta(theta + 1.0).matrix();
    ComplexMatrix zero(4, 4);
    CHECK(commutator(tensor(s, eye2), tensor(eye2, other)).max_abs_diff(zero)
          <= 1e-12);
  }
}

TEST_CASE("spectrum") {
  const auto sum = pauli(PauliAxis::X) + pauli(PauliAxis::Z);
  const auto evs = spectrum(sum);
  CHECK(evs[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
  CHECK(evs[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  const auto zi = spectrum(tensor(pauli(PauliAxis::Z),
                                  ComplexMatrix::identity(2)));
  CHECK(zi[0] == doctest::Approx(-1.0));
  CHECK(zi[1] == doctest::Approx(-1.0));
  CHECK(zi[2] == doctest::Approx(1.0));
  CHECK(zi[3] == doctest::Approx(1.0));

  // 4x4 with genuinely coupled blocks: sigma(t) x sigma(u) has eigenvalues
  // ±1 each twice.
  const auto coupled =
      tensor(sigma_theta(0.7).matrix(), sigma_theta(2.1).matrix());
  const auto evs4 = spectrum(coupled);
  CHECK(evs4[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(evs4[1] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(evs4[2] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(evs4[3] == doctest::Approx(1.0).epsilon(1e-10));

  ComplexMatrix not_herm(2, 2);
  not_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(spectrum(not_herm), NotHermitian);
}

TEST_CASE("spectrum matches trace and Frobenius invariants on random 4x4") {
  CounterRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix a(4, 4);
    for (int i = 0; i < 4; ++i) {
      a(i, i) = 2.0 * rng.next_double() - 1.0;
      for (int j = i + 1; j < 4; ++j) {
        const std::complex<double> off(2.0 * rng.next_double() - 1.0,
                                       2.0 * rng.next_double() - 1.0);
        a(i, j) = off;
        a(j, i) = std::conj(off);
      }
    }
    const auto evs = spectrum(a);
    double tr = 0.0, sq = 0.0;
    for (double e : evs) {
      tr += e;
      sq += e * e;
    }
    CHECK(std::abs(tr - a.trace().real()) <= 1e-10);
    double frob = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) frob += std::norm(a(i, j));
    }
    CHECK(std::abs(sq - frob) <= 1e-9);
  }
}

TEST_CASE("quantum_bell_expression") {
  SUBCASE("violating angles") {
    const auto report = quantum_bell_expression(0.0, 2.0 * M_PI / 3, M_PI / 3);
    CHECK(report.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.rhs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(report.holds);
  }
  SUBCASE("degenerate angles") {
    const auto report = quantum_bell_expression(0.0, 0.0, 0.0);
    CHECK(report.lhs == doctest::Approx(0.0));
    CHECK(report.rhs == doctest::Approx(0.0));
    CHECK(report.holds);
  }
  SUBCASE("satisfied angles") {
    const auto report = quantum_bell_expression(0.0, M_PI / 2, M_PI);
    CHECK(report.lhs == doctest::Approx(0.0));
    CHECK(report.rhs == doctest::Approx(2.0));
    CHECK(report.holds);
  }
}
