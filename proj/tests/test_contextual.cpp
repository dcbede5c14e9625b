#include <cmath>
#include <doctest.h>

#include "bellkit/contextual.hpp"
#include "bellkit/quantum.hpp"
#include "bellkit/rng.hpp"

using namespace bellkit;

namespace {

Context make_context(const std::string& id, double theta, double theta_prime,
                     std::int64_t n, std::uint64_t seed) {
  Context c;
  c.id = id;
  c.theta = theta;
  c.theta_prime = theta_prime;
  c.sample_count = n;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("singlet joint law against projector traces") {
  // The sampling cells must match Tr rho_psi (P_a(t) x P_b(t')) computed by
  // the matrix module.
  const auto rho = singlet_density();
  const auto eye2 = ComplexMatrix::identity(2);
  for (int k = 0; k <= 12; ++k) {
    const double delta = M_PI * k / 12.0;
    auto projector = [&](double theta, int sign) {
      ComplexMatrix p = sigma_theta(theta).matrix();
      if (sign < 0) p = std::complex<double>(-1.0) * p;
      return std::complex<double>(0.5) * (ComplexMatrix::identity(2) + p);
    };
    const double theta = 0.4, theta_prime = 0.4 - delta;
    const double p_pp = trace_average(
        rho, tensor(projector(theta, +1), projector(theta_prime, +1)));
    const double p_pm = trace_average(
        rho, tensor(projector(theta, +1), projector(theta_prime, -1)));
    const double c = std::cos(delta);
    CHECK(std::abs(p_pp - (1.0 - c) / 4.0) <= 1e-12);
    CHECK(std::abs(p_pm - (1.0 + c) / 4.0) <= 1e-12);
  }
}

TEST_CASE("sample_singlet_run") {
  SUBCASE("equal angles anti-correlate exactly") {
    const auto report =
        sample_singlet_run(make_context("C1", 0.7, 0.7, 5000, 3));
    CHECK(report.counts[0] == 0);
    CHECK(report.counts[3] == 0);
    CHECK(report.empirical_correlation == -1.0);
    CHECK(report.standard_error == 0.0);
  }
  SUBCASE("orthogonal angles give zero correlation within noise") {
    const auto report =
        sample_singlet_run(make_context("C1", 0.0, M_PI / 2, 100000, 11));
    CHECK(std::abs(report.empirical_correlation) <=
          5.0 * report.standard_error);
  }
  SUBCASE("deterministic in the context") {
    const auto c = make_context("C1", 0.3, 1.4, 10000, 99);
    const auto r1 = sample_singlet_run(c);
    const auto r2 = sample_singlet_run(c);
    CHECK(r1.counts == r2.counts);
    CHECK(r1.empirical_correlation == r2.empirical_correlation);
  }
  SUBCASE("counts sum to sample_count and estimator identity holds") {
    const auto report =
        sample_singlet_run(make_context("C1", 0.2, 1.1, 12345, 5));
    const auto n = report.counts[0] + report.counts[1] + report.counts[2] +
                   report.counts[3];
    CHECK(n == 12345);
    const double recomputed =
        static_cast<double>(report.counts[0] + report.counts[3] -
                            report.counts[1] - report.counts[2]) /
        static_cast<double>(n);
    CHECK(report.empirical_correlation == recomputed);
  }
  CHECK_THROWS_AS(sample_singlet_run(make_context("bad", 0, 0, 0, 1)),
                  InvalidContext);
}

TEST_CASE("sample_lhv_run") {
  SUBCASE("equal angles anti-correlate exactly") {
    const auto report = sample_lhv_run(make_context("L", 1.2, 1.2, 2000, 8));
    CHECK(report.empirical_correlation == -1.0);
  }
  SUBCASE("converges to -1 + 2 delta / pi") {
    const auto r_half =
        sample_lhv_run(make_context("L", M_PI / 2, 0.0, 100000, 21));
    CHECK(std::abs(r_half.empirical_correlation) <=
          5.0 * r_half.standard_error);
    const auto r_third =
        sample_lhv_run(make_context("L", M_PI / 3, 0.0, 100000, 22));
    CHECK(std::abs(r_third.empirical_correlation + 1.0 / 3.0) <=
          5.0 * r_third.standard_error);
  }
}

TEST_CASE("lhv_correlation closed form against quadrature") {
  // Midpoint-rule oracle for the population correlation of the LHV model.
  auto quadrature = [](double theta, double theta_prime) {
    const int n = 200000;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double lambda = 2.0 * M_PI * (k + 0.5) / n;
      const double a = std::cos(theta - lambda) >= 0.0 ? 1.0 : -1.0;
      const double b = std::cos(theta_prime - lambda) >= 0.0 ? -1.0 : 1.0;
      acc += a * b;
    }
    return acc / n;
  };
  for (double delta : {0.0, 0.4, M_PI / 3, M_PI / 2, 2.4, M_PI}) {
    CHECK(std::abs(lhv_correlation(delta) - quadrature(delta + 0.3, 0.3)) <=
          1e-3);
  }
  // Even and 2pi-periodic extension.
  CHECK(lhv_correlation(-0.7) == doctest::Approx(lhv_correlation(0.7)));
  CHECK(lhv_correlation(0.7 + 2.0 * M_PI) ==
        doctest::Approx(lhv_correlation(0.7)));
  CHECK(lhv_correlation(M_PI + 0.5) ==
        doctest::Approx(lhv_correlation(M_PI - 0.5)));
}

TEST_CASE("cross_context_bell") {
  const double t1 = 0.0, t2 = 2.0 * M_PI / 3, t3 = M_PI / 3;
  SUBCASE("singlet contexts exceed the single-space bound") {
    const auto r1 = sample_singlet_run(make_context("C1", t1, t2, 1000000, 101));
    const auto r2 = sample_singlet_run(make_context("C2", t3, t2, 1000000, 102));
    const auto r3 = sample_singlet_run(make_context("C3", t1, t3, 1000000, 103));
    const auto out = cross_context_bell(r1, r2, r3);
    CHECK(out.lhs == doctest::Approx(1.0).epsilon(0.02));
    CHECK(out.rhs == doctest::Approx(0.5).epsilon(0.02));
    CHECK(out.exceeded);
    CHECK_FALSE(out.caveat.empty());
  }
  SUBCASE("lhv control stays inside the bound") {
    const auto r1 = sample_lhv_run(make_context("C1", t1, t2, 1000000, 101));
    const auto r2 = sample_lhv_run(make_context("C2", t3, t2, 1000000, 102));
    const auto r3 = sample_lhv_run(make_context("C3", t1, t3, 1000000, 103));
    const auto out = cross_context_bell(r1, r2, r3);
    CHECK_FALSE(out.exceeded);
  }
  SUBCASE("identical contexts give lhs = 0") {
    const auto r1 = sample_singlet_run(make_context("C1", t1, t2, 10000, 7));
    const auto r2 = sample_singlet_run(make_context("C2", t1, t2, 10000, 7));
    const auto r3 = sample_singlet_run(make_context("C3", t1, t1, 10000, 7));
    const auto out = cross_context_bell(r1, r2, r3);
    CHECK(out.lhs == 0.0);
    CHECK_FALSE(out.exceeded);
  }
  SUBCASE("angle bookkeeping is validated") {
    const auto r1 = sample_singlet_run(make_context("C1", t1, t2, 100, 1));
    const auto r2 = sample_singlet_run(make_context("C2", t3, t2 + 0.1, 100, 2));
    const auto r3 = sample_singlet_run(make_context("C3", t1, t3, 100, 3));
    CHECK_THROWS_AS(cross_context_bell(r1, r2, r3), AngleMismatch);
  }
}

TEST_CASE("context_sensitivity_demo") {
  SUBCASE("no perturbation: spread consistent with sampling noise") {
    const auto table =
        context_sensitivity_demo({0.4, 0.4 - M_PI / 2}, 0.0, 100, 10000, 77);
    REQUIRE(table.between_context_stddev.has_value());
    const double ratio =
        *table.between_context_stddev / table.pooled_standard_error;
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
  }
  SUBCASE("perturbation near pi/2 dominates sampling noise") {
    const auto table =
        context_sensitivity_demo({0.4, 0.4 - M_PI / 2}, 0.3, 100, 10000, 77);
    REQUIRE(table.between_context_stddev.has_value());
    CHECK(*table.between_context_stddev >
          2.0 * table.pooled_standard_error);
  }
  SUBCASE("single context: spread absent") {
    const auto table =
        context_sensitivity_demo({0.0, 1.0}, 0.1, 1, 1000, 5);
    CHECK_FALSE(table.between_context_stddev.has_value());
    CHECK(table.rows.size() == 1);
  }
  CHECK_THROWS_AS(context_sensitivity_demo({0, 0}, -0.1, 2, 10, 1),
                  InvalidContext);
}

TEST_CASE("run report CSV schema") {
  const auto r = sample_singlet_run(make_context("C1", 0.0, 1.0, 100, 9));
  const auto csv = run_reports_to_csv({r});
  CHECK(csv.rfind("context_id,theta,theta_prime,n_pp,n_pm,n_mp,n_mm,"
                  "correlation,stderr\n", 0) == 0);
  CHECK(csv.find("C1,") != std::string::npos);
}
