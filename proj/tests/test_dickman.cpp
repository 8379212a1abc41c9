#include <cmath>

#include "doctest.h"
#include "splf/dickman.hpp"

using splf::RhoSolver;

namespace {

const RhoSolver& solver() {
  static const RhoSolver s;
  return s;
}

}  // namespace

TEST_CASE("rho is exactly 1 on [0, 1]") {
  CHECK(solver().rho(0.0) == 1.0);
  CHECK(solver().rho(0.5) == 1.0);
  CHECK(solver().rho(1.0) == 1.0);
}

TEST_CASE("rho matches 1 - ln u on [1, 2]") {
  double worst = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double u = 1.0 + i / 50.0;
    worst = std::max(worst, std::abs(solver().rho(u) - (1.0 - std::log(u))));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("rho closed-form spot values") {
  CHECK(solver().rho(2.0) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-11));
  // 1 - ln(e^{1/2}) = 1/2 exactly
  CHECK(std::abs(solver().rho(std::exp(0.5)) - 0.5) < 1e-10);
  // deeper values pinned by an independent integration run at step 1/8192
  CHECK(std::abs(solver().rho(3.0) - 0.048608388291133) < 1e-12);
  CHECK(std::abs(solver().rho(5.0) - 3.5472470045672e-4) < 1e-12);
}

TEST_CASE("rho is continuous at 1 and monotone nonincreasing") {
  CHECK(solver().rho(1.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
  double prev = solver().rho(0.0);
  for (double u = 0.1; u <= 20.0; u += 0.1) {
    const double v = solver().rho(u);
    CHECK(v <= prev + 1e-15);
    CHECK(v > 0.0);
    prev = v;
  }
}

TEST_CASE("differential equation u rho'(u) = -rho(u-1) by finite differences") {
  // 4th-order central differences keep the truncation error far below the
  // value noise at these tolerances.
  const double d = 1e-3;
  for (double u : {1.5, 2.5, 3.5}) {
    const double deriv = (-solver().rho(u + 2 * d) + 8 * solver().rho(u + d) -
                          8 * solver().rho(u - d) + solver().rho(u - 2 * d)) /
                         (12 * d);
    CHECK(std::abs(u * deriv + solver().rho(u - 1.0)) < 1e-8);
  }
}

TEST_CASE("grid refinement by half moves values less than tol") {
  RhoSolver::Options fine;
  fine.u_max = 10.0;
  fine.step = 1.0 / 2048;
  const RhoSolver refined(fine);
  for (double u = 0.25; u <= 10.0; u += 0.25)
    CHECK(std::abs(refined.rho(u) - solver().rho(u)) < solver().tol());
}

TEST_CASE("eh_density values") {
  CHECK(solver().eh_density(1.0) == 0.0);
  CHECK(std::abs(solver().eh_density(std::exp(-0.5)) - 0.5) < 1e-10);
  CHECK(solver().eh_density(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-11));
  CHECK_THROWS_AS(solver().eh_density(0.0), std::domain_error);
  CHECK_THROWS_AS(solver().eh_density(1.5), std::domain_error);
  CHECK_THROWS_AS(solver().eh_density(0.01), std::out_of_range);  // 1/c beyond u_max
}

TEST_CASE("eh_density is strictly decreasing in c") {
  double prev = solver().eh_density(0.06);
  for (double c = 0.10; c <= 1.0; c += 0.02) {
    const double v = solver().eh_density(c);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("solve_eh_threshold recovers e^{-1/2} and inverts eh_density") {
  CHECK(std::abs(solver().solve_eh_threshold(0.5) - std::exp(-0.5)) < 1e-8);
  CHECK(std::abs(solver().solve_eh_threshold(std::log(2.0)) - 0.5) < 1e-8);
  for (double c : {0.2, 0.4, 0.6065, 0.9}) {
    const double target = solver().eh_density(c);
    CHECK(std::abs(solver().solve_eh_threshold(target) - c) < 10 * solver().tol());
  }
  CHECK_THROWS_AS(solver().solve_eh_threshold(0.0), std::domain_error);
  CHECK_THROWS_AS(solver().solve_eh_threshold(1.0), std::domain_error);
}

TEST_CASE("domain and range errors") {
  CHECK_THROWS_AS(solver().rho(-0.1), std::domain_error);
  CHECK_THROWS_AS(solver().rho(20.5), std::out_of_range);
  RhoSolver::Options bad;
  bad.step = 0.3;  // does not divide 1
  CHECK_THROWS_AS(RhoSolver(bad), std::domain_error);
}

TEST_CASE("integer evaluation points use the stored node values") {
  RhoSolver::Options opts;
  opts.u_max = 5.0;
  const RhoSolver s(opts);
  for (double u : {2.0, 3.0, 4.0, 5.0}) {
    CHECK(s.rho(u) == doctest::Approx(solver().rho(u)).epsilon(1e-12));
  }
}
