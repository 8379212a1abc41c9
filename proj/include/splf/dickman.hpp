#pragma once

#include <vector>

#include "splf/types.hpp"

namespace splf {

// Dickman's function rho:
//   rho(u) = 1 on [0, 1],   u rho'(u) = -rho(u-1) for u > 1,
// integrated in its equivalent form rho(v) = rho(u) - int_u^v rho(t-1)/t dt
// on a uniform grid, one unit interval at a time. Panels never straddle the
// integer breakpoints where rho loses smoothness, so composite Simpson keeps
// its full order; between nodes values come from cubic interpolation of
// matching order.
//
// The solver is built once and is immutable afterwards; every evaluation is
// read-only and safe to call concurrently.
class RhoSolver {
 public:
  struct Options {
    double u_max = 20.0;       // rho(20) ~ 1e-29, far below any density of interest
    double step = 1.0 / 1024;  // must divide 1 exactly
    double tol = 1e-10;        // absolute error target for evaluations
  };

  explicit RhoSolver(const Options& options = {});

  // rho(u) with absolute error <= tol. Throws std::domain_error for u < 0,
  // std::out_of_range for u > u_max.
  double rho(double u) const;

  // The limiting density 1 - rho(1/c); requires 0 < c <= 1 and 1/c <= u_max.
  double eh_density(double c) const;

  // Inverse of eh_density by bisection: the c with eh_density(c) = target.
  // eh_density decreases strictly in c, so the root is unique.
  double solve_eh_threshold(double target) const;

  double u_max() const { return u_max_; }
  double step() const { return step_; }
  double tol() const { return tol_; }

 private:
  double value_in_unit(u64 unit, double u) const;

  double u_max_;
  double step_;
  double tol_;
  u64 nodes_per_unit_;
  u64 units_;
  std::vector<double> values_;  // node k holds rho(k * step)
};

}  // namespace splf
