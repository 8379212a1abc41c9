#include "splf/dickman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "splf/errors.hpp"

namespace splf {

RhoSolver::RhoSolver(const Options& options) : u_max_(options.u_max), tol_(options.tol) {
  if (!(u_max_ >= 1.0) || !(u_max_ <= 4096.0))
    throw std::domain_error("RhoSolver: u_max must lie in [1, 4096]");
  if (!(options.step > 0.0)) throw std::domain_error("RhoSolver: step must be positive");
  const double inv = 1.0 / options.step;
  nodes_per_unit_ = static_cast<u64>(std::llround(inv));
  if (nodes_per_unit_ < 8 || std::abs(inv - static_cast<double>(nodes_per_unit_)) > 1e-9)
    throw std::domain_error("RhoSolver: step must be 1/k for an integer k >= 8");
  step_ = 1.0 / static_cast<double>(nodes_per_unit_);
  if (!(tol_ > 0.0)) throw std::domain_error("RhoSolver: tol must be positive");

  units_ = static_cast<u64>(std::ceil(u_max_ - 1e-12));
  const u64 npu = nodes_per_unit_;
  values_.assign(units_ * npu + 1, 1.0);  // [0, 1] is exactly 1

  const double h = step_;
  for (u64 j = 1; j < units_; ++j) {
    // March across [j, j+1]; the integrand rho(t-1)/t reads only values of
    // the already-final interval [j-1, j].
    for (u64 k = 0; k < npu; ++k) {
      const u64 idx = j * npu + k;
      const double u0 = static_cast<double>(j) + static_cast<double>(k) * h;
      const double u1 = u0 + h;
      const double um = u0 + 0.5 * h;
      const double f0 = values_[idx - npu] / u0;
      const double f1 = values_[idx - npu + 1] / u1;
      const double rho_mid = (j == 1) ? 1.0 : value_in_unit(j - 1, um - 1.0);
      const double fm = rho_mid / um;
      values_[idx + 1] = values_[idx] - h / 6.0 * (f0 + 4.0 * fm + f1);
    }
  }
}

double RhoSolver::value_in_unit(u64 unit, double u) const {
  // Cubic Lagrange through four consecutive nodes of [unit, unit+1]; the
  // stencil is clamped inside the unit interval so it never crosses an
  // integer breakpoint.
  const u64 npu = nodes_per_unit_;
  const double g = (u - static_cast<double>(unit)) * static_cast<double>(npu);
  i64 s = static_cast<i64>(g) - 1;
  if (s < 0) s = 0;
  if (s > static_cast<i64>(npu) - 3) s = static_cast<i64>(npu) - 3;
  const double xi = g - static_cast<double>(s);
  const double* v = values_.data() + unit * npu + s;
  const double w0 = -(xi - 1.0) * (xi - 2.0) * (xi - 3.0) / 6.0;
  const double w1 = xi * (xi - 2.0) * (xi - 3.0) / 2.0;
  const double w2 = -xi * (xi - 1.0) * (xi - 3.0) / 2.0;
  const double w3 = xi * (xi - 1.0) * (xi - 2.0) / 6.0;
  return v[0] * w0 + v[1] * w1 + v[2] * w2 + v[3] * w3;
}

double RhoSolver::rho(double u) const {
  if (std::isnan(u) || u < 0.0) throw std::domain_error("rho: u must be >= 0");
  if (u > u_max_)
    throw std::out_of_range("rho: u = " + std::to_string(u) + " exceeds u_max = " +
                            std::to_string(u_max_));
  if (u <= 1.0) return 1.0;
  const double floor_u = std::floor(u);
  if (u == floor_u) return values_[static_cast<u64>(floor_u) * nodes_per_unit_];
  return value_in_unit(static_cast<u64>(floor_u), u);
}

double RhoSolver::eh_density(double c) const {
  if (!(c > 0.0) || c > 1.0) throw std::domain_error("eh_density: c must lie in (0, 1]");
  return 1.0 - rho(1.0 / c);
}

double RhoSolver::solve_eh_threshold(double target) const {
  const double c_min = 1.0 / u_max_;
  const double reachable = eh_density(c_min);  // 1 - rho(u_max), the supremum
  if (!(target > 0.0) || !(target < reachable))
    throw std::domain_error("solve_eh_threshold: target " + std::to_string(target) +
                            " outside achievable range (0, " + std::to_string(reachable) + ")");
  double lo = c_min, hi = 1.0;  // eh(lo) > target > eh(hi) = 0
  for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (eh_density(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  const double c = 0.5 * (lo + hi);
  if (std::abs(eh_density(c) - target) > tol_)
    throw tolerance_error("solve_eh_threshold: bisection stalled above tol");
  return c;
}

}  // namespace splf
