#include "splf/bounds.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "splf/quadrature.hpp"

namespace splf {

SingularSeriesValue singular_series(u64 cutoff) {
  if (cutoff < 3) throw std::domain_error("singular_series: cutoff must be >= 3");
  // Accumulate in log space; the factors approach 1 quickly and log1p keeps
  // the tiny corrections from washing out.
  double log_sum = 0.0;
  for_each_prime(3, cutoff + 1, [&](u64 p) {
    const double d = static_cast<double>(p - 1);
    log_sum += std::log1p(-1.0 / (d * d));
  });
  // sum_{n > P} 1/(n-1)^2 < 1/(P-1) bounds the omitted prime factors.
  return SingularSeriesValue{std::exp(log_sum), cutoff, 1.0 / static_cast<double>(cutoff - 1)};
}

double odd_prime_weight(u64 h) {
  if (h == 0) throw std::domain_error("odd_prime_weight: h must be >= 1");
  double w = 1.0;
  while (h % 2 == 0) h /= 2;
  for (u64 p = 3; static_cast<u128>(p) * p <= h; p += 2) {
    if (h % p != 0) continue;
    w *= 1.0 + 1.0 / static_cast<double>(p - 2);
    do {
      h /= p;
    } while (h % p == 0);
  }
  if (h > 1) w *= 1.0 + 1.0 / static_cast<double>(h - 2);
  return w;
}

namespace {

// Smallest prime factor for every integer in [0, n]; spf[1] = 1.
std::vector<u32> spf_table(u64 n, const SieveLimits& limits) {
  if (n > limits.factor_cap)
    throw budget_error("spf table of size " + std::to_string(n) + " exceeds cap " +
                       std::to_string(limits.factor_cap) + " (SieveLimits.factor_cap)");
  std::vector<u32> spf(n + 1, 0);
  if (n >= 1) spf[1] = 1;
  for (u64 i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = static_cast<u32>(i);
  }
  return spf;
}

double weight_from_spf(u64 h, const std::vector<u32>& spf) {
  double w = 1.0;
  while (h % 2 == 0) h /= 2;
  while (h > 1) {
    const u64 p = spf[h];
    w *= 1.0 + 1.0 / static_cast<double>(p - 2);
    do {
      h /= p;
    } while (h % p == 0);
  }
  return w;
}

// Largest integer h with h^den < x^(den-num), i.e. h < x^(1-c) exactly.
u64 even_sum_cap(u64 x, Exponent c) {
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), x, c.den - c.num);
  mpz_class root;
  const int exact = mpz_root(root.get_mpz_t(), target.get_mpz_t(), c.den);
  u64 h = mpz_get_ui(root.get_mpz_t());
  if (exact) --h;  // the root itself fails the strict inequality
  return h;
}

}  // namespace

double s_of_z(double z, const SieveLimits& limits) {
  if (!(z >= 1.0)) throw std::domain_error("s_of_z: z must be >= 1");
  if (z > static_cast<double>(limits.factor_cap))
    throw budget_error("s_of_z: z exceeds cap " + std::to_string(limits.factor_cap) +
                       " (SieveLimits.factor_cap)");
  const u64 h_max = static_cast<u64>(std::ceil(z)) - 1;  // largest integer < z
  if (h_max < 2) return 0.0;
  const std::vector<u32> spf = spf_table(h_max, limits);
  double sum = 0.0;
  for (u64 h = 2; h <= h_max; h += 2)
    sum += weight_from_spf(h, spf) / static_cast<double>(h);
  return sum;
}

double s_asymptotic_ratio(double z, const SingularSeriesValue& ss, const SieveLimits& limits) {
  if (!(z >= 10.0)) throw std::domain_error("s_asymptotic_ratio: z must be >= 10");
  return s_of_z(z, limits) * 2.0 * ss.value / std::log(z);
}

double pair_bound(u64 h, double y, const SingularSeriesValue& ss) {
  if (h < 2 || h % 2 != 0) throw std::invalid_argument("pair_bound: h must be even and >= 2");
  if (!(y >= 16.0)) throw std::domain_error("pair_bound: y must be >= 16");
  const double log_y = std::log(y);
  return 16.0 * ss.value * odd_prime_weight(h) * y / (log_y * log_y);
}

double sieve_rhs(u64 x, Exponent c, const SingularSeriesValue& ss, const SieveLimits& limits) {
  if (2 * c.num < c.den) throw std::invalid_argument("sieve_rhs: requires 1/2 <= c < 1");
  if (x < 100) throw std::domain_error("sieve_rhs: x must be >= 100");
  const u64 h_max = even_sum_cap(x, c);
  if (h_max < 2) return 0.0;
  if (h_max > limits.factor_cap)
    throw budget_error("sieve_rhs: h-range up to " + std::to_string(h_max) + " exceeds cap " +
                       std::to_string(limits.factor_cap) + " (SieveLimits.factor_cap)");
  const std::vector<u32> spf = spf_table(h_max, limits);
  double sum = 0.0;
  for (u64 h = 2; h <= h_max; h += 2) {
    const double y = static_cast<double>(x) / static_cast<double>(h);
    const double log_y = std::log(y);
    sum += weight_from_spf(h, spf) * y / (log_y * log_y);
  }
  return 16.0 * ss.value * sum;
}

double partial_summation_closed_form(double c, const SingularSeriesValue& ss) {
  if (!(c > 0.0) || c > 1.0)
    throw std::domain_error("partial_summation_closed_form: c must lie in (0, 1]");
  return (1.0 / (2.0 * c) - 0.5) / ss.value;
}

double partial_summation_quadrature(double c, double x, const SingularSeriesValue& ss) {
  if (!(c > 0.0) || !(c < 1.0))
    throw std::domain_error("partial_summation_quadrature: c must lie in (0, 1)");
  if (!(x >= 100.0)) throw std::domain_error("partial_summation_quadrature: x must be >= 100");
  const double log_x = std::log(x);
  // Substituting w = ln u maps the integral onto [c ln x, ln x] where the
  // integrand (ln x - w) / w^3 is smooth and the adaptive rule is cheap.
  const auto integrand = [log_x](double w) { return (log_x - w) / (w * w * w); };
  const double integral = adaptive_simpson(integrand, c * log_x, log_x, 1e-12);
  const double boundary = (1.0 - c) / (2.0 * c * c) / (ss.value * log_x);
  return boundary - integral / ss.value;
}

double theorem_bound(Exponent c) {
  // 8 (den - num) / num, kept integral until the final division.
  return 8.0 * static_cast<double>(c.den - c.num) / static_cast<double>(c.num);
}

}  // namespace splf
