#pragma once

#include <limits>

#include "splf/exponent.hpp"
#include "splf/sieve.hpp"

namespace splf {

// Truncation of the twin-prime-type product prod_{2 < p <= cutoff} (1 - 1/(p-1)^2).
// tail_bound is a rigorous relative bound on the truncation error: the
// omitted factors multiply to something in (1 - 1/(cutoff-1), 1).
struct SingularSeriesValue {
  double value = 0.0;
  u64 cutoff = 0;
  double tail_bound = 0.0;
};

SingularSeriesValue singular_series(u64 cutoff);

// prod_{p | h, p > 2} (1 + 1/(p-2)), by trial division; empty product = 1.
double odd_prime_weight(u64 h);

// S(z) = sum over even h < z of (1/h) * odd_prime_weight(h), each h factored
// through a smallest-prime-factor sieve. S(z) = 0 for z <= 2.
double s_of_z(double z, const SieveLimits& limits = {});

// S(z) * 2 * SS / ln z; tends to 1 as z grows. Requires z >= 10.
double s_asymptotic_ratio(double z, const SingularSeriesValue& ss, const SieveLimits& limits = {});

// Sieve main term bounding the number of primes q < y with qh+1 prime:
//   16 * SS * odd_prime_weight(h) * y / ln^2 y.
// Requires h even >= 2 and y >= 16.
double pair_bound(u64 h, double y, const SingularSeriesValue& ss);

// Sum of pair bounds over even h < x^(1-c), evaluated with y = x/h:
//   16 * SS * sum_h odd_prime_weight(h) * (x/h) / ln^2(x/h).
// The h-range boundary is decided exactly (h^den < x^(den-num)).
// Requires 1/2 <= c < 1.
double sieve_rhs(u64 x, Exponent c, const SingularSeriesValue& ss, const SieveLimits& limits = {});

// Closed form of the h-sum normalized by x/ln x, divided through by 16*SS:
// (1/(2c) - 1/2) / SS.
double partial_summation_closed_form(double c, const SingularSeriesValue& ss);

// The same quantity assembled from its partial-summation pieces: the
// boundary term (1-c)/(2c^2) / (SS ln x) minus the numerically integrated
// int_{x^c}^{x} (ln x - ln u) / (u ln^3 u) du / SS. Multiplied by ln x this
// must approach partial_summation_closed_form; the two routes share no code.
double partial_summation_quadrature(double c, double x, const SingularSeriesValue& ss);

// 8 (1/c - 1) = 8 (den - num) / num, exact in the rationals before
// rendering. Informative only for c >= 8/9 where it drops below 1.
double theorem_bound(Exponent c);

// Everything the CLI reports for one (x, c) pair.
struct BoundReport {
  u64 x = 0;
  Exponent c;
  double empirical_ratio = 0.0;      // T_c(x) / pi(x)
  double eh_prediction = 0.0;        // 1 - rho(1/c)
  double theorem_bound = 0.0;        // 8 (1/c - 1)
  double sieve_rhs_normalized = std::numeric_limits<double>::quiet_NaN();  // optional
  double closed_form_limit = 0.0;    // 16 * SS * partial_summation_closed_form(c)
};

}  // namespace splf
