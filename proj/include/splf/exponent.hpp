#pragma once

#include <string_view>

#include "splf/types.hpp"

namespace splf {

// Exact rational exponent c = num/den with 0 < c < 1, kept in lowest terms.
// All threshold comparisons of the form q >= p^c are decided exactly as
// integer comparisons q^den >= p^num, so boundary cases never depend on
// floating-point rounding.
struct Exponent {
  u64 num = 1;
  u64 den = 2;

  // Validates 0 < num < den and reduces by gcd. Throws std::domain_error.
  static Exponent of(u64 num, u64 den);

  // Accepts "a/b" or a decimal with at most three places ("0.89", ".5").
  // Decimals become num/10^k and are then reduced.
  static Exponent parse(std::string_view text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

bool operator<(Exponent a, Exponent b);

// Sign of a^ea - b^eb for a, b >= 1, decided exactly. A floating log2 filter
// settles the overwhelming majority of calls; anything near the boundary
// falls through to arbitrary-precision integer powers.
int compare_pow(u64 a, u64 ea, u64 b, u64 eb);

// Smallest integer q >= 1 with q^c.den >= x^c.num, i.e. the exact integer
// threshold for "q >= x^c". Requires x >= 1.
u64 min_q_at_least_pow(u64 x, Exponent c);

}  // namespace splf
