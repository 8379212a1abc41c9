// Test-only oracles, kept deliberately naive and independent of the library
// code paths they check: trial division instead of sieves, direct bignum
// powers instead of the filtered comparator, fixed-step Simpson instead of
// the adaptive rule.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "splf/types.hpp"

namespace oracle {

using splf::u64;

inline bool is_prime_td(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> primes_td(u64 n) {
  std::vector<u64> out;
  for (u64 m = 2; m <= n; ++m)
    if (is_prime_td(m)) out.push_back(m);
  return out;
}

inline u64 lpf_td(u64 n) {
  if (n == 1) return 1;
  u64 best = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      best = d;
      n /= d;
    }
  }
  return n > 1 ? n : best;
}

// Sign of a^ea - b^eb via plain bignum powers, no fast path.
inline int compare_pow_mpz(u64 a, u64 ea, u64 b, u64 eb) {
  mpz_class pa, pb;
  mpz_ui_pow_ui(pa.get_mpz_t(), a, ea);
  mpz_ui_pow_ui(pb.get_mpz_t(), b, eb);
  const int c = cmp(pa, pb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

struct BruteCounts {
  u64 t_c = 0;
  u64 t_prime_c = 0;
  u64 pi_x = 0;
};

// T_c(x), T'_c(x) and pi(x) by full enumeration with trial division.
inline BruteCounts brute_tc(u64 x, u64 c_num, u64 c_den) {
  BruteCounts out;
  for (u64 p = 2; p <= x; ++p) {
    if (!is_prime_td(p)) continue;
    ++out.pi_x;
    const u64 q = lpf_td(p - 1);
    if (compare_pow_mpz(q, c_den, p, c_num) >= 0) ++out.t_c;
    if (compare_pow_mpz(q, c_den, x, c_num) >= 0) ++out.t_prime_c;
  }
  return out;
}

// Composite Simpson with a fixed panel count.
template <class F>
double fixed_simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double x0 = a + k * h;
    sum += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
  }
  return sum;
}

// S(z) for integer-bounded z as an exact rational, factoring by trial
// division: sum over even h <= h_max of (1/h) prod_{p|h, p>2} (p-1)/(p-2).
inline mpq_class s_of_z_exact(u64 h_max) {
  mpq_class sum = 0;
  for (u64 h = 2; h <= h_max; h += 2) {
    mpq_class term(1, h);
    u64 m = h;
    while (m % 2 == 0) m /= 2;
    for (u64 p = 3; p * p <= m; p += 2) {
      if (m % p != 0) continue;
      term *= mpq_class(p - 1, p - 2);
      while (m % p == 0) m /= p;
    }
    if (m > 1) term *= mpq_class(m - 1, m - 2);
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace oracle
