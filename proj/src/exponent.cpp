#include "splf/exponent.hpp"

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace splf {

namespace {

// Largest denominator we accept. Exact comparisons raise q to the den-th
// power, so an absurd denominator would silently turn one comparison into
// a megabit bignum operation.
constexpr u64 kMaxDenominator = 1'000'000;

// Width of the ambiguity band for the log2 filter, in bits. The filter
// computes ea*log2(a) with relative error ~2^-52; for 64-bit arguments and
// exponents up to 10^6 the absolute error stays below ~1e-8 bits, so a
// 1e-6 band is conservative.
constexpr double kFilterBand = 1e-6;

u64 parse_u64(std::string_view s) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::domain_error("Exponent: cannot parse integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Exponent Exponent::of(u64 num, u64 den) {
  if (den == 0 || num == 0 || num >= den)
    throw std::domain_error("Exponent: need 0 < num/den < 1, got " + std::to_string(num) + "/" +
                            std::to_string(den));
  if (den > kMaxDenominator)
    throw std::domain_error("Exponent: denominator " + std::to_string(den) + " exceeds " +
                            std::to_string(kMaxDenominator));
  const u64 g = std::gcd(num, den);
  return Exponent{num / g, den / g};
}

Exponent Exponent::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return of(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos)
    throw std::domain_error("Exponent: expected 'a/b' or a decimal in (0,1), got '" +
                            std::string(text) + "'");
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (!whole.empty() && parse_u64(whole) != 0)
    throw std::domain_error("Exponent: value must lie strictly inside (0,1)");
  if (frac.empty() || frac.size() > 3)
    throw std::domain_error(
        "Exponent: decimal form is limited to 3 places (denominator <= 1000); "
        "use 'a/b' for finer exponents");
  u64 den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  return of(parse_u64(frac), den);
}

bool operator<(Exponent a, Exponent b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

int compare_pow(u64 a, u64 ea, u64 b, u64 eb) {
  if (a == 0 || b == 0) throw std::domain_error("compare_pow: arguments must be >= 1");
  if (a == 1 && b == 1) return 0;
  if (a == 1) return eb == 0 ? 0 : -1;
  if (b == 1) return ea == 0 ? 0 : 1;
  if (ea == 0 && eb == 0) return 0;

  const double la = static_cast<double>(ea) * std::log2(static_cast<double>(a));
  const double lb = static_cast<double>(eb) * std::log2(static_cast<double>(b));
  if (la < lb - kFilterBand) return -1;
  if (la > lb + kFilterBand) return 1;

  mpz_class pa, pb;
  mpz_ui_pow_ui(pa.get_mpz_t(), a, ea);
  mpz_ui_pow_ui(pb.get_mpz_t(), b, eb);
  return cmp(pa, pb) < 0 ? -1 : (cmp(pa, pb) > 0 ? 1 : 0);
}

u64 min_q_at_least_pow(u64 x, Exponent c) {
  if (x == 0) throw std::domain_error("min_q_at_least_pow: x must be >= 1");
  if (x == 1) return 1;
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), x, c.num);
  mpz_class root;
  const int exact = mpz_root(root.get_mpz_t(), target.get_mpz_t(), c.den);
  // root = floor(target^(1/den)); the threshold is the ceiling.
  u64 q = mpz_get_ui(root.get_mpz_t());
  if (!exact) ++q;
  return q;
}

}  // namespace splf
