#pragma once

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <vector>

#include "aldr/errors.hpp"
#include "aldr/rational.hpp"

namespace aldr {

/// Smallest l >= 1 with 2^l = 1 (mod x) for odd x > 1; 0 for x = 1 by
/// convention. Computed by repeated doubling; iterations beyond the cap
/// raise OrderCapError.
inline unsigned long multiplicative_order(const Int& x,
                                          unsigned long cap = 1ul << 26) {
  if (sgn(x) <= 0 || mpz_even_p(x.get_mpz_t()))
    throw std::domain_error("multiplicative_order: x must be odd and >= 1");
  if (x == 1) return 0;
  Int t = 2 % x;
  unsigned long l = 1;
  while (t != 1) {
    t = (t * 2) % x;
    if (++l > cap) throw OrderCapError("multiplicative_order: cap exceeded");
  }
  return l;
}

/// Eventually periodic binary expansion of a rational in [0,1], in concise
/// form (dyadics terminate; no trailing-ones representation).
///
/// For value a/m in lowest terms with m = 2^u * x (x odd), the preperiod has
/// length u and the period length is the multiplicative order of 2 mod x.
struct BitExpansion {
  std::vector<std::uint8_t> preperiod;
  std::vector<std::uint8_t> period;
  Rational value;

  std::size_t preperiod_length() const { return preperiod.size(); }
  std::size_t period_length() const { return period.size(); }

  /// d-th digit to the right of the binary point, d >= 1.
  int digit(std::size_t d) const {
    if (d == 0) throw std::domain_error("BitExpansion::digit: d >= 1 required");
    if (d <= preperiod.size()) return preperiod[d - 1];
    if (period.empty()) return 0;
    return period[(d - preperiod.size() - 1) % period.size()];
  }
};

inline BitExpansion binary_expansion(const Rational& x,
                                     unsigned long order_cap = 1ul << 26) {
  if (x.sign() < 0 || x > Rational(1))
    throw std::domain_error("binary_expansion: x outside [0,1]");
  BitExpansion e;
  e.value = x;
  if (x.is_zero() || x == Rational(1)) return e;  // all fractional digits 0

  const Int den = x.den();
  Int odd = den;
  unsigned long u = 0;
  while (mpz_even_p(odd.get_mpz_t())) {
    odd >>= 1;
    ++u;
  }
  const unsigned long ell = multiplicative_order(odd, order_cap);

  Int r = x.num();
  auto next_digit = [&]() -> std::uint8_t {
    r <<= 1;
    if (r >= den) {
      r -= den;
      return 1;
    }
    return 0;
  };
  e.preperiod.reserve(u);
  for (unsigned long i = 0; i < u; ++i) e.preperiod.push_back(next_digit());
  e.period.reserve(ell);
  for (unsigned long i = 0; i < ell; ++i) e.period.push_back(next_digit());
  return e;
}

/// True iff the base-2 multiplication x*y carries, i.e. the convolution of
/// the two bit vectors has a coefficient >= 2.
inline bool multiplication_carries(const Int& x, const Int& y) {
  if (sgn(x) <= 0 || sgn(y) <= 0)
    throw std::domain_error("multiplication_carries: inputs must be >= 1");
  const std::size_t nx = bit_length(x), ny = bit_length(y);
  std::vector<char> xb(nx), yb(ny);
  for (std::size_t i = 0; i < nx; ++i) xb[i] = mpz_tstbit(x.get_mpz_t(), i);
  for (std::size_t i = 0; i < ny; ++i) yb[i] = mpz_tstbit(y.get_mpz_t(), i);
  for (std::size_t t = 0; t + 1 < nx + ny; ++t) {
    unsigned coeff = 0;
    const std::size_t lo = t >= ny - 1 ? t - (ny - 1) : 0;
    const std::size_t hi = std::min(t, nx - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      coeff += xb[i] & yb[t - i];
      if (coeff >= 2) return true;
    }
  }
  return false;
}

/// True iff the base-2 addition x + y carries: some bit position is set in
/// both concise expansions, or the sum is dyadic while a summand is not.
inline bool addition_carries(const Rational& x, const Rational& y) {
  const Rational z = x + y;
  if (z > Rational(1)) throw std::domain_error("addition_carries: x + y > 1");
  if (z.is_dyadic() && !x.is_dyadic()) return true;
  const BitExpansion ex = binary_expansion(x);
  const BitExpansion ey = binary_expansion(y);
  const std::size_t px = std::max<std::size_t>(ex.period_length(), 1);
  const std::size_t py = std::max<std::size_t>(ey.period_length(), 1);
  const std::size_t window =
      std::max(ex.preperiod_length(), ey.preperiod_length()) +
      std::lcm(px, py);
  for (std::size_t d = 1; d <= window; ++d)
    if (ex.digit(d) && ey.digit(d)) return true;
  return false;
}

}  // namespace aldr
