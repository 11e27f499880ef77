#pragma once

#include "aldr/bit_expansion.hpp"
#include "aldr/rational.hpp"

namespace aldr {

/// Exact nu-entropy of an expansion: sum over digits d of d * bit_d * 2^-d.
///
/// The preperiod is summed directly; the periodic tail is summed in closed
/// form. With q = 2^-l, S0 = sum_t bit_t 2^-t and S1 = sum_t t bit_t 2^-t
/// over one period of length l starting after preperiod length u, the tail is
///   2^-u * [ (u S0 + S1) / (1 - q)  +  l S0 q / (1 - q)^2 ].
inline Rational nu_exact(const BitExpansion& e) {
  const std::size_t u = e.preperiod_length();
  const std::size_t l = e.period_length();
  // Sums accumulate as integer numerators over one power-of-two denominator;
  // per-term rational adds would pay a gcd on 2^l-sized values each step.
  Int pre_num = 0;
  for (std::size_t d = 1; d <= u; ++d)
    if (e.preperiod[d - 1]) pre_num += Int(d) << (u - d);
  Rational total = u ? Rational(pre_num, Int(1) << u) : Rational(0);

  if (l > 0) {
    Int s0_num = 0, s1_num = 0;
    for (std::size_t t = 1; t <= l; ++t)
      if (e.period[t - 1]) {
        mpz_setbit(s0_num.get_mpz_t(), l - t);
        s1_num += Int(t) << (l - t);
      }
    const Int pow_l = Int(1) << l;
    const Rational s0(s0_num, pow_l), s1(s1_num, pow_l);
    const Rational q = Rational(Int(1), pow_l);
    const Rational om = Rational(1) - q;
    const Rational tail = (Rational(Int(u)) * s0 + s1) / om +
                          Rational(Int(l)) * s0 * q / (om * om);
    total += Rational::pow2(-static_cast<long>(u)) * tail;
  }
  return total;
}

/// nu(x) = sum_d d eps_d(x) 2^-d for rational x in [0,1]; nu(0) = nu(1) = 0.
inline Rational nu_exact(const Rational& x) {
  return nu_exact(binary_expansion(x));
}

/// nu of the dyadic value a / 2^K, summing (K - j) 2^(j-K) over set bits j.
/// Equivalent to nu_exact but without the expansion detour; used on the
/// proposal weights where a <= 2^K.
inline Rational nu_dyadic(const Int& a, unsigned long K) {
  if (sgn(a) < 0) throw std::domain_error("nu_dyadic: negative numerator");
  Rational total(0);
  if (sgn(a) == 0) return total;
  const unsigned long bits = bit_length(a);
  if (bits > K + 1 || (bits == K + 1 && !is_power_of_two(a)))
    throw std::domain_error("nu_dyadic: a / 2^K exceeds 1");
  for (unsigned long j = 0; j < bits; ++j)
    if (mpz_tstbit(a.get_mpz_t(), j) && j < K)
      total += Rational(Int(K - j), Int(1) << (K - j));
  return total;
}

}  // namespace aldr
