#pragma once

#include <optional>
#include <vector>

#include "aldr/interval.hpp"
#include "aldr/rational.hpp"
#include "aldr/weights.hpp"

namespace aldr {

/// Enclosure of the Shannon entropy H(P) = sum_i p_i log2(1/p_i) in bits.
/// Deterministic for fixed precision; degenerate when every p_i is a power
/// of two. Works at 16 guard bits beyond the request so the width stays
/// within n * 2^(1-prec).
inline Interval entropy_enclosure(const WeightVector& w, mpfr_prec_t prec) {
  if (prec == 0) throw std::domain_error("entropy_enclosure: zero precision");
  const mpfr_prec_t work = prec + 16;
  Interval h(work);
  for (const Int& a : w.weights) h += h1_enclosure(Rational(a, w.m), work);
  return h;
}

/// Entropy of an arbitrary rational sub-distribution (used for proposals,
/// where a zero reject weight is allowed).
inline Interval entropy_enclosure(const std::vector<Rational>& probs,
                                  mpfr_prec_t prec) {
  if (prec == 0) throw std::domain_error("entropy_enclosure: zero precision");
  const mpfr_prec_t work = prec + 16;
  Interval h(work);
  for (const Rational& p : probs) h += h1_enclosure(p, work);
  return h;
}

/// H(P) as an exact rational when every p_i is a power of two (the only case
/// in which the entropy is rational); nullopt otherwise.
inline std::optional<Rational> entropy_exact(const WeightVector& w) {
  Rational h(0);
  for (const Int& a : w.weights) {
    const Rational p(a, w.m);
    if (p == Rational(1)) continue;
    if (!p.is_pow2()) return std::nullopt;
    h += p * Rational(-p.floor_log2());
  }
  return h;
}

}  // namespace aldr
