#pragma once

#include <numeric>
#include <vector>

#include "aldr/errors.hpp"
#include "aldr/rational.hpp"

namespace aldr {

/// Fixed-width arithmetic regime: 64-bit weights with 128-bit intermediates.
/// Inputs beyond it are rejected at construction time rather than silently
/// promoted to arbitrary precision.
struct Regime {
  Int max_m = (Int(1) << 63) - 1;
  unsigned max_depth = 127;
};

inline const Regime& default_regime() {
  static const Regime r;
  return r;
}

/// Coprime positive integer weights defining the target distribution
/// P = (a_1/m, ..., a_n/m).
struct WeightVector {
  std::vector<Int> weights;   // coprime, all >= 1
  Int m;                      // sum of weights
  unsigned k = 0;             // ceil(log2 m)
  Int normalization_divisor;  // gcd removed from the raw input

  std::size_t size() const { return weights.size(); }

  /// Target probability of outcome i (1-based label).
  Rational probability(std::size_t i) const {
    return Rational(weights.at(i - 1), m);
  }
};

/// Divide out the gcd, record m and k = ceil(log2 m). The divisor is kept so
/// callers can detect that normalization happened.
inline WeightVector normalize_weights(std::vector<Int> raw,
                                      const Regime& regime = default_regime()) {
  if (raw.empty()) throw EmptyWeightsError();
  Int g = 0;
  for (const Int& a : raw) {
    if (sgn(a) <= 0)
      throw NonpositiveWeightError("normalize_weights: weight " + a.get_str() +
                                   " is not a positive integer");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  WeightVector w;
  w.normalization_divisor = g;
  w.weights.reserve(raw.size());
  Int m = 0;
  for (Int& a : raw) {
    a /= g;
    m += a;
    w.weights.push_back(std::move(a));
  }
  if (m > regime.max_m)
    throw OverflowRegimeError("normalize_weights: m = " + m.get_str() +
                              " exceeds the arithmetic regime");
  w.m = m;
  w.k = static_cast<unsigned>(ceil_log2(m));
  return w;
}

inline WeightVector normalize_weights(std::initializer_list<long> raw) {
  std::vector<Int> v;
  v.reserve(raw.size());
  for (long a : raw) v.emplace_back(a);
  return normalize_weights(std::move(v));
}

}  // namespace aldr
