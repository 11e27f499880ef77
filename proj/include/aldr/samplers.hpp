#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aldr/bit_source.hpp"
#include "aldr/ddg_table.hpp"
#include "aldr/errors.hpp"
#include "aldr/weights.hpp"

namespace aldr {

static_assert(sizeof(unsigned __int128) == 16, "128-bit intermediates required");
using u128 = unsigned __int128;

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return s;
}

/// Amplification rule r: k -> K. FLDR is the identity; the default doubles.
struct AmplificationRule {
  enum class Kind { fldr, doubling, constant };
  Kind kind = Kind::doubling;
  unsigned constant_depth = 0;

  static AmplificationRule fldr() { return {Kind::fldr, 0}; }
  static AmplificationRule doubling() { return {Kind::doubling, 0}; }
  static AmplificationRule constant(unsigned K) { return {Kind::constant, K}; }

  /// Parse "fldr" | "2k" | "K=<int>".
  static AmplificationRule parse(const std::string& text) {
    if (text == "fldr") return fldr();
    if (text == "2k") return doubling();
    if (text.rfind("K=", 0) == 0) {
      const std::string digits = text.substr(2);
      try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(digits, &pos);
        if (pos != digits.size())
          throw InvalidRuleError("malformed rule: " + text);
        if (v > 127) throw InvalidRuleError("rule depth exceeds regime cap");
        return constant(static_cast<unsigned>(v));
      } catch (const InvalidRuleError&) {
        throw;
      } catch (const std::exception&) {
        throw InvalidRuleError("malformed rule: " + text);
      }
    }
    throw InvalidRuleError("unknown rule: " + text);
  }

  unsigned apply(unsigned k) const {
    switch (kind) {
      case Kind::fldr:
        return k;
      case Kind::doubling:
        return 2 * k;
      case Kind::constant:
        if (constant_depth < k)
          throw InvalidRuleError("rule depth K below base depth k");
        return constant_depth;
    }
    throw InvalidRuleError("invalid rule");
  }

  std::string name() const {
    switch (kind) {
      case Kind::fldr:
        return "fldr";
      case Kind::doubling:
        return "2k";
      case Kind::constant:
        return "K=" + std::to_string(constant_depth);
    }
    return "?";
  }
};

/// Preprocessed ALDR rejection sampler. Preprocessing runs in fixed-width
/// integer arithmetic (64-bit weights, 128-bit intermediates); the sampling
/// walk touches only the flattened table.
class AldrSampler {
 public:
  AldrSampler(const WeightVector& w, AmplificationRule rule,
              const Regime& regime = default_regime())
      : k_(w.k), K_(rule.apply(w.k)) {
    if (K_ > regime.max_depth)
      throw OverflowRegimeError("aldr_preprocess: depth K exceeds regime cap");
    if (w.m > regime.max_m)
      throw OverflowRegimeError("aldr_preprocess: m exceeds regime cap");
    const std::uint64_t m = mpz_get_ui(Int(w.m).get_mpz_t());
    weights_.reserve(w.size());
    for (const Int& a : w.weights)
      weights_.push_back(mpz_get_ui(Int(a).get_mpz_t()));
    m_ = m;

    const u128 pow2 = u128(1) << K_;
    c_ = pow2 / m;
    const u128 M = c_ * m;
    reject_weight_ = pow2 - M;

    // Alg. 3: depth j holds the labels whose weight has bit (K - j) set.
    const std::uint32_t n = static_cast<std::uint32_t>(weights_.size());
    table_.K = K_;
    table_.n = n;
    table_.leaves_per_depth.assign(K_ + 1, 0);
    table_.offsets.assign(K_ + 2, 0);
    std::vector<u128> amplified(n + 1);
    amplified[0] = reject_weight_;
    for (std::uint32_t i = 1; i <= n; ++i) amplified[i] = c_ * weights_[i - 1];
    for (unsigned j = 0; j <= K_; ++j) {
      table_.offsets[j] = table_.labels.size();
      for (std::uint32_t i = 0; i <= n; ++i)
        if ((amplified[i] >> (K_ - j)) & 1u) {
          ++table_.leaves_per_depth[j];
          table_.labels.push_back(i);
        }
    }
    table_.offsets[K_ + 1] = table_.labels.size();

    // Internal-node counts per depth; the walk places leaves on the high
    // node indices of each level.
    internal_.assign(K_ + 1, 0);
    std::uint64_t inner = 1;
    for (unsigned j = 0; j <= K_; ++j) {
      inner -= table_.leaves_per_depth[j];
      internal_[j] = inner;
      inner *= 2;
    }
  }

  /// One root-to-leaf walk: bit 0 descends left, bit 1 right; node indices
  /// at or beyond the internal count are leaves. A reject leaf restarts at
  /// the root without consuming extra flips; termination has probability 1.
  std::uint32_t sample(BitSource& src) const {
    std::size_t d = 0, off = 0;
    std::uint64_t v = 0;
    for (;;) {
      if (v >= internal_[d]) {
        const std::uint32_t label = table_.labels[off + (v - internal_[d])];
        if (label != 0) return label;
        d = 0;
        off = 0;
        v = 0;
        continue;
      }
      v = 2 * v + src.flip();
      off += table_.leaves_per_depth[d];
      ++d;
    }
  }

  /// Like sample(), but throws FlipBudgetError once the walk has consumed
  /// max_flips bits (guard against adversarial sources).
  std::uint32_t sample_bounded(BitSource& src, std::uint64_t max_flips) const {
    std::size_t d = 0, off = 0;
    std::uint64_t v = 0, used = 0;
    for (;;) {
      if (v >= internal_[d]) {
        const std::uint32_t label = table_.labels[off + (v - internal_[d])];
        if (label != 0) return label;
        d = 0;
        off = 0;
        v = 0;
        continue;
      }
      if (used == max_flips)
        throw FlipBudgetError("aldr_sample: flip budget exhausted");
      ++used;
      v = 2 * v + src.flip();
      off += table_.leaves_per_depth[d];
      ++d;
    }
  }

  unsigned base_depth() const { return k_; }
  unsigned depth() const { return K_; }
  u128 amplification_factor() const { return c_; }
  u128 reject_weight() const { return reject_weight_; }
  std::uint64_t weight_sum() const { return m_; }
  const DdgTable& table() const { return table_; }
  std::size_t outcomes() const { return weights_.size(); }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t m_ = 0;
  unsigned k_ = 0, K_ = 0;
  u128 c_ = 0, reject_weight_ = 0;
  DdgTable table_;
  std::vector<std::uint64_t> internal_;  // internal nodes per depth
};

inline AldrSampler aldr_preprocess(const WeightVector& w, AmplificationRule rule,
                                   const Regime& regime = default_regime()) {
  return AldrSampler(w, rule, regime);
}

/// Exactly uniform label in 1..n via the entropy-recycling fast dice roller:
/// the state (v, c) doubles until v >= n, accepts c < n, and recycles the
/// remainder (v - n, c - n) otherwise.
inline std::uint64_t uniform_sample(std::uint64_t n, BitSource& src) {
  if (n == 0) throw std::domain_error("uniform_sample: n >= 1 required");
  if (n > (1ull << 62))
    throw OverflowRegimeError("uniform_sample: n exceeds 2^62");
  if (n == 1) return 1;
  std::uint64_t v = 1, c = 0;
  for (;;) {
    v <<= 1;
    c = (c << 1) | static_cast<unsigned>(src.flip());
    if (v >= n) {
      if (c < n) return c + 1;
      v -= n;
      c -= n;
    }
  }
}

/// Exact Bernoulli(p): lazily compares source bits against the binary
/// expansion of p, producing digits on demand with the doubling-remainder
/// recurrence (never materializing the period). Once the remainder hits
/// zero the remaining digits of p are all zero and U >= p is decided, so a
/// dyadic p terminates there. Expected flips equal nu(p) + nu(1-p).
inline int bernoulli_sample(const Rational& p, BitSource& src) {
  if (p.sign() < 0 || p > Rational(1))
    throw std::domain_error("bernoulli_sample: p outside [0,1]");
  if (p.is_zero()) return 0;
  if (p == Rational(1)) return 1;
  const Int num = p.num(), den = p.den();
  if (mpz_fits_ulong_p(den.get_mpz_t()) && den < (Int(1) << 62)) {
    std::uint64_t r = mpz_get_ui(num.get_mpz_t());
    const std::uint64_t b = mpz_get_ui(den.get_mpz_t());
    for (;;) {
      r <<= 1;
      int digit = r >= b;
      if (digit) r -= b;
      const int bit = src.flip();
      if (bit != digit) return digit;
      if (r == 0) return 0;
    }
  }
  Int r = num;
  for (;;) {
    r <<= 1;
    int digit = r >= den;
    if (digit) r -= den;
    const int bit = src.flip();
    if (bit != digit) return digit;
    if (sgn(r) == 0) return 0;
  }
}

}  // namespace aldr
