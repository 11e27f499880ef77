#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aldr/bit_source.hpp"
#include "aldr/ddg_table.hpp"
#include "aldr/rational.hpp"
#include "aldr/weights.hpp"

namespace aldr::test {

/// eps_d(x) = floor(2^d x) mod 2, straight from the definition.
inline int eps_oracle(const Rational& x, unsigned long d) {
  Int t = (x.num() << d) / x.den();
  return mpz_tstbit(t.get_mpz_t(), 0);
}

/// Truncated partial sum of sum_d d eps_d(x) 2^-d; the tail beyond D is
/// bounded by (D+2) 2^-D.
inline Rational nu_partial_sum(const Rational& x, unsigned long depth) {
  Rational s(0);
  for (unsigned long d = 1; d <= depth; ++d)
    if (eps_oracle(x, d)) s += Rational(Int(d), Int(1) << d);
  return s;
}

/// Deterministic pseudo-random helper driven by the seeded bit source.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : src_(seed) {}

  std::uint64_t next(std::uint64_t bound) {  // uniform-ish in [0, bound)
    std::uint64_t v = 0;
    for (int i = 0; i < 48; ++i) v = (v << 1) | src_.flip();
    return v % bound;
  }

  /// Random rational in [0, 1] with denominator <= max_den.
  Rational rational(std::uint64_t max_den) {
    const std::uint64_t den = 1 + next(max_den);
    const std::uint64_t num = next(den + 1);
    return Rational(Int(num), Int(den));
  }

  WeightVector weights(std::size_t max_n, std::uint64_t max_weight) {
    const std::size_t n = 1 + next(max_n);
    std::vector<Int> w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(1 + next(max_weight));
    return normalize_weights(std::move(w));
  }

 private:
  SeededSource src_;
};

/// Feeds a fixed prefix of bits, then delegates to an inner source.
class ScriptedSource final : public BitSource {
 public:
  ScriptedSource(std::vector<int> prefix, BitSource* fallback = nullptr)
      : prefix_(std::move(prefix)), fallback_(fallback) {}

  int flip() override {
    if (pos_ < prefix_.size()) return prefix_[pos_++];
    if (!fallback_) throw std::runtime_error("ScriptedSource: script exhausted");
    return fallback_->flip();
  }

  std::size_t consumed() const { return pos_; }

 private:
  std::vector<int> prefix_;
  std::size_t pos_ = 0;
  BitSource* fallback_;
};

/// Source that always returns the same bit (dishonest; for failure tests).
class ConstantSource final : public BitSource {
 public:
  explicit ConstantSource(int bit) : bit_(bit) {}
  int flip() override { return bit_; }

 private:
  int bit_;
};

/// Exact outcome-probability bracket by exhaustive enumeration of the
/// sampler automaton over all bitstreams of `depth` flips: a sweep over
/// table positions, restarting reject leaves at the root with no flip
/// consumed. lower[i] is the mass that has terminated on label i+1;
/// in_flight is the mass still walking after `depth` flips.
struct EnumerationResult {
  std::vector<Rational> lower;
  Rational in_flight;
};

inline EnumerationResult enumerate_automaton(const DdgTable& t,
                                             std::size_t depth) {
  EnumerationResult res;
  res.lower.assign(t.n, Rational(0));

  // Internal-node counts per level; leaves sit on the high node indices,
  // mirroring the sampler walk.
  std::vector<std::uint64_t> internal(t.K + 1, 0);
  std::uint64_t inner = 1;
  for (unsigned j = 0; j <= t.K; ++j) {
    inner -= t.leaves_per_depth[j];
    internal[j] = inner;
    inner *= 2;
  }

  // mass[d][v] for internal node v at table depth d
  std::vector<std::vector<Rational>> mass(t.K + 1);
  for (unsigned j = 0; j <= t.K; ++j) mass[j].assign(internal[j], Rational(0));

  auto deposit_root = [&](std::vector<std::vector<Rational>>& into,
                          const Rational& p) {
    if (internal[0] == 0) {
      const std::uint32_t label = t.labels[0];
      if (label == 0)
        throw std::logic_error("enumerate_automaton: reject at the root");
      res.lower[label - 1] += p;
      return;
    }
    into[0][0] += p;
  };

  deposit_root(mass, Rational(1));
  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<std::vector<Rational>> next(t.K + 1);
    for (unsigned j = 0; j <= t.K; ++j) next[j].assign(internal[j], Rational(0));
    for (unsigned d = 0; d <= t.K; ++d) {
      for (std::uint64_t v = 0; v < internal[d]; ++v) {
        if (mass[d][v].is_zero()) continue;
        const Rational half = mass[d][v] * Rational(1, 2);
        for (int bit = 0; bit < 2; ++bit) {
          const std::uint64_t child = 2 * v + static_cast<unsigned>(bit);
          const unsigned dc = d + 1;
          if (child >= internal[dc]) {
            const std::uint32_t label =
                t.labels[t.offsets[dc] + (child - internal[dc])];
            if (label == 0)
              deposit_root(next, half);  // restart consumes no flip
            else
              res.lower[label - 1] += half;
          } else {
            next[dc][child] += half;
          }
        }
      }
    }
    mass.swap(next);
  }
  res.in_flight = Rational(0);
  for (const auto& level : mass)
    for (const Rational& p : level) res.in_flight += p;
  return res;
}

}  // namespace aldr::test
