#pragma once

#include <cstdint>
#include <numeric>
#include <limits>
#include <vector>

#include "aldr/bit_expansion.hpp"
#include "aldr/ddg_table.hpp"
#include "aldr/errors.hpp"

namespace aldr {

/// Truncated leaf-count power series of the unrolled tree: counts[i][d] is
/// the number of leaves with outcome label i+1 at depth d (exact integers,
/// one row per outcome label, reject excluded).
struct LeafCountSeries {
  std::vector<std::vector<Int>> counts;
  std::size_t max_depth = 0;

  const Int& at(std::uint32_t label, std::size_t depth) const {
    return counts.at(label - 1).at(depth);
  }
};

namespace detail {

/// Per-depth leaf indicators of one label in the unexpanded table.
inline std::vector<Int> label_poly(const DdgTable& t, std::uint32_t label) {
  std::vector<Int> poly(t.K + 1, 0);
  for (unsigned j = 0; j <= t.K; ++j) {
    const std::size_t off = t.offsets[j];
    for (std::uint32_t s = 0; s < t.leaves_per_depth[j]; ++s)
      if (t.labels[off + s] == label) poly[j] += 1;
  }
  return poly;
}

}  // namespace detail

/// Leaf counts of the infinitely unrolled tree up to max_depth, computed as
/// the truncated power-series quotient
///   (sum_d eps_d(A_i/2^K) z^d) / (1 - sum_d eps_d(A_0/2^K) z^d).
inline LeafCountSeries unrolled_leaf_counts(const DdgTable& t,
                                            std::size_t max_depth);

/// Default series depth 3K+1: deep enough to expose the duplicate-leaf
/// phenomenon of any non-power-of-two rejection weight.
inline LeafCountSeries unrolled_leaf_counts(const DdgTable& t) {
  return unrolled_leaf_counts(t, 3 * static_cast<std::size_t>(t.K) + 1);
}

inline LeafCountSeries unrolled_leaf_counts(const DdgTable& t,
                                            std::size_t max_depth) {
  const std::vector<Int> rej = detail::label_poly(t, 0);
  if (sgn(rej[0]) > 0)
    throw std::domain_error("unrolled_leaf_counts: rejection probability 1");
  LeafCountSeries s;
  s.max_depth = max_depth;
  s.counts.resize(t.n);
  for (std::uint32_t i = 1; i <= t.n; ++i) {
    const std::vector<Int> num = detail::label_poly(t, i);
    std::vector<Int>& out = s.counts[i - 1];
    out.assign(max_depth + 1, 0);
    for (std::size_t d = 0; d <= max_depth; ++d) {
      Int v = d < num.size() ? num[d] : Int(0);
      const std::size_t jmax = std::min<std::size_t>(d, t.K);
      for (std::size_t j = 1; j <= jmax; ++j)
        if (sgn(rej[j]) > 0) v += rej[j] * out[d - j];
      out[d] = v;
    }
  }
  return s;
}

struct UnrollResult {
  LeafCountSeries series;
  /// Counts at depth d are final for d < final_below.
  std::size_t final_below = std::numeric_limits<std::size_t>::max();
};

/// Brute-force unrolling: substitute every reject leaf by a copy of the
/// original tree, `times` times, tracking aggregated (depth, label) leaf
/// counts. Counts at depth d are final for d < (times+1) * (first reject
/// depth).
inline UnrollResult unroll_oracle(const DdgTable& t, unsigned times) {
  if (times > 8) throw GuardError("unroll_oracle: times > 8");

  const std::size_t span = static_cast<std::size_t>(t.K) * (times + 1) + 1;
  const std::vector<Int> base_rej = detail::label_poly(t, 0);
  std::vector<std::vector<Int>> base_acc(t.n);
  for (std::uint32_t i = 1; i <= t.n; ++i) base_acc[i - 1] = detail::label_poly(t, i);

  UnrollResult r;
  r.series.max_depth = span - 1;
  r.series.counts.assign(t.n, std::vector<Int>(span, 0));
  for (std::uint32_t i = 0; i < t.n; ++i)
    for (std::size_t d = 0; d < base_acc[i].size(); ++d)
      r.series.counts[i][d] = base_acc[i][d];

  std::vector<Int> rejects(span, 0);
  for (std::size_t d = 0; d < base_rej.size(); ++d) rejects[d] = base_rej[d];

  std::size_t first_reject = span;
  for (std::size_t d = 0; d < base_rej.size(); ++d)
    if (sgn(base_rej[d]) > 0) {
      first_reject = d;
      break;
    }
  if (first_reject == span) return r;  // nothing to unroll, counts exact

  for (unsigned step = 0; step < times; ++step) {
    std::vector<Int> next_rejects(span, 0);
    for (std::size_t rdepth = 0; rdepth < span; ++rdepth) {
      if (sgn(rejects[rdepth]) == 0) continue;
      // Each reject leaf at rdepth becomes a copy of the tree shifted down.
      for (std::size_t d = 0; d <= t.K && rdepth + d < span; ++d) {
        for (std::uint32_t i = 0; i < t.n; ++i)
          if (sgn(base_acc[i][d]) > 0)
            r.series.counts[i][rdepth + d] += rejects[rdepth] * base_acc[i][d];
        if (sgn(base_rej[d]) > 0)
          next_rejects[rdepth + d] += rejects[rdepth] * base_rej[d];
      }
    }
    rejects.swap(next_rejects);
  }
  r.final_below = (times + 1) * first_reject;
  return r;
}

struct OptimalityResult {
  bool optimal = false;
  // First failing (depth, label): a duplicate leaf when one exists within the
  // checked window, otherwise the first count that disagrees with the target
  // expansion bit.
  std::size_t witness_depth = 0;
  std::uint32_t witness_label = 0;
  Int witness_count;
  int expected_bit = 0;
};

/// Knuth-Yao test on the unrolled tree: entropy optimal iff the leaf count
/// at every (depth, label) equals the expansion bit eps_d(p_i) of the target
/// probability. check_depth must cover preperiod + period of every p_i.
inline OptimalityResult is_entropy_optimal_unrolled(const DdgTable& t,
                                                    std::size_t check_depth) {
  const std::vector<Rational> p = output_distribution(t);
  std::vector<BitExpansion> exp;
  exp.reserve(p.size());
  for (const Rational& pi : p) exp.push_back(binary_expansion(pi));

  const LeafCountSeries s = unrolled_leaf_counts(t, check_depth);
  OptimalityResult res;
  res.optimal = true;
  bool have_mismatch = false, have_duplicate = false;
  OptimalityResult mism;
  for (std::size_t d = 0; d <= check_depth; ++d) {
    for (std::uint32_t i = 1; i <= t.n; ++i) {
      const Int& c = s.at(i, d);
      const int bit = d == 0 ? (p[i - 1] == Rational(1) ? 1 : 0)
                             : exp[i - 1].digit(d);
      if (c == bit) continue;
      res.optimal = false;
      if (!have_duplicate && c >= 2) {
        have_duplicate = true;
        res.witness_depth = d;
        res.witness_label = i;
        res.witness_count = c;
        res.expected_bit = bit;
      }
      if (!have_mismatch) {
        have_mismatch = true;
        mism.witness_depth = d;
        mism.witness_label = i;
        mism.witness_count = c;
        mism.expected_bit = bit;
      }
    }
    if (have_duplicate) break;
  }
  if (!res.optimal && !have_duplicate) {
    res.witness_depth = mism.witness_depth;
    res.witness_label = mism.witness_label;
    res.witness_count = mism.witness_count;
    res.expected_bit = mism.expected_bit;
  }
  return res;
}

/// A window large enough that agreement on it implies agreement at every
/// depth: beyond max(K, preperiod) both the unrolled counts and the target
/// bits are periodic, with period lcm(reject depth, expansion period) when
/// the reject weight is a power of two. Duplicates otherwise appear by 3K.
inline std::size_t sufficient_check_depth(const DdgTable& t) {
  const std::size_t base = 3 * static_cast<std::size_t>(t.K) + 1;
  const Int a0 = (Int(1) << t.K) - t.accept_weight_sum();
  if (sgn(a0) == 0) return std::max<std::size_t>(base, t.K + 1);
  if (!is_power_of_two(a0)) return base;
  const std::size_t rho = t.K - (bit_length(a0) - 1);  // single back-edge depth

  std::size_t pre = 0, per = 1;
  for (const Rational& pi : output_distribution(t)) {
    const BitExpansion e = binary_expansion(pi);
    pre = std::max(pre, e.preperiod_length());
    per = std::lcm(per, std::max<std::size_t>(e.period_length(), 1));
  }
  const std::size_t window =
      std::max<std::size_t>(t.K, pre) + std::lcm(rho, per) + 1;
  return std::max(base, window);
}

}  // namespace aldr
