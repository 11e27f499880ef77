#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "aldr/errors.hpp"
#include "aldr/rational.hpp"
#include "aldr/weights.hpp"

namespace aldr {

/// Dyadic proposal Q_K = (A_0/2^K, A_1/2^K, ..., A_n/2^K) with the target
/// weights scaled by the amplification factor c and all rejection mass on
/// label 0.
struct AmplifiedProposal {
  unsigned K = 0;
  Int c;              // amplification factor
  Int reject_weight;  // A_0 = 2^K - c*m
  std::vector<Int> weights;  // A_i = c*a_i, i = 1..n
  Int M;              // c*m

  std::size_t n() const { return weights.size(); }

  /// Proposal probability q_i = A_i / 2^K, label 0 = reject.
  Rational q(std::size_t i) const {
    return Rational(i == 0 ? reject_weight : weights.at(i - 1), Int(1) << K);
  }

  std::vector<Rational> probabilities() const {
    std::vector<Rational> out;
    out.reserve(n() + 1);
    for (std::size_t i = 0; i <= n(); ++i) out.push_back(q(i));
    return out;
  }
};

/// Amplified proposal at depth K >= k with c = floor(2^K / m).
inline AmplifiedProposal make_proposal(const WeightVector& w, unsigned K,
                                       const Regime& regime = default_regime()) {
  if (K < w.k)
    throw InvalidRuleError("make_proposal: depth K below base depth k");
  if (K > regime.max_depth)
    throw OverflowRegimeError("make_proposal: depth K exceeds the regime cap");
  AmplifiedProposal p;
  p.K = K;
  const Int pow2 = Int(1) << K;
  p.c = pow2 / w.m;
  p.M = p.c * w.m;
  p.reject_weight = pow2 - p.M;
  p.weights.reserve(w.size());
  for (const Int& a : w.weights) p.weights.push_back(p.c * a);
  return p;
}

/// Proposal with an explicit amplification factor c (1 <= c <= floor(2^K/m)).
inline AmplifiedProposal make_proposal_with_factor(const WeightVector& w,
                                                   unsigned K, const Int& c) {
  if (sgn(c) <= 0 || c * w.m > (Int(1) << K))
    throw std::domain_error("make_proposal_with_factor: c out of range");
  AmplifiedProposal p;
  p.K = K;
  p.c = c;
  p.M = c * w.m;
  p.reject_weight = (Int(1) << K) - p.M;
  p.weights.reserve(w.size());
  for (const Int& a : w.weights) p.weights.push_back(c * a);
  return p;
}

/// Flattened leaf-table form of the depth-K DDG tree for a dyadic proposal:
/// leaves_per_depth[j] leaves at depth j, labels stored depth-major in
/// `labels` with label 0 = reject. Depth j holds the labels whose weight has
/// bit (K - j) set, reject first, then outcomes in increasing label order.
struct DdgTable {
  unsigned K = 0;
  std::uint32_t n = 0;  // outcome labels run 1..n
  std::vector<std::uint32_t> leaves_per_depth;  // size K+1
  std::vector<std::uint32_t> labels;            // flattened, size = sum of counts
  std::vector<std::size_t> offsets;             // offsets[j] = start of depth j in labels

  bool operator==(const DdgTable& o) const {
    return K == o.K && n == o.n && leaves_per_depth == o.leaves_per_depth &&
           labels == o.labels;
  }

  /// Reconstructed weight A_i = sum over depths with label i of 2^(K-j).
  Int weight_of_label(std::uint32_t label) const {
    Int a = 0;
    for (unsigned j = 0; j <= K; ++j) {
      const std::size_t off = offsets[j];
      for (std::uint32_t t = 0; t < leaves_per_depth[j]; ++t)
        if (labels[off + t] == label) a += Int(1) << (K - j);
    }
    return a;
  }

  Int accept_weight_sum() const {  // M
    Int m = 0;
    for (std::uint32_t i = 1; i <= n; ++i) m += weight_of_label(i);
    return m;
  }
};

inline DdgTable build_table(const AmplifiedProposal& p) {
  DdgTable t;
  t.K = p.K;
  t.n = static_cast<std::uint32_t>(p.n());
  t.leaves_per_depth.assign(p.K + 1, 0);
  t.offsets.assign(p.K + 2, 0);
  for (unsigned j = 0; j <= p.K; ++j) {
    t.offsets[j] = t.labels.size();
    for (std::uint32_t i = 0; i <= t.n; ++i) {
      const Int& a = i == 0 ? p.reject_weight : p.weights[i - 1];
      if (mpz_tstbit(a.get_mpz_t(), p.K - j)) {
        ++t.leaves_per_depth[j];
        t.labels.push_back(i);
      }
    }
  }
  t.offsets[p.K + 1] = t.labels.size();
  return t;
}

/// Check the structural invariants of a table; throws on violation.
///   - counts match the flattened label list,
///   - the tree is exhaustive: sum of leaves_per_depth[j] * 2^(K-j) = 2^K,
///   - every level is feasible and the last level closes the tree,
///   - leaves_per_depth[j] agrees with the set bits of the reconstructed
///     weights.
inline void validate_table(const DdgTable& t) {
  std::size_t total = 0;
  for (unsigned j = 0; j <= t.K; ++j) total += t.leaves_per_depth[j];
  if (total != t.labels.size())
    throw std::logic_error("DdgTable: counts do not match label list");

  Int mass = 0;
  for (unsigned j = 0; j <= t.K; ++j)
    mass += Int(t.leaves_per_depth[j]) << (t.K - j);
  if (mass != Int(1) << t.K)
    throw std::logic_error("DdgTable: tree is not exhaustive");

  Int internal = 1;  // nodes at depth 0
  for (unsigned j = 0; j <= t.K; ++j) {
    internal -= t.leaves_per_depth[j];
    if (sgn(internal) < 0)
      throw std::logic_error("DdgTable: infeasible level " + std::to_string(j));
    if (j < t.K) internal *= 2;
  }
  if (internal != 0)
    throw std::logic_error("DdgTable: tree does not close at depth K");

  for (std::uint32_t i = 0; i <= t.n; ++i) {
    const Int a = i == 0
                      ? (Int(1) << t.K) - t.accept_weight_sum()
                      : t.weight_of_label(i);
    for (unsigned j = 0; j <= t.K; ++j) {
      const std::size_t off = t.offsets[j];
      std::uint32_t found = 0;
      for (std::uint32_t s = 0; s < t.leaves_per_depth[j]; ++s)
        if (t.labels[off + s] == i) ++found;
      if (found != (mpz_tstbit(a.get_mpz_t(), t.K - j) ? 1u : 0u))
        throw std::logic_error("DdgTable: leaf count disagrees with weight bit");
    }
  }
}

/// Exact node count of the tree (internal + leaves over all depths).
inline Int node_count(const DdgTable& t) {
  Int nodes = 1;  // root level
  Int internal = 1;
  for (unsigned j = 0; j <= t.K; ++j) {
    if (j > 0) {
      internal *= 2;
      nodes += internal;
    }
    internal -= t.leaves_per_depth[j];
  }
  return nodes;
}

/// Textual dump: one line per depth 0..K, "depth<TAB>count<TAB>labels...",
/// labels space-separated with reject printed as R.
inline std::string dump_table(const DdgTable& t) {
  std::ostringstream os;
  for (unsigned j = 0; j <= t.K; ++j) {
    os << j << '\t' << t.leaves_per_depth[j];
    const std::size_t off = t.offsets[j];
    for (std::uint32_t s = 0; s < t.leaves_per_depth[j]; ++s) {
      const std::uint32_t lab = t.labels[off + s];
      os << (s == 0 ? "\t" : " ");
      if (lab == 0)
        os << 'R';
      else
        os << lab;
    }
    os << '\n';
  }
  return os.str();
}

inline DdgTable parse_table_dump(const std::string& text) {
  DdgTable t;
  std::istringstream is(text);
  std::string line;
  std::uint32_t max_label = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    unsigned depth = 0;
    std::uint32_t count = 0;
    ls >> depth >> count;
    if (depth != t.leaves_per_depth.size())
      throw std::invalid_argument("parse_table_dump: depths out of order");
    t.offsets.push_back(t.labels.size());
    t.leaves_per_depth.push_back(count);
    for (std::uint32_t s = 0; s < count; ++s) {
      std::string tok;
      if (!(ls >> tok))
        throw std::invalid_argument("parse_table_dump: short label row");
      if (tok == "R") {
        t.labels.push_back(0);
      } else {
        const std::uint32_t lab = static_cast<std::uint32_t>(std::stoul(tok));
        max_label = std::max(max_label, lab);
        t.labels.push_back(lab);
      }
    }
  }
  if (t.leaves_per_depth.empty())
    throw std::invalid_argument("parse_table_dump: empty dump");
  t.K = static_cast<unsigned>(t.leaves_per_depth.size() - 1);
  t.n = max_label;
  t.offsets.push_back(t.labels.size());
  return t;
}

/// Exact per-label output probability of the infinitely unrolled tree:
/// A_i / M for outcome labels 1..n.
inline std::vector<Rational> output_distribution(const DdgTable& t) {
  const Int M = t.accept_weight_sum();
  if (sgn(M) <= 0)
    throw std::domain_error("output_distribution: proposal has no accept mass");
  std::vector<Rational> out;
  out.reserve(t.n);
  for (std::uint32_t i = 1; i <= t.n; ++i)
    out.emplace_back(t.weight_of_label(i), M);
  return out;
}

}  // namespace aldr
