#pragma once

#include <cstdint>
#include <vector>

#include "aldr/bit_source.hpp"
#include "aldr/rational.hpp"
#include "aldr/samplers.hpp"
#include "aldr/weights.hpp"

namespace aldr {

/// One alias column: draw Bernoulli(threshold) and return primary on 1,
/// alias on 0. Full columns (threshold 1) leave the alias unused.
struct AliasColumn {
  std::uint32_t primary = 0;
  std::uint32_t alias = 0;
  Rational threshold;
};

struct AliasTable {
  std::uint64_t n = 0;
  std::vector<AliasColumn> columns;
};

/// Exact integer Vose construction on scaled weights n*a_i against m.
/// Columns with weight exactly m go to the large worklist, and trailing
/// large columns get threshold exactly 1, so the reconstruction identity
///   sum_cols [t ind(primary=i) + (1-t) ind(alias=i)] / n = a_i / m
/// holds without any rounding residue.
inline AliasTable alias_preprocess(const WeightVector& w) {
  const std::uint64_t n = w.size();
  AliasTable table;
  table.n = n;
  table.columns.resize(n);

  std::vector<Int> scaled(n);
  for (std::uint64_t i = 0; i < n; ++i) scaled[i] = Int(n) * w.weights[i];

  std::vector<std::uint32_t> small, large;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (scaled[i] < w.m)
      small.push_back(static_cast<std::uint32_t>(i));
    else
      large.push_back(static_cast<std::uint32_t>(i));
  }

  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    large.pop_back();
    table.columns[s] = {s + 1, l + 1, Rational(scaled[s], w.m)};
    scaled[l] -= w.m - scaled[s];
    if (scaled[l] < w.m)
      small.push_back(l);
    else
      large.push_back(l);
  }
  // Exact arithmetic: only full columns can remain.
  for (const std::uint32_t l : large) {
    table.columns[l] = {l + 1, l + 1, Rational(1)};
  }
  if (!small.empty())
    throw std::logic_error("alias_preprocess: residue in small worklist");
  return table;
}

/// Uniform column index, then an exact Bernoulli choice between primary and
/// alias; output distribution is exactly a_i / m.
inline std::uint32_t alias_sample(const AliasTable& t, BitSource& src) {
  const std::uint64_t col = uniform_sample(t.n, src) - 1;
  const AliasColumn& c = t.columns[col];
  return bernoulli_sample(c.threshold, src) ? c.primary : c.alias;
}

}  // namespace aldr
