#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <memory>
#include <thread>
#include <vector>

#include "aldr/alias.hpp"
#include "aldr/analysis.hpp"
#include "aldr/bit_source.hpp"
#include "aldr/chi_square_quantiles.hpp"
#include "aldr/errors.hpp"
#include "aldr/samplers.hpp"
#include "aldr/weights.hpp"

namespace aldr {

struct ChiSquareResult {
  double statistic = 0.0;
  std::uint64_t dof = 0;
  double threshold = 0.0;  // upper 1e-3 quantile
  bool pass = true;
};

/// Pearson goodness-of-fit of a sample histogram against the exact target
/// counts N * a_i / m, at significance 1e-3. Cells with expectation below 5
/// are pooled (Cochran), so the degrees of freedom are the retained cell
/// count minus one.
inline ChiSquareResult chi_square(const std::vector<std::uint64_t>& histogram,
                                  const WeightVector& w) {
  if (histogram.size() != w.size())
    throw std::invalid_argument("chi_square: histogram size mismatch");
  std::uint64_t N = 0;
  for (std::uint64_t h : histogram) N += h;
  if (N < 50 * w.size())
    throw GuardError("chi_square: undersampled histogram (N < 50n)");

  ChiSquareResult r;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  std::uint64_t cells = 0;
  const double dn = static_cast<double>(N);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double expect = dn * Rational(w.weights[i], w.m).to_double();
    const double obs = static_cast<double>(histogram[i]);
    if (expect < 5.0) {
      pooled_obs += obs;
      pooled_exp += expect;
      continue;
    }
    const double d = obs - expect;
    r.statistic += d * d / expect;
    ++cells;
  }
  if (pooled_exp > 0.0) {
    const double d = pooled_obs - pooled_exp;
    r.statistic += d * d / pooled_exp;
    ++cells;
  }
  if (cells < 2) {  // point mass: nothing to test
    r.dof = 0;
    r.threshold = 0.0;
    r.pass = true;
    return r;
  }
  r.dof = cells - 1;
  r.threshold = r.dof <= detail::kChiSquareQuantileCount
                    ? detail::kChiSquareQuantile1e3[r.dof - 1]
                    : detail::chi_square_quantile_wh(static_cast<double>(r.dof));
  r.pass = r.statistic <= r.threshold;
  return r;
}

struct MethodSpec {
  enum class Kind { aldr, fldr, alias };
  Kind kind = Kind::aldr;
  AmplificationRule rule = AmplificationRule::doubling();

  static MethodSpec parse(const std::string& text) {
    if (text == "aldr") return {Kind::aldr, AmplificationRule::doubling()};
    if (text.rfind("aldr:", 0) == 0)
      return {Kind::aldr, AmplificationRule::parse(text.substr(5))};
    if (text == "fldr") return {Kind::fldr, AmplificationRule::fldr()};
    if (text == "alias") return {Kind::alias, {}};
    throw std::invalid_argument("unknown method: " + text);
  }

  std::string name() const {
    switch (kind) {
      case Kind::aldr:
        return "aldr(" + rule.name() + ")";
      case Kind::fldr:
        return "fldr";
      case Kind::alias:
        return "alias";
    }
    return "?";
  }
};

struct BenchReport {
  std::string method;
  std::uint64_t n = 0;
  Int m;
  std::uint64_t samples = 0;
  double mean_flips = 0.0;
  double stddev_flips = 0.0;  // per-sample standard deviation
  std::optional<Rational> exact_expected_flips;
  double ns_per_sample = 0.0;
  double preprocess_ns = 0.0;
  ChiSquareResult chi2;
  std::uint64_t seed = 0;
};

namespace detail {

inline double median5(double a, double b, double c, double d, double e) {
  double v[5] = {a, b, c, d, e};
  std::sort(v, v + 5);
  return v[2];
}

template <class Build, class Draw>
BenchReport run_measurement(const WeightVector& w, std::uint64_t N,
                            std::uint64_t seed, int timing_runs, bool os_entropy,
                            Build&& build, Draw&& draw) {
  using clock = std::chrono::steady_clock;
  const auto make_source = [&]() -> std::unique_ptr<BitSource> {
    if (os_entropy) return std::make_unique<OsEntropySource>();
    return std::make_unique<SeededSource>(seed);
  };
  BenchReport r;
  r.n = w.size();
  r.m = w.m;
  r.samples = N;
  r.seed = os_entropy ? 0 : seed;

  // Preprocessing time: median of 5 rebuilds after the first.
  auto sampler = build();
  if (timing_runs > 0) {
    double t[5];
    for (int i = 0; i < 5; ++i) {
      const auto t0 = clock::now();
      auto rebuilt = build();
      const auto t1 = clock::now();
      (void)rebuilt;
      t[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
    }
    r.preprocess_ns = median5(t[0], t[1], t[2], t[3], t[4]);
  }

  // Counted statistics pass.
  std::vector<std::uint64_t> hist(w.size(), 0);
  {
    const auto base = make_source();
    CountingSource src(*base);
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
      const std::uint32_t label = draw(sampler, src);
      ++hist[label - 1];
      const double f = static_cast<double>(src.flips() - prev);
      prev = src.flips();
      sum += f;
      sumsq += f * f;
    }
    r.mean_flips = sum / static_cast<double>(N);
    const double var =
        (sumsq - sum * sum / static_cast<double>(N)) / static_cast<double>(N - 1);
    r.stddev_flips = var > 0 ? std::sqrt(var) : 0.0;
  }
  r.chi2 = chi_square(hist, w);

  // Wall-clock: warm-up pass, then median of timed runs over the same
  // deterministic bit stream.
  if (timing_runs > 0) {
    std::vector<double> runs;
    for (int rep = 0; rep <= timing_runs; ++rep) {
      const auto base = make_source();
      std::uint64_t sink = 0;
      const auto t0 = clock::now();
      for (std::uint64_t i = 0; i < N; ++i) sink += draw(sampler, *base);
      const auto t1 = clock::now();
      if (rep == 0) continue;  // warm-up
      if (sink == 0) std::abort();
      runs.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                     static_cast<double>(N));
    }
    std::sort(runs.begin(), runs.end());
    r.ns_per_sample = runs[runs.size() / 2];
  }
  return r;
}

}  // namespace detail

/// Run N samples of one method through a counting source; report mean flips,
/// wall-clock, and the chi-square of the histogram against exact P.
inline BenchReport measure(const MethodSpec& method, const WeightVector& w,
                           std::uint64_t N, std::uint64_t seed,
                           int timing_runs = 5, bool os_entropy = false) {
  BenchReport r;
  switch (method.kind) {
    case MethodSpec::Kind::aldr:
    case MethodSpec::Kind::fldr: {
      const AmplificationRule rule = method.kind == MethodSpec::Kind::fldr
                                         ? AmplificationRule::fldr()
                                         : method.rule;
      r = detail::run_measurement(
          w, N, seed, timing_runs, os_entropy,
          [&] { return aldr_preprocess(w, rule); },
          [](const AldrSampler& s, BitSource& src) { return s.sample(src); });
      r.exact_expected_flips = expected_cost_exact(w, rule.apply(w.k));
      break;
    }
    case MethodSpec::Kind::alias: {
      r = detail::run_measurement(
          w, N, seed, timing_runs, os_entropy,
          [&] { return alias_preprocess(w); },
          [](const AliasTable& t, BitSource& src) { return alias_sample(t, src); });
      r.exact_expected_flips = alias_cost_exact(alias_preprocess(w));
      break;
    }
  }
  r.method = method.name();
  return r;
}

/// Seeded desk-scale corpus: 60 distributions over n in {2,4,16,64,256,1024}
/// crossed with weight shapes {uniformish, geometric, twospike, random},
/// m <= 1e5.
inline std::vector<WeightVector> desk_corpus(std::uint64_t seed) {
  SeededSource bits(seed);
  auto rnd = [&](std::uint64_t range) {  // uniform in [0, range)
    std::uint64_t v = 0;
    for (int i = 0; i < 32; ++i) v = (v << 1) | bits.flip();
    return v % range;
  };
  const std::uint64_t ns[] = {2, 4, 16, 64, 256, 1024};
  const char* shapes[] = {"uniformish", "geometric", "twospike", "random"};
  std::vector<WeightVector> corpus;
  for (int variant = 0; corpus.size() < 60; ++variant) {
    for (std::uint64_t n : ns) {
      for (const char* shape : shapes) {
        if (corpus.size() >= 60) break;
        std::vector<Int> wts;
        wts.reserve(n);
        const std::string s = shape;
        if (s == "uniformish") {
          for (std::uint64_t i = 0; i < n; ++i) wts.emplace_back(50 + rnd(21));
        } else if (s == "geometric") {
          for (std::uint64_t i = 0; i < n; ++i)
            wts.push_back(Int(1) << (i < 10 ? 9 - i : 0));
        } else if (s == "twospike") {
          wts.emplace_back(35000 + rnd(5000));
          wts.emplace_back(35000 + rnd(5000));
          for (std::uint64_t i = 2; i < n; ++i) wts.emplace_back(1 + rnd(8));
        } else {
          const std::uint64_t range = std::max<std::uint64_t>(2, 90000 / n);
          for (std::uint64_t i = 0; i < n; ++i) wts.emplace_back(1 + rnd(range));
        }
        corpus.push_back(normalize_weights(std::move(wts)));
      }
    }
  }
  return corpus;
}

struct SuiteSummary {
  bool alias_bound_ok = true;        // alias mean <= ceil(log n) + 3 everywhere
  bool low_entropy_trend_ok = true;  // ALDR <= alias + 3 sigma in the
                                     // low-entropy regime H(P) + 2 <= ceil(log n)
  std::size_t low_entropy_cells = 0;
};

struct SuiteResult {
  std::vector<BenchReport> aldr;
  std::vector<BenchReport> alias;
  SuiteSummary summary;
};

/// Paired ALDR/alias measurements over a corpus, one worker thread per cell
/// with its own seeded source; reports merged by corpus index.
inline SuiteResult compare_suite(const std::vector<WeightVector>& corpus,
                                 std::uint64_t N, std::uint64_t seed,
                                 int timing_runs = 5) {
  for (const WeightVector& w : corpus)
    if (N < 50 * w.size())
      throw GuardError("compare_suite: need N >= 50n for the fit test (n = " +
                       std::to_string(w.size()) + ")");
  SuiteResult result;
  result.aldr.resize(corpus.size());
  result.alias.resize(corpus.size());

  struct Cell {
    std::size_t index;
    MethodSpec method;
  };
  std::vector<Cell> cells;
  cells.reserve(2 * corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    cells.push_back({i, MethodSpec{MethodSpec::Kind::aldr, AmplificationRule::doubling()}});
    cells.push_back({i, MethodSpec{MethodSpec::Kind::alias, {}}});
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= cells.size()) return;
        const Cell& cell = cells[c];
        const std::uint64_t cell_seed =
            seed ^ (0x9E3779B97F4A7C15ull *
                    (2 * cell.index +
                     (cell.method.kind == MethodSpec::Kind::alias)));
        BenchReport r =
            measure(cell.method, corpus[cell.index], N, cell_seed, timing_runs);
        if (cell.method.kind == MethodSpec::Kind::alias)
          result.alias[cell.index] = std::move(r);
        else
          result.aldr[cell.index] = std::move(r);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(hw, cells.size()); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const WeightVector& w = corpus[i];
    const double logn = static_cast<double>(ceil_log2(Int(w.size())));
    if (result.alias[i].mean_flips > logn + 3.0)
      result.summary.alias_bound_ok = false;
    const Interval h = entropy_enclosure(w, 64);
    if (h.hi_double() + 2.0 <= logn) {
      ++result.summary.low_entropy_cells;
      const double sigma =
          std::sqrt(result.aldr[i].stddev_flips * result.aldr[i].stddev_flips +
                    result.alias[i].stddev_flips * result.alias[i].stddev_flips) /
          std::sqrt(static_cast<double>(N));
      if (result.aldr[i].mean_flips > result.alias[i].mean_flips + 3 * sigma)
        result.summary.low_entropy_trend_ok = false;
    }
  }
  return result;
}

inline void write_reports_tsv(std::ostream& os,
                              const std::vector<BenchReport>& reports) {
  os << "method\tn\tm\tsamples\tmean_flips\tstddev_flips\texact_num\texact_den\t"
        "exact_decimal\tns_per_sample\tpreprocess_ns\tchi2\tdof\tchi2_threshold\t"
        "chi2_pass\tseed\n";
  for (const BenchReport& r : reports) {
    os << r.method << '\t' << r.n << '\t' << r.m.get_str() << '\t' << r.samples
       << '\t' << r.mean_flips << '\t' << r.stddev_flips << '\t';
    if (r.exact_expected_flips)
      os << r.exact_expected_flips->num().get_str() << '\t'
         << r.exact_expected_flips->den().get_str() << '\t'
         << r.exact_expected_flips->to_decimal();
    else
      os << "-\t-\t-";
    os << '\t' << r.ns_per_sample << '\t' << r.preprocess_ns << '\t'
       << r.chi2.statistic << '\t' << r.chi2.dof << '\t' << r.chi2.threshold
       << '\t' << (r.chi2.pass ? 1 : 0) << '\t' << r.seed << '\n';
  }
}

}  // namespace aldr
