// Command-line surface for the ALDR toolkit: sampling, exact analysis
// sweeps, DDG table inspection, and benchmarking.
//
// Exit codes: 0 success, 2 parse error, 3 arithmetic regime exceeded,
// 4 invalid amplification rule, 1 anything else.

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aldr/aldr.hpp"
#include "aldr/report_io.hpp"

namespace {

using namespace aldr;

std::vector<Int> parse_inline_weights(const std::string& text) {
  std::vector<Int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw std::invalid_argument("weights must be positive integers: '" + tok +
                                  "'");
    out.emplace_back(tok, 10);
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

// Whitespace/newline-separated integers; '#' starts a comment to end of line.
std::vector<Int> parse_weights_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open weights file: " + path);
  std::vector<Int> out;
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("weights must be positive integers: '" +
                                    tok + "'");
      out.emplace_back(tok, 10);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty weights file");
  return out;
}

struct WeightsOpt {
  std::string inline_list;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("-w,--weights", inline_list,
                              "comma-separated positive integer weights");
    auto* b = cmd->add_option("-f,--weights-file", file,
                              "file of whitespace-separated weights, # comments");
    a->excludes(b);
  }

  WeightVector resolve() const {
    if (!inline_list.empty()) return normalize_weights(parse_inline_weights(inline_list));
    if (!file.empty()) return normalize_weights(parse_weights_file(file));
    throw std::invalid_argument("weights required (use -w or -f)");
  }
};

nlohmann::json u128_json(u128 v) {
  if (v <= UINT64_MAX) return nlohmann::json(static_cast<std::uint64_t>(v));
  return nlohmann::json(u128_to_string(v));
}

int cmd_sample(const WeightVector& w, const std::string& rule_text,
               std::uint64_t count, bool os_entropy, std::uint64_t seed,
               bool stats) {
  const AmplificationRule rule = AmplificationRule::parse(rule_text);
  const AldrSampler sampler = aldr_preprocess(w, rule);
  std::unique_ptr<BitSource> base;
  if (os_entropy)
    base = std::make_unique<OsEntropySource>();
  else
    base = std::make_unique<SeededSource>(seed);
  CountingSource src(*base);
  for (std::uint64_t i = 0; i < count; ++i)
    std::cout << sampler.sample(src) << '\n';
  if (stats) {
    nlohmann::json j{
        {"flips", src.flips()},
        {"flips_per_sample",
         static_cast<double>(src.flips()) / static_cast<double>(count)},
        {"K", sampler.depth()},
        {"c", u128_json(sampler.amplification_factor())},
        {"A0", u128_json(sampler.reject_weight())},
    };
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_analyze(const WeightVector& w, const std::string& range_text,
                unsigned precision) {
  unsigned lo = w.k, hi = 2 * w.k;
  if (!range_text.empty()) {
    const auto dots = range_text.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("bad --k-range, expected A..B");
    lo = static_cast<unsigned>(std::stoul(range_text.substr(0, dots)));
    hi = static_cast<unsigned>(std::stoul(range_text.substr(dots + 2)));
  }
  if (hi < lo) throw std::invalid_argument("bad --k-range, expected A <= B");
  const auto reports = sweep_depths(w, lo, hi, precision);
  write_cost_reports_tsv(std::cout, reports);
  const Rational ky = ky_cost_exact(w);
  std::cout << "# ky_cost = " << ky.to_string() << " (" << ky.to_decimal()
            << ")\n";
  if (const auto opt = minimal_optimal_depth(w))
    std::cout << "# minimal_optimal_depth K=" << opt->first
              << " (lambda=" << opt->second << ")\n";
  else
    std::cout << "# no entropy-optimal ALDR depth\n";
  return 0;
}

int cmd_tree(const WeightVector& w, unsigned depth) {
  const DdgTable t = build_table(make_proposal(w, depth));
  std::cout << dump_table(t);
  return 0;
}

int cmd_bench(const WeightsOpt& wopt, const std::string& corpus,
              std::uint64_t samples, const std::string& methods_text,
              std::uint64_t seed, bool os_entropy,
              const std::string& out_prefix) {
  std::vector<BenchReport> reports;
  if (!corpus.empty()) {
    if (corpus != "desk")
      throw std::invalid_argument("unknown corpus spec: " + corpus);
    const auto dists = desk_corpus(seed);
    const SuiteResult suite = compare_suite(dists, samples, seed);
    reports = suite.aldr;
    reports.insert(reports.end(), suite.alias.begin(), suite.alias.end());
    std::cout << "corpus cells: " << dists.size() << "\n"
              << "alias bound ceil(log n)+3: "
              << (suite.summary.alias_bound_ok ? "pass" : "FAIL") << "\n"
              << "low-entropy regime cells: " << suite.summary.low_entropy_cells
              << ", ALDR <= alias + 3sigma: "
              << (suite.summary.low_entropy_trend_ok ? "pass" : "FAIL") << "\n";
  } else {
    const WeightVector w = wopt.resolve();
    std::istringstream ms(methods_text);
    std::string tok;
    while (std::getline(ms, tok, ',')) {
      const BenchReport r =
          measure(MethodSpec::parse(tok), w, samples, seed, 5, os_entropy);
      std::cout << r.method << ": mean_flips=" << r.mean_flips;
      if (r.exact_expected_flips)
        std::cout << " exact=" << r.exact_expected_flips->to_decimal();
      std::cout << " ns/sample=" << r.ns_per_sample
                << " chi2=" << r.chi2.statistic
                << (r.chi2.pass ? " (pass)" : " (FAIL)") << '\n';
      reports.push_back(r);
    }
  }
  {
    std::ofstream tsv(out_prefix + ".tsv");
    write_reports_tsv(tsv, reports);
    std::ofstream json(out_prefix + ".json");
    write_reports_json(json, reports);
  }
  std::cout << "reports written to " << out_prefix << ".tsv, " << out_prefix
            << ".json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ALDR: exact discrete sampling and entropy-cost analysis"};
  app.set_version_flag("--version", "aldr 1.0.0");
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "generate random outcomes");
  WeightsOpt sample_w;
  sample_w.attach(sample);
  std::string rule = "2k";
  std::uint64_t count = 1, seed = 0;
  bool os_entropy = false, stats = false;
  sample->add_option("--rule", rule, "amplification rule: fldr | 2k | K=<int>");
  sample->add_option("-n,--count", count, "number of samples");
  auto* seed_opt = sample->add_option("--seed", seed, "64-bit seed");
  auto* os_opt = sample->add_flag("--os-entropy", os_entropy,
                                  "use the OS cryptographic RNG");
  seed_opt->excludes(os_opt);
  sample->add_flag("--stats", stats, "emit a final JSON stats line");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "exact cost/toll depth sweep");
  WeightsOpt analyze_w;
  analyze_w.attach(analyze);
  std::string k_range;
  unsigned precision = 128;
  analyze->add_option("--k-range", k_range, "depth range A..B (default k..2k)");
  analyze->add_option("--precision", precision, "interval precision bits");

  // tree
  auto* tree = app.add_subcommand("tree", "dump the DDG leaf table");
  WeightsOpt tree_w;
  tree_w.attach(tree);
  unsigned depth = 0;
  tree->add_option("--depth", depth, "tree depth K")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "empirical measurements");
  WeightsOpt bench_w;
  bench_w.attach(bench);
  std::string corpus, methods = "aldr,alias", out_prefix = "bench_report";
  std::uint64_t samples = 100000, bench_seed = 0;
  bench->add_option("--corpus", corpus, "corpus spec (desk)");
  bench->add_option("-n,--samples", samples, "samples per cell");
  bench->add_option("--methods", methods, "comma list: aldr|aldr:K=..|fldr|alias");
  bool bench_os_entropy = false;
  auto* bench_seed_opt = bench->add_option("--seed", bench_seed, "64-bit seed");
  auto* bench_os_opt = bench->add_flag(
      "--os-entropy", bench_os_entropy,
      "time against the OS RNG (single-distribution mode; not asserted)");
  bench_seed_opt->excludes(bench_os_opt);
  bench->add_option("--out", out_prefix, "report file prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) {
      if (!os_entropy && seed_opt->count() == 0)
        throw std::invalid_argument("exactly one of --seed / --os-entropy required");
      if (count == 0) throw std::invalid_argument("--count must be >= 1");
      return cmd_sample(sample_w.resolve(), rule, count, os_entropy, seed, stats);
    }
    if (analyze->parsed())
      return cmd_analyze(analyze_w.resolve(), k_range, precision);
    if (tree->parsed()) return cmd_tree(tree_w.resolve(), depth);
    if (bench->parsed()) {
      if (!bench_os_entropy && bench_seed_opt->count() == 0)
        throw std::invalid_argument(
            "exactly one of --seed / --os-entropy required");
      if (bench_os_entropy && !corpus.empty())
        throw std::invalid_argument("--os-entropy requires explicit weights");
      return cmd_bench(bench_w, corpus, samples, methods, bench_seed,
                       bench_os_entropy, out_prefix);
    }
  } catch (const InvalidRuleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const OverflowRegimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
