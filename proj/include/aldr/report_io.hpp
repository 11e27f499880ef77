#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"

#include "aldr/analysis.hpp"
#include "aldr/bench.hpp"

namespace aldr {

/// TSV rows for a depth sweep, one row per K:
/// K, c, A0, cost_num, cost_den, cost_decimal, toll_lo, toll_hi, reject_prob,
/// q_changed.
inline void write_cost_reports_tsv(std::ostream& os,
                                   const std::vector<CostReport>& reports) {
  os << "K\tc\tA0\tcost_num\tcost_den\tcost_decimal\ttoll_lo\ttoll_hi\t"
        "reject_prob\tq_changed\n";
  char buf[64];
  for (const CostReport& r : reports) {
    os << r.K << '\t' << r.c.get_str() << '\t' << r.reject_weight.get_str()
       << '\t' << r.expected_cost.num().get_str() << '\t'
       << r.expected_cost.den().get_str() << '\t'
       << r.expected_cost.to_decimal() << '\t';
    std::snprintf(buf, sizeof buf, "%.12g\t%.12g", r.toll.lo_double(),
                  r.toll.hi_double());
    os << buf << '\t' << r.reject_prob.to_string() << '\t'
       << (r.proposal_changed ? 1 : 0) << '\n';
  }
}

inline nlohmann::json report_to_json(const BenchReport& r) {
  nlohmann::json j{
      {"method", r.method},
      {"n", r.n},
      {"m", r.m.get_str()},
      {"samples", r.samples},
      {"mean_flips", r.mean_flips},
      {"stddev_flips", r.stddev_flips},
      {"ns_per_sample", r.ns_per_sample},
      {"preprocess_ns", r.preprocess_ns},
      {"chi_square", {{"statistic", r.chi2.statistic},
                      {"dof", r.chi2.dof},
                      {"threshold", r.chi2.threshold},
                      {"pass", r.chi2.pass}}},
      {"seed", r.seed},
  };
  if (r.exact_expected_flips) {
    j["exact_expected_flips"] = {
        {"num", r.exact_expected_flips->num().get_str()},
        {"den", r.exact_expected_flips->den().get_str()},
        {"decimal", r.exact_expected_flips->to_decimal()}};
  }
  return j;
}

inline void write_reports_json(std::ostream& os,
                               const std::vector<BenchReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchReport& r : reports) arr.push_back(report_to_json(r));
  os << arr.dump(2) << '\n';
}

}  // namespace aldr
