#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "aldr/alias.hpp"
#include "aldr/bit_expansion.hpp"
#include "aldr/ddg_table.hpp"
#include "aldr/entropy.hpp"
#include "aldr/errors.hpp"
#include "aldr/interval.hpp"
#include "aldr/leaf_counts.hpp"
#include "aldr/nu.hpp"
#include "aldr/weights.hpp"

namespace aldr {

/// Expected flips of the depth-K rejection sampler, exactly:
///   (2^K / M) * sum_{i=0..n} nu(A_i / 2^K).
inline Rational expected_cost_exact(const WeightVector& w, unsigned K) {
  const AmplifiedProposal p = make_proposal(w, K);
  Rational s = nu_dyadic(p.reject_weight, K);
  for (const Int& a : p.weights) s += nu_dyadic(a, K);
  return Rational(Int(1) << K, p.M) * s;
}

/// Expected flips of the entropy-optimal sampler: sum_i nu(a_i / m).
inline Rational ky_cost_exact(const WeightVector& w) {
  Rational s(0);
  for (const Int& a : w.weights) s += nu_exact(Rational(a, w.m));
  return s;
}

/// Enclosure of the toll expected_cost - H(P) at the given precision.
inline Interval toll_enclosure(const WeightVector& w, unsigned K,
                               mpfr_prec_t prec) {
  return Interval::point(expected_cost_exact(w, K), prec) -
         entropy_enclosure(w, prec);
}

/// Enclosure of the relative toll trel(x) = (nu(x) - H_1(x)) / x, x in (0,1].
/// Degenerate (exactly zero) for x a power of two.
inline Interval relative_toll(const Rational& x, mpfr_prec_t prec) {
  if (x.sign() <= 0 || x > Rational(1))
    throw std::domain_error("relative_toll: x outside (0,1]");
  const Rational inv = Rational(1) / x;
  return (Interval::point(nu_exact(x), prec) - h1_enclosure(x, prec)) * inv;
}

/// Relative FLDR toll of outcome i (1-based) at depth K:
///   trel(A_i/2^K) + (2^K/M) (H_1(M/2^K) + nu(1 - M/2^K)).
/// When a_i/m is a power of two the H_1 terms cancel algebraically and the
/// value is the exact rational (2^K/M)(nu(M/2^K) + nu(A_0/2^K)).
inline Interval relative_fldr_toll(const WeightVector& w, unsigned K,
                                   std::size_t i, mpfr_prec_t prec) {
  if (i < 1 || i > w.size())
    throw std::domain_error("relative_fldr_toll: label out of range");
  const AmplifiedProposal p = make_proposal(w, K);
  const Rational pow2(Int(1) << K);
  const Rational trials = pow2 / Rational(p.M);
  const Rational q0 = Rational(p.reject_weight) / pow2;
  const Rational qm = Rational(p.M) / pow2;

  if (w.probability(i).is_pow2()) {
    const Rational exact = trials * (nu_exact(qm) + nu_dyadic(p.reject_weight, K));
    return Interval::point(exact, prec);
  }
  const Rational qi = Rational(p.weights[i - 1]) / pow2;
  Interval rej = (h1_enclosure(qm, prec) + Interval::point(nu_exact(q0), prec)) *
                 trials;
  return relative_toll(qi, prec) + rej;
}

/// Exact static cost/toll record for one depth K.
struct CostReport {
  unsigned K = 0;
  Int c;
  Int reject_weight;        // A_0
  Rational expected_cost;   // exact
  Interval entropy;         // H(P) enclosure
  Interval toll;            // expected_cost - H(P)
  Rational trials_expected; // B = 2^K / M
  Rational reject_prob;     // q_{K,0} = A_0 / 2^K
  Int node_bound;           // 2 (n+1) K
  Int node_count;           // exact node count of the table
  bool proposal_changed = true;  // Q_K != Q_{K-1} (c_K odd); true for first K
};

inline CostReport cost_report(const WeightVector& w, unsigned K,
                              mpfr_prec_t prec) {
  const AmplifiedProposal p = make_proposal(w, K);
  CostReport r;
  r.K = K;
  r.c = p.c;
  r.reject_weight = p.reject_weight;
  r.expected_cost = expected_cost_exact(w, K);
  r.entropy = entropy_enclosure(w, prec);
  r.toll = Interval::point(r.expected_cost, prec) - r.entropy;
  r.trials_expected = Rational(Int(1) << K, p.M);
  r.reject_prob = Rational(p.reject_weight, Int(1) << K);
  r.node_bound = Int(2) * Int(w.size() + 1) * K;
  r.node_count = node_count(build_table(p));
  r.proposal_changed = mpz_odd_p(p.c.get_mpz_t()) != 0;
  return r;
}

/// One CostReport per K in [K_lo, K_hi]. proposal_changed flags the depths
/// where Q_K differs from Q_{K-1} (equivalently, c_K is odd); the parity
/// criterion is cross-checked against structural proposal equality.
inline std::vector<CostReport> sweep_depths(const WeightVector& w, unsigned K_lo,
                                            unsigned K_hi, mpfr_prec_t prec = 128,
                                            const Regime& regime = default_regime()) {
  if (K_lo < w.k || K_hi < K_lo || K_hi > regime.max_depth)
    throw std::domain_error("sweep_depths: K range outside [k, regime cap]");
  std::vector<CostReport> out;
  out.reserve(K_hi - K_lo + 1);
  for (unsigned K = K_lo; K <= K_hi; ++K) {
    CostReport r = cost_report(w, K, prec);
    if (K > K_lo) {
      const bool structurally_equal =
          out.back().c * 2 == r.c;  // q_{K,i} = q_{K-1,i} iff A doubles
      if (structurally_equal != !r.proposal_changed)
        throw std::logic_error("sweep_depths: parity criterion mismatch");
    } else {
      r.proposal_changed = true;
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Smallest depth K = u + lambda*l at which the ALDR tree is entropy optimal,
/// per the expansion-alignment characterization: eps_d(p_i) <= eps_{d+l*
/// lambda}(p_i) for all i and d >= 1. Returns (K, lambda); (k, 0) when m is a
/// power of two; nullopt when no lambda qualifies (no ALDR depth is optimal).
inline std::optional<std::pair<unsigned, unsigned>> minimal_optimal_depth(
    const WeightVector& w, unsigned lambda_max = 8) {
  if (is_power_of_two(w.m) || w.m == 1) return std::make_pair(w.k, 0u);
  Int odd = w.m;
  unsigned long u = 0;
  while (mpz_even_p(odd.get_mpz_t())) {
    odd >>= 1;
    ++u;
  }
  const unsigned long ell = multiplicative_order(odd);
  std::vector<BitExpansion> exp;
  exp.reserve(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i)
    exp.push_back(binary_expansion(w.probability(i)));

  const unsigned long lam_cap =
      std::max<unsigned long>(lambda_max, (u + ell - 1) / ell);
  for (unsigned long lam = 1; lam <= lam_cap; ++lam) {
    bool ok = true;
    for (const BitExpansion& e : exp) {
      // Beyond the preperiod the shift is a period multiple, so only
      // d <= preperiod can violate the alignment.
      for (unsigned long d = 1; d <= u && ok; ++d)
        if (e.digit(d) > e.digit(d + lam * ell)) ok = false;
      if (!ok) break;
    }
    if (ok)
      return std::make_pair(static_cast<unsigned>(u + lam * ell),
                            static_cast<unsigned>(lam));
  }
  return std::nullopt;
}

/// Exact cost comparison of ALDR at depth K against FLDR (depth k), with the
/// carry witnesses that characterize equality: the costs agree iff no
/// multiplication c_K x a_i carries, i = 0..n with a_0 = 2^k - m.
struct AldrFldrComparison {
  Rational cost_aldr;
  Rational cost_fldr;
  bool equal = false;
  std::vector<std::size_t> carrying;  // indices 0..n whose product carries
};

inline AldrFldrComparison compare_aldr_fldr(const WeightVector& w, unsigned K) {
  AldrFldrComparison r;
  r.cost_aldr = expected_cost_exact(w, K);
  r.cost_fldr = expected_cost_exact(w, w.k);
  r.equal = r.cost_aldr == r.cost_fldr;
  const Int c = (Int(1) << K) / w.m;
  const Int a0 = (Int(1) << w.k) - w.m;
  if (sgn(a0) > 0 && multiplication_carries(c, a0)) r.carrying.push_back(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (multiplication_carries(c, w.weights[i])) r.carrying.push_back(i + 1);
  if (r.equal != r.carrying.empty())
    throw std::logic_error("compare_aldr_fldr: carry criterion mismatch");
  return r;
}

namespace detail {

/// Tri-state strict comparison of (cost - H(P)) against a rational bound,
/// using the exact-entropy path when H(P) is rational and interval
/// refinement otherwise.
inline Verdict toll_less_than(const WeightVector& w, const Rational& cost,
                              const Rational& bound, RefinePolicy policy = {}) {
  if (const auto h = entropy_exact(w)) return cost - *h < bound
                                                  ? Verdict::yes
                                                  : Verdict::no;
  return decide_less(
      [&](mpfr_prec_t prec) {
        return Interval::point(cost, prec) - entropy_enclosure(w, prec);
      },
      bound, policy);
}

inline Verdict toll_greater_than(const WeightVector& w, const Rational& cost,
                                 const Rational& bound,
                                 RefinePolicy policy = {}) {
  if (const auto h = entropy_exact(w)) return cost - *h > bound
                                                  ? Verdict::yes
                                                  : Verdict::no;
  return decide_greater(
      [&](mpfr_prec_t prec) {
        return Interval::point(cost, prec) - entropy_enclosure(w, prec);
      },
      bound, policy);
}

}  // namespace detail

/// Toll and rejection bounds of the sampler family, each as a decided
/// verdict. Any `no` on a valid input is a defect.
struct TollBoundVerdicts {
  Verdict toll_nonnegative = Verdict::undecided;
  Verdict generic_bound = Verdict::undecided;  // toll < 2 + (4+K-k) 2^(k-K)
  bool two_bound_applies = false;              // K >= 2k
  Verdict two_bound = Verdict::undecided;      // toll < 2, when applicable
  bool reject_bound = false;  // q_{K,0} < 1/(2^(K-k)+1), exact rational check
};

inline TollBoundVerdicts toll_bound_verdicts(const WeightVector& w, unsigned K,
                                             RefinePolicy policy = {}) {
  const Rational cost = expected_cost_exact(w, K);
  TollBoundVerdicts v;
  // toll >= 0 is the negation of toll < 0.
  switch (detail::toll_less_than(w, cost, Rational(0), policy)) {
    case Verdict::yes:
      v.toll_nonnegative = Verdict::no;
      break;
    case Verdict::no:
      v.toll_nonnegative = Verdict::yes;
      break;
    case Verdict::undecided:
      break;
  }
  const unsigned delta = K - w.k;
  const Rational generic =
      Rational(2) + Rational(Int(4 + delta)) * Rational::pow2(-long(delta));
  v.generic_bound = detail::toll_less_than(w, cost, generic, policy);
  v.two_bound_applies = K >= 2 * w.k;
  if (v.two_bound_applies)
    v.two_bound = detail::toll_less_than(w, cost, Rational(2), policy);

  const AmplifiedProposal p = make_proposal(w, K);
  const Rational q0(p.reject_weight, Int(1) << K);
  v.reject_bound = q0 < Rational(Int(1), (Int(1) << delta) + 1);
  return v;
}

/// Globally optimal amplification factor at depth K by enumeration over
/// c = 1..floor(2^K/m): minimizes (2^K / cm) sum_i nu(c a_i / 2^K) with the
/// reject term included. Ties break toward smaller c.
inline std::pair<Int, Rational> optimal_amplification(
    const WeightVector& w, unsigned K, const Int& enumeration_cap = Int(1) << 20) {
  const Int c_max = (Int(1) << K) / w.m;
  if (c_max > enumeration_cap)
    throw GuardError("optimal_amplification: enumeration cap exceeded");
  std::optional<Rational> best;
  Int best_c = 0;
  for (Int c = 1; c <= c_max; ++c) {
    const Int M = c * w.m;
    Rational s = nu_dyadic((Int(1) << K) - M, K);
    for (const Int& a : w.weights) s += nu_dyadic(c * a, K);
    const Rational cost = Rational(Int(1) << K, M) * s;
    if (!best || cost < *best) {
      best = cost;
      best_c = c;
    }
  }
  return {best_c, *best};
}

/// Exact expected flip count of the recycling fast dice roller for
/// Uniform(1..n): solves the single-cycle linear system of the (v) chain.
inline Rational uniform_cost_exact(std::uint64_t n) {
  if (n == 0) throw std::domain_error("uniform_cost_exact: n >= 1 required");
  if (n == 1) return Rational(0);
  // f(v) = 1 + [2v >= n] ((2v-n)/2v) f(2v-n) + [2v < n] f(2v), from v = 1.
  // Walking v doubles (mod subtracting n) and eventually cycles; express
  // f(1) = alpha f(v) + beta along the walk and close the loop.
  std::map<std::uint64_t, std::pair<Rational, Rational>> seen;
  std::uint64_t v = 1;
  Rational alpha(1), beta(0);
  while (!seen.count(v)) {
    seen.emplace(v, std::make_pair(alpha, beta));
    if (2 * v >= n) {
      beta += alpha;
      alpha *= Rational(Int(2 * v - n), Int(2 * v));
      v = 2 * v - n;
      if (v == 0) return beta;  // power of two: terminates surely
    } else {
      beta += alpha;
      v *= 2;
    }
  }
  const auto& [a0, b0] = seen.at(v);
  const Rational fv = (beta - b0) / (a0 - alpha);
  return a0 * fv + b0;
}

/// nu(p) + nu(1-p): expected flips of the exact lazy Bernoulli sampler.
inline Rational bernoulli_cost_exact(const Rational& p) {
  return nu_exact(p) + nu_exact(Rational(1) - p);
}

/// Exact expected flips of the alias sampler: uniform index cost plus the
/// average Bernoulli cost of the column thresholds.
inline Rational alias_cost_exact(const AliasTable& t) {
  Rational s(0);
  for (const AliasColumn& c : t.columns) s += bernoulli_cost_exact(c.threshold);
  return uniform_cost_exact(t.n) + s / Rational(Int(t.n));
}

}  // namespace aldr
