#pragma once

#include <mpfr.h>

#include <algorithm>
#include <utility>

#include "aldr/errors.hpp"
#include "aldr/rational.hpp"

namespace aldr {

/// Rigorous real enclosure [lo, hi] computed with directed rounding at a
/// fixed working precision. The represented exact value always lies inside.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  Interval& operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval point(const Rational& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, x.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, x.mpq().get_mpq_t(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t precision() const { return prec_; }

  bool contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.mpq().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, x.mpq().get_mpq_t()) >= 0;
  }
  /// Entire enclosure strictly below x: certifies value < x.
  bool is_below(const Rational& x) const {
    return mpfr_cmp_q(hi_, x.mpq().get_mpq_t()) < 0;
  }
  /// Entire enclosure strictly above x: certifies value > x.
  bool is_above(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.mpq().get_mpq_t()) > 0;
  }
  /// Lower endpoint at or above x: certifies value >= x.
  bool is_at_least(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.mpq().get_mpq_t()) >= 0;
  }
  /// Upper endpoint at or below x: certifies value <= x.
  bool is_at_most(const Rational& x) const {
    return mpfr_cmp_q(hi_, x.mpq().get_mpq_t()) <= 0;
  }
  bool overlaps(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  Interval operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }

  Interval operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }

  Interval operator-(const Interval& o) const { return *this + (-o); }

  Interval& operator+=(const Interval& o) {
    *this = *this + o;
    return *this;
  }

  Interval operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    bool first = true;
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    for (auto a : as)
      for (auto b : bs) {
        mpfr_mul(t, a, b, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  Interval operator+(const Rational& q) const { return *this + point(q, prec_); }
  Interval operator-(const Rational& q) const { return *this - point(q, prec_); }
  Interval operator*(const Rational& q) const { return *this * point(q, prec_); }

  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  mpfr_t& lo_raw() { return lo_; }
  mpfr_t& hi_raw() { return hi_; }

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

inline Interval operator-(const Rational& q, const Interval& i) {
  return Interval::point(q, i.precision()) - i;
}

/// Enclosure of log2(x) for rational x > 0.
inline Interval log2_enclosure(const Rational& x, mpfr_prec_t prec) {
  if (x.sign() <= 0) throw std::domain_error("log2_enclosure: x <= 0");
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_q(t, x.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_log2(r.lo_raw(), t, MPFR_RNDD);
  mpfr_set_q(t, x.mpq().get_mpq_t(), MPFR_RNDU);
  mpfr_log2(r.hi_raw(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

/// Enclosure of H_1(x) = x log2(1/x) on [0,1], with H_1(0) = H_1(1) = 0.
/// Exact (degenerate) for x a power of two.
inline Interval h1_enclosure(const Rational& x, mpfr_prec_t prec) {
  if (x.sign() < 0 || x > Rational(1))
    throw std::domain_error("h1_enclosure: x outside [0,1]");
  if (x.is_zero() || x == Rational(1)) return Interval(prec);
  return Interval::point(x, prec) * (-log2_enclosure(x, prec));
}

/// Enclosure of the binary entropy H_b(x) = H_1(x) + H_1(1-x).
inline Interval hb_enclosure(const Rational& x, mpfr_prec_t prec) {
  return h1_enclosure(x, prec) + h1_enclosure(Rational(1) - x, prec);
}

enum class Verdict : std::uint8_t { yes, no, undecided };

/// Widening-precision refinement policy for rational-vs-irrational
/// comparisons: start at 128 bits and double up to a hard cap.
struct RefinePolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t cap = 8192;
};

/// Decide whether the exact value enclosed by make(prec) is < threshold.
/// make must produce valid enclosures of the same exact value at any
/// requested precision.
template <class MakeInterval>
Verdict decide_less(MakeInterval&& make, const Rational& threshold,
                    RefinePolicy policy = {}) {
  for (mpfr_prec_t prec = policy.start; prec <= policy.cap; prec *= 2) {
    Interval e = make(prec);
    if (e.is_below(threshold)) return Verdict::yes;
    if (e.is_at_least(threshold)) return Verdict::no;
  }
  return Verdict::undecided;
}

/// Decide whether the enclosed exact value is > threshold.
template <class MakeInterval>
Verdict decide_greater(MakeInterval&& make, const Rational& threshold,
                       RefinePolicy policy = {}) {
  for (mpfr_prec_t prec = policy.start; prec <= policy.cap; prec *= 2) {
    Interval e = make(prec);
    if (e.is_above(threshold)) return Verdict::yes;
    if (e.is_at_most(threshold)) return Verdict::no;
  }
  return Verdict::undecided;
}

inline bool require_decided(Verdict v, const char* what) {
  if (v == Verdict::undecided) throw UndecidedError(what);
  return v == Verdict::yes;
}

}  // namespace aldr
