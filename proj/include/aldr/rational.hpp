#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace aldr {

using Int = mpz_class;

inline bool is_power_of_two(const Int& x) {
  return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1;
}

/// Number of bits of x > 0 (position of the most significant bit + 1).
inline unsigned long bit_length(const Int& x) {
  if (sgn(x) <= 0) throw std::domain_error("bit_length: nonpositive input");
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// ceil(log2 m) for m >= 1; the unique k with 2^(k-1) < m <= 2^k (0 for m=1).
inline unsigned long ceil_log2(const Int& m) {
  if (sgn(m) <= 0) throw std::domain_error("ceil_log2: nonpositive input");
  if (m == 1) return 0;
  Int t = m - 1;
  return mpz_sizeinbase(t.get_mpz_t(), 2);
}

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit for integer literals
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// True iff the value is a/2^e in lowest terms (denominator a power of 2).
  bool is_dyadic() const {
    return v_.get_den() == 1 || is_power_of_two(Int(v_.get_den()));
  }

  /// True iff the value equals 2^e for some integer e (possibly negative).
  bool is_pow2() const {
    if (sgn(v_) <= 0) return false;
    const Int n = v_.get_num(), d = v_.get_den();
    return (n == 1 || is_power_of_two(n)) && (d == 1 || is_power_of_two(d));
  }

  /// floor(log2 x) for x > 0.
  long floor_log2() const {
    if (sign() <= 0) throw std::domain_error("floor_log2: nonpositive value");
    const Int n = num(), d = den();
    long e = static_cast<long>(bit_length(n)) - static_cast<long>(bit_length(d));
    // x >= 2^e  <=>  n >= d << e
    Int lhs = n, rhs = d;
    if (e >= 0)
      rhs <<= e;
    else
      lhs <<= -e;
    return lhs >= rhs ? e : e - 1;
  }

  static Rational pow2(long e) {
    Rational r;
    if (e >= 0)
      r.v_ = mpq_class(Int(1) << e);
    else
      r.v_ = mpq_class(1, Int(1) << -e);
    return r;
  }

  Rational operator-() const { return from_mpq(-v_); }
  Rational operator+(const Rational& o) const { return from_mpq(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return from_mpq(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return from_mpq(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return from_mpq(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  double to_double() const { return v_.get_d(); }

  const mpq_class& mpq() const { return v_; }

  /// "n/d", or just "n" for integers.
  std::string to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant = 12) const {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant, t);
    mpfr_clear(t);
    return buf;
  }

 private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

}  // namespace aldr
