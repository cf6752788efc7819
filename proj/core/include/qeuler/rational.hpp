#ifndef QEULER_RATIONAL_HPP
#define QEULER_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qeuler {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1. All operations re-canonicalize, so operator== is
/// a reliable exact-equality test.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                      // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}             // NOLINT
  Rational(const BigInt& num, const BigInt& den);  // throws on den == 0
  Rational(long num, long den);

  /// Parses "a/b" or "a" (the CLI contract for --q).
  static Rational parse(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  /// x^e, with negative e meaning the inverse power. Throws for 0^e, e < 0.
  Rational pow(long e) const;

  /// p-adic valuation v_p. Throws std::domain_error on zero (v_p(0) = +inf).
  long vp(unsigned long p) const;

  /// "a/b", or just "a" when the denominator is 1.
  std::string str() const;

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}  // assumes canonical
  mpq_class v_;
};

/// Binomial coefficient C(n, k); 0 when k > n. Multiplicative formula with
/// exact stepwise division, no factorial tables.
BigInt binom(unsigned long n, unsigned long k);

/// Canonicalizing constructor exposed as a free function.
inline Rational rat_normalize(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

}  // namespace qeuler

#endif
