#ifndef QEULER_PADIC_HPP
#define QEULER_PADIC_HPP

#include <limits>
#include <optional>
#include <string>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Raised when an operation cannot report at least kMinReportableDigits
/// correct digits of its result.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& m) : std::runtime_error(m) {}
};

/// Odd prime p and working relative precision N (p-adic digits).
struct PadicContext {
  unsigned long p;
  int precision;

  explicit PadicContext(unsigned long p_, int precision_ = 40);

  /// p^e for e >= 0.
  BigInt pow_p(long e) const;

  bool operator==(const PadicContext& o) const {
    return p == o.p && precision == o.precision;
  }
};

/// Finite-precision element of Q_p under a PadicContext.
///
/// Three states:
///   - exact zero (valuation +infinity);
///   - known nonzero: x = p^val * unit with unit a p-adic unit known
///     mod p^prec (prec >= 1), i.e. absolute precision val + prec;
///   - bounded: only v_p(x) >= val is known (prec == 0, unit == 0).
///     This arises when a difference cancels to the full working
///     precision; keeping it explicit is what makes congruence verdicts
///     sound instead of optimistic.
class Padic {
 public:
  static Padic zero(const PadicContext& ctx);
  static Padic one(const PadicContext& ctx);

  /// Embedding Q -> Q_p at full context precision.
  static Padic from_rational(const Rational& r, const PadicContext& ctx);

  /// Raw constructor from a residue: value = p^val * (residue mod p^prec),
  /// canonicalized (p-factors of the residue are folded into val).
  static Padic from_residue(const PadicContext& ctx, const BigInt& residue,
                            long val = 0, int prec = -1 /* ctx.precision */);

  const PadicContext& context() const { return ctx_; }
  bool is_exact_zero() const { return exact_zero_; }
  /// True when the valuation is exactly known (nonzero to working precision).
  bool known_nonzero() const { return !exact_zero_ && prec_ > 0; }
  /// True when only a lower bound on the valuation is known.
  bool is_bounded() const { return !exact_zero_ && prec_ == 0; }

  /// Exact valuation; throws unless known_nonzero().
  long valuation() const;
  /// Best known lower bound on the valuation; throws on exact zero.
  long valuation_lower_bound() const;
  /// Absolute precision val + prec; nullopt (= +infinity) for exact zero.
  std::optional<long> abs_precision() const;

  int rel_precision() const { return prec_; }
  const BigInt& unit() const { return unit_; }

  Padic operator-() const;
  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const { return *this + (-o); }
  Padic operator*(const Padic& o) const;
  Padic operator/(const Padic& o) const { return *this * o.inverse(); }

  /// Multiplicative inverse; requires known_nonzero().
  Padic inverse() const;
  /// Integer power by binary exponentiation; negative e inverts first.
  Padic pow(const BigInt& e) const;

  /// Equality to the joint precision: v_p(lhs - rhs) >= min abs precision.
  bool congruent(const Padic& o) const;

  /// Residue representative of p^{-val} * x mod p^digits (digits <= prec).
  BigInt unit_mod(int digits) const;

  /// {"p": .., "val": .., "unit": "..", "prec": ..} — all numerics as strings.
  std::string json() const;
  std::string str() const;

 private:
  Padic(const PadicContext& ctx, long val, int prec, BigInt unit,
        bool exact_zero)
      : ctx_(ctx), val_(val), prec_(prec), unit_(std::move(unit)),
        exact_zero_(exact_zero) {}

  PadicContext ctx_;
  long val_ = 0;
  int prec_ = 0;
  BigInt unit_;
  bool exact_zero_ = false;
};

/// Teichmuller lift: the unique (p-1)-th root of unity congruent to a mod p,
/// computed as the fixed point of x -> x^p mod p^N. Requires gcd(a, p) = 1.
Padic teichmuller(const BigInt& a, const PadicContext& ctx);

/// p-adic logarithm on the disc v_p(x - 1) >= 1.
Padic plog(const Padic& x);

/// p-adic exponential on the disc v_p(z) >= 1 (sufficient for odd p).
Padic pexp(const Padic& z);

/// x^s = exp(s log x) for v_p(x - 1) >= 1 and s in Z_p.
Padic ppow(const Padic& x, const Padic& s);

namespace detail {
/// Operations refuse to claim a value with fewer correct digits than this.
inline constexpr int kMinReportableDigits = 3;
/// Guard digits absorbing the valuation shifts of 1/k and 1/k! terms.
inline constexpr int kSeriesGuardDigits = 2;
}  // namespace detail

}  // namespace qeuler

#endif
