#include "qeuler/padic.hpp"

#include <cassert>

namespace qeuler {

namespace {

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  return mpz_probab_prime_p(BigInt(p).get_mpz_t(), 40) != 0;
}

void require_same_context(const PadicContext& a, const PadicContext& b) {
  if (!(a == b))
    throw std::invalid_argument("p-adic operands from different contexts");
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("not invertible modulo p^N");
  return r;
}

int min_digits(const PadicContext& ctx) {
  return std::min(detail::kMinReportableDigits, ctx.precision);
}

// v_p(k!) = (k - digit_sum_p(k)) / (p - 1)
long factorial_valuation(long k, unsigned long p) {
  long s = 0, x = k;
  while (x > 0) {
    s += x % static_cast<long>(p);
    x /= static_cast<long>(p);
  }
  return (k - s) / static_cast<long>(p - 1);
}

long floor_log_p(long k, unsigned long p) {
  long e = 0;
  while (k >= static_cast<long>(p)) {
    k /= static_cast<long>(p);
    ++e;
  }
  return e;
}

}  // namespace

PadicContext::PadicContext(unsigned long p_, int precision_)
    : p(p_), precision(precision_) {
  if (!is_odd_prime(p))
    throw std::domain_error("p must be an odd prime >= 3");
  if (precision < 2)
    throw std::domain_error("working precision must be at least 2 digits");
}

BigInt PadicContext::pow_p(long e) const {
  assert(e >= 0);
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

Padic Padic::zero(const PadicContext& ctx) {
  return Padic(ctx, 0, 0, BigInt(0), true);
}

Padic Padic::one(const PadicContext& ctx) {
  return Padic(ctx, 0, ctx.precision, BigInt(1), false);
}

Padic Padic::from_residue(const PadicContext& ctx, const BigInt& residue,
                          long val, int prec) {
  if (prec < 0) prec = ctx.precision;
  if (prec == 0) return Padic(ctx, val, 0, BigInt(0), false);
  BigInt u = residue % ctx.pow_p(prec);
  if (sgn(u) < 0) u += ctx.pow_p(prec);
  if (sgn(u) == 0) return Padic(ctx, val + prec, 0, BigInt(0), false);
  BigInt stripped;
  long v = static_cast<long>(mpz_remove(stripped.get_mpz_t(), u.get_mpz_t(),
                                        BigInt(ctx.p).get_mpz_t()));
  if (v >= prec) return Padic(ctx, val + prec, 0, BigInt(0), false);
  return Padic(ctx, val + v, prec - static_cast<int>(v),
               stripped % ctx.pow_p(prec - v), false);
}

Padic Padic::from_rational(const Rational& r, const PadicContext& ctx) {
  if (r.is_zero()) return zero(ctx);
  BigInt p(ctx.p), nu, du;
  long vn = static_cast<long>(
      mpz_remove(nu.get_mpz_t(), r.num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(du.get_mpz_t(), r.den().get_mpz_t(), p.get_mpz_t()));
  BigInt m = ctx.pow_p(ctx.precision);
  BigInt unit = (nu % m) * mod_inverse(du, m) % m;
  if (sgn(unit) < 0) unit += m;
  return Padic(ctx, vn - vd, ctx.precision, unit, false);
}

long Padic::valuation() const {
  if (!known_nonzero())
    throw std::domain_error("valuation not exactly known at this precision");
  return val_;
}

long Padic::valuation_lower_bound() const {
  if (exact_zero_)
    throw std::domain_error("valuation of exact zero is +infinity");
  return val_;
}

std::optional<long> Padic::abs_precision() const {
  if (exact_zero_) return std::nullopt;
  return val_ + prec_;
}

Padic Padic::operator-() const {
  if (exact_zero_ || prec_ == 0) return *this;
  return Padic(ctx_, val_, prec_, ctx_.pow_p(prec_) - unit_, false);
}

Padic Padic::operator+(const Padic& o) const {
  require_same_context(ctx_, o.ctx_);
  if (exact_zero_) return o;
  if (o.exact_zero_) return *this;
  long abs_a = val_ + prec_, abs_b = o.val_ + o.prec_;
  long abs = std::min(abs_a, abs_b);
  long v = std::min(val_, o.val_);
  long rel = abs - v;
  if (rel <= 0) return Padic(ctx_, abs, 0, BigInt(0), false);
  BigInt m = ctx_.pow_p(rel);
  BigInt u(0);
  if (prec_ > 0) u += unit_ * ctx_.pow_p(val_ - v);
  if (o.prec_ > 0) u += o.unit_ * ctx_.pow_p(o.val_ - v);
  return from_residue(ctx_, u % m, v, static_cast<int>(rel));
}

Padic Padic::operator*(const Padic& o) const {
  require_same_context(ctx_, o.ctx_);
  if (exact_zero_ || o.exact_zero_) return zero(ctx_);
  if (prec_ == 0 || o.prec_ == 0)
    return Padic(ctx_, val_ + o.val_, 0, BigInt(0), false);
  int prec = std::min(prec_, o.prec_);
  return Padic(ctx_, val_ + o.val_, prec,
               unit_ * o.unit_ % ctx_.pow_p(prec), false);
}

Padic Padic::inverse() const {
  if (!known_nonzero())
    throw std::domain_error("cannot invert a value not known to be nonzero");
  if (prec_ < min_digits(ctx_))
    throw PrecisionError("insufficient precision for inversion");
  return Padic(ctx_, -val_, prec_, mod_inverse(unit_, ctx_.pow_p(prec_)),
               false);
}

Padic Padic::pow(const BigInt& e) const {
  if (sgn(e) == 0) return one(ctx_);
  if (sgn(e) < 0) return inverse().pow(-e);
  if (!e.fits_slong_p()) throw std::domain_error("exponent too large");
  long el = e.get_si();
  if (exact_zero_) return *this;
  if (prec_ == 0) return Padic(ctx_, val_ * el, 0, BigInt(0), false);
  BigInt u;
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), e.get_mpz_t(),
           ctx_.pow_p(prec_).get_mpz_t());
  return Padic(ctx_, val_ * el, prec_, u, false);
}

bool Padic::congruent(const Padic& o) const {
  return !(*this - o).known_nonzero();
}

BigInt Padic::unit_mod(int digits) const {
  if (digits > prec_)
    throw std::domain_error("requested more digits than are known");
  return unit_ % ctx_.pow_p(digits);
}

std::string Padic::json() const {
  std::string val = exact_zero_ ? std::string("inf") : std::to_string(val_);
  return "{\"p\": \"" + std::to_string(ctx_.p) + "\", \"val\": \"" + val +
         "\", \"unit\": \"" + unit_.get_str() + "\", \"prec\": \"" +
         std::to_string(prec_) + "\"}";
}

std::string Padic::str() const {
  if (exact_zero_) return "0";
  if (prec_ == 0)
    return "O(" + std::to_string(ctx_.p) + "^" + std::to_string(val_) + ")";
  return unit_.get_str() + "*" + std::to_string(ctx_.p) + "^" +
         std::to_string(val_) + " + O(" + std::to_string(ctx_.p) + "^" +
         std::to_string(val_ + prec_) + ")";
}

Padic teichmuller(const BigInt& a, const PadicContext& ctx) {
  if (a % ctx.p == 0)
    throw std::domain_error("teichmuller lift requires gcd(a, p) = 1");
  BigInt m = ctx.pow_p(ctx.precision);
  BigInt x = a % m;
  if (sgn(x) < 0) x += m;
  BigInt pe(ctx.p);
  for (int i = 0; i < ctx.precision; ++i) {
    BigInt next;
    mpz_powm(next.get_mpz_t(), x.get_mpz_t(), pe.get_mpz_t(), m.get_mpz_t());
    if (next == x) break;
    x = next;
  }
  return Padic::from_residue(ctx, x, 0, ctx.precision);
}

Padic plog(const Padic& x) {
  const PadicContext& ctx = x.context();
  Padic t = x - Padic::one(ctx);
  if (t.is_exact_zero()) return Padic::zero(ctx);
  if (t.is_bounded())
    return Padic::from_residue(ctx, 0, t.valuation_lower_bound(), 0);
  long vt = t.valuation();
  if (vt < 1)
    throw std::domain_error("outside disc of convergence of log_p");
  long target = *t.abs_precision() + detail::kSeriesGuardDigits;
  Padic sum = Padic::zero(ctx);
  Padic tk = Padic::one(ctx);
  long k = 1;
  while (true) {
    long term_val_floor = k * vt - floor_log_p(k, ctx.p);
    if (term_val_floor > target && k > 1) break;
    tk = tk * t;
    Padic term = tk / Padic::from_rational(Rational(k), ctx);
    sum = (k % 2 == 1) ? sum + term : sum - term;
    ++k;
  }
  if (sum.known_nonzero() && sum.rel_precision() < min_digits(ctx))
    throw PrecisionError("insufficient precision in log_p");
  return sum;
}

Padic pexp(const Padic& z) {
  const PadicContext& ctx = z.context();
  if (z.is_exact_zero()) return Padic::one(ctx);
  if (z.is_bounded())
    return Padic::one(ctx) +
           Padic::from_residue(ctx, 0, z.valuation_lower_bound(), 0);
  long vz = z.valuation();
  if (vz < 1)  // 1/(p-1) < 1 for odd p, so v >= 1 suffices
    throw std::domain_error("outside disc of convergence of exp_p");
  long target = *z.abs_precision() + detail::kSeriesGuardDigits;
  Padic sum = Padic::one(ctx);
  Padic term = Padic::one(ctx);
  long k = 1;
  while (k * vz - factorial_valuation(k, ctx.p) <= target) {
    term = term * z / Padic::from_rational(Rational(k), ctx);
    sum = sum + term;
    ++k;
  }
  if (sum.known_nonzero() && sum.rel_precision() < min_digits(ctx))
    throw PrecisionError("insufficient precision in exp_p");
  return sum;
}

Padic ppow(const Padic& x, const Padic& s) {
  if (s.is_exact_zero()) return Padic::one(x.context());
  if (s.valuation_lower_bound() < 0)
    throw std::domain_error("exponent must lie in Z_p");
  return pexp(s * plog(x));
}

}  // namespace qeuler
