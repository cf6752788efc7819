#include "qeuler/lfunc.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qeuler {

namespace {

std::mutex g_table_mutex;
std::map<std::string, std::shared_ptr<const QEulerTable>> g_tables;

Rational two_over_2q(const Rational& q) {
  return Rational(2L) / (Rational(1L) + q);
}

}  // namespace

std::shared_ptr<const QEulerTable> cached_q_euler_table(const Rational& q,
                                                        int n_max) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto& slot = g_tables[q.str()];
  if (!slot || slot->max_index() < n_max) {
    auto table = std::make_shared<QEulerTable>(
        slot ? *slot : QEulerTable{q, {}});
    q_euler_extend(*table, n_max);
    slot = std::move(table);
  }
  return slot;
}

Rational gen_q_euler(int n, const DirichletCharacter& chi, const Rational& q) {
  if (q == Rational(-1L)) throw std::domain_error("q = -1 is excluded");
  long d = static_cast<long>(chi.modulus());
  auto table = cached_q_euler_table(q.pow(d), n);
  Rational sum;
  for (long a = 0; a < d; ++a) {
    Rational cv = chi(a).as_rational();
    if (cv.is_zero()) continue;
    Rational term = cv * q_euler_polynomial(n, q, a, d, *table);
    sum += (a % 2 == 0) ? term : -term;
  }
  Rational prefactor = q_bracket(d, q).pow(n) * (Rational(1L) + q) /
                       (Rational(1L) + q.pow(d));
  return prefactor * sum;
}

Padic gen_q_euler_padic(int n, const DirichletCharacter& chi,
                        const Rational& q, const PadicContext& ctx) {
  if (q == Rational(-1L)) throw std::domain_error("q = -1 is excluded");
  long d = static_cast<long>(chi.modulus());
  MaterializedCharacter mat(chi, ctx);
  auto table = cached_q_euler_table(q.pow(d), n);
  Padic sum = Padic::zero(ctx);
  for (long a = 0; a < d; ++a) {
    Padic cv = mat(a);
    if (cv.is_exact_zero()) continue;
    Padic term =
        cv * Padic::from_rational(q_euler_polynomial(n, q, a, d, *table), ctx);
    sum = (a % 2 == 0) ? sum + term : sum - term;
  }
  Rational prefactor = q_bracket(d, q).pow(n) * (Rational(1L) + q) /
                       (Rational(1L) + q.pow(d));
  return Padic::from_rational(prefactor, ctx) * sum;
}

Padic gen_q_euler_riemann(int n, const DirichletCharacter& chi,
                          const Rational& q, const PadicContext& ctx,
                          int level) {
  require_in_disc(q, ctx);
  if (level < 1) throw std::domain_error("level must be >= 1");
  MaterializedCharacter mat(chi, ctx);
  const auto& chi_res = mat.residue_table();
  unsigned long d = chi.modulus();
  BigInt m = ctx.pow_p(ctx.precision);
  BigInt qr = Padic::from_rational(q, ctx).unit_mod(ctx.precision);
  BigInt terms(static_cast<long>(d));
  for (int i = 0; i < level; ++i) terms *= static_cast<long>(ctx.p);
  BigInt bracket(0), acc(0), tn;
  BigInt en(n);
  bool negative = false;
  for (BigInt x(0); x < terms; ++x) {
    const BigInt& cv = chi_res[mpz_fdiv_ui(x.get_mpz_t(), d)];
    if (sgn(cv) != 0) {
      mpz_powm(tn.get_mpz_t(), bracket.get_mpz_t(), en.get_mpz_t(),
               m.get_mpz_t());
      tn *= cv;
      if (negative)
        acc -= tn;
      else
        acc += tn;
    }
    bracket = (1 + qr * bracket) % m;
    negative = !negative;
  }
  return Padic::from_residue(ctx, acc % m);
}

Padic angle(const BigInt& x, const Rational& q, const PadicContext& ctx) {
  require_in_disc(q, ctx);
  if (x % ctx.p == 0) throw std::domain_error("<x> requires gcd(x, p) = 1");
  BigInt m = ctx.pow_p(ctx.precision);
  BigInt b;
  if (q == Rational(1L)) {
    b = x % m;
  } else {
    BigInt qr = Padic::from_rational(q, ctx).unit_mod(ctx.precision);
    BigInt qx;
    mpz_powm(qx.get_mpz_t(), qr.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    Padic num = Padic::from_residue(ctx, 1 - qx);
    Padic den = Padic::from_rational(Rational(1L) - q, ctx);
    return (num / den) * teichmuller(x, ctx).inverse();
  }
  return Padic::from_residue(ctx, b) * teichmuller(x, ctx).inverse();
}

LValueResult l_value(const LSeriesQuery& query) {
  const PadicContext& ctx = query.ctx;
  require_in_disc(query.q, ctx);
  MaterializedCharacter mat(query.chi, ctx);
  const auto& chi_res = mat.residue_table();
  unsigned long d = query.chi.modulus();
  unsigned long dbar = std::lcm(d, ctx.p);
  BigInt m = ctx.pow_p(ctx.precision);
  BigInt qr = Padic::from_rational(query.q, ctx).unit_mod(ctx.precision);

  // omega(r)^{-1} for the unit residues mod p
  std::vector<BigInt> teich_inv(ctx.p, BigInt(0));
  for (unsigned long r = 1; r < ctx.p; ++r)
    teich_inv[r] = teichmuller(BigInt(static_cast<long>(r)), ctx)
                       .inverse()
                       .unit_mod(ctx.precision);

  const bool integer_s = std::holds_alternative<long>(query.s);
  BigInt exponent = integer_s ? BigInt(-std::get<long>(query.s)) : BigInt(0);
  Padic s_padic = integer_s ? Padic::zero(ctx) : std::get<Padic>(query.s);

  BigInt acc(0);                    // integer-exponent fast path
  Padic acc_p = Padic::zero(ctx);   // generic Z_p exponent path
  BigInt bracket(0), base, t;
  long x = 0;

  LValueResult result{Padic::zero(ctx), 0, 0, false};
  BigInt prev(0);
  Padic prev_p = Padic::zero(ctx);
  long block = static_cast<long>(dbar);
  for (int rho = 1; rho <= query.rho_max; ++rho) {
    block *= static_cast<long>(ctx.p);
    for (; x < block; ++x) {
      if (x % static_cast<long>(ctx.p) != 0) {
        const BigInt& cv = chi_res[static_cast<unsigned long>(x) % d];
        if (sgn(cv) != 0) {
          base = bracket * teich_inv[static_cast<unsigned long>(x) % ctx.p] % m;
          if (integer_s) {
            mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
                     m.get_mpz_t());
            t *= cv;
            if (x % 2 == 0)
              acc += t;
            else
              acc -= t;
          } else {
            Padic term = mat(BigInt(x)) *
                         ppow(Padic::from_residue(ctx, base), -s_padic);
            acc_p = (x % 2 == 0) ? acc_p + term : acc_p - term;
          }
        }
      }
      bracket = (1 + qr * bracket) % m;
    }
    result.rho_used = rho;
    if (rho >= 2) {
      long cert;
      if (integer_s) {
        BigInt diff = (acc - prev) % m;
        if (sgn(diff) < 0) diff += m;
        if (sgn(diff) == 0) {
          cert = ctx.precision;
        } else {
          BigInt stripped;
          cert = static_cast<long>(mpz_remove(stripped.get_mpz_t(),
                                              diff.get_mpz_t(),
                                              BigInt(ctx.p).get_mpz_t()));
        }
      } else {
        Padic diff = acc_p - prev_p;
        cert = diff.is_exact_zero()
                   ? static_cast<long>(ctx.precision)
                   : (diff.known_nonzero() ? diff.valuation()
                                           : diff.valuation_lower_bound());
      }
      result.certified_abs_precision = cert;
      if (cert >= query.target_abs_precision) {
        result.certified = true;
        break;
      }
    }
    prev = acc;
    prev_p = acc_p;
  }
  result.value = integer_s ? Padic::from_residue(ctx, acc % m) : acc_p;
  return result;
}

Padic interpolation_rhs(int k, const DirichletCharacter& chi,
                        const Rational& q, const PadicContext& ctx) {
  require_in_disc(q, ctx);
  Rational qp = q.pow(static_cast<long>(ctx.p));
  if (chi.order() <= 2) {
    Rational chi_p = chi(BigInt(static_cast<long>(ctx.p))).as_rational();
    Rational rhs = two_over_2q(q) * gen_q_euler(k, chi, q) -
                   chi_p * q_bracket(static_cast<long>(ctx.p), q).pow(k) *
                       two_over_2q(qp) * gen_q_euler(k, chi, qp);
    return Padic::from_rational(rhs, ctx);
  }
  MaterializedCharacter mat(chi, ctx);
  Padic term1 = Padic::from_rational(two_over_2q(q), ctx) *
                gen_q_euler_padic(k, chi, q, ctx);
  Padic term2 =
      mat(BigInt(static_cast<long>(ctx.p))) *
      Padic::from_rational(
          q_bracket(static_cast<long>(ctx.p), q).pow(k) * two_over_2q(qp),
          ctx) *
      gen_q_euler_padic(k, chi, qp, ctx);
  return term1 - term2;
}

}  // namespace qeuler
