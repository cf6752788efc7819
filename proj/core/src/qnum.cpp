#include "qeuler/qnum.hpp"

namespace qeuler {

Rational q_bracket(long x, const Rational& q) {
  if (q == Rational(1L)) return Rational(BigInt(x));
  if (x < 0 && q.is_zero())
    throw std::domain_error("[x]_q undefined for x < 0 at q = 0");
  return (Rational(1L) - q.pow(x)) / (Rational(1L) - q);
}

Rational q_bracket_neg(long x, const Rational& q) {
  if (q == Rational(-1L)) throw std::domain_error("[x]_{-q} undefined at q = -1");
  return (Rational(1L) - (-q).pow(x)) / (Rational(1L) + q);
}

void q_euler_extend(QEulerTable& table, int n_max) {
  const Rational& q = table.q;
  if (q == Rational(-1L))
    throw std::domain_error("q-Euler recurrence undefined at q = -1");
  if (table.values.empty())
    table.values.push_back((Rational(1L) + q) / Rational(2L));
  table.values.reserve(static_cast<size_t>(n_max) + 1);
  std::vector<Rational> qpow{Rational(1L)};  // qpow[k] = q^k
  for (size_t k = 1; k < table.values.size(); ++k)
    qpow.push_back(qpow.back() * q);
  for (int n = table.max_index() + 1; n <= n_max; ++n) {
    qpow.push_back(qpow.back() * q);
    Rational s;
    for (int k = 0; k < n; ++k)
      s += Rational(binom(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(k))) *
           qpow[static_cast<size_t>(k)] * table.values[static_cast<size_t>(k)];
    table.values.push_back(-s / (Rational(1L) + qpow[static_cast<size_t>(n)]));
  }
}

QEulerTable q_euler_numbers(int n_max, const Rational& q) {
  QEulerTable table;
  table.q = q;
  q_euler_extend(table, n_max);
  return table;
}

std::vector<Rational> classical_euler_oracle(int n_max) {
  // 2 = (sum c_n t^n)(e^t + 1); E_n = c_n * n!
  std::vector<Rational> d;  // coefficients of e^t + 1
  BigInt fact(1);
  d.push_back(Rational(2L));
  for (int k = 1; k <= n_max; ++k) {
    fact *= k;
    d.push_back(Rational(BigInt(1), fact));
  }
  std::vector<Rational> c{Rational(1L)};
  for (int n = 1; n <= n_max; ++n) {
    Rational s;
    for (int j = 0; j < n; ++j)
      s += c[static_cast<size_t>(j)] * d[static_cast<size_t>(n - j)];
    c.push_back(-s / Rational(2L));
  }
  std::vector<Rational> result;
  fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    result.push_back(c[static_cast<size_t>(n)] * Rational(fact));
  }
  return result;
}

Rational q_euler_polynomial(int n, const Rational& q, long a, long d,
                            const QEulerTable& table) {
  if (a < 0 || d <= 0) throw std::domain_error("require a >= 0, d >= 1");
  Rational qd = q.pow(d);
  if (table.q != qd || table.max_index() < n)
    throw std::invalid_argument("table does not cover base q^d up to n");
  // B = [a/d]_{q^d}; (q^d)^{(a/d) k} is the integer power q^{ak}.
  Rational b = (q == Rational(1L))
                   ? Rational(a, d)
                   : (Rational(1L) - q.pow(a)) / (Rational(1L) - qd);
  Rational qa = q.pow(a);
  Rational result, qak(1L);
  for (int k = 0; k <= n; ++k) {
    result += Rational(binom(static_cast<unsigned long>(n),
                             static_cast<unsigned long>(k))) *
              b.pow(n - k) * qak * table.at(k);
    qak *= qa;
  }
  return result;
}

Rational q_euler_polynomial(int n, const Rational& q, long a, long d) {
  QEulerTable table = q_euler_numbers(n, q.pow(d));
  return q_euler_polynomial(n, q, a, d, table);
}

void require_in_disc(const Rational& q, const PadicContext& ctx) {
  bool ok = !q.is_zero() && q.den() % ctx.p != 0;
  if (ok) {
    Rational qm1 = q - Rational(1L);
    ok = qm1.is_zero() || qm1.vp(ctx.p) >= 1;
  }
  if (!ok) throw std::domain_error("q not in p-adic convergence disc");
}

Padic t_sum(int n, int k, const Rational& q, const PadicContext& ctx) {
  require_in_disc(q, ctx);
  if (k < 1) throw std::domain_error("t_sum requires level k >= 1");
  BigInt m = ctx.pow_p(ctx.precision);
  Padic qem = Padic::from_rational(q, ctx);
  BigInt qr = qem.unit_mod(ctx.precision);  // v_p(q) = 0 on the disc
  BigInt en(n);
  BigInt terms;
  mpz_ui_pow_ui(terms.get_mpz_t(), ctx.p, static_cast<unsigned long>(k));
  BigInt bracket(0), acc(0), tn;
  bool negative = false;
  for (BigInt x(0); x < terms; ++x) {
    mpz_powm(tn.get_mpz_t(), bracket.get_mpz_t(), en.get_mpz_t(),
             m.get_mpz_t());
    if (negative)
      acc -= tn;
    else
      acc += tn;
    bracket = (1 + qr * bracket) % m;
    negative = !negative;
  }
  return Padic::from_residue(ctx, acc % m);
}

Padic fermionic_integral(const std::function<Padic(long)>& f, int levels,
                         const Rational& q, const PadicContext& ctx) {
  require_in_disc(q, ctx);
  if (levels < 1) throw std::domain_error("levels must be >= 1");
  long terms = 1;
  for (int i = 0; i < levels; ++i) terms *= static_cast<long>(ctx.p);
  // [p^L]_{-q} = (1 + q^{p^L})/(1 + q) since p^L is odd
  Rational norm = (Rational(1L) + q.pow(terms)) / (Rational(1L) + q);
  Padic w = Padic::one(ctx);                       // (-q)^x
  Padic minus_q = -Padic::from_rational(q, ctx);
  Padic acc = Padic::zero(ctx);
  for (long x = 0; x < terms; ++x) {
    acc = acc + f(x) * w;
    w = w * minus_q;
  }
  return acc / Padic::from_rational(norm, ctx);
}

}  // namespace qeuler
