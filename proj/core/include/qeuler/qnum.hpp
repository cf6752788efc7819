#ifndef QEULER_QNUM_HPP
#define QEULER_QNUM_HPP

#include <functional>
#include <vector>

#include "qeuler/padic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/// [x]_q = (1 - q^x)/(1 - q), continuously extended to x at q = 1.
/// Negative x requires q != 0.
Rational q_bracket(long x, const Rational& q);

/// [x]_{-q} = (1 - (-q)^x)/(1 + q). Requires q != -1.
Rational q_bracket_neg(long x, const Rational& q);

/// The q-Euler numbers E_{0,q} .. E_{n,q} at a fixed rational q,
/// from the recurrence
///   E_{0,q} = (1+q)/2,   sum_{k<=n} C(n,k) q^k E_{k,q} + E_{n,q} = 0  (n >= 1),
/// solved as E_{n,q} = -(sum_{k<n} C(n,k) q^k E_{k,q}) / (1 + q^n).
struct QEulerTable {
  Rational q;
  std::vector<Rational> values;  // values[n] = E_{n,q}

  const Rational& at(int n) const { return values.at(static_cast<size_t>(n)); }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

/// Requires q != -1.
QEulerTable q_euler_numbers(int n_max, const Rational& q);

/// Grows an existing table in place up to index n_max (no-op if covered).
void q_euler_extend(QEulerTable& table, int n_max);

/// Classical Euler numbers E_0..E_n by exact truncated power-series division
/// of 2 by (e^t + 1). Independent of the recurrence path: this is the oracle
/// the q = 1 table is checked against.
std::vector<Rational> classical_euler_oracle(int n_max);

/// E_{n,q^d}(a/d) = sum_k C(n,k) B^{n-k} q^{ak} E_{k,q^d} with
/// B = [a/d]_{q^d} = (1 - q^a)/(1 - q^d)  (B = a/d when q = 1).
Rational q_euler_polynomial(int n, const Rational& q, long a, long d);

/// Same, against a precomputed table for base q^d (table.q must equal q^d).
Rational q_euler_polynomial(int n, const Rational& q, long a, long d,
                            const QEulerTable& table);

/// Checks v_p(q - 1) >= 1 and that q's denominator is a p-adic unit;
/// throws std::domain_error("q not in p-adic convergence disc") otherwise.
void require_in_disc(const Rational& q, const PadicContext& ctx);

/// T_n(k) = sum_{x=0}^{p^k - 1} (-1)^x [x]_q^n, accumulated in residues
/// mod p^N using the incremental recursion [x+1]_q = 1 + q [x]_q.
/// Requires the disc condition on q.
Padic t_sum(int n, int k, const Rational& q, const PadicContext& ctx);

/// Finite-level approximation to the fermionic p-adic q-integral:
///   (1/[p^levels]_{-q}) * sum_{x=0}^{p^levels - 1} f(x) (-q)^x.
/// The quality of the approximation is certified only by stability checks
/// at increasing levels; this routine evaluates a single level.
Padic fermionic_integral(const std::function<Padic(long)>& f, int levels,
                         const Rational& q, const PadicContext& ctx);

}  // namespace qeuler

#endif
