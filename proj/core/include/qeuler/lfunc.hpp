#ifndef QEULER_LFUNC_HPP
#define QEULER_LFUNC_HPP

#include <memory>
#include <variant>

#include "qeuler/chars.hpp"
#include "qeuler/qnum.hpp"

namespace qeuler {

/// Generalized q-Euler number attached to chi, closed form:
///   E_{n,chi,q} = [d]_q^n ([2]_q/[2]_{q^d}) sum_{a<d} chi(a)(-1)^a E_{n,q^d}(a/d).
/// Exact-rational route; requires chi rational-valued (order <= 2).
Rational gen_q_euler(int n, const DirichletCharacter& chi, const Rational& q);

/// Same closed form with character values materialized in Z_p
/// (order(chi) | p - 1).
Padic gen_q_euler_padic(int n, const DirichletCharacter& chi,
                        const Rational& q, const PadicContext& ctx);

/// Riemann-sum route: sum_{x=0}^{d p^level - 1} chi(x)(-1)^x [x]_q^n in
/// residues mod p^N. Converges to (2/[2]_q) E_{n,chi,q}; the finite sum is
/// an exact object, so the result carries full working precision and the
/// approximation quality (>= level digits) is asserted by the verifier.
Padic gen_q_euler_riemann(int n, const DirichletCharacter& chi,
                          const Rational& q, const PadicContext& ctx,
                          int level);

/// <x> = [x]_q / omega(x), the principal-unit projection (== 1 mod p).
/// Requires gcd(x, p) = 1 and the disc condition on q.
Padic angle(const BigInt& x, const Rational& q, const PadicContext& ctx);

struct LSeriesQuery {
  std::variant<long, Padic> s;
  DirichletCharacter chi;
  Rational q;
  PadicContext ctx;
  int target_abs_precision = 4;
  int rho_max = 8;
};

struct LValueResult {
  Padic value;
  int rho_used;
  long certified_abs_precision;  // v_p of the last consecutive-level agreement
  bool certified;                // reached the target before rho_max
};

/// L_{p,q,E}(s, chi) = lim_rho sum_{1<=x<=dbar p^rho, (x,p)=1}
/// chi(x)(-1)^x <x>^{-s}, with empirical convergence certification:
/// partial sums at increasing rho until two consecutive levels agree to the
/// target absolute precision. Never throws on non-convergence; the result
/// is returned with certified = false.
LValueResult l_value(const LSeriesQuery& query);

/// Right side of the interpolation identity at s = -k:
///   (2/[2]_q) E_{k,chi,q} - chi(p) [p]_q^k (2/[2]_{q^p}) E_{k,chi,q^p}.
Padic interpolation_rhs(int k, const DirichletCharacter& chi,
                        const Rational& q, const PadicContext& ctx);

/// Process-wide memo of q-Euler tables keyed by base q; grids reuse tables
/// across points, which is what keeps the large-index Kummer runs cheap.
/// Extension replaces the cached snapshot, so held pointers stay valid.
std::shared_ptr<const QEulerTable> cached_q_euler_table(const Rational& q,
                                                        int n_max);

}  // namespace qeuler

#endif
