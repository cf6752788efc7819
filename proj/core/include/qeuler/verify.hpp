#ifndef QEULER_VERIFY_HPP
#define QEULER_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/lfunc.hpp"

namespace qeuler {

enum class ClaimId {
  THM1,
  COR2,
  COR3,
  EQ13,
  EQ16,
  EQ18,
  EQ4,
  WITT,
  KUMMER,
  EQ25,
  EQ26,
  EQ26_CLASSICAL,
};

enum class Verdict { PASS, FAIL, INSUFFICIENT_PRECISION, ERROR };

std::string to_string(ClaimId c);
std::string to_string(Verdict v);

/// One verified/falsified congruence claim. A PASS is only ever issued when
/// the achieved valuation meets the requirement AND the precision actually
/// used exceeds it; a difference that merely vanished to working precision
/// at or below the requirement yields INSUFFICIENT_PRECISION instead.
struct CongruenceReport {
  ClaimId claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  long required_val = 0;
  std::optional<long> achieved_val;     // nullopt = +infinity (exact zero)
  bool achieved_is_lower_bound = false; // true when only v >= achieved known
  Verdict verdict = Verdict::ERROR;
  long precision_used = 0;              // kExactPrecision for exact routes
  std::string note;

  static constexpr long kExactPrecision = std::numeric_limits<long>::max();

  std::string json() const;
  std::string csv_row() const;
  static std::string csv_header();
  std::string sort_key() const;
};

/// Theorem: sum_{j<p} (-1)^j [j]_q^n == (2/[2]_q) E_{n,q}  (mod [p]_q).
/// Both sides exact rationals; required valuation v_p([p]_q) is computed,
/// not assumed.
CongruenceReport check_theorem1(unsigned long p, const Rational& q, int n,
                                const PadicContext& ctx);

/// (2/[2]_q) E_{n,q} + sum_{j<p} (-1)^{j+1} [j]_q^n in Z_p.
CongruenceReport check_corollary2(unsigned long p, const Rational& q, int n,
                                  const PadicContext& ctx);

/// Von Staudt-Clausen type integrality: (2/[2]_q) E_{n,q} in Z_p.
CongruenceReport check_integrality(unsigned long p, const Rational& q, int n,
                                   const PadicContext& ctx);

/// v_p(sum_{j<p} (-1)^j [j]_q) >= 0.
CongruenceReport check_eq13(unsigned long p, const Rational& q,
                            const PadicContext& ctx);

/// Two stability sub-claims: T_n(k+1) == T_n(k) (mod [p^k]_q), and the
/// level-(k+1) full sum == the p-term sum (mod [p]_q).
std::pair<CongruenceReport, CongruenceReport> check_stability(
    unsigned long p, const Rational& q, int n, int k, const PadicContext& ctx);

/// Witt-type formula: v_p(T_n(k) - (2/[2]_q) E_{n,q}) >= k.
CongruenceReport check_witt(unsigned long p, const Rational& q, int n, int k,
                            const PadicContext& ctx);

/// Kummer congruence for k == k' (mod p^n (p-1)); a violated congruence
/// precondition is a usage error (std::invalid_argument), never a FAIL.
CongruenceReport check_kummer(unsigned long p, const Rational& q,
                              const DirichletCharacter& chi, int k, int kprime,
                              int n, const PadicContext& ctx);

/// (2/[2]_q) E_{n,chi,q} == sum_{a<p} chi(a)(-1)^a [a]_q^n (mod [p]_q) for
/// chi primitive of conductor p. At q = 1 checks the classical corollary
/// E_{n,chi} == sum chi(a)(-1)^a a^n (mod p) instead.
CongruenceReport check_eq26(unsigned long p, const Rational& q,
                            const DirichletCharacter& chi, int n,
                            const PadicContext& ctx);

/// Functional-equation residual q I(f_1) + I(f) - (1+q) f(0) for
/// f(x) = [x]_q^m at a finite level; required valuation = level.
CongruenceReport check_eq4(unsigned long p, const Rational& q, int m,
                           int level, const PadicContext& ctx);

/// Interpolation: l_value(-k, chi omega^k) against interpolation_rhs(k, chi);
/// required valuation = certified precision - 1.
CongruenceReport check_interpolation(unsigned long p, const Rational& q,
                                     const DirichletCharacter& chi, int k,
                                     const PadicContext& ctx,
                                     int target_abs_precision = 4,
                                     int rho_max = 8);

/// One grid cell; only the fields a claim consumes are read.
struct GridPoint {
  ClaimId claim;
  unsigned long p = 3;
  Rational q;
  int n = 0;
  int k = 1;
  int kprime = -1;  // kummer: defaults to k + p^n (p-1)
  int level = 1;
  std::string chi = "1:0";  // "d:index"
  int target_abs_precision = 4;
  int rho_max = 8;
};

/// Runs every point, capturing per-point errors as ERROR reports, and
/// returns the reports sorted by (claim, parameters) independent of
/// evaluation order.
std::vector<CongruenceReport> run_grid(const std::vector<GridPoint>& grid,
                                       int precision = 40);

DirichletCharacter parse_character(const std::string& name);

}  // namespace qeuler

#endif
