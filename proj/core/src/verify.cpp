#include "qeuler/verify.hpp"

#include <algorithm>
#include <sstream>

namespace qeuler {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Rational two_over_2q(const Rational& q) {
  return Rational(2L) / (Rational(1L) + q);
}

Rational alternating_bracket_sum(unsigned long p, const Rational& q, int n) {
  Rational s;
  for (long j = 0; j < static_cast<long>(p); ++j) {
    Rational term = q_bracket(j, q).pow(n);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

CongruenceReport from_exact(ClaimId claim, Params params, const Rational& lhs,
                            const Rational& rhs, long required,
                            unsigned long p) {
  CongruenceReport r;
  r.claim = claim;
  r.params = std::move(params);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.required_val = required;
  r.precision_used = CongruenceReport::kExactPrecision;
  Rational diff = lhs - rhs;
  if (diff.is_zero()) {
    r.achieved_val = std::nullopt;
    r.verdict = Verdict::PASS;
  } else {
    long v = diff.vp(p);
    r.achieved_val = v;
    r.verdict = v >= required ? Verdict::PASS : Verdict::FAIL;
  }
  return r;
}

CongruenceReport from_padic(ClaimId claim, Params params, const Padic& lhs,
                            const Padic& rhs, long required) {
  CongruenceReport r;
  r.claim = claim;
  r.params = std::move(params);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.required_val = required;
  Padic diff = lhs - rhs;
  if (diff.is_exact_zero()) {
    r.achieved_val = std::nullopt;
    r.precision_used = lhs.context().precision;
    r.verdict = Verdict::PASS;
    return r;
  }
  long abs_prec = *diff.abs_precision();
  r.precision_used = abs_prec;
  if (diff.known_nonzero()) {
    r.achieved_val = diff.valuation();
    r.verdict = *r.achieved_val >= required ? Verdict::PASS : Verdict::FAIL;
  } else {
    // cancelled to full precision: only v_p(diff) >= abs_prec is known
    r.achieved_val = abs_prec;
    r.achieved_is_lower_bound = true;
    r.verdict = abs_prec > required ? Verdict::PASS
                                    : Verdict::INSUFFICIENT_PRECISION;
  }
  return r;
}

CongruenceReport error_report(ClaimId claim, Params params,
                              const std::string& what) {
  CongruenceReport r;
  r.claim = claim;
  r.params = std::move(params);
  r.verdict = Verdict::ERROR;
  r.note = what;
  return r;
}

std::string fmt(long v) { return std::to_string(v); }

}  // namespace

std::string to_string(ClaimId c) {
  switch (c) {
    case ClaimId::THM1: return "THM1";
    case ClaimId::COR2: return "COR2";
    case ClaimId::COR3: return "COR3";
    case ClaimId::EQ13: return "EQ13";
    case ClaimId::EQ16: return "EQ16";
    case ClaimId::EQ18: return "EQ18";
    case ClaimId::EQ4: return "EQ4";
    case ClaimId::WITT: return "WITT";
    case ClaimId::KUMMER: return "KUMMER";
    case ClaimId::EQ25: return "EQ25";
    case ClaimId::EQ26: return "EQ26";
    case ClaimId::EQ26_CLASSICAL: return "EQ26_CLASSICAL";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INSUFFICIENT_PRECISION: return "INSUFFICIENT_PRECISION";
    case Verdict::ERROR: return "ERROR";
  }
  return "?";
}

std::string CongruenceReport::json() const {
  std::ostringstream os;
  os << "{\"claim\": \"" << to_string(claim) << "\", \"params\": {";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ", ";
    os << "\"" << params[i].first << "\": \"" << params[i].second << "\"";
  }
  os << "}, \"lhs\": \"" << lhs << "\", \"rhs\": \"" << rhs
     << "\", \"required_val\": \"" << required_val << "\", \"achieved_val\": \"";
  if (!achieved_val)
    os << "inf";
  else
    os << (achieved_is_lower_bound ? ">=" : "") << *achieved_val;
  os << "\", \"verdict\": \"" << to_string(verdict) << "\", \"prec\": \"";
  if (precision_used == kExactPrecision)
    os << "exact";
  else
    os << precision_used;
  os << "\"";
  if (!note.empty()) os << ", \"note\": \"" << note << "\"";
  os << "}";
  return os.str();
}

std::string CongruenceReport::csv_header() {
  return "claim,params,lhs,rhs,required_val,achieved_val,verdict,prec";
}

std::string CongruenceReport::csv_row() const {
  std::ostringstream os;
  os << to_string(claim) << ",";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ";";
    os << params[i].first << "=" << params[i].second;
  }
  os << "," << lhs << "," << rhs << "," << required_val << ",";
  if (!achieved_val)
    os << "inf";
  else
    os << (achieved_is_lower_bound ? ">=" : "") << *achieved_val;
  os << "," << to_string(verdict) << ",";
  if (precision_used == kExactPrecision)
    os << "exact";
  else
    os << precision_used;
  return os.str();
}

std::string CongruenceReport::sort_key() const {
  std::ostringstream os;
  os << to_string(claim);
  for (const auto& [k, v] : params) {
    os << "|" << k << "=";
    bool numeric = !v.empty() &&
                   v.find_first_not_of("0123456789-") == std::string::npos;
    if (numeric) {
      std::string digits = v[0] == '-' ? v.substr(1) : v;
      os << (v[0] == '-' ? "-" : "+") << std::string(24 - digits.size(), '0')
         << digits;
    } else {
      os << v;
    }
  }
  return os.str();
}

CongruenceReport check_theorem1(unsigned long p, const Rational& q, int n,
                                const PadicContext& ctx) {
  Params params{{"p", fmt(p)}, {"q", q.str()}, {"n", fmt(n)}};
  try {
    require_in_disc(q, ctx);
    Rational lhs = alternating_bracket_sum(p, q, n);
    Rational rhs =
        two_over_2q(q) * cached_q_euler_table(q, n)->at(n);
    long required = q_bracket(static_cast<long>(p), q).vp(p);
    return from_exact(ClaimId::THM1, std::move(params), lhs, rhs, required, p);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::THM1, std::move(params), e.what());
  }
}

CongruenceReport check_corollary2(unsigned long p, const Rational& q, int n,
                                  const PadicContext& ctx) {
  Params params{{"p", fmt(p)}, {"q", q.str()}, {"n", fmt(n)}};
  try {
    require_in_disc(q, ctx);
    Rational value = two_over_2q(q) * cached_q_euler_table(q, n)->at(n) -
                     alternating_bracket_sum(p, q, n);
    return from_exact(ClaimId::COR2, std::move(params), value, Rational(), 0,
                      p);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::COR2, std::move(params), e.what());
  }
}

CongruenceReport check_integrality(unsigned long p, const Rational& q, int n,
                                   const PadicContext& ctx) {
  Params params{{"p", fmt(p)}, {"q", q.str()}, {"n", fmt(n)}};
  try {
    require_in_disc(q, ctx);
    Rational value = two_over_2q(q) * cached_q_euler_table(q, n)->at(n);
    return from_exact(ClaimId::COR3, std::move(params), value, Rational(), 0,
                      p);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::COR3, std::move(params), e.what());
  }
}

CongruenceReport check_eq13(unsigned long p, const Rational& q,
                            const PadicContext& ctx) {
  Params params{{"p", fmt(p)}, {"q", q.str()}};
  try {
    require_in_disc(q, ctx);
    Rational value = alternating_bracket_sum(p, q, 1);
    return from_exact(ClaimId::EQ13, std::move(params), value, Rational(), 0,
                      p);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::EQ13, std::move(params), e.what());
  }
}

std::pair<CongruenceReport, CongruenceReport> check_stability(
    unsigned long p, const Rational& q, int n, int k,
    const PadicContext& ctx) {
  Params params{
      {"p", fmt(p)}, {"q", q.str()}, {"n", fmt(n)}, {"k", fmt(k)}};
  try {
    require_in_disc(q, ctx);
    Padic t_next = t_sum(n, k + 1, q, ctx);
    Padic t_here = t_sum(n, k, q, ctx);
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= static_cast<long>(p);
    long req16 = q_bracket(pk, q).vp(p);
    CongruenceReport r16 =
        from_padic(ClaimId::EQ16, params, t_next, t_here, req16);
    Padic t_one = k == 1 ? t_here : t_sum(n, 1, q, ctx);
    long req18 = q_bracket(static_cast<long>(p), q).vp(p);
    CongruenceReport r18 =
        from_padic(ClaimId::EQ18, params, t_next, t_one, req18);
    return {std::move(r16), std::move(r18)};
  } catch (const std::domain_error& e) {
    return {error_report(ClaimId::EQ16, params, e.what()),
            error_report(ClaimId::EQ18, params, e.what())};
  }
}

CongruenceReport check_witt(unsigned long p, const Rational& q, int n, int k,
                            const PadicContext& ctx) {
  Params params{
      {"p", fmt(p)}, {"q", q.str()}, {"n", fmt(n)}, {"k", fmt(k)}};
  try {
    require_in_disc(q, ctx);
    Padic lhs = t_sum(n, k, q, ctx);
    Padic rhs = Padic::from_rational(
        two_over_2q(q) * cached_q_euler_table(q, n)->at(n), ctx);
    return from_padic(ClaimId::WITT, std::move(params), lhs, rhs, k);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::WITT, std::move(params), e.what());
  }
}

CongruenceReport check_kummer(unsigned long p, const Rational& q,
                              const DirichletCharacter& chi, int k, int kprime,
                              int n, const PadicContext& ctx) {
  if (k < 0 || kprime < 0 || n < 1)
    throw std::invalid_argument("kummer requires k, k' >= 0 and n >= 1");
  long modulus = static_cast<long>(p - 1);
  for (int i = 0; i < n; ++i) modulus *= static_cast<long>(p);
  if ((static_cast<long>(k) - kprime) % modulus != 0)
    throw std::invalid_argument("kummer requires k == k' (mod p^n (p-1))");
  Params params{{"p", fmt(p)},   {"q", q.str()},        {"chi", chi.name()},
                {"n", fmt(n)},   {"k", fmt(k)},         {"kprime", fmt(kprime)}};
  try {
    require_in_disc(q, ctx);
    Rational qp = q.pow(static_cast<long>(p));
    if (chi.order() <= 2) {
      auto side = [&](int j) {
        return two_over_2q(q) * gen_q_euler(j, chi, q) -
               two_over_2q(qp) * gen_q_euler(j, chi, qp);
      };
      return from_exact(ClaimId::KUMMER, std::move(params), side(k),
                        side(kprime), n, p);
    }
    auto side = [&](int j) {
      return Padic::from_rational(two_over_2q(q), ctx) *
                 gen_q_euler_padic(j, chi, q, ctx) -
             Padic::from_rational(two_over_2q(qp), ctx) *
                 gen_q_euler_padic(j, chi, qp, ctx);
    };
    return from_padic(ClaimId::KUMMER, std::move(params), side(k),
                      side(kprime), n);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::KUMMER, std::move(params), e.what());
  }
}

CongruenceReport check_eq26(unsigned long p, const Rational& q,
                            const DirichletCharacter& chi, int n,
                            const PadicContext& ctx) {
  if (chi.modulus() != p || !chi.is_primitive())
    throw std::invalid_argument("eq26 requires chi primitive of conductor p");
  bool classical = q == Rational(1L);
  ClaimId claim = classical ? ClaimId::EQ26_CLASSICAL : ClaimId::EQ26;
  Params params{
      {"p", fmt(p)}, {"q", q.str()}, {"chi", chi.name()}, {"n", fmt(n)}};
  try {
    if (!classical) require_in_disc(q, ctx);
    long required =
        classical ? 1 : q_bracket(static_cast<long>(p), q).vp(p);
    if (chi.order() <= 2) {
      Rational lhs = classical
                         ? gen_q_euler(n, chi, q)
                         : two_over_2q(q) * gen_q_euler(n, chi, q);
      Rational rhs;
      for (long a = 0; a < static_cast<long>(p); ++a) {
        Rational cv = chi(a).as_rational();
        if (cv.is_zero()) continue;
        Rational term = cv * q_bracket(a, q).pow(n);
        rhs += (a % 2 == 0) ? term : -term;
      }
      return from_exact(claim, std::move(params), lhs, rhs, required, p);
    }
    MaterializedCharacter mat(chi, ctx);
    Padic scale = classical ? Padic::one(ctx)
                            : Padic::from_rational(two_over_2q(q), ctx);
    Padic lhs = scale * gen_q_euler_padic(n, chi, q, ctx);
    Padic rhs = Padic::zero(ctx);
    for (long a = 0; a < static_cast<long>(p); ++a) {
      Padic cv = mat(a);
      if (cv.is_exact_zero()) continue;
      Padic term =
          cv * Padic::from_rational(q_bracket(a, q).pow(n), ctx);
      rhs = (a % 2 == 0) ? rhs + term : rhs - term;
    }
    return from_padic(claim, std::move(params), lhs, rhs, required);
  } catch (const std::domain_error& e) {
    return error_report(claim, std::move(params), e.what());
  }
}

CongruenceReport check_eq4(unsigned long p, const Rational& q, int m,
                           int level, const PadicContext& ctx) {
  Params params{
      {"p", fmt(p)}, {"q", q.str()}, {"m", fmt(m)}, {"level", fmt(level)}};
  try {
    require_in_disc(q, ctx);
    auto f = [&](long x) {
      return Padic::from_rational(q_bracket(x, q).pow(m), ctx);
    };
    auto f1 = [&](long x) { return f(x + 1); };
    Padic i_f = fermionic_integral(f, level, q, ctx);
    Padic i_f1 = fermionic_integral(f1, level, q, ctx);
    Padic lhs = Padic::from_rational(q, ctx) * i_f1 + i_f;
    Padic rhs = Padic::from_rational(Rational(1L) + q, ctx) * f(0);
    return from_padic(ClaimId::EQ4, std::move(params), lhs, rhs, level);
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::EQ4, std::move(params), e.what());
  }
}

CongruenceReport check_interpolation(unsigned long p, const Rational& q,
                                     const DirichletCharacter& chi, int k,
                                     const PadicContext& ctx,
                                     int target_abs_precision, int rho_max) {
  Params params{{"p", fmt(p)}, {"q", q.str()}, {"chi", chi.name()},
                {"k", fmt(k)}};
  try {
    require_in_disc(q, ctx);
    DirichletCharacter twisted = twist(chi, k, ctx);
    LSeriesQuery query{static_cast<long>(-k), twisted, q, ctx,
                       target_abs_precision, rho_max};
    LValueResult lv = l_value(query);
    Padic rhs = interpolation_rhs(k, chi, q, ctx);
    long required = lv.certified_abs_precision - 1;
    CongruenceReport r =
        from_padic(ClaimId::EQ25, std::move(params), lv.value, rhs, required);
    // run metadata lives in the note, not the params: params identify the
    // grid point and must be stable across working precisions
    r.note = "rho_used=" + fmt(lv.rho_used) + " certified_abs_precision=" +
             fmt(lv.certified_abs_precision);
    if (!lv.certified) {
      r.verdict = Verdict::INSUFFICIENT_PRECISION;
      r.note += " convergence not certified within rho_max";
    }
    return r;
  } catch (const std::domain_error& e) {
    return error_report(ClaimId::EQ25, std::move(params), e.what());
  }
}

DirichletCharacter parse_character(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("character name must be \"d:index\"");
  unsigned long d = std::stoul(name.substr(0, colon));
  unsigned long index = std::stoul(name.substr(colon + 1));
  return DirichletCharacter::from_index(d, index);
}

std::vector<CongruenceReport> run_grid(const std::vector<GridPoint>& grid,
                                       int precision) {
  std::vector<CongruenceReport> reports;
  for (const auto& pt : grid) {
    Params id{{"p", fmt(pt.p)}, {"q", pt.q.str()}};
    try {
      PadicContext ctx(pt.p, precision);
      int kprime = pt.kprime >= 0
                       ? pt.kprime
                       : [&] {
                           long m = static_cast<long>(pt.p - 1);
                           for (int i = 0; i < pt.n; ++i)
                             m *= static_cast<long>(pt.p);
                           return pt.k + static_cast<int>(m);
                         }();
      switch (pt.claim) {
        case ClaimId::THM1:
          reports.push_back(check_theorem1(pt.p, pt.q, pt.n, ctx));
          break;
        case ClaimId::COR2:
          reports.push_back(check_corollary2(pt.p, pt.q, pt.n, ctx));
          break;
        case ClaimId::COR3:
          reports.push_back(check_integrality(pt.p, pt.q, pt.n, ctx));
          break;
        case ClaimId::EQ13:
          reports.push_back(check_eq13(pt.p, pt.q, ctx));
          break;
        case ClaimId::EQ16: {
          auto [r16, r18] = check_stability(pt.p, pt.q, pt.n, pt.k, ctx);
          reports.push_back(std::move(r16));
          reports.push_back(std::move(r18));
          break;
        }
        case ClaimId::EQ18:
          reports.push_back(
              check_stability(pt.p, pt.q, pt.n, pt.k, ctx).second);
          break;
        case ClaimId::EQ4:
          reports.push_back(check_eq4(pt.p, pt.q, pt.n, pt.level, ctx));
          break;
        case ClaimId::WITT:
          reports.push_back(check_witt(pt.p, pt.q, pt.n, pt.k, ctx));
          break;
        case ClaimId::KUMMER:
          reports.push_back(check_kummer(pt.p, pt.q, parse_character(pt.chi),
                                         pt.k, kprime, pt.n, ctx));
          break;
        case ClaimId::EQ25:
          reports.push_back(check_interpolation(
              pt.p, pt.q, parse_character(pt.chi), pt.k, ctx,
              pt.target_abs_precision, pt.rho_max));
          break;
        case ClaimId::EQ26:
        case ClaimId::EQ26_CLASSICAL:
          reports.push_back(
              check_eq26(pt.p, pt.q, parse_character(pt.chi), pt.n, ctx));
          break;
      }
    } catch (const std::exception& e) {
      reports.push_back(error_report(pt.claim, std::move(id), e.what()));
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CongruenceReport& a, const CongruenceReport& b) {
                     return a.sort_key() < b.sort_key();
                   });
  return reports;
}

}  // namespace qeuler
