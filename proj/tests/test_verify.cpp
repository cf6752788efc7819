#include <doctest.h>

#include <qeuler/verify.hpp>

using namespace qeuler;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("theorem 1 spot report") {
  PadicContext ctx(3, 40);
  CongruenceReport r = check_theorem1(3, Q("4"), 1, ctx);
  CHECK(r.verdict == Verdict::PASS);
  CHECK(r.lhs == "4");
  CHECK(r.rhs == "-1/5");
  CHECK(r.required_val == 1);
  REQUIRE(r.achieved_val.has_value());
  CHECK(*r.achieved_val == 1);  // diff 21/5 has v_3 = 1
  CHECK(r.precision_used == CongruenceReport::kExactPrecision);
}

TEST_CASE("exact routes report verdicts soundly") {
  PadicContext ctx(3, 40);
  // integrality of (2/[2]_q) E_{n,q}
  for (int n = 0; n <= 12; ++n) {
    CongruenceReport r = check_integrality(3, Q("4"), n, ctx);
    CHECK(r.verdict == Verdict::PASS);
    CHECK(!r.achieved_is_lower_bound);
  }
  // exact-zero difference reports infinite achieved valuation
  CongruenceReport z = check_theorem1(3, Q("4"), 0, ctx);
  CHECK(z.verdict == Verdict::PASS);
  CHECK(!z.achieved_val.has_value());
}

TEST_CASE("disc violations become ERROR reports, not crashes") {
  PadicContext ctx(3, 40);
  CongruenceReport r = check_theorem1(3, Q("5"), 1, ctx);
  CHECK(r.verdict == Verdict::ERROR);
  CHECK(!r.note.empty());
}

TEST_CASE("kummer validates its congruence precondition") {
  PadicContext ctx(3, 40);
  DirichletCharacter principal(1, {});
  CHECK_THROWS_AS(check_kummer(3, Q("4"), principal, 1, 5, 1, ctx),
                  std::invalid_argument);
  CongruenceReport ok = check_kummer(3, Q("4"), principal, 1, 7, 1, ctx);
  CHECK(ok.verdict == Verdict::PASS);
  REQUIRE(ok.achieved_val.has_value());
  CHECK(*ok.achieved_val >= 1);
}

TEST_CASE("eq26 validates primitivity") {
  PadicContext ctx(5, 40);
  DirichletCharacter quad5(5, {2});
  CHECK_THROWS_AS(check_eq26(5, Q("6"), quad5.induced_mod(15), 2, ctx),
                  std::invalid_argument);
  CongruenceReport r = check_eq26(5, Q("6"), quad5, 2, ctx);
  CHECK(r.claim == ClaimId::EQ26);
  CHECK(r.verdict == Verdict::PASS);
  CongruenceReport c = check_eq26(5, Q("1"), quad5, 2, ctx);
  CHECK(c.claim == ClaimId::EQ26_CLASSICAL);
  CHECK(c.verdict == Verdict::PASS);
}

TEST_CASE("interpolation reports certification metadata") {
  PadicContext ctx(3, 40);
  DirichletCharacter principal(1, {});
  CongruenceReport r = check_interpolation(3, Q("4"), principal, 1, ctx, 4, 8);
  CHECK(r.verdict == Verdict::PASS);
  CHECK(r.note.find("rho_used=") != std::string::npos);
  // starving the ladder yields INSUFFICIENT_PRECISION, not a wrong PASS
  CongruenceReport starved =
      check_interpolation(3, Q("4"), principal, 1, ctx, 30, 2);
  CHECK(starved.verdict == Verdict::INSUFFICIENT_PRECISION);
}

TEST_CASE("report serialization is deterministic and all-string") {
  PadicContext ctx(3, 40);
  CongruenceReport a = check_theorem1(3, Q("4"), 1, ctx);
  CongruenceReport b = check_theorem1(3, Q("4"), 1, ctx);
  CHECK(a.json() == b.json());
  CHECK(a.csv_row() == b.csv_row());
  CHECK(a.json().find("\"required_val\": \"1\"") != std::string::npos);
  CHECK(a.json().find("\"prec\": \"exact\"") != std::string::npos);
  CHECK(CongruenceReport::csv_header() ==
        "claim,params,lhs,rhs,required_val,achieved_val,verdict,prec");
}

TEST_CASE("run_grid: empty, singleton, error capture, deterministic order") {
  CHECK(run_grid({}, 40).empty());

  GridPoint pt;
  pt.claim = ClaimId::THM1;
  pt.p = 3;
  pt.q = Q("4");
  pt.n = 2;
  auto single = run_grid({pt}, 40);
  REQUIRE(single.size() == 1);
  CHECK(single[0].verdict == Verdict::PASS);

  GridPoint bad = pt;
  bad.q = Q("5");  // outside the disc
  GridPoint worse = pt;
  worse.claim = ClaimId::KUMMER;
  worse.kprime = 2;  // violates k' = k (mod p^n (p-1))
  auto mixed = run_grid({worse, bad, pt}, 40);
  REQUIRE(mixed.size() == 3);
  int errors = 0, passes = 0;
  for (const auto& r : mixed) {
    if (r.verdict == Verdict::ERROR) ++errors;
    if (r.verdict == Verdict::PASS) ++passes;
  }
  CHECK(errors == 2);
  CHECK(passes == 1);

  // order independent of input permutation
  auto permuted = run_grid({pt, worse, bad}, 40);
  REQUIRE(permuted.size() == 3);
  for (size_t i = 0; i < 3; ++i)
    CHECK(mixed[i].sort_key() == permuted[i].sort_key());
}

TEST_CASE("stability returns both congruence flavours") {
  PadicContext ctx(3, 40);
  auto [r16, r18] = check_stability(3, Q("4"), 3, 2, ctx);
  CHECK(r16.claim == ClaimId::EQ16);
  CHECK(r18.claim == ClaimId::EQ18);
  CHECK(r16.verdict == Verdict::PASS);
  CHECK(r18.verdict == Verdict::PASS);
  CHECK(r16.required_val == 2);  // v_3([9]_q) = 2 on the disc
  CHECK(r18.required_val == 1);
}

TEST_CASE("parse_character") {
  CHECK(parse_character("5:2").order() == 2);
  CHECK(parse_character("1:0").is_principal());
  CHECK_THROWS_AS(parse_character("nonsense"), std::invalid_argument);
}
