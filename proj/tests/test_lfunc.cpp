#include <doctest.h>

#include <qeuler/lfunc.hpp>

using namespace qeuler;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
const DirichletCharacter kPrincipal(1, {});
}  // namespace

TEST_CASE("trivial character recovers the plain q-Euler numbers") {
  Rational q = Q("4");
  QEulerTable t = q_euler_numbers(8, q);
  for (int n = 0; n <= 8; ++n)
    CHECK(gen_q_euler(n, kPrincipal, q) == t.at(n));
}

TEST_CASE("degree 0 attached to a non-principal character vanishes") {
  DirichletCharacter quad5(5, {2});
  // E_{0,chi,q} = ([2]_q/[2]_{q^d}) * E_{0,q^d} * sum chi(a)(-1)^a; the
  // alternating character sum over a full period is zero for quad mod 5
  CHECK(gen_q_euler(0, quad5, Q("6")) == Rational());
  CHECK(gen_q_euler(0, quad5, Q("1")) == Rational());
}

TEST_CASE("padic route matches the exact route for rational characters") {
  PadicContext ctx(5, 30);
  DirichletCharacter quad5(5, {2});
  for (const char* qs : {"6", "11"}) {
    for (int n = 0; n <= 6; ++n) {
      Rational exact = gen_q_euler(n, quad5, Q(qs));
      Padic via_padic = gen_q_euler_padic(n, quad5, Q(qs), ctx);
      CHECK(via_padic.congruent(Padic::from_rational(exact, ctx)));
    }
  }
}

TEST_CASE("Riemann-sum route converges to the closed form") {
  PadicContext ctx(5, 25);
  DirichletCharacter quad5(5, {2});
  Rational q = Q("6");
  for (int n = 1; n <= 4; ++n) {
    Rational closed = Rational(2L) / (Rational(1L) + q) *
                      gen_q_euler(n, quad5, q);
    Padic embedded = Padic::from_rational(closed, ctx);
    for (int level = 1; level <= 4; ++level) {
      Padic riemann = gen_q_euler_riemann(n, quad5, q, ctx, level);
      Padic diff = riemann - embedded;
      long v = diff.is_exact_zero() ? ctx.precision
               : diff.known_nonzero() ? diff.valuation()
                                      : diff.valuation_lower_bound();
      CHECK(v >= level);
    }
  }
}

TEST_CASE("angle projection is a principal unit") {
  PadicContext ctx(3, 20);
  Rational q = Q("4");
  for (long x : {1L, 2L, 5L, 7L, 100L}) {
    Padic a = angle(BigInt(x), q, ctx);
    CHECK((a - Padic::one(ctx)).valuation_lower_bound() >= 1);
  }
  CHECK_THROWS(angle(BigInt(3), q, ctx));
}

TEST_CASE("L-value at s = 0 vanishes for the principal character") {
  PadicContext ctx(3, 30);
  LSeriesQuery query{0L, kPrincipal, Q("4"), ctx, 4, 8};
  LValueResult res = l_value(query);
  CHECK(res.certified);
  // the alternating unit sum telescopes: each level is exactly zero
  long v = res.value.is_exact_zero() ? ctx.precision
           : res.value.known_nonzero() ? res.value.valuation()
                                       : res.value.valuation_lower_bound();
  CHECK(v >= res.certified_abs_precision);
}

TEST_CASE("interpolation spot value: k = 1, p = 3, q = 4, principal") {
  PadicContext ctx(3, 30);
  Padic rhs = interpolation_rhs(1, kPrincipal, Q("4"), ctx);
  // (2/[2]_q) E_{1,chi,q} - chi(3)[3]_q (2/[2]_{q^3}) E_{1,chi,q^3} = 8/65
  CHECK(rhs.congruent(Padic::from_rational(Rational(8, 65), ctx)));
  DirichletCharacter twisted = twist(kPrincipal, 1, ctx);
  LSeriesQuery query{-1L, twisted, Q("4"), ctx, 4, 8};
  LValueResult res = l_value(query);
  REQUIRE(res.certified);
  Padic diff = res.value - rhs;
  long v = diff.known_nonzero() ? diff.valuation()
                                : diff.valuation_lower_bound();
  CHECK(v >= res.certified_abs_precision - 1);
}

TEST_CASE("interpolation with p | d drops the Euler factor") {
  PadicContext ctx(5, 30);
  DirichletCharacter quad5(5, {2});
  Rational q = Q("6");
  // chi(p) = 0, so the right side is just (2/[2]_q) E_{k,chi,q}
  for (int k = 1; k <= 3; ++k) {
    Padic rhs = interpolation_rhs(k, quad5, q, ctx);
    Rational direct = Rational(2L) / (Rational(1L) + q) *
                      gen_q_euler(k, quad5, q);
    CHECK(rhs.congruent(Padic::from_rational(direct, ctx)));
  }
}

TEST_CASE("integer-s fast path agrees with the generic padic-s path") {
  PadicContext ctx(3, 25);
  DirichletCharacter twisted = twist(kPrincipal, 2, ctx);
  LSeriesQuery fast{-2L, twisted, Q("4"), ctx, 4, 8};
  LSeriesQuery generic{Padic::from_rational(Rational(-2L), ctx), twisted,
                       Q("4"), ctx, 4, 8};
  LValueResult a = l_value(fast);
  LValueResult b = l_value(generic);
  REQUIRE(a.certified);
  REQUIRE(b.certified);
  Padic diff = a.value - b.value;
  long v = diff.is_exact_zero() ? ctx.precision
           : diff.known_nonzero() ? diff.valuation()
                                  : diff.valuation_lower_bound();
  CHECK(v >= std::min(a.certified_abs_precision, b.certified_abs_precision) - 1);
}

TEST_CASE("table cache returns consistent snapshots") {
  auto small = cached_q_euler_table(Q("9/7"), 4);
  auto large = cached_q_euler_table(Q("9/7"), 10);
  QEulerTable fresh = q_euler_numbers(10, Q("9/7"));
  for (int n = 0; n <= 4; ++n) CHECK(small->at(n) == fresh.at(n));
  for (int n = 0; n <= 10; ++n) CHECK(large->at(n) == fresh.at(n));
}
