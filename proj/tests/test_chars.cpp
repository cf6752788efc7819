#include <doctest.h>

#include <random>

#include <qeuler/chars.hpp>

using namespace qeuler;

TEST_CASE("group structure mod 5") {
  auto chars = enumerate_characters(5);
  REQUIRE(chars.size() == 4);
  std::vector<long> orders;
  for (const auto& c : chars) orders.push_back(c.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<long>{1, 2, 4, 4});
  CHECK(chars[0].is_principal());
}

TEST_CASE("group structure mod 9 and mod 15") {
  CHECK(enumerate_characters(9).size() == 6);
  CHECK(enumerate_characters(15).size() == 8);
  CHECK(enumerate_characters(1).size() == 1);
}

TEST_CASE("quadratic character mod 5 is the Legendre symbol") {
  DirichletCharacter chi(5, {2});  // generator 2, exponent 2 -> order 2
  CHECK(chi.order() == 2);
  CHECK(chi(1).as_rational() == Rational(1L));
  CHECK(chi(4).as_rational() == Rational(1L));   // 4 = 2^2 is a QR
  CHECK(chi(2).as_rational() == Rational(-1L));
  CHECK(chi(3).as_rational() == Rational(-1L));
  CHECK(chi(5).zero);
  CHECK(chi(10).zero);
}

TEST_CASE("conductor detects imprimitivity") {
  DirichletCharacter quad5(5, {2});
  DirichletCharacter induced = quad5.induced_mod(15);
  CHECK(induced.modulus() == 15);
  CHECK(induced.conductor() == 5);
  CHECK(!induced.is_primitive());
  // induced character agrees with the original away from the new prime
  for (long x = 1; x < 15; ++x) {
    if (x % 3 == 0 || x % 5 == 0) {
      CHECK(induced(x).zero);
      continue;
    }
    CHECK(induced(x) == quad5(x));
  }
  DirichletCharacter principal(15, {0, 0});
  CHECK(principal.conductor() == 1);
}

TEST_CASE("multiplicativity, randomized") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<long> d(1, 10000);
  for (const auto& chi : enumerate_characters(45)) {
    for (int i = 0; i < 25; ++i) {
      long a = d(rng), b = d(rng);
      CharacterValue va = chi(a), vb = chi(b), vab = chi(BigInt(a) * b);
      if (va.zero || vb.zero) {
        CHECK(vab.zero);
      } else {
        CHECK(!vab.zero);
        CHECK(vab.expo == (va.expo + vb.expo) % chi.order());
      }
    }
  }
}

TEST_CASE("orthogonality: sum over a full period vanishes off principal") {
  for (const auto& chi : enumerate_characters(35)) {
    long re = 0;  // only meaningful through the exponent histogram
    std::vector<long> histogram(static_cast<size_t>(chi.order()), 0);
    long zeros = 0;
    for (long x = 0; x < 35; ++x) {
      CharacterValue v = chi(x);
      if (v.zero)
        ++zeros;
      else
        ++histogram[static_cast<size_t>(v.expo)];
    }
    if (chi.is_principal()) {
      CHECK(zeros == 35 - 24);  // phi(35) = 24
    } else {
      // each root of unity is hit equally often, so the sum is zero
      for (long h : histogram) CHECK(h == histogram[0]);
    }
    (void)re;
  }
}

TEST_CASE("parity is the value at -1") {
  DirichletCharacter quad5(5, {2});
  CHECK(quad5.parity() == 1);  // chi(-1) = chi(4) = +1
  DirichletCharacter quartic(5, {1});
  CHECK(quartic.parity() == -1);
  CHECK(DirichletCharacter(1, {}).parity() == 1);
}

TEST_CASE("index round trip") {
  for (unsigned long d : {1UL, 5UL, 9UL, 15UL, 45UL}) {
    auto chars = enumerate_characters(d);
    for (unsigned long i = 0; i < chars.size(); ++i) {
      CHECK(chars[i].index() == i);
      CHECK(DirichletCharacter::from_index(d, i).index() == i);
      CHECK(chars[i].name() == std::to_string(d) + ":" + std::to_string(i));
    }
  }
}

TEST_CASE("twist by the Teichmuller character") {
  PadicContext ctx(5, 10);
  DirichletCharacter quad5(5, {2});
  DirichletCharacter omega = teichmuller_character(ctx);
  CHECK(omega.order() == 4);
  // twisting by omega^(p-1) is the identity up to the induced modulus
  DirichletCharacter t4 = twist(quad5, 4, ctx);
  for (long x = 1; x < 5; ++x) CHECK(t4(x) == quad5(x));
  // group law: twist(chi, a+b) == twist(twist(chi, a), b)
  DirichletCharacter lhs = twist(quad5, 3, ctx);
  DirichletCharacter rhs = twist(twist(quad5, 1, ctx), 2, ctx);
  for (long x = 1; x < 5; ++x) CHECK(lhs(x) == rhs(x));
}

TEST_CASE("materialization embeds character values in Z_p") {
  PadicContext ctx(5, 12);
  DirichletCharacter quad5(5, {2});
  MaterializedCharacter m(quad5, ctx);
  CHECK(m(1).congruent(Padic::one(ctx)));
  CHECK(m(2).congruent(Padic::from_rational(Rational(-1L), ctx)));
  CHECK(m(5).is_exact_zero());
  // quartic character mod 5: values are 4th roots of unity in Z_5
  MaterializedCharacter m4(DirichletCharacter(5, {1}), ctx);
  Padic v2 = m4(2);
  CHECK(v2.pow(BigInt(4)).congruent(Padic::one(ctx)));
  CHECK(!v2.pow(BigInt(2)).congruent(Padic::one(ctx)));
  // multiplicativity of the embedded values
  CHECK((m4(2) * m4(3)).congruent(m4(6)));
}

TEST_CASE("materialization requires order | p - 1") {
  PadicContext ctx3(3, 10);
  DirichletCharacter quartic(5, {1});  // order 4 does not divide 3 - 1
  CHECK_THROWS(MaterializedCharacter(quartic, ctx3));
}

TEST_CASE("modulus validation") {
  CHECK_THROWS(DirichletCharacter(4, {0}));
  CHECK_THROWS(DirichletCharacter(2000001, {0}));
  CHECK(primitive_root(5, 5) == 2);
  CHECK(primitive_root(9, 3) == 2);
  CHECK(primitive_root(7, 7) == 3);
}
