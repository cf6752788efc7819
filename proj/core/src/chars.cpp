#include "qeuler/chars.hpp"

#include <numeric>

namespace qeuler {

namespace {

constexpr unsigned long kMaxModulus = 1000000;  // dlog tables built eagerly

std::vector<std::pair<unsigned long, int>> factor_odd(unsigned long d) {
  std::vector<std::pair<unsigned long, int>> factors;
  for (unsigned long p = 3; p * p <= d; p += 2) {
    if (d % p == 0) {
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (d > 1) factors.emplace_back(d, 1);
  return factors;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> fs;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      fs.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

unsigned long powmod(unsigned long base, unsigned long exp, unsigned long m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), BigInt(base).get_mpz_t(), BigInt(exp).get_mpz_t(),
           BigInt(m).get_mpz_t());
  return r.get_ui();
}

}  // namespace

unsigned long primitive_root(unsigned long prime_power_modulus,
                             unsigned long prime) {
  unsigned long m = prime_power_modulus;
  unsigned long phi = m / prime * (prime - 1);
  auto qs = prime_factors(phi);
  for (unsigned long g = 2; g < m; ++g) {
    if (g % prime == 0) continue;
    bool primitive = true;
    for (unsigned long q : qs)
      if (powmod(g, phi / q, m) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for odd p^e
}

Rational CharacterValue::as_rational() const {
  if (zero) return Rational();
  if (order == 1 || expo == 0) return Rational(1L);
  if (order == 2) return Rational(-1L);
  throw std::domain_error("character value is not rational");
}

DirichletCharacter::DirichletCharacter(unsigned long d,
                                       std::vector<unsigned long> exponents)
    : modulus_(d) {
  if (d == 0 || d % 2 == 0)
    throw std::domain_error("character modulus must be odd and positive");
  if (d >= kMaxModulus)
    throw std::domain_error("modulus too large for eager dlog tables");
  auto factors = factor_odd(d);
  if (exponents.size() != factors.size())
    throw std::invalid_argument("one exponent per prime-power factor required");

  order_ = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    Component c;
    c.prime = factors[i].first;
    c.exponent_of_prime = factors[i].second;
    c.modulus = 1;
    for (int e = 0; e < c.exponent_of_prime; ++e) c.modulus *= c.prime;
    c.group_order = c.modulus / c.prime * (c.prime - 1);
    c.generator = primitive_root(c.modulus, c.prime);
    c.exponent = exponents[i] % c.group_order;
    c.dlog.assign(c.modulus, -1);
    unsigned long pw = 1;
    for (unsigned long t = 0; t < c.group_order; ++t) {
      c.dlog[pw] = static_cast<long>(t);
      pw = pw * c.generator % c.modulus;
    }
    unsigned long g = std::gcd(c.exponent, c.group_order);
    unsigned long comp_order = c.group_order / (g == 0 ? c.group_order : g);
    order_ = std::lcm(order_, static_cast<long>(comp_order));
    components_.push_back(std::move(c));
  }

  weights_.clear();
  for (const auto& c : components_) {
    if (c.exponent == 0) {
      weights_.push_back(0);
      continue;
    }
    unsigned long g = std::gcd(c.exponent, c.group_order);
    unsigned long comp_order = c.group_order / g;
    weights_.push_back(static_cast<long>(
        (c.exponent / g) % comp_order *
        (static_cast<unsigned long>(order_) / comp_order) %
        static_cast<unsigned long>(order_)));
  }

  conductor_ = 1;
  for (const auto& c : components_) {
    if (c.exponent == 0) continue;
    unsigned long pf = 1;
    for (int f = 1; f <= c.exponent_of_prime; ++f) {
      pf *= c.prime;
      unsigned long phi_f = pf / c.prime * (c.prime - 1);
      // factors through (Z/p^f)* iff trivial on the index-phi_f subgroup
      if (static_cast<unsigned long>(c.exponent) * phi_f % c.group_order == 0) {
        conductor_ *= pf;
        break;
      }
    }
  }

  CharacterValue at_minus_one = (*this)(BigInt(static_cast<long>(d) - 1));
  parity_ = (d == 1 || at_minus_one.expo == 0) ? 1 : -1;
}

DirichletCharacter DirichletCharacter::from_index(unsigned long d,
                                                  unsigned long index) {
  auto factors = factor_odd(d);
  std::vector<unsigned long> exps;
  for (auto [p, e] : factors) {
    unsigned long m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    unsigned long phi = m / p * (p - 1);
    exps.push_back(index % phi);
    index /= phi;
  }
  if (index != 0)
    throw std::out_of_range("character index exceeds phi(d) - 1");
  return DirichletCharacter(d, std::move(exps));
}

unsigned long DirichletCharacter::index() const {
  unsigned long idx = 0, radix = 1;
  for (const auto& c : components_) {
    idx += c.exponent * radix;
    radix *= c.group_order;
  }
  return idx;
}

CharacterValue DirichletCharacter::operator()(const BigInt& x) const {
  long j = 0;
  for (size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    BigInt r = x % static_cast<long>(c.modulus);
    if (sgn(r) < 0) r += static_cast<long>(c.modulus);
    long t = c.dlog[r.get_ui()];
    if (t < 0) return CharacterValue{};  // gcd(x, d) > 1
    j = (j + weights_[i] % order_ * (t % order_)) % order_;
  }
  return CharacterValue{false, j, order_};
}

CharacterValue char_eval(const DirichletCharacter& chi, const BigInt& x) {
  return chi(x);
}

unsigned long conductor_of(const DirichletCharacter& chi) {
  return chi.conductor();
}

DirichletCharacter DirichletCharacter::operator*(
    const DirichletCharacter& other) const {
  if (modulus_ != other.modulus_)
    throw std::invalid_argument("character product needs a common modulus");
  std::vector<unsigned long> exps;
  for (size_t i = 0; i < components_.size(); ++i)
    exps.push_back((components_[i].exponent + other.components_[i].exponent) %
                   components_[i].group_order);
  return DirichletCharacter(modulus_, std::move(exps));
}

DirichletCharacter DirichletCharacter::induced_mod(
    unsigned long big_modulus) const {
  if (big_modulus % modulus_ != 0)
    throw std::invalid_argument("can only induce to a multiple of the modulus");
  if (big_modulus == modulus_) return *this;
  auto factors = factor_odd(big_modulus);
  std::vector<unsigned long> exps;
  for (auto [p, e] : factors) {
    const Component* src = nullptr;
    for (const auto& c : components_)
      if (c.prime == p) src = &c;
    if (src == nullptr || src->exponent == 0) {
      exps.push_back(0);
      continue;
    }
    unsigned long m2 = 1;
    for (int i = 0; i < e; ++i) m2 *= p;
    unsigned long phi2 = m2 / p * (p - 1);
    unsigned long g2 = primitive_root(m2, p);
    // exponent on g2 so that the induced character matches chi after reduction
    long t = src->dlog[g2 % src->modulus];
    unsigned long c2 =
        static_cast<unsigned long>(t) % src->group_order * src->exponent %
        src->group_order * (phi2 / src->group_order) % phi2;
    exps.push_back(c2);
  }
  return DirichletCharacter(big_modulus, std::move(exps));
}

std::string DirichletCharacter::name() const {
  return std::to_string(modulus_) + ":" + std::to_string(index());
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long d) {
  if (d == 0 || d % 2 == 0)
    throw std::domain_error("character modulus must be odd and positive");
  unsigned long phi = 1;
  for (auto [p, e] : factor_odd(d)) {
    unsigned long m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    phi *= m / p * (p - 1);
  }
  std::vector<DirichletCharacter> chars;
  chars.reserve(phi);
  for (unsigned long i = 0; i < phi; ++i)
    chars.push_back(DirichletCharacter::from_index(d, i));
  return chars;
}

DirichletCharacter teichmuller_character(const PadicContext& ctx) {
  return DirichletCharacter(ctx.p, {1});
}

DirichletCharacter twist(const DirichletCharacter& chi, long k,
                         const PadicContext& ctx) {
  unsigned long dbar = std::lcm(chi.modulus(), ctx.p);
  long pm1 = static_cast<long>(ctx.p) - 1;
  unsigned long ke = static_cast<unsigned long>(((k % pm1) + pm1) % pm1);
  DirichletCharacter omega_k(ctx.p, {ke});
  return chi.induced_mod(dbar) * omega_k.induced_mod(dbar);
}

MaterializedCharacter::MaterializedCharacter(const DirichletCharacter& chi,
                                             const PadicContext& ctx)
    : chi_(chi), ctx_(ctx) {
  unsigned long m = static_cast<unsigned long>(chi.order());
  if ((ctx.p - 1) % m != 0)
    throw std::domain_error(
        "unsupported embedding: character order does not divide p - 1");
  unsigned long c = primitive_root(ctx.p, ctx.p);
  Padic zeta = teichmuller(BigInt(c), ctx).pow(BigInt((ctx.p - 1) / m));
  values_.reserve(m);
  Padic v = Padic::one(ctx);
  for (unsigned long j = 0; j < m; ++j) {
    values_.push_back(v);
    v = v * zeta;
  }
  residues_.reserve(chi.modulus());
  for (unsigned long x = 0; x < chi.modulus(); ++x) {
    CharacterValue cv = chi(BigInt(static_cast<long>(x)));
    residues_.push_back(
        cv.zero ? BigInt(0)
                : values_[static_cast<size_t>(cv.expo)].unit_mod(
                      ctx.precision));
  }
  if (chi.modulus() == 1) residues_[0] = BigInt(1) % ctx.pow_p(ctx.precision);
}

Padic MaterializedCharacter::operator()(const BigInt& x) const {
  CharacterValue cv = chi_(x);
  if (cv.zero) return Padic::zero(ctx_);
  return values_[static_cast<size_t>(cv.expo)];
}

}  // namespace qeuler
