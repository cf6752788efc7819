#ifndef QEULER_CHARS_HPP
#define QEULER_CHARS_HPP

#include <functional>
#include <vector>

#include "qeuler/padic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/// Value of a Dirichlet character: zero, or zeta_order^expo for a fixed
/// abstract primitive root of unity zeta_order.
struct CharacterValue {
  bool zero = true;
  long expo = 0;   // reduced mod order
  long order = 1;

  bool operator==(const CharacterValue&) const = default;
  /// The value as a rational, when order <= 2 (0 or +-1).
  Rational as_rational() const;
};

/// Dirichlet character of odd modulus d, stored as exponents on the
/// smallest primitive root of each prime-power factor of (Z/dZ)*.
/// Discrete-log tables are built eagerly at construction; moduli >= 10^6
/// are rejected (verification grids never need them).
class DirichletCharacter {
 public:
  /// Character of modulus d with the given exponent per CRT component
  /// (components ordered by ascending prime). Empty vector for d = 1.
  DirichletCharacter(unsigned long d, std::vector<unsigned long> exponents);

  /// The character "d:index" with index in [0, phi(d)); index 0 is principal.
  static DirichletCharacter from_index(unsigned long d, unsigned long index);
  unsigned long index() const;

  unsigned long modulus() const { return modulus_; }
  unsigned long conductor() const { return conductor_; }
  long order() const { return order_; }
  bool is_principal() const { return order_ == 1; }
  bool is_primitive() const { return conductor_ == modulus_; }
  int parity() const { return parity_; }  // chi(-1)

  CharacterValue operator()(const BigInt& x) const;
  CharacterValue operator()(long x) const { return (*this)(BigInt(x)); }

  /// chi * psi on the common modulus; both moduli must agree.
  DirichletCharacter operator*(const DirichletCharacter& other) const;

  /// The same character read mod a multiple D of the modulus (odd D).
  DirichletCharacter induced_mod(unsigned long big_modulus) const;

  /// "d:index" per the CLI naming contract.
  std::string name() const;

  struct Component {
    unsigned long prime;
    int exponent_of_prime;
    unsigned long modulus;    // prime^exponent_of_prime
    unsigned long generator;  // smallest primitive root
    unsigned long group_order;
    unsigned long exponent;   // character exponent on the generator
    std::vector<long> dlog;   // dlog[x], -1 for non-units
  };
  const std::vector<Component>& components() const { return components_; }

 private:
  unsigned long modulus_;
  std::vector<Component> components_;
  long order_;
  unsigned long conductor_;
  int parity_;
  std::vector<long> weights_;  // per-component multiplier into zeta_order
};

/// All phi(d) characters of odd modulus d, principal first.
std::vector<DirichletCharacter> enumerate_characters(unsigned long d);

unsigned long conductor_of(const DirichletCharacter& chi);
CharacterValue char_eval(const DirichletCharacter& chi, const BigInt& x);

/// The Teichmuller character omega mod p: its materialization sends a
/// unit x to teichmuller(x, ctx).
DirichletCharacter teichmuller_character(const PadicContext& ctx);

/// chi * omega^k on the modulus lcm(d, p).
DirichletCharacter twist(const DirichletCharacter& chi, long k,
                         const PadicContext& ctx);

/// Character with values realized in Z_p as powers of
/// zeta = teichmuller(c)^{(p-1)/m}, c the smallest primitive root mod p.
/// Requires order(chi) | p - 1.
class MaterializedCharacter {
 public:
  MaterializedCharacter(const DirichletCharacter& chi,
                        const PadicContext& ctx);

  Padic operator()(const BigInt& x) const;
  Padic operator()(long x) const { return (*this)(BigInt(x)); }

  /// Residues mod p^N of chi on 0..modulus-1 (0 entries where chi vanishes);
  /// the fast path for Riemann sums.
  const std::vector<BigInt>& residue_table() const { return residues_; }
  const DirichletCharacter& character() const { return chi_; }

 private:
  DirichletCharacter chi_;
  PadicContext ctx_;
  std::vector<Padic> values_;   // indexed by value exponent in [0, order)
  std::vector<BigInt> residues_;
};

inline MaterializedCharacter materialize(const DirichletCharacter& chi,
                                         const PadicContext& ctx) {
  return MaterializedCharacter(chi, ctx);
}

/// Smallest primitive root mod p^e (odd p).
unsigned long primitive_root(unsigned long prime_power_modulus,
                             unsigned long prime);

}  // namespace qeuler

#endif
