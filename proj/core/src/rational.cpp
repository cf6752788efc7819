#include "qeuler/rational.hpp"

namespace qeuler {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  auto check = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational literal: " + s);
    size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("bad rational literal: " + s);
    for (size_t i = start; i < part.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("bad rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check(s);
    return Rational(BigInt(s));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  check(a);
  check(b);
  return Rational(BigInt(a), BigInt(b));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1L);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("0 raised to negative power");
    return Rational();
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), a);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

long Rational::vp(unsigned long p) const {
  if (is_zero()) throw std::domain_error("v_p(0) is +infinity");
  BigInt pp(p), tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), v_.get_num().get_mpz_t(), pp.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), v_.get_den().get_mpz_t(), pp.get_mpz_t()));
  return vn - vd;
}

std::string Rational::str() const {
  return is_integer() ? num().get_str()
                      : num().get_str() + "/" + den().get_str();
}

BigInt binom(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (unsigned long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);  // exact: C(n-k+i, i) is integral
  }
  return r;
}

}  // namespace qeuler
