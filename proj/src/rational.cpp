#include "opensets/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace opensets {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view digits, bool allow_sign) {
    std::string s(digits);
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, true), mpz_class(1));
  const mpz_class num = parse_int(text.substr(0, slash), true);
  const mpz_class den = parse_int(text.substr(slash + 1), false);
  return Rational(num, den);
}

Rational Rational::pow2(long exponent) {
  mpz_class p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rational(p, mpz_class(1));
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rational(mpz_class(1), p);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational floor_to_grid(const Rational& q, long bits) {
  const Rational scale = Rational::pow2(bits);
  return Rational((q * scale).floor(), mpz_class(1)) / scale;
}

}  // namespace opensets
