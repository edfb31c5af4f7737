#include "opensets/cauchy_real.hpp"

#include <stdexcept>

namespace opensets {

CauchyReal::CauchyReal()
    : oracle_(std::make_shared<const Oracle>([](unsigned) { return Rational(0); })), exact_(Rational(0)) {}

CauchyReal CauchyReal::constant(Rational value) {
  CauchyReal r;
  r.exact_ = value;
  r.oracle_ = std::make_shared<const Oracle>([v = std::move(value)](unsigned) { return v; });
  return r;
}

CauchyReal CauchyReal::from_oracle(Oracle oracle) {
  if (!oracle) throw std::invalid_argument("null real-number oracle");
  CauchyReal r;
  r.exact_.reset();
  r.oracle_ = std::make_shared<const Oracle>(std::move(oracle));
  return r;
}

CauchyReal CauchyReal::sqrt_of(const Rational& value) {
  if (value.sign() < 0) throw std::domain_error("square root of a negative rational");
  return from_oracle([value](unsigned n) {
    // floor(sqrt(v * 4^n)) == floor(sqrt(floor(v * 4^n)))
    const Rational scaled = value * Rational::pow2(2L * n);
    mpz_class root;
    const mpz_class fl = scaled.floor();
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    return Rational(root, mpz_class(1)) / Rational::pow2(n);
  });
}

Rational CauchyReal::approx(unsigned stage) const { return (*oracle_)(stage); }

Comparison real_cmp(const CauchyReal& x, const CauchyReal& y, unsigned k) {
  const Rational d = x.approx(k + 3) - y.approx(k + 3);
  const Rational margin = Rational::pow2(-static_cast<long>(k) - 2);
  if (d > margin) return Comparison::Greater;
  if (d < -margin) return Comparison::Less;
  return Comparison::Within;
}

}  // namespace opensets
