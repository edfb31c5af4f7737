#include "opensets/enumeration.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace opensets {

namespace {

std::size_t totient(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

Rational enumerate_rational(std::size_t index) {
  if (index == 0) return Rational(0);
  if (index == 1) return Rational(1);
  std::size_t remaining = index - 2;
  for (std::size_t den = 2;; ++den) {
    const std::size_t count = totient(den);
    if (remaining < count) {
      for (std::size_t num = 1; num < den; ++num) {
        if (std::gcd(num, den) != 1) continue;
        if (remaining == 0) return Rational(static_cast<long>(num), static_cast<long>(den));
        --remaining;
      }
    }
    remaining -= count;
  }
}

std::size_t rational_index(const Rational& q) {
  if (q < Rational(0) || q > Rational(1)) throw std::invalid_argument("rational outside [0,1]");
  if (q.is_zero()) return 0;
  if (q == Rational(1)) return 1;
  const std::size_t den = q.denominator().get_ui();
  const std::size_t num = q.numerator().get_ui();
  std::size_t index = 2;
  for (std::size_t d = 2; d < den; ++d) index += totient(d);
  for (std::size_t p = 1; p < num; ++p) {
    if (std::gcd(p, den) == 1) ++index;
  }
  return index;
}

Rational simplest_between(const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("simplest_between needs a < b");
  if (a.sign() < 0) throw std::invalid_argument("simplest_between needs a >= 0");
  const mpz_class fl = a.floor();
  const Rational next_int(fl + 1, mpz_class(1));
  if (next_int < b) return next_int;
  const Rational base(fl, mpz_class(1));
  const Rational a_frac = a - base;
  const Rational b_frac = b - base;  // 0 <= a_frac < b_frac <= 1
  if (a_frac.is_zero()) {
    // Least m with 1/m < b_frac.
    const mpz_class m = (Rational(1) / b_frac).floor() + 1;
    return base + Rational(mpz_class(1), m);
  }
  return base + Rational(1) / simplest_between(Rational(1) / b_frac, Rational(1) / a_frac);
}

RationalsIn::RationalsIn(Rational a, Rational b) : lo_(std::move(a)), hi_(std::move(b)) {}

void RationalsIn::start_denominator() {
  // numerators p with lo < p/den < hi
  mpz_class p0 = (lo_ * Rational(den_, mpz_class(1))).floor() + 1;
  if (p0 < 1) p0 = 1;
  mpz_class p1 = (hi_ * Rational(den_, mpz_class(1))).ceil() - 1;
  if (p1 > den_ - 1) p1 = den_ - 1;
  num_ = p0;
  num_end_ = p1;
}

std::optional<Rational> RationalsIn::next() {
  if (exhausted_) return std::nullopt;
  const Rational zero(0), one(1);
  if (phase_ == 0) {
    phase_ = 1;
    if (lo_ < zero && zero < hi_) return zero;
  }
  if (phase_ == 1) {
    phase_ = 2;
    if (lo_ < one && one < hi_) return one;
    lo_ = max(lo_, zero);
    hi_ = min(hi_, one);
    if (!(lo_ < hi_)) {
      exhausted_ = true;
      return std::nullopt;
    }
    gap_mode_ = hi_ - lo_ < Rational::pow2(-12);
    if (!gap_mode_) {
      den_ = simplest_between(lo_, hi_).denominator();
      if (den_ < 2) den_ = 2;
      start_denominator();
    }
  }
  if (gap_mode_) return next_by_gaps();
  for (;;) {
    while (num_ <= num_end_) {
      mpz_class p = num_;
      ++num_;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), den_.get_mpz_t());
      if (g == 1) return Rational(p, den_);
    }
    ++den_;
    start_denominator();
  }
}

std::optional<Rational> RationalsIn::next_by_gaps() {
  std::optional<Rational> best;
  std::size_t best_slot = 0;
  const Rational* left = &lo_;
  for (std::size_t i = 0; i <= produced_.size(); ++i) {
    const Rational* right = i < produced_.size() ? &produced_[i] : &hi_;
    Rational cand = simplest_between(*left, *right);
    if (!best || cand.denominator() < best->denominator() ||
        (cand.denominator() == best->denominator() && cand < *best)) {
      best = std::move(cand);
      best_slot = i;
    }
    left = right;
  }
  produced_.insert(produced_.begin() + static_cast<std::ptrdiff_t>(best_slot), *best);
  return best;
}

std::pair<std::size_t, std::size_t> unpair(std::size_t t) {
  std::size_t w = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > t) --w;
  while ((w + 1) * (w + 2) / 2 <= t) ++w;
  const std::size_t second = t - w * (w + 1) / 2;
  return {w - second, second};
}

std::size_t pair_index(std::size_t first, std::size_t second) {
  const std::size_t w = first + second;
  return w * (w + 1) / 2 + second;
}

std::pair<unsigned, Rational> dyadic_grid_point(std::size_t index) {
  unsigned stage = 0;
  for (;;) {
    const std::size_t count = (std::size_t{1} << stage) + 1;
    if (index < count) {
      return {stage, Rational(mpz_class(static_cast<unsigned long>(index)), mpz_class(1)) /
                         Rational::pow2(stage)};
    }
    index -= count;
    ++stage;
  }
}

}  // namespace opensets
