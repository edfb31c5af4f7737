#include "opensets/representations.hpp"

#include <algorithm>

#include "opensets/enumeration.hpp"
#include "opensets/errors.hpp"

namespace opensets {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational clamp_unit(const Rational& x) { return min(max(x, kZero), kOne); }

// Exact value when the real carries one, else the stage-n approximation.
Rational point_of(const CauchyReal& x, unsigned n) { return x.exact() ? *x.exact() : x.approx(n); }

}  // namespace

// ---------------------------------------------------------------- streams

OpenR4 OpenR4::from_list(std::vector<RatInterval> pieces) {
  auto shared = std::make_shared<const std::vector<RatInterval>>(std::move(pieces));
  return OpenR4{[shared](std::size_t n) {
    if (n < shared->size()) return (*shared)[n];
    return RatInterval::open(0, 0);
  }};
}

OpenR4 OpenR4::constant(RatInterval piece) {
  return OpenR4{[piece = std::move(piece)](std::size_t) { return piece; }};
}

std::vector<RatInterval> OpenR4::prefix(std::size_t count) const {
  std::vector<RatInterval> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(entry(n));
  return out;
}

ClosedRM ClosedRM::from_finclosed(const FinClosed& set) {
  return ClosedRM{OpenR4::from_finopen(set.complement())};
}

OpenR2 OpenR2::from_finopen(const FinOpen& set) { return from_shape(ExactShape{{set}, Rational(0)}); }

OpenR2 OpenR2::from_shape(ExactShape shape) {
  auto s = std::make_shared<const ExactShape>(std::move(shape));
  return OpenR2{[s](const CauchyReal& x, unsigned k) { return s->value_at(point_of(x, k + 1)); }, s};
}

// ------------------------------------------------------------- membership

std::optional<std::size_t> member_semidecide(const OpenR4& set, const CauchyReal& x, std::size_t fuel) {
  std::size_t probes = 0;
  for (unsigned stage = 0;; ++stage) {
    for (std::size_t n = 0; n <= stage; ++n) {
      if (probes == fuel) return std::nullopt;
      ++probes;
      const RatInterval piece = set.entry(n);
      if (piece.is_empty()) continue;
      if (real_cmp(CauchyReal::constant(piece.lo), x, stage) == Comparison::Less &&
          real_cmp(x, CauchyReal::constant(piece.hi), stage) == Comparison::Less) {
        return n;
      }
    }
  }
}

std::optional<Rational> inner_radius(const OpenR2& set, const CauchyReal& x, unsigned fuel) {
  for (unsigned k = 0; k <= fuel; k = (k == 0 ? 1 : 2 * k)) {
    const Rational lower = set.value(x, k) - Rational::pow2(-static_cast<long>(k));
    if (lower.sign() > 0) return min(lower, kOne);
  }
  return std::nullopt;
}

// ------------------------------------------------------------ conversions

OpenR4 r3_to_r4(const OpenR3& dist) {
  return OpenR4{[dist](std::size_t t) {
    auto [m, q] = dyadic_grid_point(t);
    const Rational slack = Rational::pow2(-static_cast<long>(m));
    const Rational l = dist.full ? kOne - slack : dist.dist(CauchyReal::constant(q), m) - slack;
    if (l.sign() <= 0) return RatInterval::open(0, 0);
    return RatInterval::open(q - l, q + l);
  }};
}

OpenR3 r4_to_r3_fin(const FinOpen& set) {
  const bool full = set.covers_unit();
  return OpenR3{[set](const CauchyReal& x, unsigned k) { return set.distance_to_complement(point_of(x, k)); },
                full};
}

Rational r4_to_r3_stage(const OpenR4& set, const CauchyReal& x, unsigned k, std::size_t m) {
  if (m == 0) return kZero;
  const Rational centre = clamp_unit(x.approx(k + 3));
  const std::vector<RatInterval> pieces = set.prefix(m);
  const Rational step = Rational::pow2(-static_cast<long>(k));
  auto covered = [&](const mpz_class& j) {
    const Rational r = Rational(j, mpz_class(1)) * step;
    return covers(FinClosed({RatInterval::closed(centre - r, centre + r)}), pieces);
  };
  if (!covered(0)) return kZero;
  // Largest j in [0, 2^k] with covered(j); covered is monotone decreasing in j.
  mpz_class lo = 0;
  mpz_class hi = mpz_class(1) << k;
  if (covered(hi)) return kOne;
  while (hi - lo > 1) {
    const mpz_class mid = (lo + hi) / 2;
    if (covered(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Rational(lo, mpz_class(1)) * step;
}

std::vector<RatInterval> components(std::span<const RatInterval> pieces) {
  return FinOpen(std::vector<RatInterval>(pieces.begin(), pieces.end())).pieces();
}

std::vector<RatInterval> components_prefix(const OpenR4& set, std::size_t m) {
  std::vector<RatInterval> entries;
  for (auto& piece : set.prefix(m)) {
    if (!piece.is_empty()) entries.push_back(std::move(piece));
  }
  return components(entries);
}

FinOpen r2_probe_r4(const OpenR2& set, std::size_t budget, unsigned stage_fuel) {
  RationalsIn rationals(Rational(-1), Rational(2));
  std::vector<RatInterval> balls;
  for (std::size_t i = 0; i < budget; ++i) {
    const auto q = rationals.next();
    if (!q) break;
    if (auto l = inner_radius(set, CauchyReal::constant(*q), stage_fuel)) {
      balls.push_back(RatInterval::open(*q - *l, *q + *l));
    }
  }
  return FinOpen(std::move(balls));
}

// --------------------------------------------------------- cover searches

std::optional<std::vector<CauchyReal>> cover_search(const OpenR2& set, const Rational& q, unsigned n,
                                                    std::size_t fuel) {
  const Rational radius = Rational::pow2(-static_cast<long>(n));
  const Rational a = clamp_unit(q - radius);
  const Rational b = clamp_unit(q + radius);
  std::vector<CauchyReal> witnesses;
  Rational frontier = a;
  for (std::size_t step = 0; step < fuel; ++step) {
    const CauchyReal p = CauchyReal::constant(frontier);
    const auto l = inner_radius(set, p, kDefaultStageFuel);
    if (!l) return std::nullopt;
    witnesses.push_back(p);
    frontier += *l;
    if (frontier > b) return witnesses;
  }
  return std::nullopt;
}

CoverOracle default_cover_oracle(const OpenR2& set, std::size_t fuel) {
  return [set, fuel](const Rational& q, unsigned n) { return cover_search(set, q, n, fuel); };
}

bool verify_cover_witness(const OpenR2& set, const Rational& q, unsigned n,
                          std::span<const CauchyReal> witnesses) {
  std::vector<RatInterval> balls;
  for (const auto& y : witnesses) {
    // Balls around inexact centres are not checkable by the sweep.
    if (!y.exact()) return false;
    const auto l = inner_radius(set, y, kDefaultStageFuel);
    if (!l) return false;
    balls.push_back(RatInterval::open(*y.exact() - *l, *y.exact() + *l));
  }
  const Rational radius = Rational::pow2(-static_cast<long>(n));
  return covers(FinClosed({RatInterval::closed(q - radius, q + radius)}), balls);
}

OpenR4 certified_r4(const OpenR2& set, CoverOracle cover) {
  return OpenR4{[set, cover = std::move(cover)](std::size_t t) {
    const auto [qi, n] = unpair(t);
    const Rational q = enumerate_rational(qi);
    const unsigned stage = static_cast<unsigned>(n);
    const auto witnesses = cover(q, stage);
    if (!witnesses || !verify_cover_witness(set, q, stage, *witnesses)) return RatInterval::open(0, 0);
    const Rational radius = Rational::pow2(-static_cast<long>(stage));
    return RatInterval::open(q - radius, q + radius);
  }};
}

}  // namespace opensets
