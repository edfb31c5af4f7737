// Exact Pincherle bounds over ExactShape, the fullness test and Δ.

#include <algorithm>
#include <stdexcept>

#include "opensets/errors.hpp"
#include "opensets/representations.hpp"

namespace opensets {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

Rational point_of(const CauchyReal& x, unsigned n) { return x.exact() ? *x.exact() : x.approx(n); }

// sup of Y over the points x whose ball B(x, Y(x)) reaches into this component.
Rational reach_of(const RatInterval& c) {
  const bool left_open = c.lo < kZero;
  const bool right_open = c.hi > kOne;
  if (left_open && right_open) return kOne;
  if (left_open) return min(c.hi, kOne);
  if (right_open) return min(kOne - c.lo, kOne);
  return min((c.hi - c.lo) * kHalf, kOne);
}

}  // namespace

FinOpen ExactShape::open_set() const {
  FinOpen all;
  for (const auto& p : parts) all = all.unite(p);
  return all;
}

Rational ExactShape::value_at(const Rational& x) const {
  Rational best = kZero;
  for (const auto& p : parts) best = max(best, min(kOne, p.distance_to_complement(x)));
  return best.sign() > 0 ? best : floor;
}

Rational ExactShape::pincherle_bound() const {
  const FinClosed rest = open_set().complement();
  if (floor.sign() <= 0 && !rest.empty()) {
    throw std::domain_error("radius function vanishes; no Pincherle bound exists");
  }

  // V(y) = sup { Y(x) : |x - y| < Y(x) }; any admissible Z exceeds V pointwise,
  // so inf V is the best lower bound. V is piecewise constant between the
  // breakpoints collected here.
  std::vector<Rational> marks{kZero, kOne};
  auto mark = [&](const Rational& v) {
    if (v >= kZero && v <= kOne) marks.push_back(v);
  };
  for (const auto& p : parts) {
    for (const auto& piece : p.pieces()) {
      mark(piece.lo);
      mark(piece.hi);
    }
  }
  if (floor.sign() > 0) {
    for (const auto& piece : rest.pieces()) {
      mark(piece.lo - floor);
      mark(piece.hi + floor);
      mark(piece.lo);
      mark(piece.hi);
    }
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  auto envelope = [&](const Rational& y) {
    Rational v = kZero;
    for (const auto& p : parts) {
      if (auto c = p.component_of(y)) v = max(v, reach_of(*c));
    }
    if (floor.sign() > 0 && !rest.empty() && *rest.distance(y) < floor) v = max(v, floor);
    return v;
  };

  std::optional<Rational> lowest;
  auto consider = [&](const Rational& y) {
    Rational v = envelope(y);
    if (!lowest || v < *lowest) lowest = std::move(v);
  };
  for (std::size_t i = 0; i < marks.size(); ++i) {
    consider(marks[i]);
    if (i + 1 < marks.size()) consider((marks[i] + marks[i + 1]) * kHalf);
  }
  if (lowest->sign() <= 0) throw std::domain_error("radius function vanishes; no Pincherle bound exists");
  return *lowest;
}

PincherleOracle exact_pincherle() {
  return [](const OpenR2& radius) {
    if (!radius.shape) throw std::invalid_argument("exact Pincherle oracle needs an exact shape");
    return radius.shape->pincherle_bound();
  };
}

// ------------------------------------------------------------------ gadgets

OpenR2 floor_gadget(const OpenR2& set, unsigned j) {
  const Rational level = Rational::pow2(-static_cast<long>(j));
  std::shared_ptr<const ExactShape> shape;
  if (set.shape) shape = std::make_shared<const ExactShape>(ExactShape{set.shape->parts, level});
  ValueOracle value = [inner = set.value, shape, level](const CauchyReal& x, unsigned k) {
    if (shape && x.exact()) return shape->value_at(*x.exact());
    // Away from exact points Y_j is discontinuous; a clearly positive Y wins,
    // anything else reads as the floor.
    Rational v = inner(x, k + 1);
    return v > Rational::pow2(-static_cast<long>(k) - 1) ? v : level;
  };
  return OpenR2{std::move(value), std::move(shape)};
}

OpenR2 exclude_ball(const OpenR2& set, const Rational& centre, const Rational& radius) {
  const FinOpen outside({RatInterval::open(-1, centre - radius), RatInterval::open(centre + radius, 2)});
  std::shared_ptr<const ExactShape> shape;
  if (set.shape) {
    ExactShape s = *set.shape;
    s.parts.push_back(outside);
    shape = std::make_shared<const ExactShape>(std::move(s));
  }
  ValueOracle value = [inner = set.value, shape, outside](const CauchyReal& x, unsigned k) {
    if (shape && x.exact()) return shape->value_at(*x.exact());
    return max(inner(x, k), min(kOne, outside.distance_to_complement(x.approx(k))));
  };
  return OpenR2{std::move(value), std::move(shape)};
}

// ----------------------------------------------------------------- fullness

Fullness is_full(const OpenR2& set, const PincherleOracle& mu, unsigned depth) {
  std::vector<Rational> answers;
  answers.reserve(depth + 1);
  for (unsigned j = 0; j <= depth; ++j) {
    Rational m = mu(floor_gadget(set, j));
    if (m.sign() <= 0) throw OracleUnsound("Pincherle oracle returned a non-positive bound");
    answers.push_back(std::move(m));
  }
  const Rational tiny = Rational::pow2(-static_cast<long>(depth));
  const bool constant = std::all_of(answers.begin(), answers.end(), [&](const Rational& m) { return m == answers[0]; });
  if (!constant) {
    // Only the floor can make answers depend on j, and the floor is only
    // reachable when O misses a point, which pins mu(Y_depth) <= 2^-depth.
    if (answers.back() > tiny) throw OracleUnsound("Pincherle answers vary with the floor but exceed it");
    return Fullness::NotFull;
  }
  return answers[0] > tiny ? Fullness::Full : Fullness::Undetermined;
}

Fullness resolve_fullness(const OpenR2& set, const PincherleOracle& mu, unsigned first_depth,
                          unsigned max_depth) {
  const Rational base = mu(floor_gadget(set, 0));
  if (base.sign() <= 0) throw OracleUnsound("Pincherle oracle returned a non-positive bound");
  for (unsigned depth = std::max(first_depth, 1u); depth <= max_depth; depth *= 2) {
    const Rational deep = mu(floor_gadget(set, depth));
    const Rational tiny = Rational::pow2(-static_cast<long>(depth));
    if (deep.sign() <= 0) throw OracleUnsound("Pincherle oracle returned a non-positive bound");
    if (deep != base) {
      if (deep > tiny) throw OracleUnsound("Pincherle answers vary with the floor but exceed it");
      return Fullness::NotFull;
    }
    if (base > tiny) return Fullness::Full;
  }
  return Fullness::Undetermined;
}

// ------------------------------------------------------------------------ Δ

Rational delta(const OpenR2& set, const PincherleOracle& mu, const CauchyReal& x, unsigned k) {
  const unsigned first = k + 4;
  switch (resolve_fullness(set, mu, first)) {
    case Fullness::Full:
      return kOne;
    case Fullness::Undetermined:
      throw SearchExhausted("fullness of the set was not decided");
    case Fullness::NotFull:
      break;
  }
  const Rational centre = min(max(point_of(x, k + 2), kZero), kOne);
  // d(centre, O^c) <= r  iff  O ∪ {y : |y - centre| > r} misses a point.
  auto at_most = [&](const Rational& r) {
    switch (resolve_fullness(exclude_ball(set, centre, r), mu, first)) {
      case Fullness::NotFull:
        return true;
      case Fullness::Full:
        return false;
      case Fullness::Undetermined:
        break;
    }
    throw SearchExhausted("fullness of an exclusion gadget was not decided");
  };
  Rational lo = kZero;
  Rational hi = kOne;
  if (!at_most(hi)) throw OracleUnsound("oracle reports the set full after excluding all of [0,1]");
  const Rational width = Rational::pow2(-static_cast<long>(k) - 2);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) * kHalf;
    if (at_most(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) * kHalf;
}

OpenR3 delta_r3(const OpenR2& set, const PincherleOracle& mu) {
  return OpenR3{[set, mu](const CauchyReal& x, unsigned k) { return delta(set, mu, x, k); }, false};
}

OpenR4 psi(const OpenR2& set, const PincherleOracle& mu) {
  switch (resolve_fullness(set, mu, 8)) {
    case Fullness::Full:
      return r3_to_r4(OpenR3{[](const CauchyReal&, unsigned) { return kOne; }, true});
    case Fullness::NotFull:
      return r3_to_r4(delta_r3(set, mu));
    case Fullness::Undetermined:
      break;
  }
  throw SearchExhausted("fullness of the set was not decided");
}

}  // namespace opensets
