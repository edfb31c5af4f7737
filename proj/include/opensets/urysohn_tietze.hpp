#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opensets/cauchy_real.hpp"
#include "opensets/interval.hpp"

namespace opensets {

/// Piecewise linear function: linear between breakpoints, constant beyond them.
class PLFunction {
 public:
  using Point = std::pair<Rational, Rational>;  // (x, value)

  PLFunction() : PLFunction(std::vector<Point>{{Rational(0), Rational(0)}}) {}
  /// Breakpoints must be strictly increasing in x and non-empty.
  explicit PLFunction(std::vector<Point> breakpoints);

  static PLFunction constant(Rational value) { return PLFunction({{Rational(0), std::move(value)}}); }

  const std::vector<Point>& breakpoints() const { return points_; }
  Rational operator()(const Rational& x) const;
  Rational min_value() const;
  Rational max_value() const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Point> points_;
};

/// 2^-k approximation of d(x, C). Throws EmptySet when C is empty.
Rational distance_closed(const FinClosed& set, const CauchyReal& x, unsigned k);

/// inf |x - y| over x in a, y in b; nullopt stands for +infinity (an empty side).
std::optional<Rational> separation_gap(const FinClosed& a, const FinClosed& b);

/// g with g = i exactly on C_i and 0 <= g <= 1. Gaps between pieces of
/// different sets are linear; gaps between two pieces of the same set C_i
/// rise (or fall) linearly to 1/2 at the midpoint and back, so g = i only on
/// C_i; beyond the outermost pieces g is constant. Both sets empty gives g = 0.
/// Throws NotDisjoint when the sets meet.
PLFunction urysohn(const FinClosed& c0, const FinClosed& c1);

/// g = f on D, linear across each gap of D, constant beyond D. f must have
/// a breakpoint at every endpoint of D. Throws EmptySet when D is empty.
PLFunction tietze_extend(const FinClosed& domain, const PLFunction& f);

}  // namespace opensets
