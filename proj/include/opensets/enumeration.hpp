#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "opensets/rational.hpp"

namespace opensets {

/// The pinned enumeration of Q ∩ [0,1]: by denominator, then numerator,
/// lowest terms only. 0, 1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
///
/// "The first rational in (a,b)" always means first in this order, which is
/// the Stern–Brocot simplest rational of the interval.
Rational enumerate_rational(std::size_t index);

/// Inverse of enumerate_rational for q in [0,1].
std::size_t rational_index(const Rational& q);

/// The rational of least denominator strictly between a and b (0 <= a < b).
Rational simplest_between(const Rational& a, const Rational& b);

/// Walks Q ∩ (a,b) ∩ [0,1] in enumeration order without scanning the
/// denominators that contribute nothing.
class RationalsIn {
 public:
  RationalsIn(Rational a, Rational b);

  /// Next rational in order, or nullopt when the interval holds none.
  std::optional<Rational> next();

 private:
  Rational lo_, hi_;
  mpz_class den_;
  mpz_class num_;
  mpz_class num_end_;
  int phase_ = 0;  // 0: try 0, 1: try 1, 2: denominators >= 2
  bool exhausted_ = false;
  // Narrow intervals skip whole runs of empty denominators: the next
  // rational is the simplest one in some gap between those already produced.
  bool gap_mode_ = false;
  std::vector<Rational> produced_;  // sorted, gap mode only
  void start_denominator();
  std::optional<Rational> next_by_gaps();
};

/// Cantor pairing t -> (first, second) with t = (f+s)(f+s+1)/2 + s.
std::pair<std::size_t, std::size_t> unpair(std::size_t t);
std::size_t pair_index(std::size_t first, std::size_t second);

/// Dyadic grid enumeration: stage m contributes j/2^m for j = 0..2^m.
/// Returns (stage, point) for a flat index.
std::pair<unsigned, Rational> dyadic_grid_point(std::size_t index);

}  // namespace opensets
