#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// work from raw piece lists, never from the normal forms under test.

#include <random>
#include <vector>

#include "opensets/interval.hpp"

namespace testsupport {

using opensets::Bound;
using opensets::FinClosed;
using opensets::FinOpen;
using opensets::RatInterval;
using opensets::Rational;

inline Rational grid_rational(std::mt19937& rng, long den, long lo_num, long hi_num) {
  std::uniform_int_distribution<long> pick(lo_num, hi_num);
  return Rational(pick(rng), den);
}

/// Up to max_pieces raw open pieces with endpoints on the 1/den grid in [-1/4, 5/4].
inline std::vector<RatInterval> random_open_pieces(std::mt19937& rng, int max_pieces = 4, long den = 32) {
  std::uniform_int_distribution<int> count(0, max_pieces);
  std::vector<RatInterval> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rational a = grid_rational(rng, den, -den / 4, den + den / 4);
    Rational b = grid_rational(rng, den, -den / 4, den + den / 4);
    if (b < a) std::swap(a, b);
    out.push_back(RatInterval::open(a, b));
  }
  return out;
}

/// Raw closed pieces inside [0,1].
inline std::vector<RatInterval> random_closed_pieces(std::mt19937& rng, int max_pieces = 3, long den = 32) {
  std::uniform_int_distribution<int> count(0, max_pieces);
  std::vector<RatInterval> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rational a = grid_rational(rng, den, 0, den);
    Rational b = grid_rational(rng, den, 0, den);
    if (b < a) std::swap(a, b);
    out.push_back(RatInterval::closed(a, b));
  }
  return out;
}

inline bool in_unit(const Rational& x) { return x >= Rational(0) && x <= Rational(1); }

inline bool brute_member_open(const std::vector<RatInterval>& raw, const Rational& x) {
  if (!in_unit(x)) return false;
  for (const auto& p : raw) {
    if (p.lo < x && x < p.hi) return true;
  }
  return false;
}

inline bool brute_member_closed(const std::vector<RatInterval>& raw, const Rational& x) {
  if (!in_unit(x)) return false;
  for (const auto& p : raw) {
    if (p.lo <= x && x <= p.hi) return true;
  }
  return false;
}

inline std::vector<Rational> unit_grid(long den) {
  std::vector<Rational> out;
  for (long j = 0; j <= den; ++j) out.emplace_back(j, den);
  return out;
}

/// d(x, [0,1] \ U) for x in [0,1]: the nearest non-member among x, 0, 1 and
/// the raw endpoints, which is where the complement's boundary can sit.
inline Rational brute_distance_to_complement(const std::vector<RatInterval>& raw, const Rational& x) {
  std::vector<Rational> candidates{Rational(0), Rational(1), x};
  for (const auto& p : raw) {
    candidates.push_back(p.lo);
    candidates.push_back(p.hi);
  }
  bool any = false;
  Rational best(1);
  for (const auto& c : candidates) {
    if (!in_unit(c) || brute_member_open(raw, c)) continue;
    const Rational d = (c - x).abs();
    if (!any || d < best) best = d;
    any = true;
  }
  if (!any) return Rational(1);  // the complement is empty
  return best;
}

}  // namespace testsupport
