#pragma once

#include <optional>
#include <span>
#include <vector>

#include "opensets/rational.hpp"

namespace opensets {

enum class Bound { Open, Closed };

/// A rational interval. Set semantics are always relative to [0,1].
struct RatInterval {
  Rational lo;
  Rational hi;
  Bound kind = Bound::Open;

  static RatInterval open(Rational a, Rational b) { return {std::move(a), std::move(b), Bound::Open}; }
  static RatInterval closed(Rational a, Rational b) { return {std::move(a), std::move(b), Bound::Closed}; }

  /// Empty as an interval of the line (ignores the [0,1] restriction).
  bool is_empty() const { return kind == Bound::Open ? lo >= hi : lo > hi; }
  /// Empty after intersecting with [0,1].
  bool misses_unit() const;
  bool contains(const Rational& x) const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

class FinClosed;

/// Finite union of open rational intervals, relative to [0,1].
///
/// Normal form: pieces sorted, pairwise disjoint, each meeting [0,1].
/// Ends reaching past the unit interval are pinned to -1 and 2, so equal
/// sets have equal normal forms. Touching pieces such as (0,1/3) and
/// (1/3,2/3) stay separate: 1/3 is in neither.
class FinOpen {
 public:
  FinOpen() = default;
  explicit FinOpen(std::vector<RatInterval> pieces);

  static FinOpen full() { return FinOpen({RatInterval::open(-1, 2)}); }
  static FinOpen punctured(std::span<const Rational> points);

  const std::vector<RatInterval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool covers_unit() const;
  bool contains(const Rational& x) const;
  /// The piece containing x, if any.
  std::optional<RatInterval> component_of(const Rational& x) const;
  /// Whether the open interval iv (relative to [0,1]) lies inside this set.
  bool contains_interval(const RatInterval& iv) const;

  /// d(x, [0,1] \ U) for x clamped into [0,1]; 1 when U covers [0,1].
  Rational distance_to_complement(const Rational& x) const;

  FinClosed complement() const;
  FinOpen unite(const FinOpen& other) const;

  friend bool operator==(const FinOpen&, const FinOpen&) = default;

 private:
  std::vector<RatInterval> pieces_;
};

/// Finite union of closed rational intervals clipped to [0,1].
/// Normal form: sorted, pairwise disjoint (touching pieces merge), non-empty.
class FinClosed {
 public:
  FinClosed() = default;
  explicit FinClosed(std::vector<RatInterval> pieces);

  static FinClosed unit() { return FinClosed({RatInterval::closed(0, 1)}); }

  const std::vector<RatInterval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(const Rational& x) const;
  /// d(x, C); nullopt when C is empty.
  std::optional<Rational> distance(const Rational& x) const;

  /// [0,1] \ C as a FinOpen.
  FinOpen complement() const;
  FinClosed unite(const FinClosed& other) const;

  friend bool operator==(const FinClosed&, const FinClosed&) = default;

 private:
  std::vector<RatInterval> pieces_;
};

/// True iff every point of target lies in some open piece. Exact endpoint sweep.
bool covers(const FinClosed& target, std::span<const RatInterval> pieces);

/// Exact Lebesgue measure of the union of pieces, clipped to [0,1].
Rational measure(std::span<const RatInterval> pieces);

/// Sum of the unclipped lengths |hi - lo| of the non-empty pieces.
Rational total_length(std::span<const RatInterval> pieces);

}  // namespace opensets
