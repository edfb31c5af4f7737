#pragma once

// Four presentations of an open O ⊆ [0,1], from least to most information:
//
//   OpenR1  value oracle Y with O = {x : Y(x) > 0}
//   OpenR2  same, plus the radius promise: Y(x) > 0 implies (x - Y(x), x + Y(x)) ⊆ O
//   OpenR3  distance to the complement, constant 1 when O = [0,1]
//   OpenR4  an enumeration of rational open intervals whose union is O
//
// and the conversions between them that are effective at desk scale.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "opensets/cauchy_real.hpp"
#include "opensets/interval.hpp"

namespace opensets {

/// (x, k) -> a 2^-k approximation of the oracle's value at x.
using ValueOracle = std::function<Rational(const CauchyReal& x, unsigned k)>;

/// Stage cap used where an operation certifies positivity without a caller budget.
inline constexpr unsigned kDefaultStageFuel = 256;

/// Exact description of a radius function, for oracles built over FinOpen sets:
///   Y(x) = max_i min(1, d(x, [0,1] \ parts[i]))   where that is positive,
///   Y(x) = floor                                  elsewhere.
/// The floor is 0 for honest R.2 presentations and 2^-j for the gadgets used
/// to test fullness. An exact Pincherle oracle reads this description.
struct ExactShape {
  std::vector<FinOpen> parts;
  Rational floor;

  /// Union of the parts: the set where Y exceeds the floor.
  FinOpen open_set() const;
  Rational value_at(const Rational& x) const;
  /// The optimal lower bound a Pincherle realiser may return for this function.
  Rational pincherle_bound() const;
};

struct OpenR1 {
  ValueOracle value;
};

struct OpenR2 {
  ValueOracle value;
  std::shared_ptr<const ExactShape> shape;  // null for opaque oracles

  static OpenR2 from_finopen(const FinOpen& set);
  static OpenR2 from_shape(ExactShape shape);

  Rational operator()(const CauchyReal& x, unsigned k) const { return value(x, k); }
  OpenR1 forget_radius() const { return OpenR1{value}; }
};

struct OpenR3 {
  ValueOracle dist;
  bool full = false;
};

struct OpenR4 {
  std::function<RatInterval(std::size_t)> entry;

  /// The pieces, then empty intervals forever.
  static OpenR4 from_list(std::vector<RatInterval> pieces);
  static OpenR4 from_finopen(const FinOpen& set) { return from_list(set.pieces()); }
  static OpenR4 constant(RatInterval piece);

  RatInterval operator()(std::size_t n) const { return entry(n); }
  std::vector<RatInterval> prefix(std::size_t count) const;
};

/// Closed set presented by an enumeration of its complement.
struct ClosedRM {
  OpenR4 complement;

  static ClosedRM from_finclosed(const FinClosed& set);
};

/// M_u: positive lower bound for every Z locally bounded away from zero by Y.
using PincherleOracle = std::function<Rational(const OpenR2& radius)>;

/// (q, n) -> points y_0..y_k whose certified balls cover the closed ball B̄(q, 2^-n).
using CoverOracle = std::function<std::optional<std::vector<CauchyReal>>(const Rational& q, unsigned n)>;

/// Pincherle oracle answering from ExactShape; throws std::invalid_argument for opaque oracles.
PincherleOracle exact_pincherle();

// ---------------------------------------------------------------- membership

/// Dovetailed search: stage s tests entries 0..s at comparison precision s.
/// Returns the certified entry index, or nullopt when fuel probes ran out.
std::optional<std::size_t> member_semidecide(const OpenR4& set, const CauchyReal& x, std::size_t fuel);

/// Certified positive lower bound r <= Y(x), so B(x, r) ∩ [0,1] ⊆ O.
/// Tries stages 0, 1, 2, 4, 8, ... up to fuel.
std::optional<Rational> inner_radius(const OpenR2& set, const CauchyReal& x, unsigned fuel);

// --------------------------------------------------------------- conversions

/// Stage m of the stream visits the dyadic points j/2^m and emits
/// (q - l, q + l) for the certified lower bound l of dist(q), or an empty entry.
OpenR4 r3_to_r4(const OpenR3& dist);

/// Exact distance function of a FinOpen.
OpenR3 r4_to_r3_fin(const FinOpen& set);

/// Largest r on the grid 2^-k Z such that entries 0..m-1 cover [x~ - r, x~ + r],
/// x~ the stage k+3 approximation of x. Non-decreasing in m.
Rational r4_to_r3_stage(const OpenR4& set, const CauchyReal& x, unsigned k, std::size_t m);

/// Maximal open intervals of the union, pairwise disjoint.
std::vector<RatInterval> components(std::span<const RatInterval> pieces);
/// Components of the first m entries of a stream.
std::vector<RatInterval> components_prefix(const OpenR4& set, std::size_t m);

/// Probes the first `budget` rationals of the enumeration and unites the
/// certified balls. Always a subset of O; never promised to be all of it.
FinOpen r2_probe_r4(const OpenR2& set, std::size_t budget, unsigned stage_fuel = 1u << 16);

// ------------------------------------------------------------ Pincherle / Δ

enum class Fullness { Full, NotFull, Undetermined };

/// Y_j: Y where positive, 2^-j elsewhere.
OpenR2 floor_gadget(const OpenR2& set, unsigned j);

/// R.2 presentation of O ∪ {y : |y - centre| > radius}.
OpenR2 exclude_ball(const OpenR2& set, const Rational& centre, const Rational& radius);

/// Reads mu(Y_0), ..., mu(Y_depth). Unequal values prove O != [0,1]; a common
/// value above 2^-depth proves O = [0,1]. Throws OracleUnsound when the
/// answers fit neither case.
Fullness is_full(const OpenR2& set, const PincherleOracle& mu, unsigned depth);

/// is_full at increasing depths (first, 2*first, ...) comparing only Y_0 and
/// Y_depth; enough for a sound oracle and much cheaper.
Fullness resolve_fullness(const OpenR2& set, const PincherleOracle& mu, unsigned first_depth,
                          unsigned max_depth = 4096);

/// 2^-k approximation of d(x, [0,1] \ O) by bisection on the radius of
/// exclude_ball, each probe decided by resolve_fullness. Returns 1 when O = [0,1].
Rational delta(const OpenR2& set, const PincherleOracle& mu, const CauchyReal& x, unsigned k);

/// delta packaged as an R.3 presentation.
OpenR3 delta_r3(const OpenR2& set, const PincherleOracle& mu);

/// r3_to_r4 ∘ delta_r3.
OpenR4 psi(const OpenR2& set, const PincherleOracle& mu);

// ----------------------------------------------------------- cover searches

/// Greedy left-to-right march across B̄(q, 2^-n) ∩ [0,1], one certified ball
/// per frontier point. nullopt when fuel runs out or a frontier point does
/// not certify.
std::optional<std::vector<CauchyReal>> cover_search(const OpenR2& set, const Rational& q, unsigned n,
                                                    std::size_t fuel);

CoverOracle default_cover_oracle(const OpenR2& set, std::size_t fuel);

/// Independent check: recertifies each witness radius and sweeps.
bool verify_cover_witness(const OpenR2& set, const Rational& q, unsigned n,
                          std::span<const CauchyReal> witnesses);

/// R.4 stream over pairs (q, n): the open ball B(q, 2^-n) whenever the cover
/// oracle returns a witness that verifies, otherwise an empty entry.
OpenR4 certified_r4(const OpenR2& set, CoverOracle cover);

}  // namespace opensets
