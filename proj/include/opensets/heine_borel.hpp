#pragma once

// Finite sub-covers for countable covers of closed subsets of [0,1].

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "opensets/representations.hpp"

namespace opensets {

struct SubcoverCertificate {
  std::size_t n0 = 0;
  std::vector<RatInterval> used_pieces;        // cover(0..n0)
  std::vector<RatInterval> complement_pieces;  // complement(0..n0)
  bool verified = false;
};

/// Least m such that cover(0..m) and complement(0..m) together cover [0,1].
/// Tests m < fuel only.
std::optional<SubcoverCertificate> hbc_rm(const ClosedRM& closed, const OpenR4& cover, std::size_t fuel);

using R2Sequence = std::function<OpenR2(std::size_t)>;
using R4Sequence = std::function<OpenR4(std::size_t)>;

/// k with [0,1] ⊆ O_0 ∪ ... ∪ O_k, found through psi on each set and hbc_rm
/// on the interleaved streams. The least k the found certificate supports,
/// not necessarily the least overall.
std::optional<std::size_t> hbc_r2(const R2Sequence& sets, const PincherleOracle& mu, std::size_t fuel);

struct WeakSubcover {
  std::size_t n0 = 0;
  std::vector<RatInterval> patches;
  std::size_t stage = 0;  // complement(0..stage) was consulted
};

/// Finds n0 and open patches of total length < epsilon with
/// C ⊆ cover(0..n0) ∪ patches. Candidates run along diagonals s = n0 + d,
/// larger n0 first; d = 0 means no patches, d >= 1 widens each remaining
/// piece [a, b] of C to (a - 2^-(d+5), b + 2^-(d+5)). fuel bounds the
/// number of candidates tested.
std::optional<WeakSubcover> whbc(const ClosedRM& closed, const OpenR4& cover, const Rational& epsilon,
                                 std::size_t fuel);

/// Least n0 such that pieces drawn from O_0..O_n0 cover [0,1]. Stage s draws
/// O_i(j) for i, j <= s; fuel bounds the number of pieces drawn.
std::optional<std::size_t> hbc_seq(const R4Sequence& sets, std::size_t fuel);

/// Rational open interval inside (a, b), from stage-k approximations.
/// Empty when the approximations cannot certify a sub-interval.
RatInterval rational_surrogate(const CauchyReal& a, const CauchyReal& b, unsigned k);

}  // namespace opensets
