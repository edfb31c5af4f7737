#pragma once

// Adversaries that refute candidate realisers using only finitely many of
// their queries, and the naive realisers they refute.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "opensets/heine_borel.hpp"
#include "opensets/representations.hpp"

namespace opensets {

/// Indices 0, 1, 2, ... for distinct queries in arrival order. Two queries
/// are the same point when their stage-20 snapshots lie within 2^-18.
class ProbeLog {
 public:
  static constexpr unsigned kSnapshotStage = 20;

  std::size_t index_of(const CauchyReal& x);
  /// Index of an already logged point, without logging it.
  std::optional<std::size_t> find(const Rational& snapshot) const;

  std::size_t size() const;
  /// Logged snapshots in index order.
  std::vector<Rational> points() const;

 private:
  std::optional<std::size_t> find_locked(const Rational& snapshot) const;

  mutable std::mutex mutex_;
  std::map<Rational, std::size_t> by_point_;
  std::vector<Rational> order_;
};

/// R.2 presentation of [0,1] whose e-th distinct query gets value 2^-(e+3).
class AdversaryFull {
 public:
  AdversaryFull();

  /// The oracle. Its shape is the distance presentation of [0,1], so an
  /// exact Pincherle oracle answers for the set, not for these values.
  OpenR2 oracle() const;
  ProbeLog& log() { return *log_; }
  const ProbeLog& log() const { return *log_; }

  static Rational radius_for(std::size_t index) { return Rational::pow2(-static_cast<long>(index) - 3); }
  /// Balls (x_e - 2^-(e+3), x_e + 2^-(e+3)) of every logged point.
  std::vector<RatInterval> assigned_balls() const;

 private:
  std::shared_ptr<ProbeLog> log_;
};

struct RefutationWitness {
  Rational point;
  std::size_t k = 0;
  bool verified = false;
};

struct AdversaryOutcome {
  std::optional<std::size_t> first_answer;
  std::optional<std::size_t> second_answer;
  std::optional<RefutationWitness> witness;  // nullopt: Survived
  std::size_t probes = 0;
  bool replay_faithful = true;

  bool refuted() const { return witness.has_value(); }
};

/// Closed-set membership as the realiser sees it.
using MembershipProbe = std::function<bool(const Rational&)>;
/// Candidate for countable Heine-Borel: closed set, cover -> k.
using HbcRealiser = std::function<std::optional<std::size_t>(const MembershipProbe&, const OpenR4&)>;
/// Candidate for covers by a sequence of R.2 sets -> k.
using R2CoverRealiser = std::function<std::optional<std::size_t>(const R2Sequence&)>;

/// Runs beta on D = [1/3, 2/3] with cover (1/(n+2), 1), then on D ∪ {x} for a
/// rational x in (0, 1/(k+2)) beta never asked about.
AdversaryOutcome adversary_hbc(const HbcRealiser& beta);

/// Runs beta on constant adversarial presentations of [0,1], then removes an
/// unprobed point p from sets 0..k+1 and runs it again.
AdversaryOutcome adversary_r2_cover(const R2CoverRealiser& beta);

/// Probes D on the grid j/2^10 and answers the least k whose prefix covers
/// every probed member.
HbcRealiser naive_grid_hbc();
/// Answers k without looking at anything.
HbcRealiser constant_hbc(std::size_t k);
/// Never answers.
HbcRealiser refusing_hbc();

/// Certifies each set at the grid j/2^10 and answers the least k such that
/// every grid point is certified in one of sets 0..k (at most max_sets sets).
R2CoverRealiser naive_grid_r2(std::size_t max_sets = 8);
/// hbc_r2 with a Pincherle oracle that reads each set's exact shape.
R2CoverRealiser psi_pipeline_r2(std::size_t fuel);
R2CoverRealiser refusing_r2();

}  // namespace opensets
