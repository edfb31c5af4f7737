#include "opensets/adversary.hpp"

#include <set>

#include "opensets/enumeration.hpp"
#include "opensets/errors.hpp"

namespace opensets {

namespace {

constexpr std::size_t kGridDenominator = 1024;
constexpr std::size_t kNaiveCoverCap = std::size_t{1} << 20;
constexpr unsigned kProbeStageFuel = 1u << 16;

Rational snapshot_of(const CauchyReal& x) { return x.exact() ? *x.exact() : x.approx(ProbeLog::kSnapshotStage); }

// [0,1] \ {p} with values min(Y(x), |x - p|); Y's answers away from p are unchanged.
OpenR2 remove_point(const OpenR2& base, const Rational& p) {
  auto shape = std::make_shared<const ExactShape>(ExactShape{{FinOpen::punctured(std::vector<Rational>{p})}, Rational(0)});
  ValueOracle value = [inner = base.value, p](const CauchyReal& x, unsigned k) {
    const Rational at = x.exact() ? *x.exact() : x.approx(k);
    return min(inner(x, k), (at - p).abs());
  };
  return OpenR2{std::move(value), std::move(shape)};
}

}  // namespace

// ------------------------------------------------------------------ ProbeLog

std::optional<std::size_t> ProbeLog::find_locked(const Rational& snapshot) const {
  const Rational tolerance = Rational::pow2(-18);
  auto it = by_point_.lower_bound(snapshot - tolerance);
  if (it != by_point_.end() && it->first <= snapshot + tolerance) return it->second;
  return std::nullopt;
}

std::size_t ProbeLog::index_of(const CauchyReal& x) {
  const Rational snapshot = snapshot_of(x);
  std::lock_guard lock(mutex_);
  if (auto found = find_locked(snapshot)) return *found;
  const std::size_t index = order_.size();
  by_point_.emplace(snapshot, index);
  order_.push_back(snapshot);
  return index;
}

std::optional<std::size_t> ProbeLog::find(const Rational& snapshot) const {
  std::lock_guard lock(mutex_);
  return find_locked(snapshot);
}

std::size_t ProbeLog::size() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

std::vector<Rational> ProbeLog::points() const {
  std::lock_guard lock(mutex_);
  return order_;
}

// -------------------------------------------------------------- AdversaryFull

AdversaryFull::AdversaryFull() : log_(std::make_shared<ProbeLog>()) {}

OpenR2 AdversaryFull::oracle() const {
  auto shape = std::make_shared<const ExactShape>(ExactShape{{FinOpen::full()}, Rational(0)});
  return OpenR2{[log = log_](const CauchyReal& x, unsigned) { return radius_for(log->index_of(x)); }, shape};
}

std::vector<RatInterval> AdversaryFull::assigned_balls() const {
  std::vector<RatInterval> balls;
  const auto points = log_->points();
  for (std::size_t e = 0; e < points.size(); ++e) {
    const Rational r = radius_for(e);
    balls.push_back(RatInterval::open(points[e] - r, points[e] + r));
  }
  return balls;
}

// ----------------------------------------------------------------- harnesses

AdversaryOutcome adversary_hbc(const HbcRealiser& beta) {
  AdversaryOutcome out;
  const FinClosed d({RatInterval::closed(Rational(1, 3), Rational(2, 3))});
  const OpenR4 cover{[](std::size_t n) {
    return RatInterval::open(Rational(1, static_cast<long>(n) + 2), Rational(1));
  }};

  std::map<Rational, bool> first_run;
  const MembershipProbe probe = [&](const Rational& q) {
    const bool member = d.contains(q);
    first_run.emplace(q, member);
    return member;
  };
  out.first_answer = beta(probe, cover);
  out.probes = first_run.size();
  if (!out.first_answer) return out;
  const std::size_t k = *out.first_answer;

  const Rational bound(mpz_class(1), mpz_class(static_cast<unsigned long>(k)) + 2);
  Rational x(mpz_class(1), mpz_class(static_cast<unsigned long>(k)) + 3);
  if (first_run.count(x)) {
    RationalsIn fresh(Rational(0), bound);
    for (auto q = fresh.next(); q; q = fresh.next()) {
      if (!first_run.count(*q)) {
        x = *q;
        break;
      }
    }
  }

  const MembershipProbe replay = [&](const Rational& q) {
    const bool member = q == x || d.contains(q);
    if (auto it = first_run.find(q); it != first_run.end() && it->second != member) out.replay_faithful = false;
    return member;
  };
  out.second_answer = beta(replay, cover);
  if (!out.second_answer) return out;

  // x lies in D ∪ {x}; the answer is wrong when no piece of the prefix holds x.
  const FinClosed point({RatInterval::closed(x, x)});
  bool covered = false;
  for (std::size_t n = 0; n <= *out.second_answer && !covered; ++n) {
    const RatInterval piece = cover.entry(n);
    covered = covers(point, std::span<const RatInterval>(&piece, 1));
  }
  if (!covered) out.witness = RefutationWitness{x, *out.second_answer, true};
  return out;
}

AdversaryOutcome adversary_r2_cover(const R2CoverRealiser& beta) {
  AdversaryOutcome out;
  AdversaryFull adversary;
  const OpenR2 base = adversary.oracle();
  out.first_answer = beta([base](std::size_t) { return base; });
  out.probes = adversary.log().size();
  if (!out.first_answer) return out;
  const std::size_t k = *out.first_answer;

  const FinOpen assigned(adversary.assigned_balls());
  Rational p;
  RationalsIn candidates(Rational(-1), Rational(2));
  for (auto q = candidates.next(); q; q = candidates.next()) {
    if (!adversary.log().find(*q) && !assigned.contains(*q)) {
      p = *q;
      break;
    }
  }

  // Every logged point keeps its value: p lies outside its ball.
  const auto logged = adversary.log().points();
  for (std::size_t e = 0; e < logged.size(); ++e) {
    if ((logged[e] - p).abs() < AdversaryFull::radius_for(e)) out.replay_faithful = false;
  }

  const OpenR2 removed = remove_point(base, p);
  const R2Sequence modified = [base, removed, k](std::size_t i) { return i <= k + 1 ? removed : base; };
  out.second_answer = beta(modified);
  if (!out.second_answer || *out.second_answer > k + 1) return out;

  std::vector<RatInterval> pieces;
  for (std::size_t i = 0; i <= *out.second_answer; ++i) {
    const auto& part = modified(i).shape->open_set().pieces();
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  if (!covers(FinClosed({RatInterval::closed(p, p)}), pieces)) {
    out.witness = RefutationWitness{p, *out.second_answer, true};
  }
  return out;
}

// ------------------------------------------------------------ naive betas

HbcRealiser naive_grid_hbc() {
  return [](const MembershipProbe& member, const OpenR4& cover) -> std::optional<std::size_t> {
    std::size_t k = 0;
    for (std::size_t j = 0; j <= kGridDenominator; ++j) {
      const Rational q(static_cast<long>(j), static_cast<long>(kGridDenominator));
      if (!member(q)) continue;
      std::size_t n = 0;
      while (!cover.entry(n).contains(q)) {
        if (++n == kNaiveCoverCap) return std::nullopt;
      }
      k = std::max(k, n);
    }
    return k;
  };
}

HbcRealiser constant_hbc(std::size_t k) {
  return [k](const MembershipProbe&, const OpenR4&) -> std::optional<std::size_t> { return k; };
}

HbcRealiser refusing_hbc() {
  return [](const MembershipProbe&, const OpenR4&) -> std::optional<std::size_t> { return std::nullopt; };
}

R2CoverRealiser naive_grid_r2(std::size_t max_sets) {
  return [max_sets](const R2Sequence& sets) -> std::optional<std::size_t> {
    std::vector<char> certified(kGridDenominator + 1, 0);
    std::size_t remaining = certified.size();
    for (std::size_t i = 0; i < max_sets; ++i) {
      const OpenR2 set = sets(i);
      for (std::size_t j = 0; j <= kGridDenominator; ++j) {
        if (certified[j]) continue;
        const Rational q(static_cast<long>(j), static_cast<long>(kGridDenominator));
        if (inner_radius(set, CauchyReal::constant(q), kProbeStageFuel)) {
          certified[j] = 1;
          --remaining;
        }
      }
      if (remaining == 0) return i;
    }
    return std::nullopt;
  };
}

R2CoverRealiser psi_pipeline_r2(std::size_t fuel) {
  return [fuel](const R2Sequence& sets) -> std::optional<std::size_t> {
    try {
      return hbc_r2(sets, exact_pincherle(), fuel);
    } catch (const SearchExhausted&) {
      return std::nullopt;
    }
  };
}

R2CoverRealiser refusing_r2() {
  return [](const R2Sequence&) -> std::optional<std::size_t> { return std::nullopt; };
}

}  // namespace opensets
