#include "opensets/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace opensets {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool by_lo(const RatInterval& a, const RatInterval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

}  // namespace

bool RatInterval::misses_unit() const {
  if (is_empty()) return true;
  if (kind == Bound::Open) return !(lo < kOne && hi > kZero);
  return lo > kOne || hi < kZero;
}

bool RatInterval::contains(const Rational& x) const {
  if (x < kZero || x > kOne) return false;
  return kind == Bound::Open ? (lo < x && x < hi) : (lo <= x && x <= hi);
}

// ---------------------------------------------------------------- FinOpen

FinOpen::FinOpen(std::vector<RatInterval> pieces) {
  std::vector<RatInterval> kept;
  kept.reserve(pieces.size());
  for (auto& p : pieces) {
    if (p.kind != Bound::Open) throw std::invalid_argument("FinOpen piece must be open");
    if (p.misses_unit()) continue;
    if (p.lo < kZero) p.lo = Rational(-1);
    if (p.hi > kOne) p.hi = Rational(2);
    kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(), by_lo);
  for (auto& p : kept) {
    if (!pieces_.empty() && p.lo < pieces_.back().hi) {
      if (p.hi > pieces_.back().hi) pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

FinOpen FinOpen::punctured(std::span<const Rational> points) {
  std::vector<Rational> cuts;
  for (const auto& p : points) {
    if (p >= kZero && p <= kOne) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<RatInterval> pieces;
  Rational left(-1);
  for (const auto& c : cuts) {
    pieces.push_back(RatInterval::open(left, c));
    left = c;
  }
  pieces.push_back(RatInterval::open(left, 2));
  return FinOpen(std::move(pieces));
}

bool FinOpen::covers_unit() const {
  return pieces_.size() == 1 && pieces_.front().lo < kZero && pieces_.front().hi > kOne;
}

bool FinOpen::contains(const Rational& x) const { return component_of(x).has_value(); }

std::optional<RatInterval> FinOpen::component_of(const Rational& x) const {
  if (x < kZero || x > kOne) return std::nullopt;
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const RatInterval& p) { return v < p.lo; });
  if (it == pieces_.begin()) return std::nullopt;
  --it;
  if (it->contains(x)) return *it;
  return std::nullopt;
}

bool FinOpen::contains_interval(const RatInterval& iv) const {
  if (iv.misses_unit()) return true;
  // Clip to [0,1]; ends pinned past the unit interval mean "reaches the boundary inclusively".
  const bool left_closed = iv.lo < kZero || (iv.kind == Bound::Closed && iv.lo >= kZero);
  const bool right_closed = iv.hi > kOne || (iv.kind == Bound::Closed && iv.hi <= kOne);
  const Rational a = max(iv.lo, kZero);
  const Rational b = min(iv.hi, kOne);
  for (const auto& p : pieces_) {
    const bool left_ok = left_closed ? (p.lo < a) : (p.lo <= a);
    const bool right_ok = right_closed ? (p.hi > b) : (p.hi >= b);
    if (left_ok && right_ok) return true;
  }
  return false;
}

Rational FinOpen::distance_to_complement(const Rational& x_in) const {
  if (covers_unit()) return kOne;
  const Rational x = min(max(x_in, kZero), kOne);
  const auto comp = component_of(x);
  if (!comp) return kZero;
  // The complement is non-empty, so at least one end lies inside [0,1].
  if (comp->lo < kZero) return comp->hi - x;
  if (comp->hi > kOne) return x - comp->lo;
  return min(x - comp->lo, comp->hi - x);
}

FinClosed FinOpen::complement() const {
  std::vector<RatInterval> gaps;
  Rational left(0);  // open ends are never in U, so `left` is in the complement
  for (const auto& p : pieces_) {
    if (p.lo >= kZero) gaps.push_back(RatInterval::closed(left, p.lo));
    left = p.hi;
  }
  if (left <= kOne) gaps.push_back(RatInterval::closed(left, kOne));
  return FinClosed(std::move(gaps));
}

FinOpen FinOpen::unite(const FinOpen& other) const {
  std::vector<RatInterval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return FinOpen(std::move(all));
}

// -------------------------------------------------------------- FinClosed

FinClosed::FinClosed(std::vector<RatInterval> pieces) {
  std::vector<RatInterval> kept;
  kept.reserve(pieces.size());
  for (auto& p : pieces) {
    if (p.kind != Bound::Closed) throw std::invalid_argument("FinClosed piece must be closed");
    if (p.misses_unit()) continue;
    p.lo = max(p.lo, kZero);
    p.hi = min(p.hi, kOne);
    kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end(), by_lo);
  for (auto& p : kept) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
      if (p.hi > pieces_.back().hi) pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(std::move(p));
    }
  }
}

bool FinClosed::contains(const Rational& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const RatInterval& p) { return v < p.lo; });
  if (it == pieces_.begin()) return false;
  --it;
  return it->lo <= x && x <= it->hi;
}

std::optional<Rational> FinClosed::distance(const Rational& x) const {
  if (pieces_.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& p : pieces_) {
    Rational d = x < p.lo ? p.lo - x : (x > p.hi ? x - p.hi : Rational(0));
    if (!best || d < *best) best = std::move(d);
  }
  return best;
}

FinOpen FinClosed::complement() const {
  std::vector<RatInterval> gaps;
  Rational left(-1);
  for (const auto& p : pieces_) {
    gaps.push_back(RatInterval::open(left, p.lo));
    left = p.hi;
  }
  gaps.push_back(RatInterval::open(left, 2));
  return FinOpen(std::move(gaps));
}

FinClosed FinClosed::unite(const FinClosed& other) const {
  std::vector<RatInterval> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return FinClosed(std::move(all));
}

// ------------------------------------------------------------------ sweep

bool covers(const FinClosed& target, std::span<const RatInterval> pieces) {
  if (target.empty()) return true;
  std::vector<const RatInterval*> sorted;
  sorted.reserve(pieces.size());
  for (const auto& p : pieces) {
    if (p.kind != Bound::Open) throw std::invalid_argument("cover pieces must be open");
    if (!p.is_empty()) sorted.push_back(&p);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const RatInterval* a, const RatInterval* b) { return a->lo < b->lo; });

  std::size_t next = 0;
  std::optional<Rational> reach;  // max hi over pieces with lo < cur
  for (const auto& t : target.pieces()) {
    Rational cur = t.lo;
    for (;;) {
      while (next < sorted.size() && sorted[next]->lo < cur) {
        if (!reach || sorted[next]->hi > *reach) reach = sorted[next]->hi;
        ++next;
      }
      if (!reach || *reach <= cur) return false;
      if (*reach > t.hi) break;
      cur = *reach;
    }
  }
  return true;
}

Rational measure(std::span<const RatInterval> pieces) {
  std::vector<std::pair<Rational, Rational>> clipped;
  clipped.reserve(pieces.size());
  for (const auto& p : pieces) {
    Rational a = max(p.lo, kZero);
    Rational b = min(p.hi, kOne);
    if (a < b) clipped.emplace_back(std::move(a), std::move(b));
  }
  std::sort(clipped.begin(), clipped.end());
  Rational total(0);
  std::optional<Rational> run_lo, run_hi;
  for (auto& [a, b] : clipped) {
    if (run_hi && a <= *run_hi) {
      if (b > *run_hi) run_hi = b;
      continue;
    }
    if (run_hi) total += *run_hi - *run_lo;
    run_lo = a;
    run_hi = b;
  }
  if (run_hi) total += *run_hi - *run_lo;
  return total;
}

Rational total_length(std::span<const RatInterval> pieces) {
  Rational total(0);
  for (const auto& p : pieces) {
    if (p.hi > p.lo) total += p.hi - p.lo;
  }
  return total;
}

}  // namespace opensets
