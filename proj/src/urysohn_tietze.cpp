#include "opensets/urysohn_tietze.hpp"

#include <algorithm>
#include <stdexcept>

#include "opensets/errors.hpp"

namespace opensets {

PLFunction::PLFunction(std::vector<Point> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.empty()) throw std::invalid_argument("PLFunction needs a breakpoint");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].first < points_[i].first)) {
      throw std::invalid_argument("PLFunction breakpoints must be strictly increasing");
    }
  }
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x <= points_.front().first) return points_.front().second;
  if (x >= points_.back().first) return points_.back().second;
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.first; });
  const Point& right = *it;
  const Point& left = *(it - 1);
  const Rational t = (x - left.first) / (right.first - left.first);
  return left.second + t * (right.second - left.second);
}

Rational PLFunction::min_value() const {
  Rational best = points_.front().second;
  for (const auto& p : points_) best = min(best, p.second);
  return best;
}

Rational PLFunction::max_value() const {
  Rational best = points_.front().second;
  for (const auto& p : points_) best = max(best, p.second);
  return best;
}

Rational distance_closed(const FinClosed& set, const CauchyReal& x, unsigned k) {
  if (set.empty()) throw EmptySet("distance to an empty set");
  const Rational at = x.exact() ? *x.exact() : x.approx(k + 3);
  return *set.distance(at);
}

std::optional<Rational> separation_gap(const FinClosed& a, const FinClosed& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& p : a.pieces()) {
    for (const auto& q : b.pieces()) {
      const Rational gap = max(Rational(0), max(q.lo - p.hi, p.lo - q.hi));
      if (!best || gap < *best) best = gap;
    }
  }
  return best;
}

PLFunction urysohn(const FinClosed& c0, const FinClosed& c1) {
  if (auto gap = separation_gap(c0, c1); gap && gap->is_zero()) throw NotDisjoint("closed sets intersect");
  struct Labelled {
    RatInterval piece;
    Rational label;
  };
  std::vector<Labelled> all;
  for (const auto& p : c0.pieces()) all.push_back({p, Rational(0)});
  for (const auto& p : c1.pieces()) all.push_back({p, Rational(1)});
  if (all.empty()) return PLFunction::constant(Rational(0));
  std::sort(all.begin(), all.end(), [](const Labelled& a, const Labelled& b) { return a.piece.lo < b.piece.lo; });

  std::vector<PLFunction::Point> points;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& [piece, label] = all[i];
    if (i > 0 && all[i - 1].label == label) {
      points.emplace_back((all[i - 1].piece.hi + piece.lo) / Rational(2), Rational(1, 2));
    }
    points.emplace_back(piece.lo, label);
    if (piece.hi != piece.lo) points.emplace_back(piece.hi, label);
  }
  return PLFunction(std::move(points));
}

PLFunction tietze_extend(const FinClosed& domain, const PLFunction& f) {
  if (domain.empty()) throw EmptySet("Tietze extension from an empty set");
  const auto& fp = f.breakpoints();
  auto has_breakpoint = [&](const Rational& x) {
    return std::binary_search(fp.begin(), fp.end(), PLFunction::Point{x, Rational(0)},
                              [](const auto& a, const auto& b) { return a.first < b.first; });
  };
  for (const auto& piece : domain.pieces()) {
    if (!has_breakpoint(piece.lo) || !has_breakpoint(piece.hi)) {
      throw std::invalid_argument("f needs a breakpoint at every endpoint of the domain");
    }
  }
  std::vector<PLFunction::Point> kept;
  for (const auto& p : fp) {
    if (domain.contains(p.first)) kept.push_back(p);
  }
  return PLFunction(std::move(kept));
}

}  // namespace opensets
