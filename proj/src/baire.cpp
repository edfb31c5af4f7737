#include "opensets/baire.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "opensets/enumeration.hpp"

namespace opensets {

namespace {

const Rational kOne(1);

// First rational in the parent's open tag (or anywhere in [0,1]) certified in
// the set, with the largest dyadic radius meeting the constraints.
std::optional<Tag> choose_tag(const OpenR2& set, const std::optional<Tag>& parent, std::size_t fuel,
                              bool contain) {
  RationalsIn candidates = parent ? RationalsIn(parent->r - parent->eps, parent->r + parent->eps)
                                  : RationalsIn(Rational(-1), Rational(2));
  for (std::size_t tried = 0; tried < fuel; ++tried) {
    const auto q = candidates.next();
    if (!q) return std::nullopt;
    const auto radius = inner_radius(set, CauchyReal::constant(*q), kDefaultStageFuel);
    if (!radius) continue;
    for (long j = 0;; ++j) {
      const Rational eps = Rational::pow2(-j);
      if (contain && !(eps < *radius)) continue;
      if (parent) {
        if (!(parent->r - parent->eps < *q - eps && *q + eps < parent->r + parent->eps)) continue;
        if (eps * Rational(2) > parent->eps) continue;
      }
      return Tag{*q, eps};
    }
  }
  return std::nullopt;
}

MachineState stuck(MachineState state, std::string reason, std::string which) {
  state.status = MachineStatus::Stuck;
  state.reason = std::move(reason);
  state.last_case = std::move(which);
  return state;
}

}  // namespace

bool tag_prec(const Tag& a, const Tag& b) { return a.r == b.r && a.eps >= Rational(2) * b.eps; }

bool attempt_before(const Attempt& s, const Attempt& t) {
  const std::size_t common = std::min(s.tags.size(), t.tags.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (s.tags[i] != t.tags[i]) return tag_prec(s.tags[i], t.tags[i]);
  }
  return s.tags.size() < t.tags.size();
}

bool attempt_valid(const Attempt& a) {
  if (a.tags.empty()) return false;
  for (std::size_t i = 0; i < a.tags.size(); ++i) {
    const Tag& cur = a.tags[i];
    if (cur.eps.sign() <= 0) return false;
    if (i == 0) continue;
    const Tag& prev = a.tags[i - 1];
    if (!(prev.r - prev.eps < cur.r - cur.eps && cur.r + cur.eps < prev.r + prev.eps)) return false;
    if (Rational(2) * cur.eps > prev.eps) return false;
  }
  return true;
}

const Attempt& maximal_attempt(const MachineState& state) {
  if (state.attempts.empty()) throw std::logic_error("no attempts");
  const Attempt* best = &state.attempts.front();
  for (const auto& a : state.attempts) {
    if (attempt_before(*best, a)) best = &a;
  }
  for (const auto& a : state.attempts) {
    if (&a != best && !attempt_before(a, *best)) throw std::logic_error("attempts are not totally ordered");
  }
  return *best;
}

MachineState gamma_step(const MachineState& state, const R2Sequence& sets, std::size_t fuel, TagMode mode) {
  if (state.status != MachineStatus::Running) return state;
  const auto& as = state.attempts;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      if (!attempt_before(as[i], as[j]) && !attempt_before(as[j], as[i])) {
        return stuck(state, "not totally ordered", "o");
      }
    }
  }
  std::map<std::size_t, std::size_t> per_length;
  for (const auto& a : as) {
    if (++per_length[a.tags.size()] > fuel) return stuck(state, "unbounded attempts of one length", "iii");
  }

  MachineState next = state;
  if (as.empty()) {
    const auto seed = choose_tag(sets(0), std::nullopt, fuel, false);
    if (!seed) return stuck(state, "frontier search exhausted", "i");
    next.attempts.push_back(Attempt{{Tag{seed->r, kOne}}});
    next.last_case = "i";
    return next;
  }
  const Attempt& top = maximal_attempt(state);
  const auto tag = choose_tag(sets(top.tags.size()), top.tags.back(), fuel, mode == TagMode::Containment);
  if (!tag) return stuck(state, "frontier search exhausted", "ii");
  Attempt extended = top;
  extended.tags.push_back(*tag);
  next.attempts.push_back(std::move(extended));
  next.last_case = "ii";
  return next;
}

MachineState apply_limit_failure(const MachineState& state, std::size_t k) {
  const Attempt& top = maximal_attempt(state);
  if (k >= top.tags.size()) throw std::out_of_range("limit failure index beyond the chain");
  Attempt cut{std::vector<Tag>(top.tags.begin(), top.tags.begin() + static_cast<std::ptrdiff_t>(k + 1))};
  cut.tags.back().eps /= Rational(2);
  MachineState next = state;
  next.attempts.push_back(std::move(cut));
  next.last_case = "iv.2";
  return next;
}

CauchyReal nest_real(const std::vector<Tag>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty nest");
  auto shared = std::make_shared<const std::vector<Tag>>(chain);
  return CauchyReal::from_oracle([shared](unsigned n) {
    const Rational bound = Rational::pow2(-static_cast<long>(n) - 1);
    for (const auto& t : *shared) {
      if (t.eps <= bound) return t.r;
    }
    return shared->back().r;
  });
}

AuditResult limit_audit(const std::vector<Tag>& chain, const R2Sequence& sets, std::size_t depth,
                        unsigned fuel) {
  AuditResult out;
  out.x = nest_real(chain);
  for (std::size_t k = 0; k <= depth; ++k) {
    if (!inner_radius(sets(k), out.x, fuel)) {
      out.failed = k;
      return out;
    }
  }
  out.pass = true;
  return out;
}

std::optional<BairePoint> baire_point(const R2Sequence& sets, unsigned k, std::size_t fuel,
                                      std::size_t min_depth) {
  BairePoint out;
  const Rational target = Rational::pow2(-static_cast<long>(k) - 1);
  std::optional<Tag> parent;
  for (std::size_t m = 0;; ++m) {
    const auto tag = choose_tag(sets(m), parent, fuel, true);
    if (!tag) return std::nullopt;
    out.nest.push_back(*tag);
    parent = tag;
    if (tag->eps <= target && out.nest.size() >= std::max<std::size_t>(min_depth, 1)) break;
  }
  out.x = nest_real(out.nest);
  return out;
}

MachineState run_machine(const R2Sequence& sets, std::size_t max_depth, std::size_t steps, std::size_t fuel,
                         TagMode mode, const TraceSink& trace) {
  MachineState state;
  auto emit = [&](std::size_t step) {
    if (!trace) return;
    std::ostringstream line;
    line << step << '\t' << state.last_case << '\t';
    if (state.status == MachineStatus::Stuck) {
      line << "stuck: " << state.reason;
    } else if (!state.attempts.empty()) {
      line << format_attempt(maximal_attempt(state));
    }
    trace(line.str());
  };
  for (std::size_t step = 0; step < steps && state.status == MachineStatus::Running; ++step) {
    if (!state.attempts.empty()) {
      const auto& chain = maximal_attempt(state).tags;
      const AuditResult audit = limit_audit(chain, sets, chain.size() - 1, kDefaultStageFuel);
      if (!audit.pass) {
        state = apply_limit_failure(state, audit.failed);
        emit(step);
        continue;
      }
      if (chain.size() > max_depth) {
        state.status = MachineStatus::Fixed;
        state.fixed = audit.x;
        state.last_case = "fixed";
        emit(step);
        break;
      }
    }
    state = gamma_step(state, sets, fuel, mode);
    emit(step);
  }
  return state;
}

std::string format_attempt(const Attempt& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.tags.size(); ++i) {
    if (i) out << ' ';
    out << '(' << a.tags[i].r << ',' << a.tags[i].eps << ')';
  }
  out << ']';
  return out.str();
}

}  // namespace opensets
