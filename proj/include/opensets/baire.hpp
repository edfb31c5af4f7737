#pragma once

// Baire category: a point in the intersection of a sequence of open dense
// sets, and a finite-stage simulator of the attempt machine behind it.
//
// Sets are indexed from 0: the seed tag is chosen in Y_0 and an attempt of
// length k is extended inside Y_k.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opensets/heine_borel.hpp"
#include "opensets/representations.hpp"

namespace opensets {

struct Tag {
  Rational r;
  Rational eps;

  RatInterval open() const { return RatInterval::open(r - eps, r + eps); }
  RatInterval closed() const { return RatInterval::closed(r - eps, r + eps); }
  friend bool operator==(const Tag&, const Tag&) = default;
};

struct Attempt {
  std::vector<Tag> tags;
  friend bool operator==(const Attempt&, const Attempt&) = default;
};

enum class MachineStatus { Running, Fixed, Stuck };

struct MachineState {
  std::vector<Attempt> attempts;  // insertion order
  MachineStatus status = MachineStatus::Running;
  std::optional<CauchyReal> fixed;
  std::string reason;      // why Stuck
  std::string last_case;   // "o", "i", "ii", "iii", "iv.2"
};

/// How the next radius is chosen. Containment keeps every closed tag inside
/// the certified ball of its set, so limits never leave a set. Verbatim uses
/// only the nesting and halving constraints and leaves repairs to iv.2.
enum class TagMode { Containment, Verbatim };

/// (r1, e1) ≺ (r2, e2) iff r1 = r2 and e1 >= 2 e2.
bool tag_prec(const Tag& a, const Tag& b);

/// s ◁ t: s is a proper prefix of t, or the first differing tags satisfy ≺.
bool attempt_before(const Attempt& s, const Attempt& t);

/// Nesting and halving, checked exactly.
bool attempt_valid(const Attempt& a);

/// One Γ application: o (not totally ordered), i (seed), ii (extend the
/// ◁-maximal attempt), iii (more than `fuel` attempts of one length).
/// `fuel` also bounds the candidate rationals tried by the frontier search.
MachineState gamma_step(const MachineState& state, const R2Sequence& sets, std::size_t fuel,
                        TagMode mode = TagMode::Containment);

/// Case iv.2: appends the ◁-maximal attempt cut to length k+1 with its last radius halved.
MachineState apply_limit_failure(const MachineState& state, std::size_t k);

/// The ◁-maximal attempt; throws std::logic_error on an empty or unordered state.
const Attempt& maximal_attempt(const MachineState& state);

struct AuditResult {
  bool pass = false;
  CauchyReal x;
  std::size_t failed = 0;  // least k with x not certified in Y_k
};

/// approx(n) = r_m for the first m with eps_m <= 2^-(n+1), else the last r.
CauchyReal nest_real(const std::vector<Tag>& chain);

/// Certifies x = nest_real(chain) in Y_0..Y_depth, each with `fuel` stages.
AuditResult limit_audit(const std::vector<Tag>& chain, const R2Sequence& sets, std::size_t depth,
                        unsigned fuel);

struct BairePoint {
  CauchyReal x;
  std::vector<Tag> nest;
};

/// Nest of tags, tag m inside Y_m's certified ball and the previous open tag,
/// until eps <= 2^-(k+1) and at least min_depth tags exist. fuel bounds the
/// candidate rationals tried at each tag.
std::optional<BairePoint> baire_point(const R2Sequence& sets, unsigned k, std::size_t fuel,
                                      std::size_t min_depth = 0);

using TraceSink = std::function<void(const std::string&)>;

/// Drives gamma_step. Each step first audits the maximal chain and applies
/// iv.2 on failure; otherwise extends. Stops at Fixed once an audited chain
/// has max_depth + 1 tags, on Stuck, or after `steps` steps.
MachineState run_machine(const R2Sequence& sets, std::size_t max_depth, std::size_t steps, std::size_t fuel,
                         TagMode mode = TagMode::Containment, const TraceSink& trace = {});

std::string format_attempt(const Attempt& a);

}  // namespace opensets
