#pragma once

// S-expression syntax for sets and covers:
//
//   (interval a b)          open (a, b)
//   (cinterval a b)         closed [a, b]
//   (union e ...)           union of sets of one kind
//   (punctured q ...)       [0,1] minus finitely many points
//   (full) (empty)
//   (complement-closed e)   the closed set [0,1] \ e, e open
//   (tail-cover)            the stream / sequence (1/(n+2), 1)
//   (rational-complements)  the sequence O_n = [0,1] \ {q_n}
//
// Rationals are written p/q or as integers.

#include <string>
#include <string_view>
#include <vector>

#include "opensets/heine_borel.hpp"

namespace opensets {

struct SetExpr {
  enum class Kind { Interval, CInterval, Union, Punctured, Full, Empty, ComplementClosed, TailCover, RationalComplements };

  Kind kind = Kind::Empty;
  std::vector<Rational> numbers;
  std::vector<SetExpr> children;

  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

/// Throws ParseError with the 1-based line and column of the offending token.
SetExpr parse_set(std::string_view text);
std::string print_set(const SetExpr& expr);

/// Evaluation; each throws std::invalid_argument when the expression is of the wrong kind.
FinOpen to_open(const SetExpr& expr);
FinClosed to_closed(const SetExpr& expr);
OpenR4 to_stream(const SetExpr& expr);
ClosedRM to_closed_rm(const SetExpr& expr);
/// (union e0 e1 ...) lists the sets in order, followed by empty sets.
R2Sequence to_r2_sequence(const SetExpr& expr);
R4Sequence to_r4_sequence(const SetExpr& expr);

/// The R.2 sequence O_n = [0,1] \ {q_n}.
R2Sequence rational_complements();

}  // namespace opensets
