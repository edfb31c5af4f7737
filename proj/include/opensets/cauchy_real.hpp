#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "opensets/rational.hpp"

namespace opensets {

/// A real number given by a stage-indexed rational approximation oracle.
///
/// Contract on the oracle: |approx(n) - approx(n+i)| <= 2^-n for all n, i,
/// and hence |approx(n) - x| <= 2^-n for the represented x. Repeated queries
/// at the same stage must return the same rational.
///
/// Values built from a known rational additionally carry it, so exact
/// consumers (FinOpen-backed oracles) can skip approximation entirely.
class CauchyReal {
 public:
  using Oracle = std::function<Rational(unsigned stage)>;

  CauchyReal();

  static CauchyReal constant(Rational value);
  static CauchyReal from_oracle(Oracle oracle);

  /// floor(sqrt(value) * 2^n) / 2^n, for value >= 0.
  static CauchyReal sqrt_of(const Rational& value);

  Rational approx(unsigned stage) const;
  const std::optional<Rational>& exact() const { return exact_; }

 private:
  std::shared_ptr<const Oracle> oracle_;
  std::optional<Rational> exact_;
};

/// The k-th approximation; identical to x.approx(n).
inline Rational real_approx(const CauchyReal& x, unsigned n) { return x.approx(n); }

enum class Comparison { Less, Greater, Within };

/// Three-valued comparison from the stage k+3 approximations only.
/// Less => x < y, Greater => x > y, Within => |x - y| <= 2^(-k+2).
Comparison real_cmp(const CauchyReal& x, const CauchyReal& y, unsigned k);

}  // namespace opensets
