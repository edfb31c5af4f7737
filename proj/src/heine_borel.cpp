#include "opensets/heine_borel.hpp"

#include <algorithm>
#include <map>

#include "opensets/enumeration.hpp"
#include "opensets/kernels.hpp"

namespace opensets {

namespace {

const FinClosed& unit_interval() {
  static const FinClosed unit = FinClosed::unit();
  return unit;
}

std::vector<RatInterval> concat(std::vector<RatInterval> a, const std::vector<RatInterval>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::optional<SubcoverCertificate> hbc_rm(const ClosedRM& closed, const OpenR4& cover, std::size_t fuel) {
  // Prefix m is the flat range [0, 2(m+1)) of cover(0), comp(0), cover(1), comp(1), ...
  std::vector<RatInterval> flat;
  std::size_t tested = 0;
  for (std::size_t block = 16; tested < fuel; block *= 2) {
    const std::size_t limit = std::min(block, fuel);
    for (std::size_t n = flat.size() / 2; n < limit; ++n) {
      flat.push_back(cover.entry(n));
      flat.push_back(closed.complement.entry(n));
    }
    const kernels::GroupedPrefix stream{flat, 2};
    if (auto m = kernels::omp::least_covering_prefix(unit_interval(), stream, tested, limit)) {
      SubcoverCertificate cert;
      cert.n0 = *m;
      for (std::size_t n = 0; n <= *m; ++n) {
        cert.used_pieces.push_back(flat[2 * n]);
        cert.complement_pieces.push_back(flat[2 * n + 1]);
      }
      cert.verified = covers(unit_interval(), concat(cert.used_pieces, cert.complement_pieces));
      return cert;
    }
    tested = limit;
  }
  return std::nullopt;
}

std::optional<std::size_t> hbc_r2(const R2Sequence& sets, const PincherleOracle& mu, std::size_t fuel) {
  std::map<std::size_t, OpenR4> streams;
  auto stream_of = [&](std::size_t i) -> const OpenR4& {
    auto it = streams.find(i);
    if (it == streams.end()) it = streams.emplace(i, psi(sets(i), mu)).first;
    return it->second;
  };
  const OpenR4 interleaved{[&](std::size_t t) {
    const auto [i, n] = unpair(t);
    return stream_of(i).entry(n);
  }};
  const ClosedRM whole{OpenR4::constant(RatInterval::open(0, 0))};
  const auto cert = hbc_rm(whole, interleaved, fuel);
  if (!cert || !cert->verified) return std::nullopt;

  // The certificate may draw on sets it does not need; find the least k.
  std::size_t top = 0;
  for (std::size_t t = 0; t <= cert->n0; ++t) top = std::max(top, unpair(t).first);
  for (std::size_t k = 0; k <= top; ++k) {
    std::vector<RatInterval> pieces;
    for (std::size_t t = 0; t <= cert->n0; ++t) {
      if (unpair(t).first <= k) pieces.push_back(cert->used_pieces[t]);
    }
    if (covers(unit_interval(), pieces)) return k;
  }
  return top;
}

std::optional<WeakSubcover> whbc(const ClosedRM& closed, const OpenR4& cover, const Rational& epsilon,
                                 std::size_t fuel) {
  std::vector<RatInterval> cover_prefix;
  std::vector<RatInterval> comp_prefix;
  std::size_t tested = 0;
  for (std::size_t s = 0;; ++s) {
    cover_prefix.push_back(cover.entry(s));
    comp_prefix.push_back(closed.complement.entry(s));
    for (std::size_t n0 = s + 1; n0-- > 0;) {
      if (tested++ == fuel) return std::nullopt;
      const std::size_t depth = s - n0;
      std::vector<RatInterval> known(cover_prefix.begin(), cover_prefix.begin() + static_cast<std::ptrdiff_t>(n0 + 1));
      known.insert(known.end(), comp_prefix.begin(), comp_prefix.end());
      if (depth == 0) {
        if (covers(unit_interval(), known)) return WeakSubcover{n0, {}, s};
        continue;
      }
      std::vector<RatInterval> open_known;
      for (const auto& p : known) {
        if (!p.is_empty()) open_known.push_back(p);
      }
      const FinClosed remainder = FinOpen(std::move(open_known)).complement();
      const Rational pad = Rational::pow2(-static_cast<long>(depth) - 5);
      std::vector<RatInterval> patches;
      for (const auto& piece : remainder.pieces()) patches.push_back(RatInterval::open(piece.lo - pad, piece.hi + pad));
      if (!(total_length(patches) < epsilon)) continue;
      if (covers(unit_interval(), concat(known, patches))) return WeakSubcover{n0, std::move(patches), s};
    }
  }
}

std::optional<std::size_t> hbc_seq(const R4Sequence& sets, std::size_t fuel) {
  // drawn[i] holds O_i(0), O_i(1), ...
  std::vector<std::vector<RatInterval>> drawn;
  std::vector<OpenR4> streams;
  std::size_t used = 0;
  for (std::size_t s = 0;; ++s) {
    streams.push_back(sets(s));
    drawn.emplace_back();
    for (std::size_t i = 0; i <= s; ++i) {
      while (drawn[i].size() <= s) {
        if (used == fuel) return std::nullopt;
        ++used;
        drawn[i].push_back(streams[i].entry(drawn[i].size()));
      }
    }
    std::vector<RatInterval> pieces;
    for (std::size_t n0 = 0; n0 <= s; ++n0) {
      pieces.insert(pieces.end(), drawn[n0].begin(), drawn[n0].end());
      if (covers(unit_interval(), pieces)) return n0;
    }
  }
}

RatInterval rational_surrogate(const CauchyReal& a, const CauchyReal& b, unsigned k) {
  const Rational slack = Rational::pow2(-static_cast<long>(k));
  RatInterval out = RatInterval::open(a.approx(k) + slack, b.approx(k) - slack);
  if (out.is_empty()) return RatInterval::open(0, 0);
  return out;
}

}  // namespace opensets
