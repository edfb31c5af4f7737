#include "opensets/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opensets::kernels {

namespace serial {

std::optional<std::size_t> least_covering_prefix(const FinClosed& target, const GroupedPrefix& stream,
                                                 std::size_t first, std::size_t limit) {
  limit = std::min(limit, stream.count());
  for (std::size_t m = first; m < limit; ++m) {
    if (covers(target, stream.prefix(m))) return m;
  }
  return std::nullopt;
}

}  // namespace serial

namespace omp {

std::optional<std::size_t> least_covering_prefix(const FinClosed& target, const GroupedPrefix& stream,
                                                 std::size_t first, std::size_t limit) {
  limit = std::min(limit, stream.count());
  if (first >= limit) return std::nullopt;
  if (!covers(target, stream.prefix(limit - 1))) return std::nullopt;

  // Invariant: prefix(hi) covers; every m < lo fails.
  std::size_t lo = first;
  std::size_t hi = limit - 1;
#ifdef _OPENMP
  const std::size_t width = static_cast<std::size_t>(std::max(2, omp_get_max_threads()));
#else
  const std::size_t width = 2;
#endif
  while (lo < hi) {
    const std::size_t span = hi - lo;
    std::vector<std::size_t> probes;
    for (std::size_t i = 0; i < width && i < span; ++i) probes.push_back(lo + i * span / std::min(width, span));
    std::vector<char> ok(probes.size(), 0);
    const long count = static_cast<long>(probes.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      ok[static_cast<std::size_t>(i)] = covers(target, stream.prefix(probes[static_cast<std::size_t>(i)])) ? 1 : 0;
    }
    std::size_t new_lo = lo;
    std::size_t new_hi = hi;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (ok[i]) {
        new_hi = probes[i];
        break;
      }
      new_lo = probes[i] + 1;
    }
    lo = new_lo;
    hi = new_hi;
  }
  return hi;
}

}  // namespace omp

}  // namespace opensets::kernels
