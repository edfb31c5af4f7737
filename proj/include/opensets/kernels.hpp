#pragma once

// Data-parallel kernels behind the searches and grid audits.
//
// Each kernel has a serial reference in `kernels::serial` and an OpenMP
// version in `kernels::omp` with identical results. The library calls the
// OpenMP versions; tests compare the two and bench/ times them.

#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "opensets/interval.hpp"

namespace opensets::kernels {

/// Prefix m of a grouped stream is flat[0, group * (m + 1)).
struct GroupedPrefix {
  std::span<const RatInterval> flat;
  std::size_t group = 1;

  std::size_t count() const { return group == 0 ? 0 : flat.size() / group; }
  std::span<const RatInterval> prefix(std::size_t m) const { return flat.first(group * (m + 1)); }
};

inline Rational grid_point(std::size_t j, std::size_t denominator) {
  return Rational(static_cast<long>(j), static_cast<long>(denominator));
}

namespace serial {

/// Least m in [first, limit) whose prefix covers target. Tests every m in order.
std::optional<std::size_t> least_covering_prefix(const FinClosed& target, const GroupedPrefix& stream,
                                                 std::size_t first, std::size_t limit);

/// f(j/denominator) for j = 0..denominator.
template <class F>
auto grid_map(std::size_t denominator, F&& f) {
  using R = std::invoke_result_t<F&, const Rational&>;
  std::vector<R> out;
  out.reserve(denominator + 1);
  for (std::size_t j = 0; j <= denominator; ++j) out.push_back(f(grid_point(j, denominator)));
  return out;
}

}  // namespace serial

namespace omp {

/// Same answer as the serial version. Coverage is monotone in m, so each
/// round tests a spread of candidates in parallel and narrows the bracket.
std::optional<std::size_t> least_covering_prefix(const FinClosed& target, const GroupedPrefix& stream,
                                                 std::size_t first, std::size_t limit);

/// Parallel grid evaluation; f must be safe to call concurrently.
template <class F>
auto grid_map(std::size_t denominator, F&& f) {
  using R = std::invoke_result_t<F&, const Rational&>;
  std::vector<std::optional<R>> slots(denominator + 1);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long n = static_cast<long>(denominator) + 1;
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) {
    try {
      slots[static_cast<std::size_t>(j)].emplace(f(grid_point(static_cast<std::size_t>(j), denominator)));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace omp

}  // namespace opensets::kernels
