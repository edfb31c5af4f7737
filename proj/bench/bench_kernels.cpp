// Serial vs OpenMP kernels on synthetic covers.
//
//   bench_kernels [pieces] [grid]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>

#include "opensets/kernels.hpp"

using namespace opensets;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t pieces = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const std::size_t grid = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 20000;

  // Overlapping pieces ((j-1)/N, (j+1)/N) in shuffled order: the union only
  // covers [0,1] near the end of the stream.
  std::vector<std::size_t> order(pieces + 1);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937(7));
  std::vector<RatInterval> flat;
  for (std::size_t j : order) {
    const long n = static_cast<long>(pieces);
    flat.push_back(RatInterval::open(Rational(static_cast<long>(j) - 1, n), Rational(static_cast<long>(j) + 1, n)));
  }
  const kernels::GroupedPrefix stream{flat, 1};
  const FinClosed unit = FinClosed::unit();

  std::optional<std::size_t> a, b;
  const double ts = seconds([&] { a = kernels::serial::least_covering_prefix(unit, stream, 0, stream.count()); });
  const double tp = seconds([&] { b = kernels::omp::least_covering_prefix(unit, stream, 0, stream.count()); });
  std::cout << "least_covering_prefix pieces=" << pieces << " answer=" << (a ? std::to_string(*a) : "none")
            << " serial=" << ts << "s omp=" << tp << "s agree=" << (a == b) << '\n';

  const FinOpen set(std::vector<RatInterval>(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(flat.size() / 2)));
  auto dist = [&](const Rational& q) { return set.distance_to_complement(q); };
  std::vector<Rational> da, db;
  const double gs = seconds([&] { da = kernels::serial::grid_map(grid, dist); });
  const double gp = seconds([&] { db = kernels::omp::grid_map(grid, dist); });
  std::cout << "grid_map points=" << grid + 1 << " serial=" << gs << "s omp=" << gp << "s agree=" << (da == db) << '\n';
  return a == b && da == db ? 0 : 1;
}
