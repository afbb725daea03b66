#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "univalent/classes.hpp"
#include "univalent/determinants.hpp"
#include "univalent/search.hpp"
#include "univalent/typically_real.hpp"

using namespace univalent;

namespace {

Coeffs random_coeffs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Coeffs out(count);
  for (auto& x : out) x = {u(rng), u(rng)};
  return out;
}

void BM_ps_mul(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(order + 1, 1), b = random_coeffs(order + 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ps_mul(a, b, order));
}
BENCHMARK(BM_ps_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_ps_div(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto b = random_coeffs(order + 1, 2);
  b[0] = 1.0;
  const auto a = random_coeffs(order + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ps_div(a, b, order));
}
BENCHMARK(BM_ps_div)->Arg(16)->Arg(256);

void BM_toeplitz_det(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  auto c = random_coeffs(q + 2, 3);
  c[0] = 1.0;
  const TaylorSeries f(c);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_det(f, 2, q));
}
BENCHMARK(BM_toeplitz_det)->DenseRange(2, 6);

void BM_starlike_from_caratheodory(benchmark::State& state) {
  const HerglotzAtoms h({{0.2, 0.3}, {0.5, 2.0}, {0.3, 4.5}});
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(starlike_from_caratheodory(h, order));
}
BENCHMARK(BM_starlike_from_caratheodory)->Arg(4)->Arg(16)->Arg(64);

void BM_close_to_convex_from(benchmark::State& state) {
  const HerglotzAtoms g({{0.4, 1.0}, {0.6, 2.0}}), p({{0.3, 0.5}, {0.7, 5.0}});
  for (auto _ : state) benchmark::DoNotOptimize(close_to_convex_from(g, 0.4, p, 4));
}
BENCHMARK(BM_close_to_convex_from);

void BM_grid_search_phi(benchmark::State& state) {
  const SearchDomain square{{{"alpha", 0.0, 1.0, false}, {"t", -1.0, 1.0, false}}};
  const Objective phi = [](std::span<const double> x) { return objective_phi_t23(x[0], x[1]); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_search(phi, square, static_cast<std::size_t>(state.range(0)), Sense::Minimize));
  }
}
BENCHMARK(BM_grid_search_phi)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_starlike_t32_objective(benchmark::State& state) {
  const SearchDomain circle{{{"theta", 0.0, 2 * std::numbers::pi, true}}};
  const Objective obj = [](std::span<const double> x) {
    return toeplitz_det(build(StarlikeSpec{HerglotzAtoms::point(x[0])}, 4), 2, 3).abs_value;
  };
  for (auto _ : state) benchmark::DoNotOptimize(multi_start(obj, circle, 201, Sense::Maximize));
}
BENCHMARK(BM_starlike_t32_objective)->Unit(benchmark::kMillisecond);

void BM_region_hull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(region_hull(3, 4, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_region_hull)->Arg(2001)->Arg(20001)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
