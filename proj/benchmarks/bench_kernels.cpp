#include <benchmark/benchmark.h>

#include <cmath>

#include "secform/eig.hpp"
#include "secform/elliptic.hpp"
#include "secform/fov.hpp"
#include "secform/resolvent.hpp"
#include "secform/rng.hpp"

using namespace secform;

namespace {

const double kPi = std::acos(-1.0);
const Mu2 kSkewMu = {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}};

AssembledForm golden_form(int n) {
  return assemble(Grid(n, n, 1.0, 1.0), CoefficientField::constant(kSkewMu),
                  BoundarySpec::all_dirichlet());
}

void bm_assemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 1.0, 1.0);
  const auto mu = CoefficientField::constant(kSkewMu);
  const auto bc = BoundarySpec::all_dirichlet();
  for (auto _ : state) benchmark::DoNotOptimize(assemble(g, mu, bc));
}

void bm_assemble_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 1.0, 1.0);
  const auto mu = CoefficientField::constant(kSkewMu);
  const auto bc = BoundarySpec::all_dirichlet();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_serial(g, mu, bc));
}

void bm_fov(benchmark::State& state) {
  const ComplexMatrix T = rng::gaussian_matrix(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fov_boundary(T, 180));
}

void bm_fov_serial(benchmark::State& state) {
  const ComplexMatrix T = rng::gaussian_matrix(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fov_boundary_serial(T, 180));
}

void bm_ray_scan(benchmark::State& state) {
  const auto form = golden_form(static_cast<int>(state.range(0)));
  const auto radii = log_spaced(1e-2, 1e2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(ray_scan(form, kPi / 4 + 0.3, 5, radii));
}

void bm_ray_scan_serial(benchmark::State& state) {
  const auto form = golden_form(static_cast<int>(state.range(0)));
  const auto radii = log_spaced(1e-2, 1e2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(ray_scan_serial(form, kPi / 4 + 0.3, 5, radii));
}

void bm_smallest_singular(benchmark::State& state) {
  const ComplexMatrix T = rng::gaussian_matrix(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_singular(T));
}

}  // namespace

BENCHMARK(bm_assemble)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_assemble_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_fov)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(bm_fov_serial)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(bm_ray_scan)->Arg(6)->Arg(10);
BENCHMARK(bm_ray_scan_serial)->Arg(6)->Arg(10);
BENCHMARK(bm_smallest_singular)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
