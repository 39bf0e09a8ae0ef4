#include <benchmark/benchmark.h>

#include "skein/chebyshev.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/graded.hpp"
#include "skein/pants.hpp"
#include "skein/torus.hpp"
#include "skein/torus_rep.hpp"

#include <random>

using namespace skein;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-1000, 1000);
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (auto& v : c) v = d(rng);
  return Cyclotomic(n, c);
}

void BM_CyclotomicMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(5)->Arg(12)->Arg(35)->Arg(60);

void BM_CyclotomicInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const CyclotomicQ a = to_field(random_element(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(12)->Arg(35);

void BM_ChebyshevT(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_T(k));
}
BENCHMARK(BM_ChebyshevT)->Arg(16)->Arg(64)->Arg(256);

void BM_StandardTriangulation(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(standard_triangulation(g, 2));
}
BENCHMARK(BM_StandardTriangulation)->Arg(1)->Arg(4)->Arg(16);

void BM_CenterEnumerate(benchmark::State& state) {
  const Triangulation T = standard_triangulation(1, 2);
  const RootData root = root_data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(center_enumerate(T, root, 6));
}
BENCHMARK(BM_CenterEnumerate)->Arg(5)->Arg(8);

void BM_PiDegree(benchmark::State& state) {
  const Triangulation T = standard_triangulation(static_cast<int>(state.range(0)), 2);
  const RootData root = root_data(12);
  for (auto _ : state) benchmark::DoNotOptimize(pi_degree(T, root));
}
BENCHMARK(BM_PiDegree)->Arg(1)->Arg(2)->Arg(3);

void BM_DtOracleBuild(benchmark::State& state) {
  const auto P = std::make_shared<const PantsDecomposition>(standard_pants(static_cast<int>(state.range(0))));
  const RootData root = root_data(8);
  for (auto _ : state) benchmark::DoNotOptimize(DtCenterOracle(P, root, 2));
}
BENCHMARK(BM_DtOracleBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TorusMul(benchmark::State& state) {
  const RootData root = root_data(7);
  TorusElement x(root), y(root);
  for (int p = 0; p < state.range(0); ++p)
    for (int q = -3; q <= 3; ++q) {
      x.add_basis(p, q, Cyclotomic::zeta_pow(7, p + q));
      y.add_basis(q, p, Cyclotomic::one(7));
    }
  for (auto _ : state) benchmark::DoNotOptimize(fg_mul(x, y));
}
BENCHMARK(BM_TorusMul)->Arg(2)->Arg(6);

void BM_BuildRep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootData root = root_data(n);
  const CyclotomicQ lambda = CyclotomicQ::constant(n, Rational(3, 2)), mu = CyclotomicQ::constant(n, Rational(5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(build_rep(root, lambda, mu));
}
BENCHMARK(BM_BuildRep)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
