#include <benchmark/benchmark.h>

#include <random>

#include "metacover/checks.hpp"
#include "metacover/coxeter.hpp"
#include "metacover/covertorus.hpp"
#include "metacover/imhecke.hpp"
#include "metacover/padic.hpp"
#include "metacover/pseudospherical.hpp"

using namespace metacover;

namespace {

void BM_SquareClassSpace(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0)), f = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const padic::FieldSpec F = padic::FieldSpec::make(e, f);
    benchmark::DoNotOptimize(padic::SquareClassSpace::build(F));
  }
}
BENCHMARK(BM_SquareClassSpace)->Args({1, 1})->Args({2, 1})->Args({1, 2})->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_HilbertNormClass(benchmark::State& state) {
  const padic::FieldSpec F = padic::FieldSpec::make(static_cast<int>(state.range(0)), 1);
  const padic::Element a = padic::Element::from_int(F, 3), b = padic::Element::from_int(F, 6);
  for (auto _ : state) benchmark::DoNotOptimize(padic::hilbert(a, b));
}
BENCHMARK(BM_HilbertNormClass)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_HilbertConic(benchmark::State& state) {
  const padic::FieldSpec F = padic::FieldSpec::make(static_cast<int>(state.range(0)), 1);
  const padic::Element a = padic::Element::from_int(F, 3), b = padic::Element::from_int(F, 6);
  for (auto _ : state) benchmark::DoNotOptimize(padic::hilbert_conic(a, b));
}
BENCHMARK(BM_HilbertConic)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_LatticeTable(benchmark::State& state) {
  const roots::RootSystem sys = roots::RootSystem::make('E', 8);
  for (auto _ : state) benchmark::DoNotOptimize(roots::Ytilde_mod_2Y(sys));
}
BENCHMARK(BM_LatticeTable);

void BM_TorusMultiply(benchmark::State& state) {
  const auto fc = checks::FieldContext::make(2, 2);
  const torus::CoverTorusGroup g(roots::RootSystem::make('E', 8), fc.form());
  std::mt19937_64 rng(1);
  std::vector<torus::Elem> xs(1024);
  for (auto& x : xs) x = g.from_index(rng() % g.order());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.multiply(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_TorusMultiply);

void BM_TorusWeyl(benchmark::State& state) {
  const auto fc = checks::FieldContext::make(2, 1);
  const torus::CoverTorusGroup g(roots::RootSystem::make('D', 4), fc.form());
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.weyl(static_cast<int>(i % 4), g.from_index(i++ % g.order())));
}
BENCHMARK(BM_TorusWeyl);

void BM_Pseudospherical(benchmark::State& state) {
  const auto fc = checks::FieldContext::make(static_cast<int>(state.range(0)), 1);
  const torus::CoverTorusGroup g(roots::RootSystem::make('D', 4), fc.form());
  for (auto _ : state) benchmark::DoNotOptimize(reps::all_pseudospherical(g));
}
BENCHMARK(BM_Pseudospherical)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LengthTilde(benchmark::State& state) {
  const coxeter::AffineWeylGroup g(roots::RootSystem::make('E', 6));
  const auto xs = g.enumerate(3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.length_tilde(xs[i++ % xs.size()]));
}
BENCHMARK(BM_LengthTilde);

void BM_ReducedWord(benchmark::State& state) {
  const coxeter::AffineWeylGroup g(roots::RootSystem::make('D', 4));
  const auto xs = g.enumerate(5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g.reduced_word(xs[i++ % xs.size()]));
}
BENCHMARK(BM_ReducedWord);

void BM_HeckeProduct(benchmark::State& state) {
  const hecke::HeckeAlgebra alg{coxeter::AffineWeylGroup(roots::RootSystem::make('A', 3))};
  const auto xs = alg.group().enumerate(static_cast<int>(state.range(0)));
  const hecke::HeckeElement a = alg.basis(xs.back()), b = alg.basis(xs[xs.size() / 2]);
  for (auto _ : state) benchmark::DoNotOptimize(alg.mul(a, b));
}
BENCHMARK(BM_HeckeProduct)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_HeckeVerify(benchmark::State& state) {
  const hecke::HeckeAlgebra alg{coxeter::AffineWeylGroup(roots::RootSystem::make('D', 4))};
  for (auto _ : state) benchmark::DoNotOptimize(hecke::verify_relations(alg, 100, 7));
}
BENCHMARK(BM_HeckeVerify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
