#include "hecke/catalog.hpp"
#include "hecke/oracles.hpp"

#include <benchmark/benchmark.h>

using namespace hecke;

namespace {

Rational dyadic(long k) { return Rational(1, 1L << k); }

// Left-coset orbit of diag(p, 1/p)^k in SL_2(Z[1/p]); L grows like p^(2k).
void BM_Sl2Orbit(benchmark::State& state) {
  auto o = std::make_shared<Sl2LocalizedOracle>(2);
  Element g = o->identity();
  for (long i = 0; i < state.range(0); ++i) g = o->multiply(g, o->parse("2,0,0,1/2"));
  for (auto _ : state) {
    CosetEngine engine(o);
    benchmark::DoNotOptimize(engine.orbit(g));
  }
}
BENCHMARK(BM_Sl2Orbit)->DenseRange(1, 4);

// Closure of Γ(1/2^k, -)Γ in the quasicyclic dihedral pair, from a cold cache.
void BM_QuasicyclicClosure(benchmark::State& state) {
  auto o = std::make_shared<DihedralOracle>(2);
  for (auto _ : state) {
    PairContext ctx(o);
    benchmark::DoNotOptimize(ctx.graph->closure(ctx.engine->double_coset(o->make(dyadic(state.range(0)), -1))));
  }
}
BENCHMARK(BM_QuasicyclicClosure)->DenseRange(2, 10, 4);

// Convolution of two basis elements with L = n in the Heisenberg pair.
void BM_HeisenbergConvolution(benchmark::State& state) {
  auto o = std::make_shared<HeisenbergOracle>();
  PairContext ctx(o);
  const Rational x(1, state.range(0));
  const auto f = ctx.algebra->basis(HeisenbergOracle::make(x, 0, 0));
  const auto g = ctx.algebra->basis(HeisenbergOracle::make(0, x, 0));
  for (auto _ : state) benchmark::DoNotOptimize(ctx.algebra->convolve(f, g));
}
BENCHMARK(BM_HeisenbergConvolution)->RangeMultiplier(2)->Range(2, 32);

// Full certificate (relations, beta bound, tangent matrix checks) on a
// quasicyclic closure with k + 1 vertices.
void BM_Certificate(benchmark::State& state) {
  auto o = std::make_shared<DihedralOracle>(2);
  PairContext ctx(o);
  const auto closure = ctx.graph->closure(ctx.engine->double_coset(o->make(dyadic(state.range(0)), -1)));
  for (auto _ : state) benchmark::DoNotOptimize(l1_certificate(closure, *ctx.algebra));
}
BENCHMARK(BM_Certificate)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
