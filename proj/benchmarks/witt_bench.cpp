#include <benchmark/benchmark.h>

#include "witt/descent.hpp"
#include "witt/quad_descent.hpp"
#include "witt/witt.hpp"

namespace {

using namespace witt;

void BM_FiniteFieldMul(benchmark::State& state) {
  FieldRef f = galois_field(2, static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  Element a = f->random(rng), b = f->random(rng);
  for (auto _ : state) {
    a = a * b + f->one();
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FiniteFieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_ExtensionMul(benchmark::State& state) {
  FieldRef k = parse_field("Q(sqrt(2))");
  Element a = parse_element(k, "3/7+2*eta"), b = parse_element(k, "1-eta");
  for (auto _ : state) {
    Element c = a * b / a;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ExtensionMul);

QuadraticForm random_diagonal(FieldRef f, std::size_t n, Rng& rng) {
  Vector d;
  while (d.size() < n) {
    Element e = f->random(rng);
    if (!e.is_zero()) d.push_back(e);
  }
  return QuadraticForm::diagonal(f, d);
}

void BM_WittDecomposeQ(benchmark::State& state) {
  Rng rng(2);
  const QuadraticForm q = random_diagonal(rationals(), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(witt_decompose(q));
}
BENCHMARK(BM_WittDecomposeQ)->Arg(4)->Arg(8)->Arg(16);

void BM_WittDecomposeFinite(benchmark::State& state) {
  Rng rng(3);
  const QuadraticForm q = random_diagonal(parse_field("GF(3^2)"), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(witt_decompose(q));
}
BENCHMARK(BM_WittDecomposeFinite)->Arg(4)->Arg(16);

void BM_QuadDescentDecide(benchmark::State& state) {
  Rng rng(4);
  const QuadraticForm q = random_diagonal(parse_field("Q(sqrt(2))"), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(quad_descent_decide(q));
}
BENCHMARK(BM_QuadDescentDecide)->Arg(2)->Arg(4);

void BM_HermitianTransfer(benchmark::State& state) {
  FieldRef k = parse_field("Q(sqrt(2))");
  AlgebraRef alg = AlgebraWithInvolution::quaternion(parse_quaternion_algebra(rationals(), "(-1,-1)"),
                                                    InvolutionSpec::canonical())
                       ->extend_scalars(k);
  DVector d;
  for (long i = 0; i < state.range(0); ++i) d.push_back(alg->parse(std::to_string(i + 1) + "+eta,0,0,0"));
  const HermitianForm h = HermitianForm::diagonal(alg, 1, d);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_hermitian(h));
}
BENCHMARK(BM_HermitianTransfer)->Arg(2)->Arg(4);

void BM_HermitianDescentDecide(benchmark::State& state) {
  FieldRef k = parse_field("Q(sqrt(2))");
  AlgebraRef alg = AlgebraWithInvolution::quaternion(parse_quaternion_algebra(rationals(), "(-1,-1)"),
                                                    InvolutionSpec::canonical())
                       ->extend_scalars(k);
  const HermitianForm h = HermitianForm::diagonal(alg, 1, {alg->parse("1,0,0,0"), alg->parse("3+2*eta,0,0,0")});
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_descent_decide(h));
}
BENCHMARK(BM_HermitianDescentDecide);

}  // namespace

BENCHMARK_MAIN();
