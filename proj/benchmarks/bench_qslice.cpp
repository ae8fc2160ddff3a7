#include <benchmark/benchmark.h>

#include <random>

#include "qslice/qslice.hpp"

namespace {

using namespace qslice;

std::mt19937_64& engine() {
  static std::mt19937_64 e(42);
  return e;
}

double uniform() { return std::uniform_real_distribution<double>(-1.0, 1.0)(engine()); }
Quaternion random_quaternion() { return {uniform(), uniform(), uniform(), uniform()}; }
Complex random_complex() { return {uniform(), uniform()}; }
CQuaternion random_cquaternion() { return {random_complex(), random_complex(), random_complex(), random_complex()}; }

SliceFunction loggable() {
  const Domain d = Domain::disk({0.0, 2.5}, 1.0);
  return SliceFunction(polynomial_stem(d, {{1.5, 0.8, 0.0, 0.0}, {0.0, 0.0, 0.1, 0.0}}));
}

void BM_QuaternionProduct(benchmark::State& state) {
  const Quaternion p = random_quaternion(), q = random_quaternion();
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_QuaternionProduct);

void BM_CQuaternionProduct(benchmark::State& state) {
  const CQuaternion z = random_cquaternion(), w = random_cquaternion();
  for (auto _ : state) benchmark::DoNotOptimize(z * w);
}
BENCHMARK(BM_CQuaternionProduct);

void BM_Epsilon(benchmark::State& state) {
  const CQuaternion z = random_cquaternion();
  for (auto _ : state) benchmark::DoNotOptimize(epsilon(z));
}
BENCHMARK(BM_Epsilon);

void BM_SliceEval(benchmark::State& state) {
  const SliceFunction f(polynomial_stem(default_domain(), {random_quaternion(), random_quaternion(), random_quaternion()}));
  const Quaternion q = random_quaternion();
  for (auto _ : state) benchmark::DoNotOptimize(slice_eval(f, q));
}
BENCHMARK(BM_SliceEval);

// Construction plus the first evaluation, which fills the lift cache.
void BM_StarLogFirstEval(benchmark::State& state) {
  const SliceFunction f = loggable();
  const Quaternion q(0.1, 0.0, 2.4, 0.3);
  for (auto _ : state) {
    const SliceFunction g = star_log(f, branch_at_center(f.domain(), {1, -1}));
    benchmark::DoNotOptimize(g(q));
  }
  state.SetLabel("grid " + std::to_string(kLogGridResolution));
}
BENCHMARK(BM_StarLogFirstEval)->Unit(benchmark::kMillisecond);

void BM_StarLogCachedEval(benchmark::State& state) {
  const SliceFunction g = star_log(loggable(), branch_at_center(loggable().domain()));
  const Quaternion q(0.1, 0.0, 2.4, 0.3);
  benchmark::DoNotOptimize(g(q));
  for (auto _ : state) benchmark::DoNotOptimize(g(q));
}
BENCHMARK(BM_StarLogCachedEval);

void BM_BchCombine(benchmark::State& state) {
  const Domain d = Domain::disk(0.0, 1.5);
  const SliceFunction f(polynomial_stem(d, {{0.1, 0.2, 0, 0}, {0, 0, 0.3, 0}}));
  const SliceFunction g(polynomial_stem(d, {{0.2, 0, 0.1, 0.1}, {0, 0.1, 0, 0.2}}));
  const Quaternion q(0.3, 0.2, -0.1, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bch_combine(f, g)(q));
}
BENCHMARK(BM_BchCombine)->Unit(benchmark::kMicrosecond);

void BM_ExpSliceDerivative(benchmark::State& state) {
  const SliceFunction f(polynomial_stem(default_domain(), {random_quaternion(), random_quaternion(), random_quaternion()}));
  const Quaternion q = random_quaternion();
  for (auto _ : state) benchmark::DoNotOptimize(exp_slice_derivative(f, q));
}
BENCHMARK(BM_ExpSliceDerivative);

void BM_ExpDerivativeByQuadrature(benchmark::State& state) {
  const SliceFunction f(polynomial_stem(default_domain(), {random_quaternion(), random_quaternion(), random_quaternion()}));
  const SliceFunction e = star_exp(f);
  const Quaternion q = random_quaternion();
  for (auto _ : state) benchmark::DoNotOptimize(slice_derivative(e, q));
}
BENCHMARK(BM_ExpDerivativeByQuadrature);

}  // namespace

BENCHMARK_MAIN();
