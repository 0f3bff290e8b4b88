#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cliff/kernel.hpp"

namespace {

using cliff::Signature;
using cliff::kernel::Product;

struct Operands {
  Signature sig;
  std::vector<double> a, b, out;

  explicit Operands(int d) : sig(d, 0, 0), a(sig.blade_count()), b(sig.blade_count()), out(sig.blade_count()) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
  }
};

template <auto Fn>
void run(benchmark::State& state) {
  Operands ops(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::fill(ops.out.begin(), ops.out.end(), 0.0);
    Fn(ops.sig, Product::Geometric, ops.a, ops.b, ops.out);
    benchmark::DoNotOptimize(ops.out.data());
  }
  const auto n = static_cast<int64_t>(ops.sig.blade_count());
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_GeometricSerial(benchmark::State& state) { run<cliff::kernel::product_serial>(state); }
void BM_GeometricOpenMP(benchmark::State& state) { run<cliff::kernel::product_openmp>(state); }

}  // namespace

BENCHMARK(BM_GeometricSerial)->DenseRange(4, 12, 2);
BENCHMARK(BM_GeometricOpenMP)->DenseRange(4, 12, 2);

BENCHMARK_MAIN();
