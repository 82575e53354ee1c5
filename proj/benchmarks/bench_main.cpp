#include <benchmark/benchmark.h>

#include <random>

#include "koszul/factorization.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/linalg.hpp"
#include "koszul/toric.hpp"

using namespace koszul;

namespace {

FiniteGradedCategory kx(int n) {
  QuiverPresentation q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.max_length = n;
  return from_quiver(q);
}

void factorization_space_top(benchmark::State& state) {
  auto cat = kx(static_cast<int>(state.range(0)));
  MorId top{0};
  for (std::uint32_t m = 0; m < cat.num_morphisms(); ++m)
    if (cat.length(MorId{m}) > cat.length(top)) top = MorId{m};
  for (auto _ : state) benchmark::DoNotOptimize(factorization_space(cat, top).complex.size(0));
}
BENCHMARK(factorization_space_top)->DenseRange(6, 14, 4);

void koszul_toric(benchmark::State& state) {
  auto cat = skew_category(toric_from_json(fixture("f3").document)).category;
  for (auto _ : state) benchmark::DoNotOptimize(is_koszul(cat, Field::rationals()).koszul);
}
BENCHMARK(koszul_toric);

void product_verdict(benchmark::State& state) {
  auto p2 = load_category(fixture("beilinson-p2").document);
  auto prod = product(p2, p2);
  for (auto _ : state) benchmark::DoNotOptimize(is_koszul(prod, Field::rationals()).koszul);
}
BENCHMARK(product_verdict);

void sparse_rank(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(7);
  SparseMatrix m(n, n);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (std::uint32_t i = 0; i < 4 * n; ++i) m.add(pick(rng), pick(rng), (rng() % 2) ? 1 : -1);
  const Field field = state.range(1) == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, field));
}
BENCHMARK(sparse_rank)->ArgsProduct({{64, 256}, {0, 2, 101}});

}  // namespace

BENCHMARK_MAIN();
