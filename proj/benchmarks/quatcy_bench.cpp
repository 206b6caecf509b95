#include <benchmark/benchmark.h>

#include "quatcy/checks.hpp"
#include "quatcy/ideal.hpp"
#include "quatcy/instance.hpp"
#include "quatcy/points.hpp"

namespace {

using namespace quatcy;

const QuadricSystem& system13() {
  static const QuadricSystem qs = build_quadrics(random_instance(1, FieldSpec::prime(13)));
  return qs;
}

void BM_SingularLocusGroebner(benchmark::State& state) {
  const auto gens = singular_locus_ideal(system13());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens).size());
}
BENCHMARK(BM_SingularLocusGroebner)->Unit(benchmark::kMillisecond);

void BM_FreeActionGroebner(benchmark::State& state) {
  const Instance inst = random_instance(1, FieldSpec::prime(13));
  for (auto _ : state) benchmark::DoNotOptimize(check_free_action(inst).verdict);
}
BENCHMARK(BM_FreeActionGroebner)->Unit(benchmark::kMillisecond);

void BM_HilbertFunction(benchmark::State& state) {
  const GroebnerBasis gb = buchberger({system13().q.begin(), system13().q.end()});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(gb, 8));
}
BENCHMARK(BM_HilbertFunction);

void BM_ScanP7(benchmark::State& state) {
  const Instance inst = random_instance(1, FieldSpec::prime(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_points(inst, 1, ScanOptions{256, 1}).points.size());
}
BENCHMARK(BM_ScanP7)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr k = make_field(FieldSpec::extension(13, 2));
  Element a = k->from_int(3), b = k->sqrt_minus_one();
  for (auto _ : state) {
    a = k->add(k->mul(a, b), k->one());
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_SmallFieldMul(benchmark::State& state) {
  const SmallField k(make_field(FieldSpec::extension(13, 2)));
  std::uint8_t a = 3;
  const std::uint8_t b = k.sqrt_minus_one();
  for (auto _ : state) {
    a = k.add(k.mul(a, b), 1);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_SmallFieldMul);

}  // namespace

BENCHMARK_MAIN();
