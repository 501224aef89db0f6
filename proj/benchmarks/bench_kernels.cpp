#include <benchmark/benchmark.h>

#include "sk/cone.hpp"
#include "sk/families.hpp"
#include "sk/floer.hpp"
#include "sk/sweep.hpp"

namespace {

// q = k^2 mod p with a mid-range k, the shape the sweep feeds the kernel
sk::SimpleKnot sweep_knot(std::int64_t p) {
  std::int64_t k = p / 3;
  while (sk::gcd_ll(k, p) != 1) ++k;
  return sk::SimpleKnot{p, sk::mul_mod(k, k, p), k};
}

void BM_WidthKernel(benchmark::State& state) {
  const sk::SimpleKnot K = sweep_knot(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sk::width_kernel(K.p, K.q, K.k));
  state.SetItemsProcessed(state.iterations() * K.p);
}
BENCHMARK(BM_WidthKernel)->Arg(1000)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_Profile(benchmark::State& state) {
  const sk::SimpleKnot K = sweep_knot(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sk::f_profile(K));
}
BENCHMARK(BM_Profile)->Arg(1000)->Arg(100000);

void BM_AlexanderPolynomial(benchmark::State& state) {
  const sk::SimpleKnot K = sweep_knot(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sk::alexander_polynomial(K));
}
BENCHMARK(BM_AlexanderPolynomial)->Arg(1000)->Arg(10000);

void BM_FamilyMembership(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  std::int64_t hits = 0;
  for (auto _ : state) {
    for (std::int64_t k = 1; k < std::min<std::int64_t>(p, 200); ++k)
      if (sk::gcd_ll(k, p) == 1) hits += sk::is_family_member(p, k) ? 1 : 0;
  }
  benchmark::DoNotOptimize(hits);
}
BENCHMARK(BM_FamilyMembership)->Arg(2003)->Arg(99991);

void BM_SurgeryRank(benchmark::State& state) {
  const sk::SimpleKnot K = sweep_knot(state.range(0));
  const std::int64_t a = sk::self_linking(K);
  const std::int64_t m = sk::normalized_residue(-a, K.p);  // nonzero since a is a unit
  for (auto _ : state)
    benchmark::DoNotOptimize(sk::surgery_rank(K, m));
}
BENCHMARK(BM_SurgeryRank)->Arg(101)->Arg(1009);

void BM_SweepBlock(benchmark::State& state) {
  for (auto _ : state) {
    const sk::SweepReport r = sk::verify_conjecture({state.range(0), true, true});
    benchmark::DoNotOptimize(r.knots_checked);
  }
}
BENCHMARK(BM_SweepBlock)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
