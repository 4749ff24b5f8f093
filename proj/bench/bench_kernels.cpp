// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <memory>

#include "atk/grouppres/epimorphisms.hpp"
#include "atk/laurent/poly_matrix.hpp"
#include "atk/twistedalex/twisted.hpp"

namespace {

atk::Presentation na() {
  return atk::Presentation::parse({"a", "b", "c"}, {"[a,b]", "[a,c]", "b c b^-1 a^-1 c^-1"});
}

atk::Presentation m_group() {
  return atk::Presentation::parse(
      {"a1", "b1", "c1", "d1", "f1", "a2", "b2", "c2", "d2", "f2"},
      {"[a1,b1] d1", "[a1,c1]", "b1 c1 a1^-1 b1^-1 c1^-1", "[c1,d1]", "[a2,b2] d2", "[a2,c2]",
       "b2 c2 a2^-1 b2^-1 c2^-1", "[c2,d2]", "f1 c2^-1", "c1 f2^-1", "d1 d2^-1"});
}

// Twisted Jacobian of N_a for an epimorphism onto Z/m, first block column
// deleted: a 3m x 2m matrix with many maximal minors.
atk::PolyMatrix twisted_block(std::size_t m) {
  const atk::Presentation p = na();
  auto g = std::make_shared<const atk::FiniteGroup>(atk::FiniteGroup::cyclic(m));
  const atk::FiniteQuotient alpha{g, {0, 1, 0}};
  const atk::ClassMap phi(p, std::vector<long>{0, 0, 1});
  return atk::twisted_jacobian(p, atk::TwistData{phi, alpha}).without_column(0);
}

void BM_MinorGcdParallel(benchmark::State& state) {
  const atk::PolyMatrix j = twisted_block(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atk::maximal_minor_gcd(j));
}

void BM_MinorGcdSerial(benchmark::State& state) {
  const atk::PolyMatrix j = twisted_block(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atk::maximal_minor_gcd_serial(j));
}

void BM_EpimorphismsParallel(benchmark::State& state) {
  const atk::Presentation p = m_group();
  auto g = std::make_shared<const atk::FiniteGroup>(atk::FiniteGroup::cyclic(4));
  for (auto _ : state) benchmark::DoNotOptimize(atk::enumerate_epimorphisms(p, g));
}

void BM_EpimorphismsSerial(benchmark::State& state) {
  const atk::Presentation p = m_group();
  auto g = std::make_shared<const atk::FiniteGroup>(atk::FiniteGroup::cyclic(4));
  for (auto _ : state) benchmark::DoNotOptimize(atk::enumerate_epimorphisms_serial(p, g));
}

}  // namespace

BENCHMARK(BM_MinorGcdParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorGcdSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EpimorphismsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EpimorphismsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
