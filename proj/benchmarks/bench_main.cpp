#include <benchmark/benchmark.h>

#include <random>

#include "quiverpar/flagcount.hpp"
#include "quiverpar/klr.hpp"
#include "quiverpar/qf.hpp"
#include "quiverpar/representation.hpp"

using namespace quiverpar;

namespace {

// Fiber of the expanded flag type over the zero orbit of D4 at (1,2,1,1).
void BM_CountFiber(benchmark::State& st) {
  auto q = Quiver::type_D(4);
  const DimVector nu{1, 2, 1, 1};
  auto os = orbits(q, root_system(q), nu);
  auto ys = enumerate_flag_types(q, nu);
  const int qq = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (const auto& y : ys) benchmark::DoNotOptimize(count_fiber(q, os.front().rep, y, qq));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * ys.size()));
}
BENCHMARK(BM_CountFiber)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KlrMultiply(benchmark::State& st) {
  auto q = Quiver::type_A(3);
  KlrAlgebra A(q, {1, 2, 1});
  std::mt19937 g(1);
  std::vector<KlrElement> terms;
  const auto seqs = A.sequences();
  for (int k = 0; k < 16; ++k) {
    Seq cur = seqs[static_cast<std::size_t>(k) % seqs.size()];
    auto u = A.idem(cur);
    for (int l = 0; l + 1 < A.m(); ++l)
      if ((g() & 1) != 0) {
        u = A.multiply(A.tau(cur, l), u);
        std::swap(cur[static_cast<std::size_t>(l)], cur[static_cast<std::size_t>(l) + 1]);
      }
    u = A.multiply(A.x(cur, static_cast<int>(g() % static_cast<unsigned>(A.m()))), u);
    terms.push_back(u);
  }
  std::size_t k = 0;
  for (auto _ : st) {
    const auto& u = terms[k % terms.size()];
    const auto& v = terms[(k * 7 + 3) % terms.size()];
    benchmark::DoNotOptimize(A.multiply(u, v));
    ++k;
  }
}
BENCHMARK(BM_KlrMultiply);

void BM_DimF(benchmark::State& st) {
  auto q = Quiver::type_D(4);
  const DimVector nu{1, 2, 1, 1};
  for (auto _ : st) {
    QuantumGroup f(q);  // fresh, so the Gram matrix is rebuilt
    benchmark::DoNotOptimize(f.dim_f(nu));
  }
}
BENCHMARK(BM_DimF)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
