#include <benchmark/benchmark.h>

#include "adjq/correspond.hpp"
#include "adjq/intlat.hpp"
#include "adjq/ratmat.hpp"
#include "adjq/rootsys.hpp"
#include "adjq/sections.hpp"
#include "adjq/weyl.hpp"

using namespace adjq;

static void BM_RootSystemE8(benchmark::State& state) {
  for (auto _ : state) {
    rootsys::RootSystem rs = rootsys::build_root_system("E8");
    benchmark::DoNotOptimize(rs.roots.size());
  }
}
BENCHMARK(BM_RootSystemE8);

static void BM_WeightOrbit27(benchmark::State& state) {
  rootsys::RootSystem rs = rootsys::build_root_system("E6");
  auto gens = weyl::simple_reflections(rs);
  for (auto _ : state) {
    auto orb = weyl::weight_orbit(gens, rootsys::WeightVec::fundamental(6, 0));
    benchmark::DoNotOptimize(orb.size());
  }
}
BENCHMARK(BM_WeightOrbit27);

static void BM_RegularOrbitF4(benchmark::State& state) {
  rootsys::RootSystem rs = rootsys::build_root_system("F4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::weyl_order_by_orbit(rs));
  }
}
BENCHMARK(BM_RegularOrbitF4);

static void BM_SmithForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  intlat::IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = (i + 1) * (j + 2) % 17 - 8;
  for (auto _ : state) {
    auto d = intlat::smith(m);
    benchmark::DoNotOptimize(d.rank());
  }
}
BENCHMARK(BM_SmithForm)->Arg(8)->Arg(16)->Arg(24);

static void BM_KernelGenerationD4(benchmark::State& state) {
  rootsys::RootSystem rs = rootsys::build_root_system("D4");
  for (auto _ : state) {
    auto rep = correspond::verify_kernel_generation(rs);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_KernelGenerationD4);

static void BM_CharpolySlicePoint(benchmark::State& state) {
  sections::KostantSlice s = sections::build_kostant_slice(rootsys::Family::B, 3);
  std::vector<ratmat::Rat> b;
  for (int i = 0; i < 3; ++i) b.emplace_back(i + 2, 3);
  ratmat::RatMat z = s.point(b);
  for (auto _ : state) {
    auto c = ratmat::charpoly(z);
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_CharpolySlicePoint);

BENCHMARK_MAIN();
