#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gau/p5.hpp"
#include "gau/radical.hpp"
#include "gau/units.hpp"

using namespace gau;

namespace {

std::vector<Fe> random_elt(const GroupAlgebra& A, std::mt19937_64& rng) {
  std::vector<Fe> a(std::size_t(A.dim()));
  for (auto& c : a) c = Fe(rng() % A.F.q());
  return a;
}

}  // namespace

static void BM_FieldMul(benchmark::State& state) {
  Fq F = Fq::make(2, 4);
  std::mt19937_64 rng(1);
  std::vector<Fe> xs(1024), ys(1024);
  for (auto& v : xs) v = Fe(1 + rng() % 15);
  for (auto& v : ys) v = Fe(1 + rng() % 15);
  for (auto _ : state) {
    Fe acc = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      acc = F.add(acc, F.mul(xs[i], ys[i]));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul);

static void BM_Rref30(benchmark::State& state) {
  Fq F = Fq::make(5, 1);
  std::mt19937_64 rng(2);
  Mat m(30, 30);
  for (auto& v : m.a) v = Fe(rng() % 5);
  for (auto _ : state) {
    RrefResult r = rref(m, F);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_Rref30);

static void BM_GroupAlgebraMul(benchmark::State& state) {
  GroupAlgebra A(Fq::make(5, 1), build_group("C3xD10"));
  std::mt19937_64 rng(3);
  std::vector<Fe> a = random_elt(A, rng), b = random_elt(A, rng);
  for (auto _ : state) {
    auto c = A.mul(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_GroupAlgebraMul);

static void BM_Radical(benchmark::State& state) {
  GroupAlgebra A(Fq::make(2, 1), build_group("C3xD10"));
  Algebra alg = algebra_of(A);
  for (auto _ : state) {
    Subspace J = jacobson_radical(alg);
    benchmark::DoNotOptimize(J.dim());
  }
}
BENCHMARK(BM_Radical);

static void BM_StructureReport(benchmark::State& state) {
  GroupTable G = build_group("C3xD10");
  Fq F = Fq::make(7, 1);
  for (auto _ : state) {
    UnitReport r = structure_report(G, F);
    benchmark::DoNotOptimize(r.unit_order);
  }
}
BENCHMARK(BM_StructureReport);

static void BM_P5Suite(benchmark::State& state) {
  Fq F = Fq::make(5, 1);
  for (auto _ : state) {
    P5Report rep = verify_p5_structure(F, 0);
    benchmark::DoNotOptimize(rep.passed());
  }
}
BENCHMARK(BM_P5Suite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
