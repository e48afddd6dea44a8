#include <benchmark/benchmark.h>

#include "skw/grassmann.hpp"
#include "skw/scenarios.hpp"
#include "skw/subalg.hpp"

namespace {

using namespace skw;

const Session& session() {
  static const auto s = Session::create(SessionParams{});
  return *s;
}

void BM_BuildModel(benchmark::State& state) {
  const Session& s = session();
  int window = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = GradedAlgebraModel::build(s.field(), s.model().a(), s.model().b(), s.model().c(), window);
    benchmark::DoNotOptimize(m.dim(window));
  }
}
BENCHMARK(BM_BuildModel)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const auto& S = session().model();
  int n = static_cast<int>(state.range(0));
  SklElem x = S.zero(n), y = S.zero(n);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) x.coeffs[i] = S.field().from_int(static_cast<std::int64_t>(i + 1));
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] = S.field().from_int(static_cast<std::int64_t>(3 * i + 2));
  for (auto _ : state) benchmark::DoNotOptimize(S.multiply(x, y));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_Session(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Session::create(SessionParams{}));
}
BENCHMARK(BM_Session)->Unit(benchmark::kMillisecond);

void BM_BlowupSpq(benchmark::State& state) {
  const Session& s = session();
  Divisor d = Divisor::point(s.auto_point("P")) + Divisor::point(s.auto_point("Q"));
  for (auto _ : state) benchmark::DoNotOptimize(construct_blowup(s, d, s.model().window()));
}
BENCHMARK(BM_BlowupSpq)->Unit(benchmark::kMillisecond);

void BM_WindowedEnd(benchmark::State& state) {
  const Session& s = session();
  Point p = s.auto_point("P");
  SubalgebraWindow R = construct_blowup(s, Divisor::point(p), s.model().window());
  ModuleWindow M = vblow_module(s, R, p);
  for (auto _ : state) benchmark::DoNotOptimize(windowed_end(s.model(), M, s.model().window()));
}
BENCHMARK(BM_WindowedEnd)->Unit(benchmark::kMillisecond);

void BM_GHull(benchmark::State& state) {
  const Session& s = session();
  VblowExample ex = construct_vblow_prime(s, s.auto_point("P"), s.model().window());
  for (auto _ : state) benchmark::DoNotOptimize(g_hull(s.model(), ex.u, 3));
}
BENCHMARK(BM_GHull)->Unit(benchmark::kMillisecond);

void BM_Psi3(benchmark::State& state) {
  const PrimeField& F = session().field();
  SubspaceTuple t{random_subspace(F, 7, 6, 1), random_subspace(F, 7, 6, 2), random_subspace(F, 7, 6, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(psi3(F, t));
}
BENCHMARK(BM_Psi3);

void BM_Scenario(benchmark::State& state, const char* id) {
  ScenarioContext ctx{session(), {}};
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(id, ctx));
}
BENCHMARK_CAPTURE(BM_Scenario, core_s, "core-s")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, vblow, "vblow")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, grass, "grass")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
