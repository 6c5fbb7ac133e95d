#include <benchmark/benchmark.h>

#include "soilpv/mppt.hpp"
#include "soilpv/pv.hpp"
#include "soilpv/sim.hpp"

namespace {

static void BM_PvCurve(benchmark::State& state) {
  const soilpv::pv::PanelSpec panel;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(soilpv::pv::pv_curve(panel, 800.0, panel.t_ref, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PvCurve)->Arg(200)->Arg(10000);

static void BM_MppOracle(benchmark::State& state) {
  const soilpv::pv::PanelSpec panel;
  const auto resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(soilpv::pv::mpp_oracle(panel, 800.0, panel.t_ref, resolution));
  }
}
BENCHMARK(BM_MppOracle)->Arg(1000)->Arg(100000);

static void BM_PoStep(benchmark::State& state) {
  auto s = soilpv::mppt::initial_state({}, 20.0, 12.0);
  double v = 15.0;
  for (auto _ : state) {
    const auto u = soilpv::mppt::po_step(s, v, 4.0);
    s = u.state;
    v = 12.0 / u.duty;
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PoStep);

// One simulated day at dt = 1 s.
static void BM_SimulateDay(benchmark::State& state) {
  soilpv::sim::Scenario sc;
  sc.dt = 1.0;
  sc.duration = 86400.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(soilpv::sim::run(sc));
  }
  state.SetItemsProcessed(state.iterations() * 86400);
}
BENCHMARK(BM_SimulateDay)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
