#include <benchmark/benchmark.h>

#include "implycim/engine.hpp"
#include "implycim/gates.hpp"
#include "implycim/grain.hpp"
#include "implycim/oracle.hpp"
#include "implycim/shift.hpp"
#include "implycim/trivium.hpp"

using namespace implycim;

static void BM_TriviumInit(benchmark::State& state) {
  const auto mode = static_cast<shift_mode>(state.range(0));
  for (auto _ : state) {
    auto r = trivium_keystream(bits(80, 0), bits(80, 0), 0, mode);
    benchmark::DoNotOptimize(r.report.init.steps);
  }
  state.counters["steps"] = static_cast<double>(trivium_keystream(bits(80, 0), bits(80, 0), 0, mode).report.init.steps);
}
BENCHMARK(BM_TriviumInit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GrainInit(benchmark::State& state) {
  const auto mode = static_cast<shift_mode>(state.range(0));
  for (auto _ : state) {
    auto r = grain_keystream(bits(128, 0), bits(96, 0), 0, mode);
    benchmark::DoNotOptimize(r.report.init.steps);
  }
}
BENCHMARK(BM_GrainInit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TriviumKeystream(benchmark::State& state) {
  trivium_machine m(shift_mode::proposed);
  m.load_key_iv(bits(80, 0), bits(80, 0));
  for (std::uint64_t t = 0; t < trivium_layout::init_cycles; ++t) m.step_cycle();
  for (auto _ : state) benchmark::DoNotOptimize(m.step_cycle().bit);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TriviumKeystream);

static void BM_PlanProposed(benchmark::State& state) {
  const auto layout = trivium_layout::reg_c();
  for (auto _ : state) benchmark::DoNotOptimize(plan_proposed(layout, trivium_layout::init_cycles).stored_rows());
}
BENCHMARK(BM_PlanProposed);

static void BM_ImplyStep(benchmark::State& state) {
  const auto m = make_xor2n(cell_id{0}, cell_id{1}, cell_id{2}, cell_id{3}, cell_id{4});
  const auto ops = expand(m);
  std::vector<std::uint8_t> cells{1, 0, 0, 0, 0};
  for (auto _ : state) {
    run_unchecked(cells.data(), ops);
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ops.size()));
}
BENCHMARK(BM_ImplyStep);

static void BM_TriviumOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trivium_ref(bits(80, 1), bits(80, 0), 512).data());
}
BENCHMARK(BM_TriviumOracle);

BENCHMARK_MAIN();
