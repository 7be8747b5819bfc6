#include <benchmark/benchmark.h>

#include "btes/config.hpp"
#include "btes/model.hpp"
#include "btes/mpc/condense.hpp"
#include "btes/mpc/qp.hpp"

namespace {

const btes::BtesModel& paper_model() {
  static const btes::BtesModel model =
      btes::build_model(btes::load_config(std::string(BTES_CONFIG_DIR) + "/paper.json"));
  return model;
}

void BM_SystemStep(benchmark::State& state) {
  const auto& model = paper_model();
  auto x = btes::ambient_state(model.sys, model.cfg.ground.T_amb);
  std::vector<double> next(x.size());
  for (auto _ : state) {
    model.sys.step_into(x, 4500.0, next);
    x.swap(next);
  }
}
BENCHMARK(BM_SystemStep);

void BM_CondenseAndSolve(benchmark::State& state) {
  const auto& model = paper_model();
  const auto& ocp = model.cfg.ocp;
  const auto ws = btes::build_condense_workspace(model.sys, ocp.H);
  const auto x = btes::ambient_state(model.sys, model.cfg.ground.T_amb);
  std::vector<double> y_ref(ocp.H, -750.0);
  for (auto _ : state) {
    const auto qp = btes::condense(model.sys, ws, ocp, x, 0.0, y_ref);
    benchmark::DoNotOptimize(btes::solve_qp(qp));
  }
}
BENCHMARK(BM_CondenseAndSolve);

}  // namespace

BENCHMARK_MAIN();
