// Command-line front end: mesh-info, system-info, simulate, mpc-run,
// validate-bhe. All outputs are deterministic for a fixed config and seed.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "btes/config.hpp"
#include "btes/errors.hpp"
#include "btes/log.hpp"
#include "btes/model.hpp"
#include "btes/mpc/closed_loop.hpp"
#include "btes/mpc/demand.hpp"
#include "btes/sim.hpp"
#include "btes/validate.hpp"
#include "btes/writers.hpp"

namespace fs = std::filesystem;
using namespace btes;

namespace {

void ensure_out_dir(const std::string& out) {
  if (out.empty()) throw ArgumentError("an output directory is required (--out)");
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create output directory " + out);
}

int run_mesh_info(const Config& cfg) {
  const Mesh mesh = build_mesh(cfg.mesh);
  const auto classes = classify_cells(mesh, cfg.mesh.bhe_positions);
  int boundary = 0, interior = 0, bhe_cells = 0, bhe_neighbors = 0;
  for (const auto& cc : classes) {
    switch (cc.kind) {
      case CellKind::Boundary: ++boundary; break;
      case CellKind::Interior: ++interior; break;
      case CellKind::BheCell: ++bhe_cells; break;
      case CellKind::BheNeighbor: ++bhe_neighbors; break;
    }
  }
  std::cout << "n_x: " << mesh.n_x << "\n"
            << "n_y: " << mesh.n_y << "\n"
            << "cells: " << mesh.cell_count() << "\n"
            << "boundary: " << boundary << "\n"
            << "interior: " << interior << "\n"
            << "bhe_cells: " << bhe_cells << "\n"
            << "bhe_neighbors: " << bhe_neighbors << "\n";
  return 0;
}

int run_system_info(const Config& cfg) {
  const BtesModel model = build_model(cfg);
  const auto ambient = ambient_state(model.sys, cfg.ground.T_amb);
  const auto next = model.sys.step(ambient, 0.0);
  double residual = 0;
  for (size_t i = 0; i < next.size(); ++i) {
    residual = std::max(residual, std::abs(next[i] - ambient[i]));
  }
  std::cout << "n: " << model.sys.layout.n() << "\n"
            << "nnz: " << model.sys.A.nnz() << "\n"
            << "spectral_radius: " << fmt_g9(model.rho_estimate) << "\n"
            << "fixed_point_residual_K: " << fmt_g9(residual) << "\n";
  return 0;
}

int run_simulate(const Config& cfg, const std::string& out, double hours, double power,
                 int stride) {
  ensure_out_dir(out);
  const BtesModel model = build_model(cfg);
  Scenario scenario;
  scenario.n_steps = static_cast<int>(std::llround(hours * 3600.0 / cfg.ground.dt));
  scenario.u_schedule = {{0, power}};
  const Trajectory traj = simulate(model, scenario, stride);

  write_trace_csv(out + "/trace.csv", traj);
  const auto grid = extract_heatmap(model, traj, static_cast<int>(traj.states.size()) - 1);
  write_heatmap_csv(out + "/heatmap_final.csv", grid, model.mesh.n_x, model.mesh.n_y);
  write_heatmap_pgm(out + "/heatmap_final.pgm", grid, model.mesh.n_x, model.mesh.n_y,
                    cfg.ground.T_amb);
  write_state_csv(out + "/state_final.csv", traj.states.back());

  const double max_t = *std::max_element(grid.begin(), grid.end());
  std::cout << "steps: " << scenario.n_steps << "\n"
            << "max_ground_T_K: " << fmt_g9(max_t) << "\n"
            << "records: " << traj.times.size() << "\n";
  return 0;
}

int run_mpc(const Config& cfg, const std::string& out, double hours, std::uint64_t seed) {
  ensure_out_dir(out);
  const BtesModel model = build_model(cfg);
  const int n_steps = static_cast<int>(std::llround(hours * 3600.0 / cfg.ground.dt));
  const DemandProfile demand =
      generate_demand(seed, hours, 5.0, -1000.0, -500.0, cfg.ground.dt, cfg.ocp.H);
  const ClosedLoopResult result = run_closed_loop(model, cfg.ocp, demand, n_steps);

  write_mpc_trace_csv(out + "/mpc_trace.csv", result);
  write_mpc_svg(out + "/mpc_trace.svg", result);

  std::cout << "steps: " << n_steps << "\n"
            << "mean_solve_ms: " << fmt_g9(result.mean_solve_ms) << "\n"
            << "max_solve_ms: " << fmt_g9(result.max_solve_ms) << "\n"
            << "mean_abs_tracking_error_W: " << fmt_g9(result.mean_abs_tracking_error) << "\n"
            << "flagged_steps: " << result.flagged_steps << "\n";
  return 0;
}

int run_validate(const Config& cfg, const std::string& out, const std::string& data,
                 double hours, bool power_forcing) {
  ValidationResult result;
  if (data.empty()) {
    log_message(LogLevel::Info, "no dataset given; running the self-comparison path");
    result = self_check(cfg, hours);
  } else {
    const MeasurementSeries series = load_measurements(data);
    result = validate_bhe(cfg, series, hours, power_forcing);
  }
  if (!out.empty()) {
    ensure_out_dir(out);
    write_trace_csv(out + "/validation_trace.csv", result.traj);
    write_error_report_csv(out + "/error_report.csv", result.report);
  }
  const ErrorReport& r = result.report;
  std::cout << "samples: " << r.samples << "\n"
            << "mean_error_in_K: " << fmt_g9(r.mean_error_in) << "\n"
            << "std_error_in_K: " << fmt_g9(r.std_error_in) << "\n"
            << "mean_error_out_K: " << fmt_g9(r.mean_error_out) << "\n"
            << "std_error_out_K: " << fmt_g9(r.std_error_out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borehole thermal energy storage simulation and control toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 42;
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "random seed");

  auto* mesh_info = app.add_subcommand("mesh-info", "print mesh dimensions and cell classes");
  mesh_info->fallthrough();
  auto* system_info = app.add_subcommand("system-info", "print state-space diagnostics");
  system_info->fallthrough();

  auto* simulate_cmd = app.add_subcommand("simulate", "open-loop charging simulation");
  simulate_cmd->fallthrough();
  double sim_hours = 26.0, sim_power = 4500.0;
  int stride = 20;
  simulate_cmd->add_option("--hours", sim_hours, "simulated hours");
  simulate_cmd->add_option("--power", sim_power, "constant APU power [W]");
  simulate_cmd->add_option("--stride", stride, "record every k-th step");

  auto* mpc_cmd = app.add_subcommand("mpc-run", "closed-loop tracking MPC run");
  mpc_cmd->fallthrough();
  double mpc_hours = 24.0;
  mpc_cmd->add_option("--hours", mpc_hours, "run length in hours");

  auto* validate_cmd = app.add_subcommand("validate-bhe", "thermal response test replay");
  validate_cmd->fallthrough();
  std::string data_path;
  double val_hours = 52.0;
  bool power_forcing = false;
  validate_cmd->add_option("--data", data_path,
                           "measurement CSV (time_s,T_in_K,T_out_K[,power_W]); "
                           "omit for the self-comparison path");
  validate_cmd->add_option("--hours", val_hours, "validation window in hours");
  validate_cmd->add_flag("--power-forcing", power_forcing,
                         "drive with measured power instead of inlet temperature");

  CLI11_PARSE(app, argc, argv);

  try {
    const Config cfg = load_config(config_path);
    if (mesh_info->parsed()) return run_mesh_info(cfg);
    if (system_info->parsed()) return run_system_info(cfg);
    if (simulate_cmd->parsed()) return run_simulate(cfg, out_dir, sim_hours, sim_power, stride);
    if (mpc_cmd->parsed()) return run_mpc(cfg, out_dir, mpc_hours, seed);
    if (validate_cmd->parsed()) {
      return run_validate(cfg, out_dir, data_path, val_hours, power_forcing);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
