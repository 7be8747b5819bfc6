#include "btes/sim.hpp"

#include <cmath>
#include <string>

#include "btes/errors.hpp"
#include "btes/log.hpp"

namespace btes {

void Scenario::validate() const {
  if (n_steps < 1) throw ArgumentError("scenario: n_steps must be >= 1");
  if (u_schedule.empty() || u_schedule.front().first != 0) {
    throw ArgumentError("scenario: u_schedule must start at step 0");
  }
  for (size_t i = 1; i < u_schedule.size(); ++i) {
    if (u_schedule[i].first <= u_schedule[i - 1].first) {
      throw ArgumentError("scenario: u_schedule starts must be strictly increasing");
    }
  }
}

double Scenario::u_at(int step) const {
  double u = u_schedule.front().second;
  for (const auto& [start, value] : u_schedule) {
    if (start > step) break;
    u = value;
  }
  return u;
}

Trajectory simulate(const BtesModel& model, const Scenario& scenario, int stride) {
  scenario.validate();
  if (stride < 1) throw ArgumentError("simulate: stride must be >= 1");
  const AffineSystem& sys = model.sys;
  if (model.rho_estimate > 1.0 + 1e-9) {
    log_message(LogLevel::Warn, "simulate: spectral radius estimate " +
                                    std::to_string(model.rho_estimate) + " exceeds 1");
  }

  std::vector<double> x = scenario.x0.empty()
                              ? ambient_state(sys, model.cfg.ground.T_amb)
                              : scenario.x0;
  if (static_cast<int>(x.size()) != sys.layout.n()) {
    throw ArgumentError("simulate: x0 dimension mismatch");
  }

  Trajectory traj;
  traj.dt = sys.dt;
  traj.stride = stride;

  auto record = [&](int step) {
    traj.times.push_back(step * sys.dt);
    traj.states.push_back(x);
    traj.inputs.push_back(scenario.u_at(std::min(step, scenario.n_steps - 1)));
    traj.t_in.push_back(x[sys.layout.t_in()]);
    traj.t_out.push_back(x[sys.layout.t_out()]);
    std::vector<double> q(sys.layout.nu);
    for (int j = 0; j < sys.layout.nu; ++j) q[j] = bhe_heat_flux(model, x, j);
    traj.q_bhe.push_back(std::move(q));
  };

  std::vector<double> next(x.size());
  record(0);
  for (int k = 0; k < scenario.n_steps; ++k) {
    sys.step_into(x, scenario.u_at(k), next);
    x.swap(next);
    for (const double v : x) {
      if (!std::isfinite(v)) {
        throw NumericError("simulate: diverged at step " + std::to_string(k + 1));
      }
    }
    if ((k + 1) % stride == 0) record(k + 1);
  }
  return traj;
}

std::vector<double> extract_heatmap(const BtesModel& model, const Trajectory& traj, int record) {
  if (record < 0 || record >= static_cast<int>(traj.states.size())) {
    throw ArgumentError("extract_heatmap: record index out of range");
  }
  const StateLayout& layout = model.sys.layout;
  std::vector<double> grid(model.mesh.cell_count());
  for (int cell = 0; cell < model.mesh.cell_count(); ++cell) {
    grid[cell] = traj.states[record][layout.ground_state(cell)];
  }
  return grid;  // row-major, row 0 = south, matching the cell id order
}

}  // namespace btes
