#pragma once

#include <utility>
#include <vector>

#include "btes/model.hpp"

namespace btes {

struct Scenario {
  std::vector<double> x0;  // [K]; empty = all ambient
  // Piecewise-constant input: (start step, value [W]); must start at step 0
  // with strictly increasing starts.
  std::vector<std::pair<int, double>> u_schedule;
  int n_steps = 0;

  void validate() const;
  double u_at(int step) const;
};

struct Trajectory {
  double dt = 0;
  int stride = 1;
  std::vector<double> times;                 // [s]
  std::vector<std::vector<double>> states;   // recorded full states [K]
  std::vector<double> inputs;                // input at each record [W]
  std::vector<double> t_in;                  // [K]
  std::vector<double> t_out;                 // [K]
  std::vector<std::vector<double>> q_bhe;    // per record, per BHE [W/m]
};

/// Iterate the affine step, recording every `stride` steps (step indices
/// divisible by stride, including 0). Throws NumericError with the step index
/// if the state goes non-finite.
Trajectory simulate(const BtesModel& model, const Scenario& scenario, int stride);

/// Ground temperatures of one record as an n_y x n_x grid, row 0 = south.
std::vector<double> extract_heatmap(const BtesModel& model, const Trajectory& traj, int record);

}  // namespace btes
