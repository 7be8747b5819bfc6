#pragma once

#include <vector>

#include "btes/model.hpp"
#include "btes/mpc/demand.hpp"
#include "btes/mpc/qp.hpp"

namespace btes {

struct StepRecord {
  double time_s = 0;
  double y_ref = 0;   // [W]
  double u = 0;       // applied input [W]
  double t_in = 0;    // [K]
  double t_out = 0;   // [K]
  double kkt_residual = 0;
  double solve_ms = 0;
  QpStatus status = QpStatus::Optimal;
  bool flagged = false;
};

struct ClosedLoopResult {
  std::vector<StepRecord> records;
  double mean_solve_ms = 0;
  double max_solve_ms = 0;
  double mean_abs_tracking_error = 0;  // [W]
  int flagged_steps = 0;
};

/// Receding-horizon loop: condense at the measured state, solve, apply the
/// first input, advance the plant. The controller reads the known future
/// demand over its horizon. On MaxIterations the (suboptimal) first input is
/// applied and the step flagged; on InfeasibleDetected the previous input is
/// held and the step flagged.
ClosedLoopResult run_closed_loop(const BtesModel& model, const OcpConfig& ocp,
                                 const DemandProfile& demand, int n_steps,
                                 const QpSettings& settings = {});

}  // namespace btes
