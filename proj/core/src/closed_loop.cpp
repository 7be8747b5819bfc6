#include "btes/mpc/closed_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "btes/errors.hpp"
#include "btes/log.hpp"
#include "btes/mpc/condense.hpp"

namespace btes {

ClosedLoopResult run_closed_loop(const BtesModel& model, const OcpConfig& ocp,
                                 const DemandProfile& demand, int n_steps,
                                 const QpSettings& settings) {
  ocp.validate();
  if (n_steps < 1) throw ArgumentError("closed_loop: n_steps must be >= 1");
  if (demand.total_steps < n_steps + ocp.H - 1) {
    throw ArgumentError("closed_loop: demand profile too short for the horizon lookahead");
  }

  const AffineSystem& sys = model.sys;
  const CondenseWorkspace ws = build_condense_workspace(sys, ocp.H);

  std::vector<double> x = ambient_state(sys, model.cfg.ground.T_amb);
  std::vector<double> y_ref(ocp.H);
  std::vector<double> next(x.size());
  double u_prev = 0;

  ClosedLoopResult result;
  result.records.reserve(n_steps);
  Eigen::VectorXd warm = Eigen::VectorXd::Zero(ocp.H);

  double solve_ms_sum = 0;
  double abs_err_sum = 0;

  for (int k = 0; k < n_steps; ++k) {
    for (int i = 0; i < ocp.H; ++i) y_ref[i] = demand.at(k + i);

    const auto t0 = std::chrono::steady_clock::now();
    const CondensedQp qp = condense(sys, ws, ocp, x, u_prev, y_ref);
    const QpSolution qs = solve_qp(qp, settings, &warm);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    StepRecord rec;
    rec.time_s = k * sys.dt;
    rec.y_ref = y_ref[0];
    rec.status = qs.status;
    rec.kkt_residual = qs.kkt_residual;
    rec.solve_ms = ms;

    double u = u_prev;
    switch (qs.status) {
      case QpStatus::Optimal:
        u = qs.u(0);
        break;
      case QpStatus::MaxIterations:
        u = qs.u(0);  // apply the suboptimal first input
        rec.flagged = true;
        break;
      case QpStatus::InfeasibleDetected:
        u = std::clamp(u_prev, ocp.u_lo, ocp.u_hi);  // hold the previous input
        rec.flagged = true;
        break;
    }
    if (rec.flagged) {
      ++result.flagged_steps;
      log_message(LogLevel::Warn, "closed_loop: step " + std::to_string(k) + " " +
                                      to_string(qs.status));
    }

    // Shifted warm start for the next solve.
    if (qs.status != QpStatus::InfeasibleDetected) {
      warm.head(ocp.H - 1) = qs.u.tail(ocp.H - 1);
      warm(ocp.H - 1) = qs.u(ocp.H - 1);
    }

    sys.step_into(x, u, next);
    x.swap(next);

    rec.u = u;
    rec.t_in = x[sys.layout.t_in()];
    rec.t_out = x[sys.layout.t_out()];
    solve_ms_sum += ms;
    result.max_solve_ms = std::max(result.max_solve_ms, ms);
    abs_err_sum += std::abs(u - rec.y_ref);
    result.records.push_back(rec);
    u_prev = u;
  }

  result.mean_solve_ms = solve_ms_sum / n_steps;
  result.mean_abs_tracking_error = abs_err_sum / n_steps;
  return result;
}

}  // namespace btes
