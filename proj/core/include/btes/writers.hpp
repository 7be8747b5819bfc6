#pragma once

#include <string>
#include <vector>

#include "btes/model.hpp"
#include "btes/mpc/closed_loop.hpp"
#include "btes/sim.hpp"
#include "btes/validate.hpp"

namespace btes {

/// Fixed 9-significant-digit decimal formatting used by every CSV writer, so
/// written files round-trip to within 5e-9 relative and identical runs
/// produce byte-identical output.
std::string fmt_g9(double v);

/// trace.csv: time_s,u_W,T_in_K,T_out_K,Q_B1_W_per_m..Q_Bnu_W_per_m
void write_trace_csv(const std::string& path, const Trajectory& traj);

/// n_y rows of n_x comma-separated Kelvin values, row 0 = south.
void write_heatmap_csv(const std::string& path, const std::vector<double>& grid,
                       int n_x, int n_y);

/// 16-bit binary PGM (maxval 65535, big-endian), linear map of
/// [T_amb - 1, max + 1] K onto [0, 65535]. North is the top image row.
void write_heatmap_pgm(const std::string& path, const std::vector<double>& grid,
                       int n_x, int n_y, double T_amb);

/// mpc_trace.csv: time_s,y_ref_W,u_W,T_in_K,T_out_K,kkt_residual,solve_ms,status
void write_mpc_trace_csv(const std::string& path, const ClosedLoopResult& result);

/// Line chart of y_ref and u over time as two SVG polylines with
/// deterministic coordinates.
void write_mpc_svg(const std::string& path, const ClosedLoopResult& result);

/// Plain state dump/load: one `index,value_K` row per state.
void write_state_csv(const std::string& path, const std::vector<double>& x);
std::vector<double> read_state_csv(const std::string& path);

void write_error_report_csv(const std::string& path, const ErrorReport& report);

/// Re-read a trace written by write_trace_csv (round-trip checks).
Trajectory read_trace_csv(const std::string& path);

}  // namespace btes
