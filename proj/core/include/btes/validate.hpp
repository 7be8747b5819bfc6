#pragma once

#include "btes/config.hpp"
#include "btes/measurements.hpp"
#include "btes/sim.hpp"

namespace btes {

struct ErrorReport {
  double mean_error_in = 0;   // simulated - measured [K]
  double std_error_in = 0;
  double mean_error_out = 0;
  double std_error_out = 0;
  int samples = 0;
};

struct ValidationResult {
  ErrorReport report;
  Trajectory traj;
};

/// Replay a measurement series against the single-BHE model. By default the
/// measured inlet temperature forces the T_in state each step; with
/// power_forcing the measured power (or, absent that, q_vol*c_w*(T_in-T_out))
/// drives the APU input instead. Errors are simulated minus measured at the
/// measurement timestamps inside [0, hours].
ValidationResult validate_bhe(const Config& cfg, const MeasurementSeries& series,
                              double hours, bool power_forcing = false);

/// Dataset-free check: run the single-BHE model under a constant charge, feed
/// its own inlet/outlet trace back as measurements, and validate. All error
/// statistics must be exactly zero.
ValidationResult self_check(const Config& cfg, double hours);

}  // namespace btes
