#pragma once

#include <string>
#include <vector>

namespace btes {

/// Thermal-response-test reference series. CSV schema:
///   time_s,T_in_K,T_out_K[,power_W]
struct MeasurementSeries {
  std::vector<double> times;  // [s], strictly increasing
  std::vector<double> t_in;   // [K]
  std::vector<double> t_out;  // [K]
  std::vector<double> power;  // [W], empty when the column is absent

  bool has_power() const { return !power.empty(); }
  double span_s() const { return times.empty() ? 0 : times.back() - times.front(); }

  // Linear interpolation; t must lie within [times.front(), times.back()].
  double interp_t_in(double t) const;
  double interp_t_out(double t) const;
  double interp_power(double t) const;

  void validate() const;
};

MeasurementSeries load_measurements(const std::string& path);
MeasurementSeries parse_measurements(const std::string& csv_text);

}  // namespace btes
