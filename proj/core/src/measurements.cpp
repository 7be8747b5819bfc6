#include "btes/measurements.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "btes/errors.hpp"

namespace btes {
namespace {

double interp(const std::vector<double>& times, const std::vector<double>& values, double t) {
  if (times.empty()) throw ArgumentError("measurements: empty series");
  if (t < times.front() - 1e-9 || t > times.back() + 1e-9) {
    throw ArgumentError("measurements: time outside the recorded range");
  }
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return values.front();
  if (it == times.end()) return values.back();
  const size_t i = it - times.begin();
  const double t0 = times[i - 1], t1 = times[i];
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * values[i - 1] + w * values[i];
}

double parse_field(const std::string& field, int line_no) {
  double v = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("measurements: non-numeric field '" + field + "' on line " +
                     std::to_string(line_no));
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

double MeasurementSeries::interp_t_in(double t) const { return interp(times, t_in, t); }
double MeasurementSeries::interp_t_out(double t) const { return interp(times, t_out, t); }
double MeasurementSeries::interp_power(double t) const {
  if (!has_power()) throw ArgumentError("measurements: series has no power column");
  return interp(times, power, t);
}

void MeasurementSeries::validate() const {
  if (times.empty()) throw ParseError("measurements: no data rows");
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] <= times[i - 1]) {
      throw ParseError("measurements: non-monotone time at row " + std::to_string(i + 1));
    }
  }
  for (size_t i = 0; i < times.size(); ++i) {
    if (t_in[i] <= 200 || t_in[i] >= 400 || t_out[i] <= 200 || t_out[i] >= 400) {
      throw ParseError("measurements: temperature outside the (200, 400) K sanity band at row " +
                       std::to_string(i + 1));
    }
  }
}

MeasurementSeries parse_measurements(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw ParseError("measurements: empty file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool with_power = false;
  if (line == "time_s,T_in_K,T_out_K") {
    with_power = false;
  } else if (line == "time_s,T_in_K,T_out_K,power_W") {
    with_power = true;
  } else {
    throw ParseError("measurements: expected header time_s,T_in_K,T_out_K[,power_W]");
  }

  MeasurementSeries series;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    const size_t expected = with_power ? 4 : 3;
    if (fields.size() != expected) {
      throw ParseError("measurements: expected " + std::to_string(expected) +
                       " fields on line " + std::to_string(line_no));
    }
    series.times.push_back(parse_field(fields[0], line_no));
    series.t_in.push_back(parse_field(fields[1], line_no));
    series.t_out.push_back(parse_field(fields[2], line_no));
    if (with_power) series.power.push_back(parse_field(fields[3], line_no));
  }
  series.validate();
  return series;
}

MeasurementSeries load_measurements(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("measurements: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_measurements(ss.str());
}

}  // namespace btes
