#include "btes/writers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "btes/errors.hpp"

namespace btes {
namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("writers: cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::string fmt_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const Trajectory& traj) {
  auto out = open_out(path);
  const int nu = traj.q_bhe.empty() ? 0 : static_cast<int>(traj.q_bhe.front().size());
  out << "time_s,u_W,T_in_K,T_out_K";
  for (int j = 0; j < nu; ++j) out << ",Q_B" << (j + 1) << "_W_per_m";
  out << '\n';
  for (size_t i = 0; i < traj.times.size(); ++i) {
    out << fmt_g9(traj.times[i]) << ',' << fmt_g9(traj.inputs[i]) << ','
        << fmt_g9(traj.t_in[i]) << ',' << fmt_g9(traj.t_out[i]);
    for (int j = 0; j < nu; ++j) out << ',' << fmt_g9(traj.q_bhe[i][j]);
    out << '\n';
  }
}

Trajectory read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("writers: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("trace: empty file");
  Trajectory traj;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> fields;
    while (std::getline(ss, field, ',')) {
      try {
        fields.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ParseError("trace: non-numeric field on line " + std::to_string(line_no));
      }
    }
    if (fields.size() < 4) throw ParseError("trace: short row on line " + std::to_string(line_no));
    traj.times.push_back(fields[0]);
    traj.inputs.push_back(fields[1]);
    traj.t_in.push_back(fields[2]);
    traj.t_out.push_back(fields[3]);
    traj.q_bhe.emplace_back(fields.begin() + 4, fields.end());
  }
  return traj;
}

void write_heatmap_csv(const std::string& path, const std::vector<double>& grid,
                       int n_x, int n_y) {
  if (static_cast<int>(grid.size()) != n_x * n_y) {
    throw ArgumentError("writers: heatmap grid size mismatch");
  }
  auto out = open_out(path);
  for (int iy = 0; iy < n_y; ++iy) {
    for (int ix = 0; ix < n_x; ++ix) {
      if (ix > 0) out << ',';
      out << fmt_g9(grid[iy * n_x + ix]);
    }
    out << '\n';
  }
}

void write_heatmap_pgm(const std::string& path, const std::vector<double>& grid,
                       int n_x, int n_y, double T_amb) {
  if (static_cast<int>(grid.size()) != n_x * n_y) {
    throw ArgumentError("writers: heatmap grid size mismatch");
  }
  const double lo = T_amb - 1.0;
  const double hi = *std::max_element(grid.begin(), grid.end()) + 1.0;
  auto out = open_out(path, std::ios::out | std::ios::binary);
  out << "P5\n" << n_x << ' ' << n_y << "\n65535\n";
  for (int iy = n_y - 1; iy >= 0; --iy) {  // north at the top of the image
    for (int ix = 0; ix < n_x; ++ix) {
      const double t = grid[iy * n_x + ix];
      const double scaled = (t - lo) / (hi - lo) * 65535.0;
      const int v = std::clamp(static_cast<int>(std::lround(scaled)), 0, 65535);
      out.put(static_cast<char>((v >> 8) & 0xff));
      out.put(static_cast<char>(v & 0xff));
    }
  }
}

void write_mpc_trace_csv(const std::string& path, const ClosedLoopResult& result) {
  auto out = open_out(path);
  out << "time_s,y_ref_W,u_W,T_in_K,T_out_K,kkt_residual,solve_ms,status\n";
  for (const StepRecord& r : result.records) {
    out << fmt_g9(r.time_s) << ',' << fmt_g9(r.y_ref) << ',' << fmt_g9(r.u) << ','
        << fmt_g9(r.t_in) << ',' << fmt_g9(r.t_out) << ',' << fmt_g9(r.kkt_residual) << ','
        << fmt_g9(r.solve_ms) << ',' << to_string(r.status) << '\n';
  }
}

void write_mpc_svg(const std::string& path, const ClosedLoopResult& result) {
  const int width = 960, height = 360, pad = 40;
  const auto& recs = result.records;
  if (recs.empty()) throw ArgumentError("writers: empty closed-loop result");

  double t_max = recs.back().time_s;
  if (t_max <= 0) t_max = 1;
  double v_lo = 0, v_hi = 0;
  for (const auto& r : recs) {
    v_lo = std::min({v_lo, r.y_ref, r.u});
    v_hi = std::max({v_hi, r.y_ref, r.u});
  }
  if (v_hi - v_lo < 1e-9) v_hi = v_lo + 1;

  auto px = [&](double t) { return pad + t / t_max * (width - 2 * pad); };
  auto py = [&](double v) { return height - pad - (v - v_lo) / (v_hi - v_lo) * (height - 2 * pad); };

  auto polyline = [&](std::ostream& out, const char* color, auto value) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (size_t i = 0; i < recs.size(); ++i) {
      if (i > 0) out << ' ';
      out << fmt_g9(px(recs[i].time_s)) << ',' << fmt_g9(py(value(recs[i])));
    }
    out << "\"/>\n";
  };

  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  polyline(out, "#1f77b4", [](const StepRecord& r) { return r.y_ref; });
  polyline(out, "#d62728", [](const StepRecord& r) { return r.u; });
  out << "</svg>\n";
}

void write_state_csv(const std::string& path, const std::vector<double>& x) {
  auto out = open_out(path);
  out << "index,value_K\n";
  for (size_t i = 0; i < x.size(); ++i) {
    out << i << ',' << fmt_g9(x[i]) << '\n';
  }
}

std::vector<double> read_state_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("writers: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("state: empty file");
  std::vector<double> x;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("state: malformed row");
    x.push_back(std::stod(line.substr(comma + 1)));
  }
  return x;
}

void write_error_report_csv(const std::string& path, const ErrorReport& report) {
  auto out = open_out(path);
  out << "channel,mean_error_K,std_error_K,samples\n";
  out << "T_in," << fmt_g9(report.mean_error_in) << ',' << fmt_g9(report.std_error_in) << ','
      << report.samples << '\n';
  out << "T_out," << fmt_g9(report.mean_error_out) << ',' << fmt_g9(report.std_error_out) << ','
      << report.samples << '\n';
}

}  // namespace btes
