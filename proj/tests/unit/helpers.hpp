#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "btes/config.hpp"
#include "btes/model.hpp"

namespace btes::test {

inline const Config& paper_config() {
  static const Config cfg = load_config(std::string(BTES_CONFIG_DIR) + "/paper.json");
  return cfg;
}

inline const BtesModel& paper_model() {
  static const BtesModel model = build_model(paper_config());
  return model;
}

/// Uniform 5x5 mesh (1 m cells, 5 m domain) with one BHE at the center cell,
/// paper-like physical parameters. sigma and substeps are configurable so the
/// small system stays cheap and (with substeps > 1) stable.
inline Config small_config(int sigma = 1, int substeps = 3) {
  Config cfg;
  cfg.ground = {2.3e6, 4.2e6, 2.3, 0.8, 1.3889e-6, 1.3889e-6, 295.15, 15.0};
  cfg.mesh.domain_size_x = 5.0;
  cfg.mesh.domain_size_y = 5.0;
  cfg.mesh.fine_edge = 1.0;
  cfg.mesh.coarse_edge = 1.0;
  cfg.mesh.fine_region = {0, 0, 0, 0};
  cfg.mesh.bhe_positions = {{2.5, 2.5}};
  cfg.bhe.sigma = sigma;
  cfg.bhe.l = 3.66;
  cfg.bhe.C_w = 2452.7037;
  cfg.bhe.C_b = 20361.661;
  cfg.bhe.R_fb = 0.261;
  cfg.bhe.R_bb = 0.4538652673363449;
  cfg.bhe.R_gb = 0.06931151010684597;
  cfg.bhe.q_vol = 0.1974 / 1000.0;
  cfg.bhe.c_w = cfg.ground.c_w;
  cfg.bhe.dt = cfg.ground.dt;
  cfg.apu.nu = 1;
  cfg.apu.q_vol = cfg.bhe.q_vol;
  cfg.apu.c_w = cfg.ground.c_w;
  cfg.apu.u_min = -1000.0;
  cfg.apu.u_max = 1000.0;
  cfg.ocp.H = 5;
  cfg.ocp.R = 0.1;
  cfg.ocp.Q = 0.01;
  cfg.ocp.x_lo = 273.15;
  cfg.ocp.x_hi = 303.15;
  cfg.ocp.u_lo = cfg.apu.u_min;
  cfg.ocp.u_hi = cfg.apu.u_max;
  cfg.fluid_density = 1000.0;
  cfg.mass_flow = 0.1974;
  cfg.substeps = substeps;
  return cfg;
}

/// Paper-parameter BheParams in isolation (dt = 15 s unless overridden).
inline BheParams paper_bhe_params(int sigma = 3, double dt = 15.0) {
  BheParams p;
  p.sigma = sigma;
  p.l = 3.66;
  p.q_vol = 0.1974 / 1000.0;
  p.c_w = 4.2e6;
  p.C_w = 2452.7037;
  p.C_b = 20361.661;
  p.R_fb = 0.261;
  p.R_bb = 0.4538652673363449;
  p.R_gb = 0.06931151010684597;
  p.dt = dt;
  return p;
}

inline GroundParams paper_ground_params(double v = 1.3889e-6, double dt = 15.0) {
  return {2.3e6, 4.2e6, 2.3, 0.8, v, v, 295.15, dt};
}

/// Deterministic uniform double in [lo, hi) via splitmix64.
inline double rnd(std::uint64_t& state, double lo = 0.0, double hi = 1.0) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
}

}  // namespace btes::test
