#pragma once

#include <array>
#include <utility>
#include <vector>

#include "btes/mesh.hpp"

namespace btes {

struct BheParams {
  int sigma = 0;     // vertical segment count
  double l = 0;      // segment length [m]
  double q_vol = 0;  // volumetric process-fluid flow per BHE [m^3/s]
  double c_w = 0;    // fluid volumetric heat capacity [J/(m^3 K)]
  double C_w = 0;    // fluid heat capacity per unit length [J/(m K)]
  double C_b = 0;    // backfill heat capacity per unit length [J/(m K)]
  double R_fb = 0;   // fluid-backfill resistance [(m K)/W]
  double R_bb = 0;   // backfill-backfill resistance [(m K)/W]
  double R_gb = 0;   // backfill-wall resistance [(m K)/W]
  double dt = 0;     // step size [s]

  void validate() const;
};

/// Local state ordering within one BHE block:
/// [T_f0,1..sigma, T_f1,1..sigma, T_b0,1..sigma, T_b1,1..sigma]
/// (0 = descending pipe, 1 = ascending pipe; segments numbered 1 = top).
int fluid_index(bool ascending, int s, int sigma);
int backfill_index(bool ascending, int s, int sigma);

/// One next-state row over the 4*sigma local states. `inlet` multiplies the
/// APU inlet temperature, `wall` the per-BHE borehole-wall average.
struct BheRow {
  std::vector<std::pair<int, double>> local;
  double inlet = 0;
  double wall = 0;
};

struct BheBlock {
  int sigma = 0;
  std::vector<BheRow> rows;  // 4*sigma rows in local ordering

  // Q_Bj [W/m] linear form: flux_backfill on each of the 2*sigma backfill
  // states, flux_wall_cell on each of the 4 wall-average ground cells.
  double flux_backfill = 0;   //  1 / (sigma * R_gb)
  double flux_wall_cell = 0;  // -2 / R_gb * 1/4
};

BheBlock build_bhe_block(const BheParams& params);

/// The four ground cells (E, W, S, N of the BheCell) whose mean is the
/// borehole-wall temperature of BHE j. Throws AssemblyError when missing.
std::array<int, 4> wall_cells(const Mesh& mesh, const std::vector<CellClass>& classes, int bhe);

}  // namespace btes
