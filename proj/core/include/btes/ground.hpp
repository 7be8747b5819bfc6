#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "btes/mesh.hpp"

namespace btes {

struct GroundParams {
  double c_g = 0;     // volumetric heat capacity of ground [J/(m^3 K)]
  double c_w = 0;     // volumetric heat capacity of water [J/(m^3 K)]
  double lambda = 0;  // heat conduction coefficient [W/(m K)]
  double phi = 0;     // porosity [-]
  double v_x = 0;     // groundwater velocity [m/s]
  double v_y = 0;
  double T_amb = 0;   // ambient ground temperature [K]
  double dt = 0;      // step size [s]

  void validate() const;
};

/// One next-state row over ground cell indices plus a constant offset [K].
struct SparseRow {
  std::vector<std::pair<int, double>> entries;
  double constant = 0;
};

/// Marks that `scale * Q_Bj / 1` of BHE `bhe`'s heat-flux linear form enters
/// the row of `cell`. The flux form itself lives in the BHE block and is
/// resolved during global assembly.
struct SourceSlot {
  int cell;
  int bhe;
  double scale;  // dt / (c_g * dx * dy) * 1/4
};

struct GroundBlock {
  std::vector<SparseRow> rows;          // one per cell
  std::vector<SourceSlot> source_slots;
};

/// Explicit-Euler finite-volume row for a non-boundary cell: central
/// differencing for conduction, first-order upwind for advection. A blocked
/// face carries zero conductive flux and suppresses advection along its axis
/// (the flow is diverted around the borehole).
SparseRow stencil_row(const Mesh& mesh, const GroundParams& params, int cell,
                      std::optional<Face> blocked = std::nullopt);

GroundBlock assemble_ground(const Mesh& mesh, const GroundParams& params,
                            const std::vector<CellClass>& classes);

}  // namespace btes
