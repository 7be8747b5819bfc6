#pragma once

#include <array>
#include <vector>

#include "btes/config.hpp"
#include "btes/system.hpp"

namespace btes {

/// Everything assembled from one Config: mesh, cell classes, the per-BHE
/// block (shared across BHE, they are identical), and the global system.
struct BtesModel {
  Config cfg;
  Mesh mesh;
  std::vector<CellClass> classes;
  BheBlock bhe_block;
  std::vector<std::array<int, 4>> walls;  // per BHE: E, W, S, N ground cells
  AffineSystem sys;
  double rho_estimate = 0;  // spectral radius of A
};

BtesModel build_model(const Config& cfg);

/// Q_Bj [W/m] for BHE j evaluated on a full state vector.
double bhe_heat_flux(const BtesModel& model, std::span<const double> x, int j);

}  // namespace btes
