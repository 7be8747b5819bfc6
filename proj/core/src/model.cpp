#include "btes/model.hpp"

#include "btes/errors.hpp"
#include "btes/log.hpp"

namespace btes {

BtesModel build_model(const Config& cfg) {
  cfg.validate();

  BtesModel model;
  model.cfg = cfg;
  model.mesh = build_mesh(cfg.mesh);
  model.classes = classify_cells(model.mesh, cfg.mesh.bhe_positions);
  model.bhe_block = build_bhe_block(cfg.bhe);
  const int nu = static_cast<int>(cfg.mesh.bhe_positions.size());
  model.walls.resize(nu);
  for (int j = 0; j < nu; ++j) {
    model.walls[j] = wall_cells(model.mesh, model.classes, j);
  }
  model.sys = assemble_system(model.mesh, model.classes, cfg.ground, cfg.bhe, cfg.apu,
                              cfg.substeps);
  model.rho_estimate = spectral_radius(model.sys, 1000, 1);
  if (model.rho_estimate > 1.0 + 1e-9) {
    log_message(LogLevel::Warn, "spectral radius estimate " + std::to_string(model.rho_estimate) +
                                    " exceeds 1; the explicit scheme may diverge");
  }
  return model;
}

double bhe_heat_flux(const BtesModel& model, std::span<const double> x, int j) {
  if (j < 0 || j >= model.sys.layout.nu) throw ArgumentError("model: invalid BHE index");
  const int sigma = model.bhe_block.sigma;
  double backfill_sum = 0;
  for (int s = 1; s <= sigma; ++s) {
    for (const bool ascending : {false, true}) {
      backfill_sum += x[model.sys.layout.bhe_state(j, backfill_index(ascending, s, sigma))];
    }
  }
  double wall = 0;
  for (const int cell : model.walls[j]) {
    wall += 0.25 * x[model.sys.layout.ground_state(cell)];
  }
  const double R_gb = model.cfg.bhe.R_gb;
  return (backfill_sum / sigma - 2.0 * wall) / R_gb;
}

}  // namespace btes
