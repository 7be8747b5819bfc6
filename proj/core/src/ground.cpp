#include "btes/ground.hpp"

#include <cmath>

#include "btes/errors.hpp"

namespace btes {

void GroundParams::validate() const {
  if (!(c_g > 0)) throw ConfigError("ground.c_g must be > 0");
  if (!(c_w > 0)) throw ConfigError("ground.c_w must be > 0");
  if (!(lambda > 0)) throw ConfigError("ground.lambda must be > 0");
  if (!(phi >= 0 && phi <= 1)) throw ConfigError("ground.phi must be in [0, 1]");
  if (!(dt > 0)) throw ConfigError("ground.dt must be > 0");
  if (!(T_amb > 0)) throw ConfigError("ground.T_amb must be > 0");
}

SparseRow stencil_row(const Mesh& mesh, const GroundParams& params, int cell,
                      std::optional<Face> blocked) {
  const Wesn nb = neighbors(mesh, cell);
  if (!nb.w || !nb.e || !nb.s || !nb.n) {
    throw ArgumentError("ground: stencil_row requires a non-boundary cell");
  }
  const auto [ix, iy] = mesh.ix_iy(cell);
  const double dx = mesh.x_widths[ix];
  const double dy = mesh.y_widths[iy];
  if (dx <= 0 || dy <= 0) throw AssemblyError("ground: zero cell width");

  // Center-to-center distances for the non-uniform conduction terms.
  const double ddx_w = mesh.x_centers[ix] - mesh.x_centers[ix - 1];
  const double ddx_e = mesh.x_centers[ix + 1] - mesh.x_centers[ix];
  const double ddy_s = mesh.y_centers[iy] - mesh.y_centers[iy - 1];
  const double ddy_n = mesh.y_centers[iy + 1] - mesh.y_centers[iy];

  double self = 1.0;
  double cw = 0, ce = 0, cs = 0, cn = 0;

  const double r = params.dt / params.c_g;
  auto open = [&](Face f) { return !blocked || *blocked != f; };

  // Conduction, central differencing; a blocked face carries no flux.
  if (open(Face::West)) {
    const double c = r * params.lambda / (dx * ddx_w);
    cw += c;
    self -= c;
  }
  if (open(Face::East)) {
    const double c = r * params.lambda / (dx * ddx_e);
    ce += c;
    self -= c;
  }
  if (open(Face::South)) {
    const double c = r * params.lambda / (dy * ddy_s);
    cs += c;
    self -= c;
  }
  if (open(Face::North)) {
    const double c = r * params.lambda / (dy * ddy_n);
    cn += c;
    self -= c;
  }

  // Advection, first-order upwind: the donor is the upstream cell center.
  // Along a blocked axis the flow is diverted around the borehole, so both
  // face fluxes of that axis vanish and constant fields stay invariant.
  const bool x_open = open(Face::West) && open(Face::East);
  const bool y_open = open(Face::South) && open(Face::North);
  if (x_open && params.v_x != 0) {
    const double a = r * params.c_w * params.phi * std::abs(params.v_x) / dx;
    if (params.v_x > 0) {
      cw += a;
    } else {
      ce += a;
    }
    self -= a;
  }
  if (y_open && params.v_y != 0) {
    const double a = r * params.c_w * params.phi * std::abs(params.v_y) / dy;
    if (params.v_y > 0) {
      cs += a;
    } else {
      cn += a;
    }
    self -= a;
  }

  SparseRow row;
  row.entries = {{cell, self}};
  if (cw != 0) row.entries.push_back({*nb.w, cw});
  if (ce != 0) row.entries.push_back({*nb.e, ce});
  if (cs != 0) row.entries.push_back({*nb.s, cs});
  if (cn != 0) row.entries.push_back({*nb.n, cn});
  return row;
}

GroundBlock assemble_ground(const Mesh& mesh, const GroundParams& params,
                            const std::vector<CellClass>& classes) {
  params.validate();
  if (static_cast<int>(classes.size()) != mesh.cell_count()) {
    throw AssemblyError("ground: classification size does not match the mesh");
  }

  GroundBlock block;
  block.rows.resize(classes.size());
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    const CellClass& cc = classes[cell];
    SparseRow& row = block.rows[cell];
    switch (cc.kind) {
      case CellKind::Boundary:
        // Dirichlet: the state is frozen at ambient.
        row.constant = params.T_amb;
        break;
      case CellKind::Interior:
        row = stencil_row(mesh, params, cell);
        break;
      case CellKind::BheCell: {
        // Diagnostic state: average of the four neighbors.
        const Wesn nb = neighbors(mesh, cell);
        row.entries = {{*nb.w, 0.25}, {*nb.e, 0.25}, {*nb.s, 0.25}, {*nb.n, 0.25}};
        break;
      }
      case CellKind::BheNeighbor: {
        row = stencil_row(mesh, params, cell, cc.face);
        const auto [ix, iy] = mesh.ix_iy(cell);
        const double dx = mesh.x_widths[ix];
        const double dy = mesh.y_widths[iy];
        // Neumann source: a quarter of Q_Bj enters this cell's energy
        // balance (unit-depth slice, capacity c_g * dx * dy).
        block.source_slots.push_back(
            {cell, cc.bhe, params.dt / (params.c_g * dx * dy) * 0.25});
        break;
      }
    }
  }
  return block;
}

}  // namespace btes
