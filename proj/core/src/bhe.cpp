#include "btes/bhe.hpp"

#include "btes/errors.hpp"

namespace btes {

void BheParams::validate() const {
  if (sigma < 1) throw ConfigError("bhe.sigma must be >= 1");
  if (!(l > 0)) throw ConfigError("bhe.l must be > 0");
  if (!(q_vol > 0)) throw ConfigError("bhe.q_vol must be > 0");
  if (!(c_w > 0)) throw ConfigError("bhe.c_w must be > 0");
  if (!(C_w > 0)) throw ConfigError("bhe.C_w must be > 0");
  if (!(C_b > 0)) throw ConfigError("bhe.C_b must be > 0");
  if (!(R_fb > 0)) throw ConfigError("bhe.R_fb must be > 0");
  if (!(R_bb > 0)) throw ConfigError("bhe.R_bb must be > 0");
  if (!(R_gb > 0)) throw ConfigError("bhe.R_gb must be > 0");
  if (!(dt > 0)) throw ConfigError("bhe.dt must be > 0");
}

int fluid_index(bool ascending, int s, int sigma) {
  return (ascending ? sigma : 0) + (s - 1);
}

int backfill_index(bool ascending, int s, int sigma) {
  return 2 * sigma + (ascending ? sigma : 0) + (s - 1);
}

namespace {

/// C_w dT_f/dt = (T_b - T_f)/R_fb + (q_vol c_w / l) (T_up - T_f).
/// Upstream: descending s=1 is the BTES inlet; ascending s=sigma is the
/// descending fluid of the same (lowest) segment; otherwise the adjacent
/// segment along the flow direction.
BheRow fluid_row(const BheParams& p, bool ascending, int s) {
  const double r = p.dt / p.C_w;
  const double cond = r / p.R_fb;
  const double adv = r * p.q_vol * p.c_w / p.l;

  BheRow row;
  const int self = fluid_index(ascending, s, p.sigma);
  row.local.push_back({self, 1.0 - cond - adv});
  row.local.push_back({backfill_index(ascending, s, p.sigma), cond});
  if (!ascending) {
    if (s == 1) {
      row.inlet = adv;
    } else {
      row.local.push_back({fluid_index(false, s - 1, p.sigma), adv});
    }
  } else {
    if (s == p.sigma) {
      row.local.push_back({fluid_index(false, p.sigma, p.sigma), adv});
    } else {
      row.local.push_back({fluid_index(true, s + 1, p.sigma), adv});
    }
  }
  return row;
}

/// C_b dT_b/dt = (T_f - T_b)/R_fb + (T_b,other - T_b)/R_bb + (T_g - T_b)/R_gb.
BheRow backfill_row(const BheParams& p, bool ascending, int s) {
  const double r = p.dt / p.C_b;
  const double c_f = r / p.R_fb;
  const double c_bb = r / p.R_bb;
  const double c_g = r / p.R_gb;

  BheRow row;
  row.local.push_back({backfill_index(ascending, s, p.sigma), 1.0 - c_f - c_bb - c_g});
  row.local.push_back({fluid_index(ascending, s, p.sigma), c_f});
  row.local.push_back({backfill_index(!ascending, s, p.sigma), c_bb});
  row.wall = c_g;
  return row;
}

}  // namespace

BheBlock build_bhe_block(const BheParams& p) {
  p.validate();
  BheBlock block;
  block.sigma = p.sigma;
  block.rows.resize(static_cast<size_t>(4) * p.sigma);
  for (int s = 1; s <= p.sigma; ++s) {
    for (const bool ascending : {false, true}) {
      block.rows[fluid_index(ascending, s, p.sigma)] = fluid_row(p, ascending, s);
      block.rows[backfill_index(ascending, s, p.sigma)] = backfill_row(p, ascending, s);
    }
  }
  block.flux_backfill = 1.0 / (p.sigma * p.R_gb);
  block.flux_wall_cell = -2.0 / p.R_gb * 0.25;
  return block;
}

std::array<int, 4> wall_cells(const Mesh& mesh, const std::vector<CellClass>& classes, int bhe) {
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    if (classes[cell].kind == CellKind::BheCell && classes[cell].bhe == bhe) {
      const Wesn nb = neighbors(mesh, cell);
      if (!nb.e || !nb.w || !nb.s || !nb.n) {
        throw AssemblyError("bhe: BHE " + std::to_string(bhe) + " is missing wall neighbors");
      }
      return {*nb.e, *nb.w, *nb.s, *nb.n};
    }
  }
  throw AssemblyError("bhe: no BheCell classified for BHE " + std::to_string(bhe));
}

}  // namespace btes
