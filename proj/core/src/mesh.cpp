#include "btes/mesh.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "btes/errors.hpp"

namespace btes {
namespace {

constexpr double kTol = 1e-9;  // [m]

void check_positive(double v, const char* name) {
  if (!(v > 0)) {
    std::ostringstream os;
    os << "mesh: " << name << " must be > 0";
    throw ConfigError(os.str());
  }
}

/// Cell widths along one axis: coarse cells outside the fine region, fine
/// cells inside, with at most one transition cell per fine/coarse junction
/// absorbing the leftover span. Transition widths must fall in
/// [fine_edge, coarse_edge].
std::vector<double> build_axis(double length, double fine, double coarse,
                               double r0, double r1, char axis) {
  std::ostringstream tag;
  tag << "mesh: axis " << axis;

  auto fill_span = [&](std::vector<double>& widths, double span, bool transition_first) {
    if (span <= kTol) return;
    const int n_c = static_cast<int>(std::floor((span + kTol) / coarse));
    const double leftover = span - n_c * coarse;
    const bool has_transition = leftover > kTol;
    if (has_transition && (leftover < fine - kTol || leftover > coarse + kTol)) {
      throw ConfigError(tag.str() + ": fine region misaligned with the coarse grid"
                        " (leftover span outside [fine_edge, coarse_edge])");
    }
    // The transition cell sits next to the fine region.
    if (transition_first && has_transition) widths.push_back(leftover);
    widths.insert(widths.end(), n_c, coarse);
    if (!transition_first && has_transition) widths.push_back(leftover);
  };

  std::vector<double> widths;
  const bool has_fine = r1 > r0 + kTol;
  if (!has_fine) {
    fill_span(widths, length, false);
  } else {
    const double fine_len = r1 - r0;
    const int n_f = static_cast<int>(std::llround(fine_len / fine));
    if (std::abs(n_f * fine - fine_len) > kTol) {
      throw ConfigError(tag.str() + ": fine region length is not a whole multiple of fine_edge");
    }
    fill_span(widths, r0, false);
    widths.insert(widths.end(), n_f, fine);
    fill_span(widths, length - r1, true);
  }

  const double total = std::accumulate(widths.begin(), widths.end(), 0.0);
  if (std::abs(total - length) > kTol) {
    throw ConfigError(tag.str() + ": cell widths do not sum to the domain size");
  }
  return widths;
}

std::vector<double> centers_from_widths(const std::vector<double>& widths) {
  std::vector<double> centers(widths.size());
  double edge = 0;
  for (size_t i = 0; i < widths.size(); ++i) {
    centers[i] = edge + 0.5 * widths[i];
    edge += widths[i];
  }
  return centers;
}

/// Index of the cell containing coordinate v, strictly inside (not within
/// kTol of a cell edge).
int locate_strict(const std::vector<double>& widths, double v, char axis) {
  double edge = 0;
  for (size_t i = 0; i < widths.size(); ++i) {
    const double next = edge + widths[i];
    if (v > edge + kTol && v < next - kTol) return static_cast<int>(i);
    edge = next;
  }
  std::ostringstream os;
  os << "mesh: position " << v << " on axis " << axis
     << " does not lie strictly inside a cell";
  throw ConfigError(os.str());
}

}  // namespace

void MeshSpec::validate() const {
  check_positive(domain_size_x, "domain_size_x");
  check_positive(domain_size_y, "domain_size_y");
  check_positive(fine_edge, "fine_edge");
  check_positive(coarse_edge, "coarse_edge");
  if (fine_edge > coarse_edge + kTol) {
    throw ConfigError("mesh: fine_edge must not exceed coarse_edge");
  }
  const bool has_fine = !fine_region.empty_x() && !fine_region.empty_y();
  if (has_fine) {
    if (fine_region.x0 < -kTol || fine_region.y0 < -kTol ||
        fine_region.x1 > domain_size_x + kTol || fine_region.y1 > domain_size_y + kTol) {
      throw ConfigError("mesh: fine_region must lie inside the domain");
    }
  }
  for (const auto& p : bhe_positions) {
    if (p[0] <= 0 || p[0] >= domain_size_x || p[1] <= 0 || p[1] >= domain_size_y) {
      throw ConfigError("mesh: BHE position outside the domain");
    }
    if (has_fine &&
        (p[0] < fine_region.x0 || p[0] > fine_region.x1 ||
         p[1] < fine_region.y0 || p[1] > fine_region.y1)) {
      throw ConfigError("mesh: BHE position outside the fine region");
    }
  }
}

Mesh build_mesh(const MeshSpec& spec) {
  spec.validate();
  Mesh mesh;
  mesh.x_widths = build_axis(spec.domain_size_x, spec.fine_edge, spec.coarse_edge,
                             spec.fine_region.empty_x() ? 0 : spec.fine_region.x0,
                             spec.fine_region.empty_x() ? 0 : spec.fine_region.x1, 'x');
  mesh.y_widths = build_axis(spec.domain_size_y, spec.fine_edge, spec.coarse_edge,
                             spec.fine_region.empty_y() ? 0 : spec.fine_region.y0,
                             spec.fine_region.empty_y() ? 0 : spec.fine_region.y1, 'y');
  mesh.x_centers = centers_from_widths(mesh.x_widths);
  mesh.y_centers = centers_from_widths(mesh.y_widths);
  mesh.n_x = static_cast<int>(mesh.x_widths.size());
  mesh.n_y = static_cast<int>(mesh.y_widths.size());
  return mesh;
}

Wesn neighbors(const Mesh& mesh, int cell) {
  if (cell < 0 || cell >= mesh.cell_count()) {
    throw ArgumentError("mesh: invalid cell id");
  }
  const auto [ix, iy] = mesh.ix_iy(cell);
  Wesn out;
  if (ix > 0) out.w = cell - 1;
  if (ix < mesh.n_x - 1) out.e = cell + 1;
  if (iy > 0) out.s = cell - mesh.n_x;
  if (iy < mesh.n_y - 1) out.n = cell + mesh.n_x;
  return out;
}

std::vector<CellClass> classify_cells(const Mesh& mesh,
                                      const std::vector<std::array<double, 2>>& bhe_positions) {
  std::vector<CellClass> classes(mesh.cell_count());
  for (int iy = 0; iy < mesh.n_y; ++iy) {
    for (int ix = 0; ix < mesh.n_x; ++ix) {
      const bool boundary = ix == 0 || ix == mesh.n_x - 1 || iy == 0 || iy == mesh.n_y - 1;
      classes[mesh.id(ix, iy)].kind = boundary ? CellKind::Boundary : CellKind::Interior;
    }
  }

  for (size_t j = 0; j < bhe_positions.size(); ++j) {
    const int ix = locate_strict(mesh.x_widths, bhe_positions[j][0], 'x');
    const int iy = locate_strict(mesh.y_widths, bhe_positions[j][1], 'y');
    const int cell = mesh.id(ix, iy);
    auto& cc = classes[cell];
    if (cc.kind == CellKind::Boundary) {
      throw ConfigError("mesh: BHE " + std::to_string(j) + " placed in the boundary ring");
    }
    if (cc.kind == CellKind::BheCell) {
      throw ConfigError("mesh: two BHE share cell " + std::to_string(cell));
    }
    if (cc.kind == CellKind::BheNeighbor) {
      throw ConfigError("mesh: BHE " + std::to_string(j) + " placed in a neighbor cell of BHE " +
                        std::to_string(cc.bhe));
    }
    cc = {CellKind::BheCell, static_cast<int>(j), Face::West};

    const Wesn nb = neighbors(mesh, cell);
    const std::array<std::pair<std::optional<int>, Face>, 4> sides = {{
        {nb.w, Face::East},   // BHE is to the east of its west neighbor
        {nb.e, Face::West},
        {nb.s, Face::North},
        {nb.n, Face::South},
    }};
    for (const auto& [nid, face] : sides) {
      if (!nid) {
        throw ConfigError("mesh: BHE " + std::to_string(j) + " is missing a neighbor cell");
      }
      auto& ncc = classes[*nid];
      if (ncc.kind == CellKind::Boundary) {
        throw ConfigError("mesh: BHE " + std::to_string(j) +
                          " has a boundary cell as neighbor");
      }
      if (ncc.kind == CellKind::BheCell) {
        throw ConfigError("mesh: BHE cells of BHE " + std::to_string(j) + " and BHE " +
                          std::to_string(ncc.bhe) + " are adjacent");
      }
      if (ncc.kind == CellKind::BheNeighbor) {
        throw ConfigError("mesh: BHE " + std::to_string(j) + " and BHE " +
                          std::to_string(ncc.bhe) + " share neighbor cell " +
                          std::to_string(*nid));
      }
      ncc = {CellKind::BheNeighbor, static_cast<int>(j), face};
    }
  }
  return classes;
}

}  // namespace btes
