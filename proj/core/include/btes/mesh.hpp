#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace btes {

struct Rect {
  double x0 = 0;
  double y0 = 0;
  double x1 = 0;
  double y1 = 0;

  bool empty_x() const { return x1 <= x0; }
  bool empty_y() const { return y1 <= y0; }
};

struct MeshSpec {
  double domain_size_x = 0;  // [m]
  double domain_size_y = 0;  // [m]
  double fine_edge = 0;      // [m]
  double coarse_edge = 0;    // [m]
  Rect fine_region;          // [m]
  std::vector<std::array<double, 2>> bhe_positions;  // [m]

  void validate() const;  // throws ConfigError
};

/// Non-uniform structured 2D grid. Cells are numbered row-major from the
/// southwest corner: id(ix, iy) = iy * n_x + ix.
struct Mesh {
  std::vector<double> x_centers;  // [m], strictly increasing
  std::vector<double> y_centers;
  std::vector<double> x_widths;   // [m]
  std::vector<double> y_widths;
  int n_x = 0;
  int n_y = 0;

  int cell_count() const { return n_x * n_y; }
  int id(int ix, int iy) const { return iy * n_x + ix; }
  std::pair<int, int> ix_iy(int cell) const { return {cell % n_x, cell / n_x}; }
};

enum class CellKind { Interior, Boundary, BheCell, BheNeighbor };
enum class Face { West, East, South, North };

struct CellClass {
  CellKind kind = CellKind::Interior;
  int bhe = -1;       // for BheCell / BheNeighbor
  Face face = Face::West;  // for BheNeighbor: the face toward the BHE cell
};

struct Wesn {
  std::optional<int> w, e, s, n;
};

Mesh build_mesh(const MeshSpec& spec);

/// WESN neighbor ids of a cell; sides at the domain boundary are absent.
Wesn neighbors(const Mesh& mesh, int cell);

/// Classify every cell. BheNeighbor takes precedence over Interior; the outer
/// ring is Boundary. Throws ConfigError for BHE on the boundary ring, two BHE
/// in one cell, or shared neighbor cells.
std::vector<CellClass> classify_cells(const Mesh& mesh,
                                      const std::vector<std::array<double, 2>>& bhe_positions);

}  // namespace btes
