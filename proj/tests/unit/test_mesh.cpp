#include <doctest.h>

#include <algorithm>
#include <set>

#include "btes/errors.hpp"
#include "btes/mesh.hpp"

#include "helpers.hpp"

using namespace btes;

namespace {

MeshSpec uniform_spec(double domain, double edge) {
  MeshSpec spec;
  spec.domain_size_x = domain;
  spec.domain_size_y = domain;
  spec.fine_edge = edge;
  spec.coarse_edge = edge;
  spec.fine_region = {0, 0, 0, 0};
  return spec;
}

}  // namespace

TEST_CASE("uniform 3x3 mesh from a degenerate spec") {
  const Mesh mesh = build_mesh(uniform_spec(3.0, 1.0));
  CHECK(mesh.n_x == 3);
  CHECK(mesh.n_y == 3);
  CHECK(mesh.cell_count() == 9);
  for (const double w : mesh.x_widths) CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
  for (const double w : mesh.y_widths) CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("2 m domain at 0.5 m resolution: centers 0.25/0.75/1.25/1.75") {
  MeshSpec spec = uniform_spec(2.0, 0.5);
  spec.fine_edge = 0.5;
  spec.coarse_edge = 0.5;
  spec.fine_region = {0, 0, 2.0, 2.0};
  const Mesh mesh = build_mesh(spec);
  REQUIRE(mesh.n_x == 4);
  const std::vector<double> expect = {0.25, 0.75, 1.25, 1.75};
  for (int i = 0; i < 4; ++i) {
    CHECK(mesh.x_centers[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    CHECK(mesh.y_centers[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  }
}

TEST_CASE("paper mesh reproduces 47x47 = 2209 cells") {
  const Mesh mesh = build_mesh(btes::test::paper_config().mesh);
  CHECK(mesh.n_x == 47);
  CHECK(mesh.n_y == 47);
  CHECK(mesh.cell_count() == 2209);
  // Widths tile the domain exactly.
  double sx = 0;
  for (const double w : mesh.x_widths) sx += w;
  CHECK(sx == doctest::Approx(20.0).epsilon(1e-12));
  // Fine cells exist at 0.2 m and coarse at 1.0 m.
  CHECK(std::count_if(mesh.x_widths.begin(), mesh.x_widths.end(),
                      [](double w) { return w == doctest::Approx(0.2).epsilon(1e-9); }) == 33);
  CHECK(std::count_if(mesh.x_widths.begin(), mesh.x_widths.end(),
                      [](double w) { return w == doctest::Approx(1.0).epsilon(1e-9); }) == 12);
}

TEST_CASE("neighbors on a 3x3 mesh") {
  const Mesh mesh = build_mesh(uniform_spec(3.0, 1.0));
  const Wesn center = neighbors(mesh, 4);
  CHECK(center.w.value() == 3);
  CHECK(center.e.value() == 5);
  CHECK(center.s.value() == 1);
  CHECK(center.n.value() == 7);

  const Wesn corner = neighbors(mesh, 0);
  CHECK_FALSE(corner.w.has_value());
  CHECK_FALSE(corner.s.has_value());
  CHECK(corner.e.value() == 1);
  CHECK(corner.n.value() == 3);
}

TEST_CASE("neighbors on the 47x47 paper mesh follow the id formula") {
  const Mesh mesh = build_mesh(btes::test::paper_config().mesh);
  const Wesn nb = neighbors(mesh, 48);
  CHECK(nb.w.value() == 47);
  CHECK(nb.e.value() == 49);
  CHECK(nb.s.value() == 1);
  CHECK(nb.n.value() == 95);
}

TEST_CASE("neighbor relation is symmetric for interior cells") {
  const Mesh mesh = build_mesh(uniform_spec(5.0, 1.0));
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    const Wesn nb = neighbors(mesh, cell);
    if (nb.w) CHECK(neighbors(mesh, *nb.w).e.value() == cell);
    if (nb.e) CHECK(neighbors(mesh, *nb.e).w.value() == cell);
    if (nb.s) CHECK(neighbors(mesh, *nb.s).n.value() == cell);
    if (nb.n) CHECK(neighbors(mesh, *nb.n).s.value() == cell);
  }
}

TEST_CASE("classification of a 5x5 mesh with a centered BHE") {
  const Mesh mesh = build_mesh(uniform_spec(5.0, 1.0));
  const auto classes = classify_cells(mesh, {{2.5, 2.5}});
  CHECK(classes[12].kind == CellKind::BheCell);
  CHECK(classes[12].bhe == 0);
  for (const int c : {11, 13, 7, 17}) {
    CHECK(classes[c].kind == CellKind::BheNeighbor);
    CHECK(classes[c].bhe == 0);
  }
  int boundary = 0;
  for (const auto& cc : classes) {
    if (cc.kind == CellKind::Boundary) ++boundary;
  }
  CHECK(boundary == 16);
  // The BheNeighbor faces point toward the BHE cell.
  CHECK(classes[11].face == Face::East);
  CHECK(classes[13].face == Face::West);
  CHECK(classes[7].face == Face::North);
  CHECK(classes[17].face == Face::South);
}

TEST_CASE("paper layout: 9 BheCell, 36 BheNeighbor, 184 boundary, no sharing") {
  const auto& cfg = btes::test::paper_config();
  const Mesh mesh = build_mesh(cfg.mesh);
  const auto classes = classify_cells(mesh, cfg.mesh.bhe_positions);
  int boundary = 0, interior = 0, bhe = 0, neigh = 0;
  for (const auto& cc : classes) {
    switch (cc.kind) {
      case CellKind::Boundary: ++boundary; break;
      case CellKind::Interior: ++interior; break;
      case CellKind::BheCell: ++bhe; break;
      case CellKind::BheNeighbor: ++neigh; break;
    }
  }
  CHECK(bhe == 9);
  CHECK(neigh == 36);
  // Perimeter of a 47x47 grid: 2*47 + 2*45.
  CHECK(boundary == 184);
  CHECK(interior == 2209 - 184 - 9 - 36);

  // Every BHE has its own four neighbor cells (the classifier would throw on
  // sharing; double-check the counts per BHE here).
  std::set<int> seen;
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    if (classes[cell].kind == CellKind::BheNeighbor) {
      CHECK(seen.insert(cell).second);
    }
  }
  CHECK(seen.size() == 36);
}

TEST_CASE("invalid BHE placements are rejected") {
  const Mesh mesh = build_mesh(uniform_spec(5.0, 1.0));
  CHECK_THROWS_AS(classify_cells(mesh, {{0.5, 2.5}}), ConfigError);     // boundary ring
  CHECK_THROWS_AS(classify_cells(mesh, {{2.5, 2.5}, {2.6, 2.6}}), ConfigError);  // same cell
  CHECK_THROWS_AS(classify_cells(mesh, {{2.5, 2.5}, {3.5, 2.5}}), ConfigError);  // shared neighbor
}

TEST_CASE("mesh spec validation") {
  MeshSpec spec = uniform_spec(3.0, 1.0);
  spec.domain_size_x = -1;
  CHECK_THROWS_AS(build_mesh(spec), ConfigError);
  spec = uniform_spec(3.0, 1.0);
  spec.coarse_edge = 0;
  CHECK_THROWS_AS(build_mesh(spec), ConfigError);
}
