#include "btes/system.hpp"

#include <cmath>
#include <vector>

#include "btes/errors.hpp"

namespace btes {

std::vector<double> AffineSystem::step(std::span<const double> x, double u) const {
  std::vector<double> out(f.size());
  step_into(x, u, out);
  return out;
}

void AffineSystem::step_into(std::span<const double> x, double u, std::span<double> out) const {
  const int n = layout.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(out.size()) != n) {
    throw ArgumentError("system: state dimension mismatch");
  }
  for (const double v : x) {
    if (!std::isfinite(v)) throw ArgumentError("system: non-finite state");
  }
  if (substeps == 1) {
    A.multiply(x, out);
    for (int i = 0; i < n; ++i) out[i] += B[i] * u + f[i];
    return;
  }
  std::vector<double> cur(x.begin(), x.end());
  for (int s = 0; s < substeps; ++s) {
    A.multiply(cur, out);
    for (int i = 0; i < n; ++i) out[i] += B[i] * u + f[i];
    if (s + 1 < substeps) cur.assign(out.begin(), out.end());
  }
}

void AffineSystem::apply_A_eff(std::span<const double> x, std::span<double> out) const {
  const int n = layout.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(out.size()) != n) {
    throw ArgumentError("system: state dimension mismatch");
  }
  if (substeps == 1) {
    A.multiply(x, out);
    return;
  }
  std::vector<double> cur(x.begin(), x.end());
  for (int s = 0; s < substeps; ++s) {
    A.multiply(cur, out);
    if (s + 1 < substeps) cur.assign(out.begin(), out.end());
  }
}

namespace {

// sum_{j<substeps} A^j v for the generator matrix.
std::vector<double> geometric_sum(const CsrMatrix& a, const std::vector<double>& v, int substeps) {
  std::vector<double> acc = v;
  std::vector<double> cur = v;
  std::vector<double> next(v.size());
  for (int j = 1; j < substeps; ++j) {
    a.multiply(cur, next);
    cur.swap(next);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += cur[i];
  }
  return acc;
}

}  // namespace

std::vector<double> AffineSystem::effective_B() const { return geometric_sum(A, B, substeps); }

std::vector<double> AffineSystem::effective_f() const { return geometric_sum(A, f, substeps); }

namespace {

int count_bhe(const std::vector<CellClass>& classes) {
  int nu = 0;
  for (const auto& cc : classes) {
    if (cc.kind == CellKind::BheCell) nu = std::max(nu, cc.bhe + 1);
  }
  return nu;
}

void append_ground_rows(const Mesh& mesh, const GroundBlock& ground, const StateLayout& layout,
                        std::vector<Triplet>& triplets, std::vector<double>& f) {
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    const int row = layout.ground_state(cell);
    for (const auto& [col_cell, v] : ground.rows[cell].entries) {
      triplets.push_back({row, layout.ground_state(col_cell), v});
    }
    f[row] = ground.rows[cell].constant;
  }
}

}  // namespace

AffineSystem assemble_system(const Mesh& mesh, const std::vector<CellClass>& classes,
                             const GroundParams& ground_params_in, const BheParams& bhe_params_in,
                             const ApuParams& apu_params, int substeps) {
  if (ground_params_in.dt != bhe_params_in.dt) {
    throw AssemblyError("assembly: ground and bhe blocks disagree on dt");
  }
  if (substeps < 1) throw AssemblyError("assembly: substeps must be >= 1");
  // The generator integrates at dt / substeps; the sampled system keeps dt.
  // The APU rows carry no dt factor (a flow-through enthalpy balance), so
  // only the ground and BHE blocks rescale.
  GroundParams ground_params = ground_params_in;
  BheParams bhe_params = bhe_params_in;
  ground_params.dt /= substeps;
  bhe_params.dt /= substeps;
  const int nu = count_bhe(classes);
  if (nu != apu_params.nu) {
    throw AssemblyError("assembly: apu block expects " + std::to_string(apu_params.nu) +
                        " BHE but the mesh classification has " + std::to_string(nu));
  }
  if (apu_params.q_vol != bhe_params.q_vol || apu_params.c_w != bhe_params.c_w) {
    throw AssemblyError("assembly: apu and bhe blocks disagree on the fluid stream");
  }

  const GroundBlock ground = assemble_ground(mesh, ground_params, classes);
  const BheBlock bhe = build_bhe_block(bhe_params);
  const ApuBlock apu = assemble_apu(apu_params);

  AffineSystem sys;
  sys.layout = {2, nu, bhe_params.sigma, mesh.cell_count()};
  sys.dt = ground_params_in.dt;
  sys.substeps = substeps;
  const int n = sys.layout.n();
  sys.B.assign(n, 0.0);
  sys.f.assign(n, 0.0);

  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<size_t>(n) * 6);

  // APU rows. T_in follows T_out plus the input; T_out is the one-step
  // delayed mean of the top ascending fluid temperatures.
  triplets.push_back({sys.layout.t_in(), sys.layout.t_out(), 1.0});
  sys.B[sys.layout.t_in()] = apu.b_coeff;
  for (int j = 0; j < nu; ++j) {
    triplets.push_back({sys.layout.t_out(),
                        sys.layout.bhe_state(j, fluid_index(true, 1, bhe.sigma)),
                        apu.return_coeff});
  }

  // BHE rows; the wall average resolves to 1/4 on each wall cell.
  std::vector<std::array<int, 4>> walls(nu);
  for (int j = 0; j < nu; ++j) {
    walls[j] = wall_cells(mesh, classes, j);
    for (int local = 0; local < 4 * bhe.sigma; ++local) {
      const int row = sys.layout.bhe_state(j, local);
      const BheRow& br = bhe.rows[local];
      for (const auto& [lcol, v] : br.local) {
        triplets.push_back({row, sys.layout.bhe_state(j, lcol), v});
      }
      if (br.inlet != 0) triplets.push_back({row, sys.layout.t_in(), br.inlet});
      if (br.wall != 0) {
        for (const int cell : walls[j]) {
          triplets.push_back({row, sys.layout.ground_state(cell), 0.25 * br.wall});
        }
      }
    }
  }

  // Ground rows plus the Neumann source slots (the state-dependent part of
  // Q_Bj slides into A; it has no constant term).
  append_ground_rows(mesh, ground, sys.layout, triplets, sys.f);
  for (const SourceSlot& slot : ground.source_slots) {
    const int row = sys.layout.ground_state(slot.cell);
    for (int s = 1; s <= bhe.sigma; ++s) {
      for (const bool ascending : {false, true}) {
        triplets.push_back({row,
                            sys.layout.bhe_state(slot.bhe, backfill_index(ascending, s, bhe.sigma)),
                            slot.scale * bhe.flux_backfill});
      }
    }
    for (const int cell : walls[slot.bhe]) {
      triplets.push_back({row, sys.layout.ground_state(cell), slot.scale * bhe.flux_wall_cell});
    }
  }

  sys.A = CsrMatrix::from_triplets(n, n, std::move(triplets));
  for (int i = 0; i < n; ++i) {
    for (const double v : sys.A.row_vals(i)) {
      if (!std::isfinite(v)) throw AssemblyError("assembly: non-finite matrix entry");
    }
  }
  return sys;
}

AffineSystem assemble_ground_system(const Mesh& mesh, const GroundParams& ground_params,
                                    const std::vector<CellClass>& classes) {
  const GroundBlock ground = assemble_ground(mesh, ground_params, classes);

  AffineSystem sys;
  sys.layout = {0, 0, 0, mesh.cell_count()};
  sys.dt = ground_params.dt;
  const int n = sys.layout.n();
  sys.B.assign(n, 0.0);
  sys.f.assign(n, 0.0);

  std::vector<Triplet> triplets;
  append_ground_rows(mesh, ground, sys.layout, triplets, sys.f);
  sys.A = CsrMatrix::from_triplets(n, n, std::move(triplets));
  return sys;
}

std::vector<double> ambient_state(const AffineSystem& sys, double T_amb) {
  return std::vector<double>(sys.layout.n(), T_amb);
}

namespace {

double splitmix64_to_unit(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

double spectral_radius(const CsrMatrix& a, int iterations, std::uint64_t seed) {
  if (iterations < 100) throw ArgumentError("spectral_radius: iterations must be >= 100");
  if (a.rows() != a.cols()) throw ArgumentError("spectral_radius: matrix must be square");

  const int n = a.rows();
  std::uint64_t rng = seed;
  std::vector<double> v(n), w(n);
  double norm = 0;
  for (int i = 0; i < n; ++i) {
    v[i] = 2.0 * splitmix64_to_unit(rng) - 1.0;
    norm += v[i] * v[i];
  }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;

  // Geometric mean of the growth factor over a trailing window; a complex
  // dominant pair makes single-step growth oscillate.
  const int window = std::min(50, iterations / 2);
  double log_growth_sum = 0;
  std::vector<double> log_growths;
  log_growths.reserve(iterations);
  for (int it = 0; it < iterations; ++it) {
    a.multiply(v, w);
    double g = 0;
    for (const double x : w) g += x * x;
    g = std::sqrt(g);
    if (!std::isfinite(g)) throw NumericError("spectral_radius: non-finite iterate");
    if (g == 0) return 0;
    log_growths.push_back(std::log(g));
    for (int i = 0; i < n; ++i) v[i] = w[i] / g;
  }
  for (int it = iterations - window; it < iterations; ++it) log_growth_sum += log_growths[it];
  return std::exp(log_growth_sum / window);
}

double spectral_radius(const AffineSystem& sys, int iterations, std::uint64_t seed) {
  // rho(A^m) = rho(A)^m exactly, so the sampled map's radius follows from the
  // generator's.
  const double rho_gen = spectral_radius(sys.A, iterations, seed);
  return std::pow(rho_gen, sys.substeps);
}

}  // namespace btes
